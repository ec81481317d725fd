// Copyright 2026 the effmeas authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "effmeas/space.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace effmeas {

namespace {

// Cantor pairing; pair(i,j) = (i+j)(i+j+1)/2 + i
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t k) {
  std::uint64_t w = 0;
  while ((w + 1) * (w + 2) / 2 <= k) ++w;
  std::uint64_t t = w * (w + 1) / 2;
  std::uint64_t i = k - t;
  return {i, w - i};
}

std::uint64_t gcdU(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

struct Space::Impl {
  SpaceKind kind;
  std::string label;
  std::size_t finiteCount = 0;
  std::vector<Rational> matrix;  // finite spaces, row-major

  mutable std::mutex mu;
  mutable std::vector<Rational> linePoints;           // enumerated so far
  mutable std::map<Rational, PointIndex> lineIndex;   // coord -> index
  mutable std::vector<Rational> posRationals;         // ball radii enumeration
  mutable std::uint64_t lineHeight = 0;               // enumeration cursor
  mutable std::uint64_t radiusHeight = 1;

  void growLinePoints(std::size_t need) const {
    // Unit: by denominator q, numerators 0..q coprime to q.
    // Real: by height h = |p| + q, reduced p/q, positives before negatives.
    while (linePoints.size() <= need) {
      ++lineHeight;
      std::uint64_t h = lineHeight;
      if (kind == SpaceKind::Unit) {
        std::uint64_t q = h;
        for (std::uint64_t p = 0; p <= q; ++p) {
          if (q == 1 || gcdU(p, q) == 1) {
            Rational r(static_cast<long>(p), static_cast<long>(q));
            if (!lineIndex.count(r)) {
              lineIndex.emplace(r, linePoints.size());
              linePoints.push_back(r);
            }
          }
        }
      } else {
        for (std::uint64_t q = 1; q <= h; ++q) {
          std::uint64_t pa = h - q;
          if (pa != 0 && gcdU(pa, q) != 1) continue;
          if (pa == 0 && q != 1) continue;
          Rational r(static_cast<long>(pa), static_cast<long>(q));
          for (int sign = 0; sign < (pa == 0 ? 1 : 2); ++sign) {
            Rational v = sign ? -r : r;
            if (!lineIndex.count(v)) {
              lineIndex.emplace(v, linePoints.size());
              linePoints.push_back(v);
            }
          }
        }
      }
      if (lineHeight > 4000000) throw CapacityExceeded("space: point enumeration overflow");
    }
  }

  void growRadii(std::size_t need) const {
    while (posRationals.size() <= need) {
      ++radiusHeight;
      std::uint64_t h = radiusHeight;
      for (std::uint64_t q = 1; q < h; ++q) {
        std::uint64_t p = h - q;
        if (gcdU(p, q) != 1) continue;
        posRationals.push_back(Rational(static_cast<long>(p), static_cast<long>(q)));
      }
      if (radiusHeight > 4000000) throw CapacityExceeded("space: radius enumeration overflow");
    }
  }
};

Space Space::unitInterval() {
  auto impl = std::make_shared<Impl>();
  impl->kind = SpaceKind::Unit;
  impl->label = "unit";
  return Space(impl);
}

Space Space::realLine() {
  auto impl = std::make_shared<Impl>();
  impl->kind = SpaceKind::Real;
  impl->label = "real";
  return Space(impl);
}

Space Space::cantor() {
  auto impl = std::make_shared<Impl>();
  impl->kind = SpaceKind::Cantor;
  impl->label = "cantor";
  return Space(impl);
}

Space Space::finite(std::size_t n, std::vector<Rational> distMatrix) {
  if (n == 0 || distMatrix.size() != n * n)
    throw std::invalid_argument("finite space: bad matrix size");
  for (std::size_t i = 0; i < n; ++i) {
    if (!distMatrix[i * n + i].isZero())
      throw std::invalid_argument("finite space: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (distMatrix[i * n + j] != distMatrix[j * n + i])
        throw std::invalid_argument("finite space: asymmetric");
      if (i != j && !distMatrix[i * n + j].isPositive())
        throw std::invalid_argument("finite space: non-positive off-diagonal");
      for (std::size_t k = 0; k < n; ++k)
        if (distMatrix[i * n + j] > distMatrix[i * n + k] + distMatrix[k * n + j])
          throw std::invalid_argument("finite space: triangle inequality fails");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = SpaceKind::Finite;
  impl->label = "finite:" + std::to_string(n);
  impl->finiteCount = n;
  impl->matrix = std::move(distMatrix);
  return Space(impl);
}

SpaceKind Space::kind() const { return impl_->kind; }
const std::string& Space::label() const { return impl_->label; }

std::optional<std::uint64_t> Space::pointCount() const {
  if (impl_->kind == SpaceKind::Finite) return impl_->finiteCount;
  return std::nullopt;
}

Rational Space::pointCoord(PointIndex i) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->growLinePoints(i);
  return impl_->linePoints[i];
}

Word Space::pointWord(PointIndex i) const {
  // length-lex enumeration: index 0 is the empty word
  std::uint64_t len = 0, total = 0;
  while (total + (std::uint64_t(1) << len) <= i) {
    total += std::uint64_t(1) << len;
    ++len;
  }
  std::uint64_t off = i - total;
  Word w(len);
  for (std::uint64_t b = 0; b < len; ++b) w[len - 1 - b] = (off >> b) & 1;
  return w;
}

Rational Space::distQ(PointIndex i, PointIndex j) const {
  switch (impl_->kind) {
    case SpaceKind::Unit:
    case SpaceKind::Real:
      return (pointCoord(i) - pointCoord(j)).abs();
    case SpaceKind::Cantor: {
      Word a = pointWord(i), b = pointWord(j);
      std::size_t n = std::max(a.size(), b.size());
      for (std::size_t p = 0; p < n; ++p) {
        bool ba = p < a.size() ? a[p] : false;
        bool bb = p < b.size() ? b[p] : false;
        if (ba != bb) return Rational::pow2(-static_cast<long>(p));
      }
      return Rational(0);
    }
    case SpaceKind::Finite:
      return finiteDist(impl_->matrix, impl_->finiteCount, i, j);
  }
  throw std::logic_error("distQ: bad kind");
}

CauchyReal Space::dist(PointIndex i, PointIndex j) const {
  return CauchyReal::constant(distQ(i, j));
}

PointIndex Space::indexOfRational(const Rational& q) const {
  if (impl_->kind == SpaceKind::Unit && (q.isNegative() || q > Rational(1)))
    throw std::invalid_argument("indexOfRational: point outside [0,1]");
  std::lock_guard<std::mutex> lock(impl_->mu);
  for (;;) {
    auto it = impl_->lineIndex.find(q);
    if (it != impl_->lineIndex.end()) return it->second;
    impl_->growLinePoints(impl_->linePoints.size() + 256);
  }
}

PointIndex Space::indexOfWord(const Word& w) const {
  // strip trailing zeros: w0^omega equals its shortest representative
  Word v = w;
  while (!v.empty() && !v.back()) v.pop_back();
  std::uint64_t total = 0;
  for (std::uint64_t len = 0; len < v.size(); ++len) total += std::uint64_t(1) << len;
  std::uint64_t off = 0;
  for (std::size_t p = 0; p < v.size(); ++p) off = (off << 1) | (v[p] ? 1 : 0);
  return total + off;
}

BallIndex Space::ballAt(std::uint64_t k) const {
  auto [ci, ri] = unpair(k);
  Rational radius;
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->growRadii(ri);
    radius = impl_->posRationals[ri];
  }
  PointIndex center = ci;
  if (impl_->kind == SpaceKind::Finite) center = ci % impl_->finiteCount;
  return BallIndex{center, radius, false};
}

ExactSet Space::ballSet(const BallIndex& b) const {
  switch (impl_->kind) {
    case SpaceKind::Unit:
    case SpaceKind::Real: {
      Rational c = pointCoord(b.center);
      Interval iv{c - b.radius, c + b.radius, b.closed, b.closed};
      return ExactSet::interval(impl_->kind, iv);
    }
    case SpaceKind::Cantor: {
      Word w = pointWord(b.center);
      std::size_t m = 0;
      if (b.closed) {
        while (!(Rational::pow2(-static_cast<long>(m)) <= b.radius)) ++m;
      } else {
        while (!(Rational::pow2(-static_cast<long>(m)) < b.radius)) ++m;
      }
      Word prefix(m);
      for (std::size_t p = 0; p < m; ++p) prefix[p] = p < w.size() ? w[p] : false;
      return ExactSet::cylinder(prefix);
    }
    case SpaceKind::Finite: {
      std::vector<bool> mask(impl_->finiteCount, false);
      for (std::size_t j = 0; j < impl_->finiteCount; ++j) {
        Rational d = finiteDist(impl_->matrix, impl_->finiteCount, b.center, j);
        if (b.closed ? d <= b.radius : d < b.radius) mask[j] = true;
      }
      return ExactSet::finiteMask(std::move(mask));
    }
  }
  throw std::logic_error("ballSet: bad kind");
}

ExactSet Space::regionOf(const std::vector<BallIndex>& balls) const {
  ExactSet r = emptySet();
  for (const auto& b : balls) r = r.unionWith(ballSet(b));
  return r;
}

ExactSet Space::regionOf(const RationalOpenSet& J) const { return regionOf(J.balls); }

ExactSet Space::emptySet() const { return ExactSet::empty(impl_->kind, impl_->finiteCount); }
ExactSet Space::wholeSet() const { return ExactSet::whole(impl_->kind, impl_->finiteCount); }

ExactSet Space::inflateOpen(const ExactSet& s, const Rational& r) const {
  if (impl_->kind != SpaceKind::Finite) return s.inflateOpen(r);
  std::vector<bool> mask(impl_->finiteCount, false);
  for (std::size_t j = 0; j < impl_->finiteCount; ++j)
    for (std::size_t i = 0; i < impl_->finiteCount; ++i)
      if (s.containsIndex(i) && finiteDist(impl_->matrix, impl_->finiteCount, i, j) < r)
        mask[j] = true;
  return ExactSet::finiteMask(std::move(mask));
}

ExactSet Space::inflateClosed(const ExactSet& s, const Rational& r) const {
  if (impl_->kind != SpaceKind::Finite) return s.inflateClosed(r);
  std::vector<bool> mask(impl_->finiteCount, false);
  for (std::size_t j = 0; j < impl_->finiteCount; ++j)
    for (std::size_t i = 0; i < impl_->finiteCount; ++i)
      if (s.containsIndex(i) && finiteDist(impl_->matrix, impl_->finiteCount, i, j) <= r)
        mask[j] = true;
  return ExactSet::finiteMask(std::move(mask));
}

std::optional<Rational> Space::distPointToSet(PointIndex i, const ExactSet& s) const {
  switch (impl_->kind) {
    case SpaceKind::Unit:
    case SpaceKind::Real:
      return s.distToRational(pointCoord(i));
    case SpaceKind::Cantor:
      return s.distToWord(pointWord(i));
    case SpaceKind::Finite:
      return s.distToFiniteIndex(i, impl_->matrix, impl_->finiteCount);
  }
  return std::nullopt;
}

std::optional<Rational> Space::setMinDist(const ExactSet& a, const ExactSet& b) const {
  if (impl_->kind != SpaceKind::Finite) return a.minDist(b);
  if (a.isEmpty() || b.isEmpty()) return std::nullopt;
  std::optional<Rational> best;
  for (std::size_t i = 0; i < impl_->finiteCount; ++i) {
    if (!a.containsIndex(i)) continue;
    for (std::size_t j = 0; j < impl_->finiteCount; ++j) {
      if (!b.containsIndex(j)) continue;
      Rational d = finiteDist(impl_->matrix, impl_->finiteCount, i, j);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

std::optional<Rational> Space::setSupDist(const ExactSet& a, const ExactSet& b) const {
  if (impl_->kind != SpaceKind::Finite) return a.dirSupDist(b);
  if (b.isEmpty()) return std::nullopt;
  Rational best(0);
  for (std::size_t i = 0; i < impl_->finiteCount; ++i) {
    if (!a.containsIndex(i)) continue;
    auto d = b.distToFiniteIndex(i, impl_->matrix, impl_->finiteCount);
    if (d && *d > best) best = *d;
  }
  return best;
}

std::optional<Rational> Space::diameterBound() const {
  switch (impl_->kind) {
    case SpaceKind::Unit:
    case SpaceKind::Cantor:
      return Rational(1);
    case SpaceKind::Finite: {
      Rational m(0);
      for (const auto& d : impl_->matrix) m = max(m, d);
      return m;
    }
    case SpaceKind::Real:
      return std::nullopt;
  }
  return std::nullopt;
}

RationalOpenSet Space::coverOf(const ExactSet& closedBounded, const Rational& s) const {
  RationalOpenSet J;
  switch (impl_->kind) {
    case SpaceKind::Unit:
    case SpaceKind::Real:
      for (const auto& iv : closedBounded.intervals()) {
        if (!iv.lo || !iv.hi) throw std::invalid_argument("coverOf: unbounded component");
        Rational c = (*iv.lo + *iv.hi) / Rational(2);
        Rational r = (*iv.hi - *iv.lo) / Rational(2) + s;
        if (impl_->kind == SpaceKind::Unit) c = max(Rational(0), min(Rational(1), c));
        J.balls.push_back(BallIndex{indexOfRational(c), r + (c - (*iv.lo + *iv.hi) / Rational(2)).abs(), false});
      }
      break;
    case SpaceKind::Cantor:
      for (const auto& p : closedBounded.prefixes()) {
        Word w = p;  // center sigma 0^omega, radius pinning exactly [sigma]
        J.balls.push_back(
            BallIndex{indexOfWord(w), Rational(3) * Rational::pow2(-static_cast<long>(p.size()) - 1), false});
      }
      break;
    case SpaceKind::Finite:
      for (std::size_t i = 0; i < impl_->finiteCount; ++i)
        if (closedBounded.containsIndex(i)) J.balls.push_back(BallIndex{i, s, false});
      break;
  }
  return J;
}

const std::vector<Rational>& Space::finiteMatrix() const { return impl_->matrix; }

// ------------------------------------------------------------------ PointName

PointName::PointName(Space sp, std::function<PointIndex(Fuel)> at)
    : sp_(std::move(sp)), at_(std::move(at)) {}

PointName PointName::rationalPoint(const Space& sp, PointIndex i) {
  return PointName(sp, [i](Fuel) { return i; });
}

PointIndex PointName::at(Fuel n) const { return at_(n); }

ExactSet PointName::hullAt(Fuel n) const {
  BallIndex b{at(n), Rational::pow2(-static_cast<long>(n) + 1), true};
  return sp_.ballSet(b);
}

// ------------------------------------------------------------------- SigmaSet

struct SigmaSet::State {
  Space sp;
  std::function<std::vector<BallIndex>(Fuel)> fn;
  std::optional<ExactSet> exact;
  std::string name;
  std::mutex mu;
  std::map<Fuel, std::vector<BallIndex>> ballMemo;
  std::map<Fuel, ExactSet> regionMemo;

  State(Space s) : sp(std::move(s)) {}
};

SigmaSet::SigmaSet(Space sp, std::function<std::vector<BallIndex>(Fuel)> enumerate,
                   std::string name)
    : st_(std::make_shared<State>(std::move(sp))) {
  st_->fn = std::move(enumerate);
  st_->name = std::move(name);
}

SigmaSet SigmaSet::fromExactOpen(const Space& sp, const ExactSet& open, std::string name) {
  SpaceKind k = sp.kind();
  std::function<std::vector<BallIndex>(Fuel)> fn;
  if (k == SpaceKind::Unit || k == SpaceKind::Real) {
    fn = [sp, open](Fuel t) {
      std::vector<BallIndex> out;
      for (const auto& iv : open.intervals()) {
        // shrink open ends, cover closed/ray ends, monotonically in t
        Rational u, v;
        bool haveU = true, haveV = true;
        if (!iv.lo) {
          u = Rational(0) - Rational::pow2(static_cast<long>(std::min<Fuel>(t, 40)));
        } else if (iv.loClosed) {
          u = *iv.lo - Rational(1);  // clipped by the ambient for Unit
        } else {
          Rational w = iv.hi ? min(Rational(1), *iv.hi - *iv.lo) : Rational(1);
          u = *iv.lo + w * Rational::pow2(-static_cast<long>(t) - 2);
        }
        if (!iv.hi) {
          v = Rational::pow2(static_cast<long>(std::min<Fuel>(t, 40)));
        } else if (iv.hiClosed) {
          v = *iv.hi + Rational(1);
        } else {
          Rational w = iv.lo ? min(Rational(1), *iv.hi - *iv.lo) : Rational(1);
          v = *iv.hi - w * Rational::pow2(-static_cast<long>(t) - 2);
        }
        (void)haveU;
        (void)haveV;
        if (!(u < v)) continue;
        Rational c = (u + v) / Rational(2);
        if (sp.kind() == SpaceKind::Unit) c = max(Rational(0), min(Rational(1), c));
        Rational r = max((v - c).abs(), (c - u).abs());
        out.push_back(BallIndex{sp.indexOfRational(c), r, false});
      }
      return out;
    };
  } else if (k == SpaceKind::Cantor) {
    fn = [sp, open](Fuel) {
      std::vector<BallIndex> out;
      for (const auto& p : open.prefixes())
        out.push_back(BallIndex{sp.indexOfWord(p),
                                Rational(3) * Rational::pow2(-static_cast<long>(p.size()) - 1),
                                false});
      return out;
    };
  } else {
    fn = [sp, open](Fuel) {
      std::vector<BallIndex> out;
      auto count = *sp.pointCount();
      for (std::size_t i = 0; i < count; ++i) {
        if (!open.containsIndex(i)) continue;
        Rational r(1);
        for (std::size_t j = 0; j < count; ++j) {
          if (j == i) continue;
          Rational d = finiteDist(sp.finiteMatrix(), count, i, j);
          if (d / Rational(2) < r) r = d / Rational(2);
        }
        out.push_back(BallIndex{i, r, false});
      }
      return out;
    };
  }
  SigmaSet s(sp, std::move(fn), std::move(name));
  s.st_->exact = open;
  return s;
}

SigmaSet SigmaSet::wholeSpace(const Space& sp) {
  return fromExactOpen(sp, sp.wholeSet(), "whole");
}

SigmaSet SigmaSet::emptySet(const Space& sp) {
  return fromExactOpen(sp, sp.emptySet(), "empty");
}

std::vector<BallIndex> SigmaSet::enumerate(Fuel t) const {
  std::lock_guard<std::mutex> lock(st_->mu);
  auto it = st_->ballMemo.find(t);
  if (it != st_->ballMemo.end()) return it->second;
  std::vector<BallIndex> v = st_->fn(t);
  // monotone under inclusion: append everything seen at earlier cached fuels
  auto below = st_->ballMemo.lower_bound(t);
  if (below != st_->ballMemo.begin()) {
    --below;
    std::vector<BallIndex> merged = below->second;
    merged.insert(merged.end(), v.begin(), v.end());
    v = std::move(merged);
  }
  st_->ballMemo.emplace(t, v);
  return v;
}

ExactSet SigmaSet::regionAt(Fuel t) const {
  {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->regionMemo.find(t);
    if (it != st_->regionMemo.end()) return it->second;
  }
  ExactSet r = st_->sp.regionOf(enumerate(t));
  std::lock_guard<std::mutex> lock(st_->mu);
  st_->regionMemo.emplace(t, r);
  return r;
}

const std::optional<ExactSet>& SigmaSet::exact() const { return st_->exact; }
const Space& SigmaSet::space() const { return st_->sp; }
const std::string& SigmaSet::name() const { return st_->name; }

// ---------------------------------------------------------------------- PiSet

PiSet::PiSet(SigmaSet complement) : complement_(std::move(complement)) {
  if (complement_.exact()) exact_ = complement_.exact()->complement();
}

PiSet PiSet::fromExactClosed(const Space& sp, const ExactSet& closed) {
  PiSet p(SigmaSet::fromExactOpen(sp, closed.complement(), "pi-complement"));
  p.exact_ = closed;
  return p;
}

ExactSet PiSet::knownSuperset(Fuel t) const {
  return complement_.regionAt(t).complement();
}

// ----------------------------------------------------------------- CompactName

CompactName::CompactName(Space sp, std::function<std::vector<RationalOpenSet>(Fuel)> covers,
                         std::optional<ExactSet> exact)
    : sp_(std::move(sp)), covers_(std::move(covers)), exact_(std::move(exact)) {}

CompactName CompactName::fromExact(const Space& sp, const ExactSet& closedBounded) {
  ExactSet K = closedBounded;
  auto covers = [sp, K](Fuel t) {
    std::vector<RationalOpenSet> out;
    if (K.isEmpty()) {
      out.push_back(RationalOpenSet{});
      return out;
    }
    for (Fuel k = 0; k <= t && k <= 24; ++k)
      out.push_back(sp.coverOf(K, Rational::pow2(-static_cast<long>(k))));
    return out;
  };
  return CompactName(sp, covers, K);
}

CompactName CompactName::emptyCompact(const Space& sp) {
  return fromExact(sp, sp.emptySet());
}

std::vector<RationalOpenSet> CompactName::covers(Fuel t) const { return covers_(t); }

bool CompactName::coversDecision(const RationalOpenSet& J, Fuel fuel) const {
  if (exact_) return exact_->isSubsetOf(sp_.regionOf(J));
  // generic: J covers K if some discovered cover refines into J
  for (const auto& C : covers(fuel)) {
    ExactSet r = sp_.regionOf(C);
    if (r.isSubsetOf(sp_.regionOf(J))) return true;
  }
  return false;
}

bool CompactName::isEmpty() const {
  if (exact_) return exact_->isEmpty();
  return false;
}

// ----------------------------------------------------------------- operations

LeftCEReal distToPi(const PointName& x, const PiSet& C) {
  return LeftCEReal([x, C](Fuel t) -> Rational {
    ExactSet hull = x.hullAt(t);
    ExactSet sup = C.knownSuperset(t);
    if (sup.isEmpty()) return Rational(static_cast<long>(t));  // empty C: grow unbounded
    auto d = x.space().setMinDist(hull, sup);
    return d ? *d : Rational(0);
  });
}

CauchyReal distToCompact(const PointName& x, const CompactName& K) {
  const Space sp = x.space();
  if (K.exact()) {
    ExactSet set = *K.exact();
    if (set.isEmpty()) throw std::invalid_argument("distToCompact: empty compact");
    auto refine = [x, sp, set](Fuel t) {
      ExactSet hull = x.hullAt(t + 2);
      auto lo = sp.setMinDist(hull, set);
      auto hi = sp.setSupDist(hull, set);
      if (!lo || !hi) throw std::logic_error("distToCompact: empty geometry");
      return Enclosure(*lo, *hi);
    };
    return CauchyReal::fromBrackets(refine, 64, "distToCompact.refine");
  }
  auto refine = [x, sp, K](Fuel t) {
    ExactSet hull = x.hullAt(t + 2);
    auto coverList = K.covers(t);
    if (coverList.empty()) throw FuelExhausted("distToCompact.cover");
    ExactSet r = sp.regionOf(coverList.back());
    auto lo = sp.setMinDist(hull, r);
    auto hi = sp.setSupDist(hull, r);
    if (!lo || !hi) throw std::logic_error("distToCompact: empty cover");
    return Enclosure(*lo, *hi);
  };
  return CauchyReal::fromBrackets(refine, 64, "distToCompact.coverRefine");
}

PiSet closedNeighborhoodPi(const PiSet& C, const Rational& s) {
  const Space sp = C.space();
  if (C.exact()) {
    if (C.exact()->isEmpty()) return PiSet::fromExactClosed(sp, sp.emptySet());
    return PiSet::fromExactClosed(sp, sp.inflateClosed(*C.exact(), s));
  }
  SigmaSet inner = C.complementSigma();
  auto fn = [sp, inner, s](Fuel t) {
    std::vector<BallIndex> out;
    ExactSet sup = inner.regionAt(t).complement();  // known superset of C
    for (std::uint64_t k = 0; k <= t; ++k) {
      BallIndex b = sp.ballAt(k);
      if (sup.isEmpty()) {
        out.push_back(b);
        continue;
      }
      auto d = sp.distPointToSet(b.center, sup);
      if (d && *d > b.radius + s) out.push_back(b);
    }
    return out;
  };
  return PiSet(SigmaSet(sp, fn, "closed-neighborhood-complement"));
}

Progress compactInsideOpen(const CompactName& K, const SigmaSet& U, Fuel fuel) {
  const Space sp = K.space();
  if (K.exact() && K.exact()->isEmpty()) return Progress::Yes;
  for (Fuel t = 0; t <= fuel; ++t) {
    ExactSet region = U.regionAt(t);
    if (K.exact()) {
      if (K.exact()->isSubsetOf(region)) return Progress::Yes;
      continue;
    }
    for (const auto& J : K.covers(t))
      if (sp.regionOf(J).isSubsetOf(region)) return Progress::Yes;
  }
  return Progress::NotYet;
}

CompactName compactUnion(const CompactName& a, const CompactName& b) {
  const Space sp = a.space();
  if (a.exact() && b.exact())
    return CompactName::fromExact(sp, a.exact()->unionWith(*b.exact()));
  auto coversA = a;
  auto coversB = b;
  auto covers = [coversA, coversB](Fuel t) {
    std::vector<RationalOpenSet> out;
    auto ca = coversA.covers(t);
    auto cb = coversB.covers(t);
    for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) {
      RationalOpenSet u = ca[i];
      u.balls.insert(u.balls.end(), cb[i].balls.begin(), cb[i].balls.end());
      out.push_back(u);
    }
    return out;
  };
  return CompactName(sp, covers, std::nullopt);
}

std::vector<CauchyReal> baireDenseSequence(const std::vector<SigmaSet>& denseOpens,
                                           std::size_t howMany, Fuel fuel) {
  std::vector<CauchyReal> out;
  for (std::size_t k = 0; k < howMany; ++k) {
    // nested closed rational intervals threaded through each open in turn
    Rational a(static_cast<long>(k) + 1), b(static_cast<long>(k) + 2);
    for (const auto& U : denseOpens) {
      bool placed = false;
      for (Fuel t = 0; t <= fuel && !placed; ++t) {
        for (const auto& ball : U.enumerate(t)) {
          ExactSet bs = U.space().ballSet(ball);
          ExactSet cur = ExactSet::interval(SpaceKind::Real, Interval{a, b, false, false});
          ExactSet meet = bs.intersectWith(cur);
          auto h = meet.hull();
          if (!h || !h->lo || !h->hi || !(*h->lo < *h->hi)) continue;
          // take a closed middle third, keeping strictly inside the open ball
          Rational lo = *h->lo, hi = *h->hi;
          Rational third = (hi - lo) / Rational(3);
          a = lo + third;
          b = hi - third;
          placed = true;
          break;
        }
      }
      if (!placed) throw FuelExhausted("baireDenseSequence.place");
    }
    out.push_back(CauchyReal::constant((a + b) / Rational(2)));
  }
  return out;
}

}  // namespace effmeas
