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

#include "effmeas/exactset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace effmeas {

namespace {

bool isLine(SpaceKind k) { return k == SpaceKind::Unit || k == SpaceKind::Real; }

bool intervalEmpty(const Interval& iv) {
  if (!iv.lo || !iv.hi) return false;
  if (*iv.lo > *iv.hi) return true;
  if (*iv.lo == *iv.hi) return !(iv.loClosed && iv.hiClosed);
  return false;
}

// true if q is in iv
bool intervalContains(const Interval& iv, const Rational& q) {
  if (iv.lo) {
    if (q < *iv.lo) return false;
    if (q == *iv.lo && !iv.loClosed) return false;
  }
  if (iv.hi) {
    if (q > *iv.hi) return false;
    if (q == *iv.hi && !iv.hiClosed) return false;
  }
  return true;
}

// ordering key: -inf first, then by value with closed endpoints first
bool loBefore(const Interval& a, const Interval& b) {
  if (!a.lo) return true;
  if (!b.lo) return false;
  if (*a.lo != *b.lo) return *a.lo < *b.lo;
  return a.loClosed && !b.loClosed;
}

// do a and b union to a single interval, assuming loBefore(a, b) order?
bool mergeable(const Interval& a, const Interval& b) {
  if (!a.hi || !b.lo) return true;
  if (*b.lo < *a.hi) return true;
  if (*b.lo == *a.hi) return a.hiClosed || b.loClosed;
  return false;
}

Word wordAppend(Word w, bool bit) {
  w.push_back(bit);
  return w;
}

bool isPrefixOf(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  return std::equal(p.begin(), p.end(), w.begin());
}

// first index where x (= w padded with zeros) differs from prefix p, or
// nullopt if w0^omega lies in [p]
std::optional<std::size_t> firstDiffAgainstPadded(const Word& p, const Word& w) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool wi = i < w.size() ? w[i] : false;
    if (p[i] != wi) return i;
  }
  return std::nullopt;
}

}  // namespace

Rational finiteDist(const std::vector<Rational>& dists, std::size_t count, std::size_t i,
                    std::size_t j) {
  return dists.at(i * count + j);
}

// ------------------------------------------------------------- constructors

ExactSet ExactSet::empty(SpaceKind k, std::size_t finiteCount) {
  ExactSet s;
  s.kind_ = k;
  if (k == SpaceKind::Finite) s.mask_.assign(finiteCount, false);
  return s;
}

ExactSet ExactSet::whole(SpaceKind k, std::size_t finiteCount) {
  ExactSet s;
  s.kind_ = k;
  switch (k) {
    case SpaceKind::Unit:
      s.ivs_.push_back(Interval{Rational(0), Rational(1), true, true});
      break;
    case SpaceKind::Real:
      s.ivs_.push_back(Interval{std::nullopt, std::nullopt, true, true});
      break;
    case SpaceKind::Cantor:
      s.prefixes_.push_back(Word{});
      break;
    case SpaceKind::Finite:
      s.mask_.assign(finiteCount, true);
      break;
  }
  return s;
}

ExactSet ExactSet::interval(SpaceKind k, const Interval& iv) {
  if (!isLine(k)) throw std::invalid_argument("ExactSet::interval: line spaces only");
  ExactSet s;
  s.kind_ = k;
  s.ivs_.push_back(iv);
  s.normalizeLine();
  return s;
}

ExactSet ExactSet::point(SpaceKind k, const Rational& q) {
  return interval(k, Interval{q, q, true, true});
}

ExactSet ExactSet::cylinder(Word prefix) {
  ExactSet s;
  s.kind_ = SpaceKind::Cantor;
  s.prefixes_.push_back(std::move(prefix));
  return s;
}

ExactSet ExactSet::finiteMask(std::vector<bool> mask) {
  ExactSet s;
  s.kind_ = SpaceKind::Finite;
  s.mask_ = std::move(mask);
  return s;
}

ExactSet ExactSet::finitePoint(std::size_t idx, std::size_t count) {
  std::vector<bool> m(count, false);
  m.at(idx) = true;
  return finiteMask(std::move(m));
}

// ------------------------------------------------------------ normalization

void ExactSet::normalizeLine() {
  std::vector<Interval> in = std::move(ivs_);
  ivs_.clear();
  if (kind_ == SpaceKind::Unit) {
    for (auto& iv : in) {
      // clip to the ambient [0,1]; a clipped end is a closed end
      if (!iv.lo || *iv.lo < Rational(0)) {
        iv.lo = Rational(0);
        iv.loClosed = true;
      }
      if (!iv.hi || *iv.hi > Rational(1)) {
        iv.hi = Rational(1);
        iv.hiClosed = true;
      }
    }
  }
  in.erase(std::remove_if(in.begin(), in.end(), intervalEmpty), in.end());
  std::sort(in.begin(), in.end(), loBefore);
  for (auto& iv : in) {
    if (!ivs_.empty() && mergeable(ivs_.back(), iv)) {
      Interval& cur = ivs_.back();
      // extend hi if iv reaches further
      if (!iv.hi) {
        cur.hi = std::nullopt;
        cur.hiClosed = true;
      } else if (cur.hi) {
        if (*iv.hi > *cur.hi) {
          cur.hi = iv.hi;
          cur.hiClosed = iv.hiClosed;
        } else if (*iv.hi == *cur.hi) {
          cur.hiClosed = cur.hiClosed || iv.hiClosed;
        }
      }
    } else {
      ivs_.push_back(iv);
    }
  }
}

void ExactSet::normalizeCantor() {
  std::set<Word> ws(prefixes_.begin(), prefixes_.end());
  // absorb: drop any word extending another member
  for (auto it = ws.begin(); it != ws.end();) {
    bool drop = false;
    for (const auto& p : ws) {
      if (&p != &*it && isPrefixOf(p, *it)) {
        drop = true;
        break;
      }
    }
    it = drop ? ws.erase(it) : std::next(it);
  }
  // merge sibling pairs until fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& w : ws) {
      if (w.empty()) continue;
      Word sib = w;
      sib.back() = !sib.back();
      if (ws.count(sib)) {
        Word parent = w;
        parent.pop_back();
        ws.erase(w);
        ws.erase(sib);
        ws.insert(parent);
        changed = true;
        break;
      }
    }
  }
  prefixes_.assign(ws.begin(), ws.end());
}

// ------------------------------------------------------------------- queries

bool ExactSet::isEmpty() const {
  switch (kind_) {
    case SpaceKind::Unit:
    case SpaceKind::Real:
      return ivs_.empty();
    case SpaceKind::Cantor:
      return prefixes_.empty();
    case SpaceKind::Finite:
      return std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
  }
  return true;
}

bool ExactSet::containsRational(const Rational& q) const {
  for (const auto& iv : ivs_)
    if (intervalContains(iv, q)) return true;
  return false;
}

bool ExactSet::containsWord(const Word& w) const {
  for (const auto& p : prefixes_)
    if (!firstDiffAgainstPadded(p, w)) return true;
  return false;
}

bool ExactSet::containsIndex(std::size_t i) const { return i < mask_.size() && mask_[i]; }

// ---------------------------------------------------------------- set algebra

ExactSet ExactSet::unionWith(const ExactSet& o) const {
  ExactSet s = *this;
  switch (kind_) {
    case SpaceKind::Unit:
    case SpaceKind::Real:
      s.ivs_.insert(s.ivs_.end(), o.ivs_.begin(), o.ivs_.end());
      s.normalizeLine();
      break;
    case SpaceKind::Cantor:
      s.prefixes_.insert(s.prefixes_.end(), o.prefixes_.begin(), o.prefixes_.end());
      s.normalizeCantor();
      break;
    case SpaceKind::Finite:
      for (std::size_t i = 0; i < s.mask_.size(); ++i)
        if (i < o.mask_.size() && o.mask_[i]) s.mask_[i] = true;
      break;
  }
  return s;
}

ExactSet ExactSet::intersectWith(const ExactSet& o) const {
  ExactSet s = ExactSet::empty(kind_, mask_.size());
  switch (kind_) {
    case SpaceKind::Unit:
    case SpaceKind::Real:
      for (const auto& a : ivs_) {
        for (const auto& b : o.ivs_) {
          Interval r;
          // lo = max of the two los
          if (!a.lo) {
            r.lo = b.lo;
            r.loClosed = b.loClosed;
          } else if (!b.lo) {
            r.lo = a.lo;
            r.loClosed = a.loClosed;
          } else if (*a.lo > *b.lo) {
            r.lo = a.lo;
            r.loClosed = a.loClosed;
          } else if (*b.lo > *a.lo) {
            r.lo = b.lo;
            r.loClosed = b.loClosed;
          } else {
            r.lo = a.lo;
            r.loClosed = a.loClosed && b.loClosed;
          }
          if (!a.hi) {
            r.hi = b.hi;
            r.hiClosed = b.hiClosed;
          } else if (!b.hi) {
            r.hi = a.hi;
            r.hiClosed = a.hiClosed;
          } else if (*a.hi < *b.hi) {
            r.hi = a.hi;
            r.hiClosed = a.hiClosed;
          } else if (*b.hi < *a.hi) {
            r.hi = b.hi;
            r.hiClosed = b.hiClosed;
          } else {
            r.hi = a.hi;
            r.hiClosed = a.hiClosed && b.hiClosed;
          }
          if (!intervalEmpty(r)) s.ivs_.push_back(r);
        }
      }
      s.normalizeLine();
      break;
    case SpaceKind::Cantor:
      for (const auto& a : prefixes_) {
        for (const auto& b : o.prefixes_) {
          if (isPrefixOf(a, b))
            s.prefixes_.push_back(b);
          else if (isPrefixOf(b, a))
            s.prefixes_.push_back(a);
        }
      }
      s.normalizeCantor();
      break;
    case SpaceKind::Finite:
      s.mask_.assign(mask_.size(), false);
      for (std::size_t i = 0; i < mask_.size(); ++i)
        s.mask_[i] = mask_[i] && i < o.mask_.size() && o.mask_[i];
      break;
  }
  return s;
}

ExactSet ExactSet::complement() const {
  ExactSet s = ExactSet::empty(kind_, mask_.size());
  switch (kind_) {
    case SpaceKind::Unit:
    case SpaceKind::Real: {
      const bool unit = kind_ == SpaceKind::Unit;
      std::optional<Rational> cur = unit ? std::optional<Rational>(Rational(0)) : std::nullopt;
      bool curClosed = true;
      for (const auto& iv : ivs_) {
        Interval gap;
        gap.lo = cur;
        gap.loClosed = curClosed;
        gap.hi = iv.lo;
        gap.hiClosed = iv.lo && !iv.loClosed;
        if (!gap.lo && !gap.hi) {
          // cannot happen: iv.lo missing only for the first component
        }
        if (gap.hi || !unit) {
          if (iv.lo) s.ivs_.push_back(gap);
        }
        cur = iv.hi;
        curClosed = iv.hi && !iv.hiClosed;
        if (!iv.hi) {
          cur = std::nullopt;  // ray to +inf: nothing after
          curClosed = false;
        }
      }
      // trailing gap
      bool openEnded = ivs_.empty() || ivs_.back().hi.has_value();
      if (openEnded) {
        Interval gap;
        gap.lo = cur;
        gap.loClosed = curClosed;
        gap.hi = unit ? std::optional<Rational>(Rational(1)) : std::nullopt;
        gap.hiClosed = true;
        s.ivs_.push_back(gap);
      }
      s.normalizeLine();
      break;
    }
    case SpaceKind::Cantor: {
      // walk the prefix tree, emitting maximal cylinders outside the set
      std::vector<Word> out;
      std::vector<Word> stack{Word{}};
      while (!stack.empty()) {
        Word pi = stack.back();
        stack.pop_back();
        bool inside = false, meets = false;
        for (const auto& p : prefixes_) {
          if (isPrefixOf(p, pi)) inside = true;
          if (isPrefixOf(pi, p)) meets = true;
        }
        if (inside) continue;
        if (!meets) {
          out.push_back(pi);
          continue;
        }
        stack.push_back(wordAppend(pi, false));
        stack.push_back(wordAppend(pi, true));
      }
      s.prefixes_ = std::move(out);
      s.normalizeCantor();
      break;
    }
    case SpaceKind::Finite:
      s.mask_ = mask_;
      s.mask_.flip();
      break;
  }
  return s;
}

ExactSet ExactSet::closure() const {
  ExactSet s = *this;
  if (isLine(kind_)) {
    for (auto& iv : s.ivs_) {
      iv.loClosed = true;
      iv.hiClosed = true;
    }
    s.normalizeLine();
  }
  return s;  // Cantor/Finite sets are clopen
}

ExactSet ExactSet::interior() const {
  ExactSet s = *this;
  if (isLine(kind_)) {
    for (auto& iv : s.ivs_) {
      // ambient boundary points of [0,1] are interior relative to the space
      if (iv.lo && !(kind_ == SpaceKind::Unit && *iv.lo == Rational(0))) iv.loClosed = false;
      if (iv.hi && !(kind_ == SpaceKind::Unit && *iv.hi == Rational(1))) iv.hiClosed = false;
    }
    s.normalizeLine();
  }
  return s;
}

ExactSet ExactSet::inflateOpen(const Rational& s) const {
  ExactSet r = ExactSet::empty(kind_, mask_.size());
  switch (kind_) {
    case SpaceKind::Unit:
    case SpaceKind::Real:
      for (const auto& iv : ivs_) {
        Interval j;
        if (iv.lo) j.lo = *iv.lo - s;
        j.loClosed = false;
        if (iv.hi) j.hi = *iv.hi + s;
        j.hiClosed = false;
        r.ivs_.push_back(j);
      }
      r.normalizeLine();
      break;
    case SpaceKind::Cantor: {
      // d(x, [p]) < s  <=>  x agrees with p on the first m bits,
      // m = least n with 2^{-n} < s
      std::size_t m = 0;
      while (!(Rational::pow2(-static_cast<long>(m)) < s)) ++m;
      for (const auto& p : prefixes_) {
        Word q = p;
        if (q.size() > m) q.resize(m);
        r.prefixes_.push_back(q);
      }
      r.normalizeCantor();
      break;
    }
    case SpaceKind::Finite:
      throw std::logic_error("inflateOpen(Finite) needs the distance matrix; use Space");
  }
  return r;
}

ExactSet ExactSet::inflateClosed(const Rational& s) const {
  ExactSet r = ExactSet::empty(kind_, mask_.size());
  switch (kind_) {
    case SpaceKind::Unit:
    case SpaceKind::Real:
      for (const auto& iv : ivs_) {
        Interval j;
        if (iv.lo) j.lo = *iv.lo - s;
        j.loClosed = true;
        if (iv.hi) j.hi = *iv.hi + s;
        j.hiClosed = true;
        r.ivs_.push_back(j);
      }
      r.normalizeLine();
      break;
    case SpaceKind::Cantor: {
      std::size_t m = 0;
      while (!(Rational::pow2(-static_cast<long>(m)) <= s)) ++m;
      for (const auto& p : prefixes_) {
        Word q = p;
        if (q.size() > m) q.resize(m);
        r.prefixes_.push_back(q);
      }
      r.normalizeCantor();
      break;
    }
    case SpaceKind::Finite:
      throw std::logic_error("inflateClosed(Finite) needs the distance matrix; use Space");
  }
  return r;
}

bool ExactSet::isSubsetOf(const ExactSet& o) const {
  return intersectWith(o.complement()).isEmpty();
}

bool ExactSet::intersects(const ExactSet& o) const { return !intersectWith(o).isEmpty(); }

// ------------------------------------------------------------------ distances

std::optional<Rational> ExactSet::distToRational(const Rational& q) const {
  if (ivs_.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& iv : ivs_) {
    Rational d(0);
    if (iv.lo && q < *iv.lo)
      d = *iv.lo - q;
    else if (iv.hi && q > *iv.hi)
      d = q - *iv.hi;
    if (!best || d < *best) best = d;
    if (best->isZero()) break;
  }
  return best;
}

std::optional<Rational> ExactSet::distToWord(const Word& w) const {
  if (prefixes_.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& p : prefixes_) {
    auto diff = firstDiffAgainstPadded(p, w);
    Rational d = diff ? Rational::pow2(-static_cast<long>(*diff)) : Rational(0);
    if (!best || d < *best) best = d;
    if (best->isZero()) break;
  }
  return best;
}

std::optional<Rational> ExactSet::distToFiniteIndex(std::size_t i,
                                                    const std::vector<Rational>& dists,
                                                    std::size_t count) const {
  std::optional<Rational> best;
  for (std::size_t j = 0; j < mask_.size(); ++j) {
    if (!mask_[j]) continue;
    Rational d = finiteDist(dists, count, i, j);
    if (!best || d < *best) best = d;
  }
  return best;
}

std::optional<Rational> ExactSet::minDist(const ExactSet& o) const {
  if (isEmpty() || o.isEmpty()) return std::nullopt;
  switch (kind_) {
    case SpaceKind::Unit:
    case SpaceKind::Real: {
      std::optional<Rational> best;
      for (const auto& a : ivs_) {
        for (const auto& b : o.ivs_) {
          Rational d(0);
          if (a.hi && b.lo && *b.lo > *a.hi)
            d = *b.lo - *a.hi;
          else if (b.hi && a.lo && *a.lo > *b.hi)
            d = *a.lo - *b.hi;
          if (!best || d < *best) best = d;
        }
      }
      return best;
    }
    case SpaceKind::Cantor: {
      std::optional<Rational> best;
      for (const auto& a : prefixes_) {
        for (const auto& b : o.prefixes_) {
          Rational d(0);
          if (!isPrefixOf(a, b) && !isPrefixOf(b, a)) {
            std::size_t i = 0;
            while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
            d = Rational::pow2(-static_cast<long>(i));
          }
          if (!best || d < *best) best = d;
        }
      }
      return best;
    }
    case SpaceKind::Finite:
      throw std::logic_error("minDist(Finite) needs the distance matrix; use Space");
  }
  return std::nullopt;
}

namespace {

Rational cantorSupDist(const Word& pi, const ExactSet& B);

Rational cantorSupDistStep(const Word& pi, const ExactSet& B) {
  // [pi] inside a member cylinder?
  for (const auto& t : B.prefixes())
    if (isPrefixOf(t, pi)) return Rational(0);
  bool hasExtension = false;
  std::optional<Rational> diverging;
  for (const auto& t : B.prefixes()) {
    if (isPrefixOf(pi, t)) {
      hasExtension = true;
    } else {
      std::size_t i = 0;
      while (i < pi.size() && i < t.size() && pi[i] == t[i]) ++i;
      Rational d = Rational::pow2(-static_cast<long>(i));
      if (!diverging || d < *diverging) diverging = d;
    }
  }
  if (!hasExtension) {
    if (!diverging) throw std::logic_error("cantorSupDist: empty target");
    return *diverging;
  }
  Rational left = cantorSupDist(wordAppend(pi, false), B);
  Rational right = cantorSupDist(wordAppend(pi, true), B);
  Rational sup = max(left, right);
  if (diverging && *diverging < sup) sup = *diverging;  // cannot exceed nearest diverging cylinder
  return sup;
}

Rational cantorSupDist(const Word& pi, const ExactSet& B) { return cantorSupDistStep(pi, B); }

}  // namespace

std::optional<Rational> ExactSet::dirSupDist(const ExactSet& o) const {
  if (o.isEmpty()) return std::nullopt;
  if (isEmpty()) return Rational(0);
  switch (kind_) {
    case SpaceKind::Unit:
    case SpaceKind::Real: {
      // unbounded sup when this has a ray the target lacks
      bool oLeftRay = !o.ivs_.front().lo.has_value();
      bool oRightRay = !o.ivs_.back().hi.has_value();
      for (const auto& a : ivs_) {
        if (!a.lo && !oLeftRay) return std::nullopt;
        if (!a.hi && !oRightRay) return std::nullopt;
      }
      ExactSet oc = o.closure();
      Rational best(0);
      auto consider = [&](const Rational& x) {
        for (const auto& a : ivs_) {
          if (a.lo && x < *a.lo) continue;
          if (a.hi && x > *a.hi) continue;
          auto d = oc.distToRational(x);
          if (d && *d > best) best = *d;
          return;
        }
      };
      for (const auto& a : ivs_) {
        if (a.lo) consider(*a.lo);
        if (a.hi) consider(*a.hi);
      }
      // interior gap midpoints of the target are the only other local maxima
      for (std::size_t i = 0; i + 1 < oc.ivs_.size(); ++i) {
        if (!oc.ivs_[i].hi || !oc.ivs_[i + 1].lo) continue;
        consider((*oc.ivs_[i].hi + *oc.ivs_[i + 1].lo) / Rational(2));
      }
      return best;
    }
    case SpaceKind::Cantor: {
      Rational best(0);
      for (const auto& p : prefixes_) {
        Rational d = cantorSupDist(p, o);
        if (d > best) best = d;
      }
      return best;
    }
    case SpaceKind::Finite:
      throw std::logic_error("dirSupDist(Finite) needs the distance matrix; use Space");
  }
  return std::nullopt;
}

// --------------------------------------------------------- measure utilities

std::optional<Rational> ExactSet::length() const {
  if (!isLine(kind_)) return std::nullopt;
  Rational sum(0);
  for (const auto& iv : ivs_) {
    if (!iv.lo || !iv.hi) return std::nullopt;
    sum += *iv.hi - *iv.lo;
  }
  return sum;
}

mpz_class ExactSet::gridCount(const mpz_class& n) const {
  mpz_class total = 0;
  Rational nQ{mpq_class(n)};
  for (const auto& iv : ivs_) {
    mpz_class kmin = 1, kmax = n;
    if (iv.lo) {
      Rational q = nQ * *iv.lo;
      mpz_class k = iv.loClosed ? q.ceil() : (q.floor() + 1);
      if (!iv.loClosed && q.isInteger() == false) k = q.ceil();  // strict bound above non-integer
      if (k > kmin) kmin = k;
    }
    if (iv.hi) {
      Rational q = nQ * *iv.hi;
      mpz_class k = iv.hiClosed ? q.floor() : (q.ceil() - 1);
      if (!iv.hiClosed && q.isInteger() == false) k = q.floor();
      if (k < kmax) kmax = k;
    }
    if (kmax >= kmin) total += kmax - kmin + 1;
  }
  return total;
}

Rational ExactSet::geometricAtomMass() const {
  Rational sum(0);
  for (const auto& iv : ivs_) {
    mpz_class imin = 0;
    if (iv.lo) {
      if (*iv.lo > Rational(0)) {
        imin = iv.loClosed ? iv.lo->ceil() : iv.lo->floor() + 1;
        if (!iv.loClosed && !iv.lo->isInteger()) imin = iv.lo->ceil();
      }
    }
    if (!iv.hi) {
      // tail sum 2^{-(imin+1)} + ... = 2^{-imin}
      sum += Rational::pow2(-imin.get_si());
      continue;
    }
    if (*iv.hi < Rational(0)) continue;
    mpz_class imax = iv.hiClosed ? iv.hi->floor() : iv.hi->ceil() - 1;
    if (!iv.hiClosed && !iv.hi->isInteger()) imax = iv.hi->floor();
    if (imax < imin) continue;
    sum += Rational::pow2(-imin.get_si()) - Rational::pow2(-imax.get_si() - 1);
  }
  return sum;
}

std::optional<Interval> ExactSet::hull() const {
  if (ivs_.empty()) return std::nullopt;
  Interval h;
  h.lo = ivs_.front().lo;
  h.loClosed = ivs_.front().loClosed;
  h.hi = ivs_.back().hi;
  h.hiClosed = ivs_.back().hiClosed;
  return h;
}

std::vector<Rational> ExactSet::lineEndpoints() const {
  std::vector<Rational> out;
  for (const auto& iv : ivs_) {
    if (iv.lo) out.push_back(*iv.lo);
    if (iv.hi) out.push_back(*iv.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string ExactSet::str() const {
  std::ostringstream os;
  bool first = true;
  switch (kind_) {
    case SpaceKind::Unit:
    case SpaceKind::Real:
      if (ivs_.empty()) return "{}";
      for (const auto& iv : ivs_) {
        if (!first) os << " u ";
        first = false;
        if (iv.lo && iv.hi && *iv.lo == *iv.hi) {
          os << "{" << *iv.lo << "}";
          continue;
        }
        os << (iv.lo && !iv.loClosed ? "(" : "[");
        if (iv.lo)
          os << *iv.lo;
        else
          os << "-inf";
        os << ", ";
        if (iv.hi)
          os << *iv.hi;
        else
          os << "+inf";
        os << (iv.hi && !iv.hiClosed ? ")" : "]");
      }
      return os.str();
    case SpaceKind::Cantor:
      if (prefixes_.empty()) return "{}";
      for (const auto& p : prefixes_) {
        if (!first) os << " u ";
        first = false;
        os << "[";
        for (bool b : p) os << (b ? '1' : '0');
        os << "]";
      }
      return os.str();
    case SpaceKind::Finite: {
      os << "{";
      for (std::size_t i = 0; i < mask_.size(); ++i) {
        if (!mask_[i]) continue;
        if (!first) os << ",";
        first = false;
        os << i;
      }
      os << "}";
      return os.str();
    }
  }
  return "{}";
}

}  // namespace effmeas
