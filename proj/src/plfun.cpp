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

#include "effmeas/plfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace effmeas {

PLFunction::PLFunction(std::vector<std::pair<Rational, Rational>> pts, Rational slopeLeft,
                       Rational slopeRight)
    : sL_(std::move(slopeLeft)), sR_(std::move(slopeRight)) {
  if (pts.empty()) throw std::invalid_argument("PLFunction: no breakpoints");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!(pts[i - 1].first < pts[i].first))
      throw std::invalid_argument("PLFunction: breakpoints not ascending");
  for (auto& p : pts) {
    xs_.push_back(std::move(p.first));
    ys_.push_back(std::move(p.second));
  }
}

PLFunction PLFunction::constant(const Rational& c) {
  return PLFunction({{Rational(0), c}}, Rational(0), Rational(0));
}

PLFunction PLFunction::coordinate() {
  return PLFunction({{Rational(0), Rational(0)}}, Rational(1), Rational(1));
}

PLFunction PLFunction::distToClosedSet(const ExactSet& s) {
  const auto& ivs = s.intervals();
  if (ivs.empty()) throw std::invalid_argument("distToClosedSet: empty set");
  std::vector<std::pair<Rational, Rational>> pts;
  Rational sL(-1), sR(1);
  if (!ivs.front().lo) sL = Rational(0);
  if (!ivs.back().hi) sR = Rational(0);
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    if (ivs[i].lo) pts.push_back({*ivs[i].lo, Rational(0)});
    if (ivs[i].hi) pts.push_back({*ivs[i].hi, Rational(0)});
    if (ivs[i].hi && i + 1 < ivs.size() && ivs[i + 1].lo) {
      Rational mid = (*ivs[i].hi + *ivs[i + 1].lo) / Rational(2);
      pts.push_back({mid, (*ivs[i + 1].lo - *ivs[i].hi) / Rational(2)});
    }
  }
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& a, const auto& b) { return a.first == b.first; }),
            pts.end());
  return PLFunction(std::move(pts), sL, sR);
}

Rational PLFunction::slopeOfPiece(std::size_t i) const {
  return (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
}

Rational PLFunction::eval(const Rational& x) const {
  if (x <= xs_.front()) return ys_.front() + sL_ * (x - xs_.front());
  if (x >= xs_.back()) return ys_.back() + sR_ * (x - xs_.back());
  // find piece with xs_[i] <= x < xs_[i+1]
  std::size_t lo = 0, hi = xs_.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (xs_[mid] <= x)
      lo = mid;
    else
      hi = mid;
  }
  return ys_[lo] + slopeOfPiece(lo) * (x - xs_[lo]);
}

Enclosure PLFunction::rangeOn(const Rational& a, const Rational& b) const {
  if (b < a) throw std::invalid_argument("rangeOn: b < a");
  Rational lo = eval(a), hi = lo;
  auto take = [&](const Rational& v) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  };
  take(eval(b));
  for (std::size_t i = 0; i < xs_.size(); ++i)
    if (a < xs_[i] && xs_[i] < b) take(ys_[i]);
  return Enclosure(lo, hi);
}

PLFunction PLFunction::affine(const Rational& a, const Rational& b) const {
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t i = 0; i < xs_.size(); ++i) pts.push_back({xs_[i], a * ys_[i] + b});
  return PLFunction(std::move(pts), a * sL_, a * sR_);
}

namespace {

PLFunction combine(const PLFunction& f, const PLFunction& g, bool takeMin) {
  // merged grid of breakpoints plus all crossing points
  std::vector<Rational> grid;
  for (const auto& x : f.xs()) grid.push_back(x);
  for (const auto& x : g.xs()) grid.push_back(x);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto crossing = [&](const Rational& a, const Rational& b) -> std::optional<Rational> {
    // linear on [a,b] for both; intersection point if interior
    Rational fa = f.eval(a), fb = f.eval(b), ga = g.eval(a), gb = g.eval(b);
    Rational d0 = fa - ga, d1 = fb - gb;
    if ((d0.isNegative() && d1.isPositive()) || (d0.isPositive() && d1.isNegative())) {
      Rational x = a + (b - a) * (d0 / (d0 - d1));
      if (a < x && x < b) return x;
    }
    return std::nullopt;
  };

  std::vector<Rational> full;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    full.push_back(grid[i]);
    if (i + 1 < grid.size())
      if (auto x = crossing(grid[i], grid[i + 1])) full.push_back(*x);
  }
  // tail crossings: slopes may cross beyond the outermost grid point
  {
    Rational a = grid.front();
    Rational probe = a - Rational(1);
    // solve (f-g)(x) = 0 on the left tails
    Rational fa = f.eval(a) - g.eval(a);
    Rational fp = f.eval(probe) - g.eval(probe);
    Rational slope = fa - fp;  // per unit step
    if (!slope.isZero()) {
      Rational x = a - fa / slope;
      if (x < a) full.insert(full.begin(), x);
    }
  }
  {
    Rational b = grid.back();
    Rational probe = b + Rational(1);
    Rational fb = f.eval(b) - g.eval(b);
    Rational fp = f.eval(probe) - g.eval(probe);
    Rational slope = fp - fb;
    if (!slope.isZero()) {
      Rational x = b - fb / slope * Rational(-1);
      x = b + (Rational(0) - fb) / slope;
      if (x > b) full.push_back(x);
    }
  }
  std::sort(full.begin(), full.end());
  full.erase(std::unique(full.begin(), full.end()), full.end());

  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& x : full) {
    Rational fv = f.eval(x), gv = g.eval(x);
    pts.push_back({x, takeMin ? min(fv, gv) : max(fv, gv)});
  }
  // tail slopes from far probes (beyond any crossing)
  Rational a = full.front(), b = full.back();
  Rational pa = a - Rational(1), pb = b + Rational(1);
  Rational fva = takeMin ? min(f.eval(pa), g.eval(pa)) : max(f.eval(pa), g.eval(pa));
  Rational fvb = takeMin ? min(f.eval(pb), g.eval(pb)) : max(f.eval(pb), g.eval(pb));
  Rational sL = pts.front().second - fva;
  Rational sR = fvb - pts.back().second;
  return PLFunction(std::move(pts), sL, sR);
}

}  // namespace

PLFunction PLFunction::pointwiseMin(const PLFunction& f, const PLFunction& g) {
  return combine(f, g, true);
}

PLFunction PLFunction::pointwiseMax(const PLFunction& f, const PLFunction& g) {
  return combine(f, g, false);
}

Rational PLFunction::maxAbsSlope() const {
  Rational m = max(sL_.abs(), sR_.abs());
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) m = max(m, slopeOfPiece(i).abs());
  return m;
}

Rational PLFunction::unitOscillation(const mpz_class& n) const {
  // oscillation over a window of length 1/n is at most slope/n, and any
  // window is covered by two adjacent cells of the 1/n grid
  Rational w = Rational(mpz_class(1), n);
  Rational best(0);
  auto clamp01 = [](const Rational& q) {
    return max(Rational(0), min(Rational(1), q));
  };
  std::vector<Rational> starts{Rational(0)};
  for (const auto& x : xs_) {
    starts.push_back(clamp01(x - w));
    starts.push_back(clamp01(x));
  }
  for (const auto& s : starts) {
    if (s > Rational(1) - w) continue;
    Rational osc = rangeOn(s, s + w).width();
    if (osc > best) best = osc;
  }
  // windows not containing a breakpoint are pure slope
  Rational slopeOsc = maxAbsSlope() * w;
  return max(best, slopeOsc);
}

Rational PLFunction::integralUnitLebesgue() const {
  // trapezoid over [0,1] with breakpoints clipped in
  std::vector<Rational> grid{Rational(0), Rational(1)};
  for (const auto& x : xs_)
    if (Rational(0) < x && x < Rational(1)) grid.push_back(x);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  Rational sum(0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    Rational a = grid[i], b = grid[i + 1];
    sum += (eval(a) + eval(b)) / Rational(2) * (b - a);
  }
  return sum;
}

Rational PLFunction::gridSum(const mpz_class& n) const {
  // pieces [x_i, x_{i+1}) plus tails; sum of an affine map over k/n is an
  // arithmetic series
  Rational nQ{mpq_class(n)};
  Rational total(0);
  auto seriesSum = [&](const mpz_class& k1, const mpz_class& k2, const Rational& slope,
                       const Rational& x0, const Rational& y0) {
    // sum over k in [k1,k2] of y0 + slope*(k/n - x0)
    if (k2 < k1) return;
    mpz_class cnt = k2 - k1 + 1;
    Rational cntQ{mpq_class(cnt)};
    Rational sumK{mpq_class((k1 + k2) * cnt)};
    sumK /= Rational(2);
    total += cntQ * (y0 - slope * x0) + slope / nQ * sumK;
  };
  auto kCeil = [&](const Rational& x) {  // least k with k/n >= x
    return (nQ * x).ceil();
  };
  mpz_class kLeftEnd = kCeil(xs_.front()) - 1;  // last k with k/n < xs_.front()
  // left tail: k in [1, kLeftEnd]
  {
    mpz_class k1 = 1, k2 = kLeftEnd;
    if (k2 > n) k2 = n;
    seriesSum(k1, k2, sL_, xs_.front(), ys_.front());
  }
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    mpz_class k1 = kCeil(xs_[i]);
    mpz_class k2 = kCeil(xs_[i + 1]) - 1;  // k/n < xs_[i+1]
    if (k1 < 1) k1 = 1;
    if (k2 > n) k2 = n;
    seriesSum(k1, k2, slopeOfPiece(i), xs_[i], ys_[i]);
  }
  // right tail: k with k/n >= xs_.back()
  {
    mpz_class k1 = kCeil(xs_.back());
    if (k1 < 1) k1 = 1;
    seriesSum(k1, n, sR_, xs_.back(), ys_.back());
  }
  return total;
}

namespace {

// solution set of "affine-on-piece relation t" as a line interval
void addSolutions(std::vector<Interval>& out, const Rational& xa,
                  const std::optional<Rational>& xbOpt, const Rational& ya, const Rational& slope,
                  const Rational& t, bool strict, bool greater, bool openLeftTail) {
  // piece: x in [xa, xb) (xb missing = +inf ray); f(x) = ya + slope*(x - xa)
  // openLeftTail marks the -inf ray piece, parameterized from xa going left.
  auto pushAll = [&]() {
    Interval iv;
    if (openLeftTail) {
      iv.lo = std::nullopt;
      iv.hi = xa;
      iv.hiClosed = false;
    } else {
      iv.lo = xa;
      iv.loClosed = true;
      iv.hi = xbOpt;
      iv.hiClosed = false;
    }
    out.push_back(iv);
  };
  if (slope.isZero()) {
    bool sat = greater ? (strict ? ya > t : ya >= t) : (strict ? ya < t : ya <= t);
    if (sat) pushAll();
    return;
  }
  Rational xStar = xa + (t - ya) / slope;
  bool solutionRight = (greater == slope.isPositive());
  Interval iv;
  if (openLeftTail) {
    // piece is (-inf, xa)
    if (solutionRight) {
      iv.lo = xStar;
      iv.loClosed = !strict;
      iv.hi = xa;
      iv.hiClosed = false;
    } else {
      iv.lo = std::nullopt;
      iv.hi = min(xStar, xa);
      iv.hiClosed = !strict && xStar < xa;
    }
  } else {
    if (solutionRight) {
      iv.lo = max(xStar, xa);
      iv.loClosed = xStar <= xa ? true : !strict;
      iv.hi = xbOpt;
      iv.hiClosed = false;
    } else {
      iv.lo = xa;
      iv.loClosed = true;
      iv.hi = xStar;
      iv.hiClosed = !strict;
      if (xbOpt && *xbOpt < xStar) {
        iv.hi = xbOpt;
        iv.hiClosed = false;
      }
    }
  }
  out.push_back(iv);
}

}  // namespace

ExactSet PLFunction::superlevel(SpaceKind k, const Rational& t, bool strict) const {
  std::vector<Interval> sol;
  addSolutions(sol, xs_.front(), std::nullopt, ys_.front(), sL_, t, strict, true, true);
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    addSolutions(sol, xs_[i], xs_[i + 1], ys_[i], slopeOfPiece(i), t, strict, true, false);
  addSolutions(sol, xs_.back(), std::nullopt, ys_.back(), sR_, t, strict, true, false);
  ExactSet res = ExactSet::empty(k);
  for (const auto& iv : sol) res = res.unionWith(ExactSet::interval(k, iv));
  // continuity: the strict superlevel is open, the non-strict one closed
  return strict ? res.interior() : res.closure();
}

ExactSet PLFunction::sublevel(SpaceKind k, const Rational& t, bool strict) const {
  std::vector<Interval> sol;
  addSolutions(sol, xs_.front(), std::nullopt, ys_.front(), sL_, t, strict, false, true);
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    addSolutions(sol, xs_[i], xs_[i + 1], ys_[i], slopeOfPiece(i), t, strict, false, false);
  addSolutions(sol, xs_.back(), std::nullopt, ys_.back(), sR_, t, strict, false, false);
  ExactSet res = ExactSet::empty(k);
  for (const auto& iv : sol) res = res.unionWith(ExactSet::interval(k, iv));
  return strict ? res.interior() : res.closure();
}

}  // namespace effmeas
