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

#include "effmeas/effreal.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace effmeas {

// ----------------------------------------------------------------- CauchyReal

CauchyReal::CauchyReal(std::function<Rational(Fuel)> approx) : st_(std::make_shared<State>()) {
  st_->fn = std::move(approx);
}

CauchyReal CauchyReal::constant(Rational q) {
  return CauchyReal([q = std::move(q)](Fuel) { return q; });
}

CauchyReal CauchyReal::fromBrackets(std::function<Enclosure(Fuel)> refine, Fuel budget,
                                    std::string stage) {
  // Shared stage cursor so deeper precisions resume where coarser ones left.
  struct Search {
    std::function<Enclosure(Fuel)> refine;
    Fuel cursor = 0;
    std::mutex mu;
  };
  auto sh = std::make_shared<Search>();
  sh->refine = std::move(refine);
  return CauchyReal([sh, budget, stage = std::move(stage)](Fuel n) {
    std::lock_guard<std::mutex> lock(sh->mu);
    Rational tol = Rational::pow2(-static_cast<long>(n) - 2);
    Fuel cap = budget * (n + 1) + sh->cursor;
    for (Fuel t = sh->cursor;; ++t) {
      if (t > cap) throw FuelExhausted(stage);
      Enclosure e = sh->refine(t);
      if (e.width() < tol) {
        sh->cursor = t;
        return e.midpoint();
      }
    }
  });
}

Rational CauchyReal::approx(Fuel n) const {
  std::lock_guard<std::mutex> lock(st_->mu);
  auto it = st_->memo.find(n);
  if (it != st_->memo.end()) return it->second;
  Rational v = st_->fn(n);
  st_->memo.emplace(n, v);
  return v;
}

Enclosure CauchyReal::enclosureAt(Fuel n) const {
  Rational a = approx(n);
  Rational rad = Rational::pow2(-static_cast<long>(n) + 1);
  return Enclosure(a - rad, a + rad);
}

CauchyReal operator+(const CauchyReal& a, const CauchyReal& b) {
  return CauchyReal([a, b](Fuel n) { return a.approx(n + 2) + b.approx(n + 2); });
}

CauchyReal operator-(const CauchyReal& a, const CauchyReal& b) {
  return CauchyReal([a, b](Fuel n) { return a.approx(n + 2) - b.approx(n + 2); });
}

CauchyReal CauchyReal::scaledBy(const Rational& c) const {
  if (c.isZero()) return constant(Rational(0));
  // shift so |c| * 2^{-(n+shift)} <= 2^{-n}
  long shift = 0;
  Rational ac = c.abs();
  Rational p(1);
  while (p < ac) {
    p *= Rational(2);
    ++shift;
  }
  CauchyReal self = *this;
  return CauchyReal([self, c, shift](Fuel n) { return c * self.approx(n + shift + 1); });
}

CauchyReal CauchyReal::shiftedBy(const Rational& c) const {
  CauchyReal self = *this;
  return CauchyReal([self, c](Fuel n) { return self.approx(n) + c; });
}

Cmp compareStrict(const CauchyReal& a, const CauchyReal& b, Fuel fuel) {
  Rational av = a.approx(fuel), bv = b.approx(fuel);
  Rational rad = Rational::pow2(-static_cast<long>(fuel) + 1);
  // Limits are strictly inside approx +- rad, so touching intervals decide.
  if (av + rad <= bv - rad) return Cmp::Less;
  if (bv + rad <= av - rad) return Cmp::Greater;
  return Cmp::Unknown;
}

// ----------------------------------------------------- one-sided c.e. reals

LeftCEReal::LeftCEReal(std::function<Rational(Fuel)> lower) : st_(std::make_shared<State>()) {
  st_->fn = std::move(lower);
}

LeftCEReal LeftCEReal::constant(Rational q) {
  return LeftCEReal([q = std::move(q)](Fuel) { return q; });
}

Rational LeftCEReal::lower(Fuel t) const {
  std::lock_guard<std::mutex> lock(st_->mu);
  auto it = st_->memo.find(t);
  if (it != st_->memo.end()) return it->second;
  Rational v = st_->fn(t);
  // monotonize against everything already computed
  auto below = st_->memo.lower_bound(t);
  if (below != st_->memo.begin()) {
    --below;
    v = max(v, below->second);
  }
  for (auto up = st_->memo.upper_bound(t); up != st_->memo.end(); ++up)
    up->second = max(up->second, v);
  st_->memo.emplace(t, v);
  return v;
}

RightCEReal::RightCEReal(std::function<Rational(Fuel)> upper) : st_(std::make_shared<State>()) {
  st_->fn = std::move(upper);
}

RightCEReal RightCEReal::constant(Rational q) {
  return RightCEReal([q = std::move(q)](Fuel) { return q; });
}

Rational RightCEReal::upper(Fuel t) const {
  std::lock_guard<std::mutex> lock(st_->mu);
  auto it = st_->memo.find(t);
  if (it != st_->memo.end()) return it->second;
  Rational v = st_->fn(t);
  auto below = st_->memo.lower_bound(t);
  if (below != st_->memo.begin()) {
    --below;
    v = min(v, below->second);
  }
  for (auto up = st_->memo.upper_bound(t); up != st_->memo.end(); ++up)
    up->second = min(up->second, v);
  st_->memo.emplace(t, v);
  return v;
}

// ------------------------------------------------------------------ witnesses

LiminfWitness::LiminfWitness(
    std::function<std::optional<std::uint64_t>(const Rational&, Fuel)> query)
    : st_(std::make_shared<State>()) {
  st_->fn = std::move(query);
}

std::optional<std::uint64_t> LiminfWitness::query(const Rational& r, Fuel fuel) const {
  {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->answered.find(r);
    if (it != st_->answered.end()) return it->second;
  }
  auto res = st_->fn(r, fuel);
  if (res) {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto [it, inserted] = st_->answered.emplace(r, *res);
    return it->second;  // first answer wins, keeping replies stable
  }
  return std::nullopt;
}

LimsupWitness::LimsupWitness(
    std::function<std::optional<std::uint64_t>(const Rational&, Fuel)> query)
    : st_(std::make_shared<State>()) {
  st_->fn = std::move(query);
}

std::optional<std::uint64_t> LimsupWitness::query(const Rational& r, Fuel fuel) const {
  {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->answered.find(r);
    if (it != st_->answered.end()) return it->second;
  }
  auto res = st_->fn(r, fuel);
  if (res) {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto [it, inserted] = st_->answered.emplace(r, *res);
    return it->second;
  }
  return std::nullopt;
}

// ------------------------------------------------------------ CESetEnumerator

CESetEnumerator::CESetEnumerator(std::function<std::vector<std::uint64_t>(Fuel)> enumerate)
    : st_(std::make_shared<State>()) {
  st_->fn = std::move(enumerate);
}

CESetEnumerator CESetEnumerator::finiteImmediate(std::vector<std::uint64_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return CESetEnumerator([elems = std::move(elems)](Fuel) { return elems; });
}

CESetEnumerator CESetEnumerator::withDelays(std::vector<std::uint64_t> elems,
                                            std::vector<Fuel> delays) {
  return CESetEnumerator([elems = std::move(elems), delays = std::move(delays)](Fuel t) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (i < delays.size() ? delays[i] <= t : true) out.push_back(elems[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  });
}

CESetEnumerator CESetEnumerator::evens() {
  return CESetEnumerator([](Fuel t) {
    std::vector<std::uint64_t> out;
    for (Fuel i = 0; i <= t; ++i) out.push_back(2 * i);
    return out;
  });
}

std::vector<std::uint64_t> CESetEnumerator::enumerate(Fuel t) const {
  std::lock_guard<std::mutex> lock(st_->mu);
  auto it = st_->memo.find(t);
  if (it != st_->memo.end()) return it->second;
  std::vector<std::uint64_t> v = st_->fn(t);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  // enforce monotonicity under inclusion against cached stages
  auto below = st_->memo.lower_bound(t);
  if (below != st_->memo.begin()) {
    --below;
    std::vector<std::uint64_t> merged;
    std::set_union(v.begin(), v.end(), below->second.begin(), below->second.end(),
                   std::back_inserter(merged));
    v = std::move(merged);
  }
  st_->memo.emplace(t, v);
  return v;
}

// --------------------------------------------------------------- conversions

Modulus combineWitnesses(const LiminfWitness& gLow, const LimsupWitness& gHigh, Fuel budget) {
  return Modulus{[gLow, gHigh, budget](unsigned N) -> std::uint64_t {
    Rational target = Rational::pow2(-static_cast<long>(N));
    std::optional<Rational> bestLo, bestHi;
    std::uint64_t idxLo = 0, idxHi = 0;

    auto tryLow = [&](const Rational& r, Fuel f) {
      if (bestLo && !(*bestLo < r)) return false;
      if (auto n = gLow.query(r, f)) {
        bestLo = r;
        idxLo = *n;
        return true;
      }
      return false;
    };
    auto tryHigh = [&](const Rational& r, Fuel f) {
      if (bestHi && !(r < *bestHi)) return false;
      if (auto n = gHigh.query(r, f)) {
        bestHi = r;
        idxHi = *n;
        return true;
      }
      return false;
    };

    for (Fuel round = 1; round <= budget; ++round) {
      Fuel f = round * 4;
      // anchor: some answered point on each side (exponential sweep)
      if (!bestLo)
        for (long j = 0; j <= static_cast<long>(round) && !bestLo; ++j) {
          tryLow(Rational(0) - Rational::pow2(j), f);
          tryLow(Rational::pow2(j) - Rational(1), f);
        }
      if (!bestHi)
        for (long j = 0; j <= static_cast<long>(round) && !bestHi; ++j) {
          tryHigh(Rational::pow2(j), f);
          tryHigh(Rational(1) - Rational::pow2(j), f);
        }
      if (!bestLo || !bestHi) continue;
      // shrink the bracket; two trial points per step so a single stalled
      // rational (the limit itself) cannot wedge the search
      for (int step = 0; step < 256; ++step) {
        Rational w = *bestHi - *bestLo;
        if (w < target) return std::max(idxLo, idxHi);
        Rational m1 = *bestLo + w / Rational(2);
        Rational m2 = *bestLo + w / Rational(3);
        bool moved = false;
        moved |= tryLow(m1, f);
        moved |= tryHigh(m1, f);
        if (!moved) {
          moved |= tryLow(m2, f);
          moved |= tryHigh(m2, f);
        }
        if (!moved) break;
      }
      if (bestLo && bestHi && *bestHi - *bestLo < target) return std::max(idxLo, idxHi);
    }
    throw FuelExhausted("combineWitnesses.bracket");
  }};
}

std::optional<CauchyReal> cauchyFromCuts(const LeftCEReal& left, const RightCEReal& right,
                                         Fuel fuel) {
  // Eagerly require the cuts to close to width < 1/2 within the fuel;
  // afterwards the bracketing refinement inherits budget fuel*(n+1).
  bool closed = false;
  for (Fuel t = 0; t <= fuel; ++t) {
    if (right.upper(t) - left.lower(t) < Rational(1, 2)) {
      closed = true;
      break;
    }
  }
  if (!closed) return std::nullopt;
  auto refine = [left, right](Fuel t) {
    Rational lo = left.lower(t), hi = right.upper(t);
    if (hi < lo) return Enclosure(lo, lo);  // cuts crossed: collapse, callers compare cuts
    return Enclosure(lo, hi);
  };
  return CauchyReal::fromBrackets(refine, fuel == 0 ? 1 : fuel, "cauchyFromCuts.close");
}

LeftCEReal speckerReal(const CESetEnumerator& A) {
  return LeftCEReal([A](Fuel t) {
    Rational sum(0);
    for (std::uint64_t a : A.enumerate(t)) sum += Rational::pow2(-static_cast<long>(a) - 1);
    return sum;
  });
}

}  // namespace effmeas
