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

#ifndef EFFMEAS_EFFREAL_HPP
#define EFFMEAS_EFFREAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "effmeas/enclosure.hpp"
#include "effmeas/fuel.hpp"
#include "effmeas/rational.hpp"

namespace effmeas {

// ---------------------------------------------------------------------------
// Effective reals as fueled rational approximant streams.
//
// A CauchyReal satisfies |approx(n) - approx(n+1)| < 2^{-n}, hence the limit
// lies strictly within approx(n) +- 2^{-n+1}. Left/right-c.e. reals are
// monotone one-sided approximant streams. All values are immutable and
// queries are pure; internal memo tables are synchronized.
// ---------------------------------------------------------------------------

class CauchyReal {
 public:
  explicit CauchyReal(std::function<Rational(Fuel)> approx);

  static CauchyReal constant(Rational q);

  /// Builds a CauchyReal from a two-sided bracketing refinement: refine(t)
  /// must produce enclosures of the value whose widths drop below every
  /// 2^{-k} as t grows. Each approx(n) searches at most budget*(n+1) stages
  /// and throws FuelExhausted(stage) past that.
  static CauchyReal fromBrackets(std::function<Enclosure(Fuel)> refine, Fuel budget,
                                 std::string stage);

  Rational approx(Fuel n) const;

  /// [approx(n) - 2^{-n+1}, approx(n) + 2^{-n+1}]; the limit is interior.
  Enclosure enclosureAt(Fuel n) const;

  friend CauchyReal operator+(const CauchyReal& a, const CauchyReal& b);
  friend CauchyReal operator-(const CauchyReal& a, const CauchyReal& b);
  CauchyReal scaledBy(const Rational& c) const;
  CauchyReal shiftedBy(const Rational& c) const;

 private:
  struct State {
    std::function<Rational(Fuel)> fn;
    std::map<Fuel, Rational> memo;
    std::mutex mu;
  };
  std::shared_ptr<State> st_;
};

enum class Cmp { Less, Greater, Unknown };

/// Sound strict comparison at the given fuel. Less/Greater are never wrong;
/// Unknown means the open enclosures still overlap (equality stays Unknown
/// forever). Touching enclosures decide, since limits are interior.
Cmp compareStrict(const CauchyReal& a, const CauchyReal& b, Fuel fuel);

/// Non-decreasing lower approximants whose supremum is the value.
class LeftCEReal {
 public:
  explicit LeftCEReal(std::function<Rational(Fuel)> lower);
  static LeftCEReal constant(Rational q);
  Rational lower(Fuel t) const;

 private:
  struct State {
    std::function<Rational(Fuel)> fn;
    std::map<Fuel, Rational> memo;  // monotonized
    std::mutex mu;
  };
  std::shared_ptr<State> st_;
};

/// Non-increasing upper approximants whose infimum is the value.
class RightCEReal {
 public:
  explicit RightCEReal(std::function<Rational(Fuel)> upper);
  static RightCEReal constant(Rational q);
  Rational upper(Fuel t) const;

 private:
  struct State {
    std::function<Rational(Fuel)> fn;
    std::map<Fuel, Rational> memo;
    std::mutex mu;
  };
  std::shared_ptr<State> st_;
};

/// Fueled partial map from rationals to indices. For a liminf witness the
/// answered set is a left cut: r answered with n0 certifies r < a_n for all
/// n >= n0. Answers are stable: once Index(n0) is returned for r, every
/// higher-fuel query returns the same n0.
class LiminfWitness {
 public:
  explicit LiminfWitness(std::function<std::optional<std::uint64_t>(const Rational&, Fuel)> query);
  std::optional<std::uint64_t> query(const Rational& r, Fuel fuel) const;

 private:
  struct State {
    std::function<std::optional<std::uint64_t>(const Rational&, Fuel)> fn;
    std::map<Rational, std::uint64_t> answered;
    std::mutex mu;
  };
  std::shared_ptr<State> st_;
};

/// Mirror of LiminfWitness; the answered set is a right cut and r answered
/// with n0 certifies r > a_n for all n >= n0.
class LimsupWitness {
 public:
  explicit LimsupWitness(std::function<std::optional<std::uint64_t>(const Rational&, Fuel)> query);
  std::optional<std::uint64_t> query(const Rational& r, Fuel fuel) const;

 private:
  struct State {
    std::function<std::optional<std::uint64_t>(const Rational&, Fuel)> fn;
    std::map<Rational, std::uint64_t> answered;
    std::mutex mu;
  };
  std::shared_ptr<State> st_;
};

/// Convergence modulus: n >= eps(N) guarantees the guarded quantity is
/// < 2^{-N}. Not required to be monotone in N.
struct Modulus {
  std::function<std::uint64_t(unsigned)> eps;
};

/// Monotone enumerator of a c.e. set of naturals: enumerate(t) grows with t.
class CESetEnumerator {
 public:
  explicit CESetEnumerator(std::function<std::vector<std::uint64_t>(Fuel)> enumerate);

  /// All elements available from step 0 on.
  static CESetEnumerator finiteImmediate(std::vector<std::uint64_t> elems);
  /// elems[i] appears at step delays[i].
  static CESetEnumerator withDelays(std::vector<std::uint64_t> elems, std::vector<Fuel> delays);
  /// Even numbers 0,2,4,... released one per step.
  static CESetEnumerator evens();

  std::vector<std::uint64_t> enumerate(Fuel t) const;

 private:
  struct State {
    std::function<std::vector<std::uint64_t>(Fuel)> fn;
    std::map<Fuel, std::vector<std::uint64_t>> memo;  // monotonized under inclusion
    std::mutex mu;
  };
  std::shared_ptr<State> st_;
};

/// Prop-2.4 combination: brackets the common limit between the two cuts to
/// width < 2^{-N} and returns the larger of the two witness indices. The
/// search budget bounds every internal scan; exhaustion throws FuelExhausted.
Modulus combineWitnesses(const LiminfWitness& gLow, const LimsupWitness& gHigh, Fuel budget);

/// A real from its two one-sided cuts. Returns std::nullopt (Timeout) when
/// the cuts fail to close to width 2^{-1} within the fuel; finer precisions
/// get budget fuel*(n+1) and throw FuelExhausted when they stall.
std::optional<CauchyReal> cauchyFromCuts(const LeftCEReal& left, const RightCEReal& right,
                                         Fuel fuel);

/// lower(t) = sum of 2^{-(a+1)} over the elements enumerated by step t.
LeftCEReal speckerReal(const CESetEnumerator& A);

}  // namespace effmeas

#endif  // EFFMEAS_EFFREAL_HPP
