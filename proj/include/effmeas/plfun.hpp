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

#ifndef EFFMEAS_PLFUN_HPP
#define EFFMEAS_PLFUN_HPP

#include <utility>
#include <vector>

#include "effmeas/enclosure.hpp"
#include "effmeas/exactset.hpp"
#include "effmeas/rational.hpp"

namespace effmeas {

/// Continuous piecewise-linear function on the line, exact rational
/// breakpoints and linear tails. Distance functions to exact closed sets,
/// the Lipschitz cutoffs min(1, k*d(x, .)), and the dyadic interpolants are
/// all of this shape, which is what keeps their integrals against the
/// concrete measures exact.
class PLFunction {
 public:
  /// pts ascending in x, at least one point; tails extend linearly.
  PLFunction(std::vector<std::pair<Rational, Rational>> pts, Rational slopeLeft,
             Rational slopeRight);

  static PLFunction constant(const Rational& c);
  static PLFunction coordinate();
  /// d(x, s) for a nonempty closed line set (rays allowed).
  static PLFunction distToClosedSet(const ExactSet& s);

  Rational eval(const Rational& x) const;
  /// Exact range over [a, b].
  Enclosure rangeOn(const Rational& a, const Rational& b) const;

  PLFunction affine(const Rational& a, const Rational& b) const;  // a*f + b
  static PLFunction pointwiseMin(const PLFunction& f, const PLFunction& g);
  static PLFunction pointwiseMax(const PLFunction& f, const PLFunction& g);

  Rational maxAbsSlope() const;
  /// Max oscillation of f over any subinterval of [0,1] of length 1/n.
  Rational unitOscillation(const mpz_class& n) const;

  Rational integralUnitLebesgue() const;
  /// Sum of f(k/n) for k = 1..n, in closed form per linear piece.
  Rational gridSum(const mpz_class& n) const;

  ExactSet superlevel(SpaceKind k, const Rational& t, bool strict) const;
  ExactSet sublevel(SpaceKind k, const Rational& t, bool strict) const;

  const std::vector<Rational>& xs() const { return xs_; }
  const std::vector<Rational>& ys() const { return ys_; }

 private:
  Rational slopeOfPiece(std::size_t i) const;  // between xs_[i], xs_[i+1]

  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
  Rational sL_;
  Rational sR_;
};

}  // namespace effmeas

#endif  // EFFMEAS_PLFUN_HPP
