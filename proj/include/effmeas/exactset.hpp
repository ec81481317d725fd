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

#ifndef EFFMEAS_EXACTSET_HPP
#define EFFMEAS_EXACTSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "effmeas/rational.hpp"

namespace effmeas {

/// The four concrete space families. All of them have decidable rational
/// ball geometry, which is what makes the fueled semidecisions terminate
/// at desk scale.
enum class SpaceKind { Unit, Real, Cantor, Finite };

/// One line component. A missing endpoint means the component is a ray
/// (Real spaces only). Endpoint flags are ignored for missing endpoints.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool loClosed = true;
  bool hiClosed = true;
};

using Word = std::vector<bool>;  // Cantor prefix

/// Exactly-represented region of an instance space: a normalized finite
/// union of intervals (Unit/Real), a prefix-free union of cylinders
/// (Cantor), or a point mask (Finite). Closed under union, intersection
/// and complement; all predicates are decided exactly in rational
/// arithmetic.
class ExactSet {
 public:
  ExactSet() : kind_(SpaceKind::Unit) {}

  static ExactSet empty(SpaceKind k, std::size_t finiteCount = 0);
  static ExactSet whole(SpaceKind k, std::size_t finiteCount = 0);
  /// Line interval, clipped to [0,1] for Unit.
  static ExactSet interval(SpaceKind k, const Interval& iv);
  static ExactSet point(SpaceKind k, const Rational& q);
  static ExactSet cylinder(Word prefix);
  static ExactSet finiteMask(std::vector<bool> mask);
  static ExactSet finitePoint(std::size_t idx, std::size_t count);

  SpaceKind kind() const { return kind_; }
  bool isEmpty() const;

  ExactSet unionWith(const ExactSet& o) const;
  ExactSet intersectWith(const ExactSet& o) const;
  ExactSet complement() const;
  ExactSet closure() const;
  ExactSet interior() const;
  /// Open/closed metric neighborhoods {x : d(x, this) < s} resp. <= s.
  ExactSet inflateOpen(const Rational& s) const;
  ExactSet inflateClosed(const Rational& s) const;

  bool isSubsetOf(const ExactSet& o) const;
  bool intersects(const ExactSet& o) const;
  bool containsRational(const Rational& q) const;  // line spaces
  bool containsWord(const Word& w) const;          // Cantor (w0^omega)
  bool containsIndex(std::size_t i) const;         // finite spaces

  /// d(q, closure of set); nullopt when the set is empty.
  std::optional<Rational> distToRational(const Rational& q) const;
  std::optional<Rational> distToWord(const Word& w) const;
  std::optional<Rational> distToFiniteIndex(std::size_t i, const std::vector<Rational>& dists,
                                            std::size_t count) const;

  /// inf over pairs; nullopt if either side is empty.
  std::optional<Rational> minDist(const ExactSet& o) const;
  /// sup_{x in this} d(x, o); nullopt means unbounded or o empty.
  std::optional<Rational> dirSupDist(const ExactSet& o) const;

  /// Lebesgue length of the union (Line kinds; rays yield nullopt).
  std::optional<Rational> length() const;
  /// Number of grid atoms k/n, 1 <= k <= n, inside the set (Line kinds).
  mpz_class gridCount(const mpz_class& n) const;
  /// Sum of 2^{-(i+1)} over non-negative integers i inside the set.
  Rational geometricAtomMass() const;

  const std::vector<Interval>& intervals() const { return ivs_; }
  const std::vector<Word>& prefixes() const { return prefixes_; }
  const std::vector<bool>& mask() const { return mask_; }

  /// Tight single-interval hull for line kinds.
  std::optional<Interval> hull() const;
  /// All finite component endpoints, ascending (line kinds).
  std::vector<Rational> lineEndpoints() const;

  std::string str() const;

 private:
  void normalizeLine();
  void normalizeCantor();

  SpaceKind kind_;
  std::vector<Interval> ivs_;      // Unit/Real
  std::vector<Word> prefixes_;     // Cantor
  std::vector<bool> mask_;         // Finite
};

/// Distance between two finite-space points given the packed distance
/// matrix used by finite SpaceDescriptors.
Rational finiteDist(const std::vector<Rational>& dists, std::size_t count, std::size_t i,
                    std::size_t j);

}  // namespace effmeas

#endif  // EFFMEAS_EXACTSET_HPP
