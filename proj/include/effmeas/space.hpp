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

#ifndef EFFMEAS_SPACE_HPP
#define EFFMEAS_SPACE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "effmeas/effreal.hpp"
#include "effmeas/exactset.hpp"

namespace effmeas {

using PointIndex = std::uint64_t;

/// Rational ball: center is an index into the space's dense point
/// enumeration, radius a positive rational.
struct BallIndex {
  PointIndex center = 0;
  Rational radius;
  bool closed = false;
};

/// Finite union of open rational balls (the J_j of the ball-enumeration).
struct RationalOpenSet {
  std::vector<BallIndex> balls;
};

/// Computable Polish space instance. Four concrete families are provided;
/// all of them carry exact rational ball geometry, so semidecisions reduce
/// to decidable interval / prefix / matrix arithmetic.
class Space {
 public:
  static Space unitInterval();
  static Space realLine();
  static Space cantor();
  /// Distance matrix row-major n*n; throws std::invalid_argument if it is
  /// not a metric.
  static Space finite(std::size_t n, std::vector<Rational> distMatrix);

  SpaceKind kind() const;
  const std::string& label() const;
  std::optional<std::uint64_t> pointCount() const;

  Rational pointCoord(PointIndex i) const;  // line spaces
  Word pointWord(PointIndex i) const;       // Cantor
  Rational distQ(PointIndex i, PointIndex j) const;
  CauchyReal dist(PointIndex i, PointIndex j) const;

  /// Index of an enumerated point. For line spaces q must be a rational in
  /// the space; for Cantor the word is looked up directly.
  PointIndex indexOfRational(const Rational& q) const;
  PointIndex indexOfWord(const Word& w) const;

  /// The effective enumeration {I_i} of all open rational balls.
  BallIndex ballAt(std::uint64_t k) const;

  ExactSet ballSet(const BallIndex& b) const;
  ExactSet regionOf(const std::vector<BallIndex>& balls) const;
  ExactSet regionOf(const RationalOpenSet& J) const;
  ExactSet emptySet() const;
  ExactSet wholeSet() const;

  ExactSet inflateOpen(const ExactSet& s, const Rational& r) const;
  ExactSet inflateClosed(const ExactSet& s, const Rational& r) const;

  std::optional<Rational> distPointToSet(PointIndex i, const ExactSet& s) const;
  std::optional<Rational> setMinDist(const ExactSet& a, const ExactSet& b) const;
  /// sup_{x in a} d(x, b); nullopt when unbounded or b empty.
  std::optional<Rational> setSupDist(const ExactSet& a, const ExactSet& b) const;

  std::optional<Rational> diameterBound() const;  // nullopt for the real line

  /// Covers the target with finitely many open balls at slack s
  /// (target must be bounded: every component/prefix finite).
  RationalOpenSet coverOf(const ExactSet& closedBounded, const Rational& s) const;

  const std::vector<Rational>& finiteMatrix() const;

  bool sameAs(const Space& o) const { return impl_ == o.impl_; }

 private:
  struct Impl;
  explicit Space(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Fueled stream of rational-point indices converging under the Cauchy
/// contract d(s(n), s(n+1)) < 2^{-n}.
class PointName {
 public:
  PointName(Space sp, std::function<PointIndex(Fuel)> at);
  static PointName rationalPoint(const Space& sp, PointIndex i);

  PointIndex at(Fuel n) const;
  /// Region certainly containing the point at this fuel: the closed ball of
  /// radius 2^{-n+1} around the n-th index.
  ExactSet hullAt(Fuel n) const;
  const Space& space() const { return sp_; }

 private:
  Space sp_;
  std::shared_ptr<CauchyReal> dummy_;  // unused; keeps layout simple
  std::function<PointIndex(Fuel)> at_;
};

/// Effectively open set: a monotone fueled enumeration of open rational
/// balls. Exact-backed instances additionally know their full union and
/// enumerate it with component precision (the enumeration stays a legal
/// Sigma^0_1 name).
class SigmaSet {
 public:
  SigmaSet(Space sp, std::function<std::vector<BallIndex>(Fuel)> enumerate,
           std::string name = "sigma");
  static SigmaSet fromExactOpen(const Space& sp, const ExactSet& open, std::string name = "sigma");
  static SigmaSet wholeSpace(const Space& sp);
  static SigmaSet emptySet(const Space& sp);

  std::vector<BallIndex> enumerate(Fuel t) const;
  /// Union of the balls enumerated by step t (monotone in t).
  ExactSet regionAt(Fuel t) const;
  const std::optional<ExactSet>& exact() const;
  const Space& space() const;
  const std::string& name() const;

 private:
  struct State;
  std::shared_ptr<State> st_;
};

/// Effectively closed set, given by the Sigma name of its complement.
/// Exact-backed instances also carry the closed set itself.
class PiSet {
 public:
  explicit PiSet(SigmaSet complement);
  static PiSet fromExactClosed(const Space& sp, const ExactSet& closed);

  const SigmaSet& complementSigma() const { return complement_; }
  const std::optional<ExactSet>& exact() const { return exact_; }
  /// Closed superset known at fuel t: X minus the enumerated complement.
  ExactSet knownSuperset(Fuel t) const;
  const Space& space() const { return complement_.space(); }

 private:
  SigmaSet complement_;
  std::optional<ExactSet> exact_;
};

/// Computably compact set: a monotone enumeration of rational open covers
/// plus a fueled cover decision. Concrete instances are finite unions of
/// closed balls and carry their exact region.
class CompactName {
 public:
  static CompactName fromExact(const Space& sp, const ExactSet& closedBounded);
  static CompactName emptyCompact(const Space& sp);
  CompactName(Space sp, std::function<std::vector<RationalOpenSet>(Fuel)> covers,
              std::optional<ExactSet> exact);

  std::vector<RationalOpenSet> covers(Fuel t) const;
  /// Covers iff J certainly contains the compact; NotYet (false) otherwise.
  bool coversDecision(const RationalOpenSet& J, Fuel fuel) const;
  const std::optional<ExactSet>& exact() const { return exact_; }
  const Space& space() const { return sp_; }
  bool isEmpty() const;

 private:
  Space sp_;
  std::function<std::vector<RationalOpenSet>(Fuel)> covers_;
  std::optional<ExactSet> exact_;
};

enum class Progress { Yes, NotYet };

// ---------------------------------------------------------------- operations

/// Lower approximants of d(x, C), sweeping the enumerated complement balls.
LeftCEReal distToPi(const PointName& x, const PiSet& C);

/// Two-sided d(x, K); requires K nonempty. Exact-backed compacts resolve
/// quickly, generic ones through their cover stream.
CauchyReal distToCompact(const PointName& x, const CompactName& K);

/// closure of B(C, s) as a Pi set (Lemma-style neighborhood); its
/// complement enumerates balls certified at positive distance from C.
PiSet closedNeighborhoodPi(const PiSet& C, const Rational& s);

/// Semidecides K inside U at the given fuel.
Progress compactInsideOpen(const CompactName& K, const SigmaSet& U, Fuel fuel);

CompactName compactUnion(const CompactName& a, const CompactName& b);

/// Computable points in the intersection of countably many dense opens over
/// the positive rational line, by nested interval refinement; howMany
/// outputs are produced, each a member of every listed open.
std::vector<CauchyReal> baireDenseSequence(const std::vector<SigmaSet>& denseOpens,
                                           std::size_t howMany, Fuel fuel);

}  // namespace effmeas

#endif  // EFFMEAS_SPACE_HPP
