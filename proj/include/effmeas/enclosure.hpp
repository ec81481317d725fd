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

#ifndef EFFMEAS_ENCLOSURE_HPP
#define EFFMEAS_ENCLOSURE_HPP

#include <ostream>
#include <stdexcept>

#include "effmeas/rational.hpp"

namespace effmeas {

/// Closed rational interval [lo, hi] enclosing an exact real value.
struct Enclosure {
  Rational lo;
  Rational hi;

  Enclosure() = default;
  Enclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("Enclosure: hi < lo");
  }
  static Enclosure point(const Rational& q) { return Enclosure(q, q); }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Enclosure& o) const { return !(hi < o.lo || o.hi < lo); }
};

inline Enclosure encAdd(const Enclosure& a, const Enclosure& b) {
  return Enclosure(a.lo + b.lo, a.hi + b.hi);
}

inline Enclosure encSub(const Enclosure& a, const Enclosure& b) {
  return Enclosure(a.lo - b.hi, a.hi - b.lo);
}

inline Enclosure encMul(const Enclosure& a, const Enclosure& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Enclosure(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

inline Enclosure encMin(const Enclosure& a, const Enclosure& b) {
  return Enclosure(min(a.lo, b.lo), min(a.hi, b.hi));
}

inline Enclosure encMax(const Enclosure& a, const Enclosure& b) {
  return Enclosure(max(a.lo, b.lo), max(a.hi, b.hi));
}

inline Enclosure encScale(const Rational& c, const Enclosure& a) {
  if (c.isNegative()) return Enclosure(c * a.hi, c * a.lo);
  return Enclosure(c * a.lo, c * a.hi);
}

inline Enclosure encShift(const Enclosure& a, const Rational& c) {
  return Enclosure(a.lo + c, a.hi + c);
}

/// Intersection; inputs must overlap.
inline Enclosure encMeet(const Enclosure& a, const Enclosure& b) {
  return Enclosure(max(a.lo, b.lo), min(a.hi, b.hi));
}

/// Smallest interval containing both.
inline Enclosure encJoin(const Enclosure& a, const Enclosure& b) {
  return Enclosure(min(a.lo, b.lo), max(a.hi, b.hi));
}

inline std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
  return os << "[" << e.lo << ", " << e.hi << "]";
}

}  // namespace effmeas

#endif  // EFFMEAS_ENCLOSURE_HPP
