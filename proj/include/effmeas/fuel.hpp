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

#ifndef EFFMEAS_FUEL_HPP
#define EFFMEAS_FUEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace effmeas {

/// Step budget for semidecidable queries. Every search that may diverge
/// takes a fuel argument and either resolves within it or reports which
/// stage stalled.
using Fuel = std::uint64_t;

/// Thrown when a fueled search exhausts its budget. Carries the stalled
/// step identifier so front ends can report it (CLI maps this to exit 2).
class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(std::string stage)
      : std::runtime_error("fuel exhausted at: " + stage), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Capacity guard violations (exponential horizons exceeded). Reported,
/// never silently truncated.
class CapacityExceeded : public std::runtime_error {
 public:
  explicit CapacityExceeded(std::string what_arg) : std::runtime_error(std::move(what_arg)) {}
};

}  // namespace effmeas

#endif  // EFFMEAS_FUEL_HPP
