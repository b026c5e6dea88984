/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "hyperfield.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tropext {

struct AxiomViolation {
  std::string axiom;
  std::string instance;
};

struct AxiomReport {
  std::string hyperfield;
  bool exhaustive = false;
  std::size_t triples = 0;
  bool stringent = false;
  std::vector<AxiomViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks the hyperfield axioms on every triple (finite H, exhaustive) or on
/// `samples` seeded random triples. Violations are collected, never thrown.
AxiomReport check_axioms(const Hyperfield& h, bool exhaustive, std::size_t samples, std::uint64_t seed);

}  // namespace tropext
