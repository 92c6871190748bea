#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasimap/intersection.hpp"

namespace quasimap {

/// One exact comparison of the verification ladder.
struct Check {
  int criterion = 0;  // 1..10
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct LadderConfig {
  int degree_max = 4;  // caps every degree-indexed sweep
  EngineOptions engine;
  E6Variant e6_variant = E6Variant::corrected;
  unsigned seed = 20240601;
};

constexpr int kCriteria = 10;

/// Checks of one criterion, in a fixed order.
std::vector<Check> run_criterion(int criterion, const LadderConfig& config);

/// All criteria 1..10 in order.
std::vector<Check> run_ladder(const LadderConfig& config);

/// The stated w_1..w_4 and j_1..j_5.
const std::vector<Rat>& known_w();
const std::vector<Rat>& known_j();

/// Expected SR generators for d = 1, 2, written out factor by factor.
std::vector<MPoly> stated_sr_ideal(int d);

std::optional<Check> first_failure(const std::vector<Check>& checks);

}  // namespace quasimap
