#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasimap/factored.hpp"

namespace quasimap {

class ResidueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Order in which the variables are integrated out.
struct ResiduePlan {
  std::vector<std::size_t> order;
  int degree_target = 0;  // informational: degree of the top Chow class

  static ResiduePlan ascending(std::size_t nvars, int degree_target = 0);
  static ResiduePlan descending(std::size_t nvars, int degree_target = 0);
};

/// One summand of the branching residue computation.
struct BranchTerm {
  FactoredRat value;
  std::vector<std::size_t> remaining;
};

struct EngineOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct ResidueStats {
  std::size_t branches = 0;      // residues taken
  std::size_t pruned = 0;        // branches with vanishing residue
  std::size_t max_live_terms = 0;
};

/// Residue of f in z_var at z_var = point, treating the other variables as
/// generic. The pole order is the total multiplicity of every denominator
/// factor vanishing there, whatever its tags.
FactoredRat residue_at_point(const FactoredRat& f, std::size_t var, const LinForm& point);

/// Same residue via (1/(m-1)!) d^{m-1}/dz^{m-1} [(z - p)^m f] at z = p, built on
/// fr_derivative. Slower; kept as an independent route for testing.
FactoredRat residue_by_derivative(const FactoredRat& f, std::size_t var, const LinForm& point);

/// Distinct points z_var = p contributed by factors tagged for var.
std::vector<LinForm> residue_points(const FactoredRat& f, std::size_t var);

/// Keeps the numerator component whose degree makes the total degree of f
/// equal to -(d+1); every other component integrates to zero.
FactoredRat homogeneity_filter(const FactoredRat& f, int d);

/// Integrates out every variable in plan.order, summing over the tagged pole
/// points of each live term. Throws ResidueError("non-scalar remainder") if a
/// term survives with variables left.
Rat iterated_residue(const FactoredRat& f, const ResiduePlan& plan, const EngineOptions& options = {},
                     ResidueStats* stats = nullptr);

}  // namespace quasimap
