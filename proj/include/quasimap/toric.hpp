#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

#include "quasimap/polynomial.hpp"
#include "quasimap/rational.hpp"

namespace quasimap {

using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long, Eigen::Dynamic, 1>;

/// Fan of the compactified quasi-map space of degree d into P(1,1,1,3).
///
/// Columns of `rays` are ordered v_{0,0..d}, v_{1,0..d}, v_{2,0..d},
/// v_{3,0..3d}, u_{1..d-1}; there are 7d+3 of them, each of height 6d+2
/// (blocks: 2(d+1) rows for the p_i, 3d+1 rows for the weight-3 coordinate,
/// d-1 rows for the u_k). Primitive collections hold column indices.
struct FanData {
  int d = 0;
  IntMatrix rays;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> primitive_collections;

  int column(std::string_view label) const;
  int v_column(int i, int j) const;  // i in 0..3
  int u_column(int k) const;         // k in 1..d-1
  std::vector<std::string> collection_labels(std::size_t i) const;
};

FanData build_fan(int d);

/// Number of maximal cones: omit one generator from every primitive collection.
Int maximal_cone_count(const FanData& fan);

struct RelationReport {
  bool ok = true;
  int first_failing = -1;  // relation index 0..d
};

/// Checks the d+1 integer ray relations (one per H_i). Terms u_0 and u_d are
/// absent.
RelationReport relation_check(const FanData& fan);

/// Divisor classes [D_rho] written in H_0..H_d: row i of `classes` holds the
/// coefficient of H_i, one column per ray (same column order as FanData).
struct DivisorClasses {
  int d = 0;
  IntMatrix classes;

  MPoly class_polynomial(int column) const;
};

DivisorClasses divisor_classes(int d);

/// Generators of the Stanley-Reisner ideal in H_0..H_d:
/// H_0^4(2H_0+H_1), H_i^4(H_{i-1}+2H_i)(2H_i+H_{i+1})(-H_{i-1}+2H_i-H_{i+1}),
/// H_d^4(H_{d-1}+2H_d).
std::vector<MPoly> sr_ideal(int d);

/// The generators as lists of linear factors (with repetition).
std::vector<std::vector<LinForm>> sr_ideal_factors(int d);

/// Class of a point, degree 6d+2.
MPoly volume_form(int d);

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
Int exact_determinant(const Eigen::MatrixBase<Derived>& m);

/// det of the (k+1)x(k+1) matrix with rows (2,1,0..), (-1,2,-1) inside, (..,1,2).
Int det_Bk(int k);
IntMatrix b_matrix(int k);

/// Candidate linear pieces of the recession map, per row of F_d: row 0 has
/// {a_0, 2a_0+a_1}, interior rows four pieces, row d {a_d, a_{d-1}+2a_d}.
std::vector<std::vector<IntVector>> recession_pieces(int d);

struct OrientationReport {
  long regions = 0;
  Int min_det;
  Int max_det;
  bool all_positive = true;
  std::vector<int> first_bad_selection;  // piece index per row
};

/// Determinant of every selection of one piece per row.
OrientationReport orientation_enumeration(int d);

/// Componentwise minimum over the row pieces.
std::vector<Rat> eval_recession(int d, const std::vector<Rat>& alpha);

/// JSON document with the rays (as integer arrays, one per column), the
/// primitive collections (as label lists) and the labels.
std::string fan_document(const FanData& fan);

// --- implementation -------------------------------------------------------

template <typename Derived>
Int exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("exact_determinant: matrix not square");
  if (n == 0) return 1;
  std::vector<Int> a(static_cast<std::size_t>(n * n));
  auto at = [&](Eigen::Index r, Eigen::Index c) -> Int& { return a[static_cast<std::size_t>(r * n + c)]; };
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) at(r, c) = static_cast<long>(m(r, c));
  }
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (Eigen::Index c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

}  // namespace quasimap
