#include "quasimap/toric.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace quasimap {

namespace {

void require_degree(int d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
}

int p_row(int j) { return 2 * j; }
int w_row(int d, int r) { return 2 * (d + 1) + r; }
int u_row(int d, int k) { return 2 * (d + 1) + (3 * d + 1) + (k - 1); }

MPoly h_linear(int d, std::initializer_list<std::pair<int, long>> terms) {
  LinForm f(static_cast<std::size_t>(d + 1));
  for (auto [j, c] : terms) f.set_coeff(static_cast<std::size_t>(j), f.coeff(static_cast<std::size_t>(j)) + c);
  return MPoly::from_linear(f);
}

}  // namespace

int FanData::v_column(int i, int j) const {
  if (i < 0 || i > 3) throw std::out_of_range("v_column: family");
  if (i < 3) {
    if (j < 0 || j > d) throw std::out_of_range("v_column: index");
    return i * (d + 1) + j;
  }
  if (j < 0 || j > 3 * d) throw std::out_of_range("v_column: index");
  return 3 * (d + 1) + j;
}

int FanData::u_column(int k) const {
  if (k < 1 || k > d - 1) throw std::out_of_range("u_column: index");
  return 3 * (d + 1) + (3 * d + 1) + (k - 1);
}

int FanData::column(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("unknown ray label: " + std::string(label));
  return static_cast<int>(it - labels.begin());
}

std::vector<std::string> FanData::collection_labels(std::size_t i) const {
  std::vector<std::string> out;
  for (int c : primitive_collections.at(i)) out.push_back(labels[static_cast<std::size_t>(c)]);
  return out;
}

FanData build_fan(int d) {
  require_degree(d);
  FanData fan;
  fan.d = d;
  const int height = 6 * d + 2;
  const int width = 7 * d + 3;
  fan.rays = IntMatrix::Zero(height, width);
  fan.labels.resize(static_cast<std::size_t>(width));

  // p_0 = (-1,-1), p_1 = (1,0), p_2 = (0,1)
  const long p[3][2] = {{-1, -1}, {1, 0}, {0, 1}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= d; ++j) {
      const int col = fan.v_column(i, j);
      fan.labels[static_cast<std::size_t>(col)] = "v" + std::to_string(i) + "," + std::to_string(j);
      fan.rays(p_row(j), col) = p[i][0];
      fan.rays(p_row(j) + 1, col) = p[i][1];
    }
  }
  for (int j = 0; j <= d; ++j) {
    const int col = fan.v_column(0, j);
    // -w_j: w_j has 3 at row 3j, (2,1) at rows 3j+1, 3j+2 and (1,2) at rows 3j-2, 3j-1.
    fan.rays(w_row(d, 3 * j), col) = -3;
    if (j < d) {
      fan.rays(w_row(d, 3 * j + 1), col) = -2;
      fan.rays(w_row(d, 3 * j + 2), col) = -1;
    }
    if (j > 0) {
      fan.rays(w_row(d, 3 * j - 2), col) = -1;
      fan.rays(w_row(d, 3 * j - 1), col) = -2;
    }
    // v'_j: row k-1 of the tridiagonal (-1, 2, -1) band centred on column k.
    for (int k = 1; k <= d - 1; ++k) {
      long entry = 0;
      if (j == k) entry = 2;
      if (j == k - 1 || j == k + 1) entry = -1;
      fan.rays(u_row(d, k), col) = entry;
    }
  }
  for (int j = 0; j <= 3 * d; ++j) {
    const int col = fan.v_column(3, j);
    fan.labels[static_cast<std::size_t>(col)] = "v3," + std::to_string(j);
    fan.rays(w_row(d, j), col) = 1;
  }
  for (int k = 1; k <= d - 1; ++k) {
    const int col = fan.u_column(k);
    fan.labels[static_cast<std::size_t>(col)] = "u" + std::to_string(k);
    fan.rays(u_row(d, k), col) = -1;
  }

  auto block = [&](int i) {
    std::vector<int> cols{fan.v_column(0, i), fan.v_column(1, i), fan.v_column(2, i)};
    return cols;
  };
  auto first = block(0);
  first.push_back(fan.v_column(3, 0));
  first.push_back(fan.v_column(3, 1));
  fan.primitive_collections.push_back(first);
  for (int i = 1; i <= d - 1; ++i) {
    auto mid = block(i);
    mid.push_back(fan.v_column(3, 3 * i - 1));
    mid.push_back(fan.v_column(3, 3 * i));
    mid.push_back(fan.v_column(3, 3 * i + 1));
    mid.push_back(fan.u_column(i));
    fan.primitive_collections.push_back(mid);
  }
  auto last = block(d);
  last.push_back(fan.v_column(3, 3 * d - 1));
  last.push_back(fan.v_column(3, 3 * d));
  fan.primitive_collections.push_back(last);
  return fan;
}

Int maximal_cone_count(const FanData& fan) {
  Int count = 1;
  for (const auto& pc : fan.primitive_collections) count *= static_cast<long>(pc.size());
  return count;
}

RelationReport relation_check(const FanData& fan) {
  const int d = fan.d;
  auto ray = [&](int col) { return fan.rays.col(col); };
  auto u_or_zero = [&](int k) -> IntVector {
    if (k < 1 || k > d - 1) return IntVector::Zero(fan.rays.rows());
    return ray(fan.u_column(k));
  };

  RelationReport report;
  for (int i = 0; i <= d; ++i) {
    IntVector sum = ray(fan.v_column(0, i)) + ray(fan.v_column(1, i)) + ray(fan.v_column(2, i));
    // weight-3 coordinates 3i-2 .. 3i+2 with coefficients 1,2,3,2,1 (clipped at the ends)
    const long weights[5] = {1, 2, 3, 2, 1};
    for (int off = -2; off <= 2; ++off) {
      const int j = 3 * i + off;
      if (j < 0 || j > 3 * d) continue;
      sum += weights[off + 2] * ray(fan.v_column(3, j));
    }
    if (i == 0) {
      sum -= u_or_zero(1);
    } else if (i == d) {
      sum -= u_or_zero(d - 1);
    } else {
      sum += -u_or_zero(i - 1) + 2 * u_or_zero(i) - u_or_zero(i + 1);
    }
    if (!sum.isZero()) {
      report.ok = false;
      report.first_failing = i;
      return report;
    }
  }
  return report;
}

DivisorClasses divisor_classes(int d) {
  require_degree(d);
  const FanData layout = build_fan(d);
  DivisorClasses dc;
  dc.d = d;
  dc.classes = IntMatrix::Zero(d + 1, layout.rays.cols());
  for (int j = 0; j <= d; ++j) {
    for (int i = 0; i < 3; ++i) dc.classes(j, layout.v_column(i, j)) = 1;
    dc.classes(j, layout.v_column(3, 3 * j)) = 3;
  }
  for (int j = 0; j < d; ++j) {
    dc.classes(j, layout.v_column(3, 3 * j + 1)) = 2;
    dc.classes(j + 1, layout.v_column(3, 3 * j + 1)) = 1;
    dc.classes(j, layout.v_column(3, 3 * j + 2)) = 1;
    dc.classes(j + 1, layout.v_column(3, 3 * j + 2)) = 2;
  }
  for (int k = 1; k <= d - 1; ++k) {
    const int col = layout.u_column(k);
    dc.classes(k - 1, col) = -1;
    dc.classes(k, col) = 2;
    dc.classes(k + 1, col) = -1;
  }
  return dc;
}

MPoly DivisorClasses::class_polynomial(int column) const {
  LinForm f(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) f.set_coeff(static_cast<std::size_t>(j), Rat(classes(j, column)));
  return MPoly::from_linear(f);
}

std::vector<std::vector<LinForm>> sr_ideal_factors(int d) {
  require_degree(d);
  const auto n = static_cast<std::size_t>(d + 1);
  auto lin = [&](std::initializer_list<std::pair<int, long>> terms) {
    LinForm f(n);
    for (auto [j, c] : terms) f.set_coeff(static_cast<std::size_t>(j), f.coeff(static_cast<std::size_t>(j)) + c);
    return f;
  };
  std::vector<std::vector<LinForm>> gens;
  auto h4 = [&](int i) { return std::vector<LinForm>(4, lin({{i, 1}})); };

  auto first = h4(0);
  first.push_back(lin({{0, 2}, {1, 1}}));
  gens.push_back(first);
  for (int i = 1; i <= d - 1; ++i) {
    auto mid = h4(i);
    mid.push_back(lin({{i - 1, 1}, {i, 2}}));
    mid.push_back(lin({{i, 2}, {i + 1, 1}}));
    mid.push_back(lin({{i - 1, -1}, {i, 2}, {i + 1, -1}}));
    gens.push_back(mid);
  }
  auto last = h4(d);
  last.push_back(lin({{d - 1, 1}, {d, 2}}));
  gens.push_back(last);
  return gens;
}

std::vector<MPoly> sr_ideal(int d) {
  std::vector<MPoly> out;
  for (const auto& factors : sr_ideal_factors(d)) {
    MPoly g = MPoly::constant(static_cast<std::size_t>(d + 1), 1);
    for (const auto& f : factors) g *= MPoly::from_linear(f);
    out.push_back(std::move(g));
  }
  return out;
}

MPoly volume_form(int d) {
  require_degree(d);
  const auto n = static_cast<std::size_t>(d + 1);
  Int three_pow;
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(d + 1));
  Monomial cubes(n, 3);
  MPoly vol = MPoly::monomial(n, cubes, Rat(three_pow));
  for (int i = 0; i < d; ++i) {
    vol *= h_linear(d, {{i, 2}, {i + 1, 1}});
    vol *= h_linear(d, {{i, 1}, {i + 1, 2}});
  }
  for (int k = 1; k <= d - 1; ++k) vol *= h_linear(d, {{k - 1, -1}, {k, 2}, {k + 1, -1}});
  return vol;
}

IntMatrix b_matrix(int k) {
  if (k < 1) throw std::invalid_argument("B_k needs k >= 1");
  const int n = k + 1;
  IntMatrix b = IntMatrix::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    b(r, r) = 2;
    if (r == 0) {
      b(r, 1) = 1;
    } else if (r == n - 1) {
      b(r, r - 1) = 1;
    } else {
      b(r, r - 1) = -1;
      b(r, r + 1) = -1;
    }
  }
  return b;
}

Int det_Bk(int k) { return exact_determinant(b_matrix(k)); }

std::vector<std::vector<IntVector>> recession_pieces(int d) {
  require_degree(d);
  const int n = d + 1;
  auto row = [&](std::initializer_list<std::pair<int, long>> terms) {
    IntVector v = IntVector::Zero(n);
    for (auto [j, c] : terms) v(j) += c;
    return v;
  };
  std::vector<std::vector<IntVector>> pieces(static_cast<std::size_t>(n));
  pieces[0] = {row({{0, 1}}), row({{0, 2}, {1, 1}})};
  for (int i = 1; i <= d - 1; ++i) {
    pieces[static_cast<std::size_t>(i)] = {row({{i, 1}}), row({{i - 1, 1}, {i, 2}}), row({{i, 2}, {i + 1, 1}}),
                                           row({{i - 1, -1}, {i, 2}, {i + 1, -1}})};
  }
  pieces[static_cast<std::size_t>(d)] = {row({{d, 1}}), row({{d - 1, 1}, {d, 2}})};
  return pieces;
}

OrientationReport orientation_enumeration(int d) {
  const auto pieces = recession_pieces(d);
  const int n = d + 1;
  std::vector<int> selection(static_cast<std::size_t>(n), 0);
  OrientationReport report;
  IntMatrix m(n, n);
  while (true) {
    for (int r = 0; r < n; ++r) m.row(r) = pieces[static_cast<std::size_t>(r)][static_cast<std::size_t>(selection[static_cast<std::size_t>(r)])].transpose();
    const Int det = exact_determinant(m);
    if (report.regions == 0 || det < report.min_det) report.min_det = det;
    if (report.regions == 0 || det > report.max_det) report.max_det = det;
    if (det <= 0 && report.all_positive) {
      report.all_positive = false;
      report.first_bad_selection = selection;
    }
    ++report.regions;

    int r = 0;
    while (r < n) {
      auto& s = selection[static_cast<std::size_t>(r)];
      if (++s < static_cast<int>(pieces[static_cast<std::size_t>(r)].size())) break;
      s = 0;
      ++r;
    }
    if (r == n) break;
  }
  return report;
}

std::vector<Rat> eval_recession(int d, const std::vector<Rat>& alpha) {
  const auto pieces = recession_pieces(d);
  if (alpha.size() != pieces.size()) throw std::invalid_argument("eval_recession: alpha has wrong length");
  std::vector<Rat> out;
  out.reserve(alpha.size());
  for (const auto& row : pieces) {
    Rat best;
    bool first = true;
    for (const auto& piece : row) {
      Rat v = 0;
      for (Eigen::Index j = 0; j < piece.size(); ++j) {
        if (piece(j) != 0) v += Rat(piece(j)) * alpha[static_cast<std::size_t>(j)];
      }
      if (first || v < best) best = v;
      first = false;
    }
    out.push_back(best);
  }
  return out;
}

std::string fan_document(const FanData& fan) {
  nlohmann::ordered_json doc;
  doc["degree"] = fan.d;
  doc["dimension"] = fan.rays.rows();
  doc["labels"] = fan.labels;
  auto rays = nlohmann::ordered_json::array();
  for (Eigen::Index c = 0; c < fan.rays.cols(); ++c) {
    std::vector<long> col(fan.rays.col(c).data(), fan.rays.col(c).data() + fan.rays.rows());
    rays.push_back(col);
  }
  doc["rays"] = rays;
  auto pcs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < fan.primitive_collections.size(); ++i) pcs.push_back(fan.collection_labels(i));
  doc["primitive_collections"] = pcs;
  return doc.dump();
}

}  // namespace quasimap
