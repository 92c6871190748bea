#include "quasimap/commands.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "quasimap/series.hpp"
#include "quasimap/toric.hpp"
#include "quasimap/verification.hpp"

namespace quasimap {

namespace {

using Json = nlohmann::ordered_json;

void require_positive(const char* flag, int value) {
  if (value < 1) throw UsageError(std::string(flag) + " must be at least 1, got " + std::to_string(value));
}

std::string variant_name(E6Variant v) { return v == E6Variant::corrected ? "corrected" : "printed"; }

std::string ray_text(const IntMatrix& rays, Eigen::Index col) {
  std::string out;
  for (Eigen::Index r = 0; r < rays.rows(); ++r) {
    if (r) out += ' ';
    out += std::to_string(rays(r, col));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string factor_text(const std::vector<LinForm>& factors) {
  std::vector<std::pair<LinForm, int>> grouped;
  for (const auto& f : factors) {
    auto it = std::find_if(grouped.begin(), grouped.end(), [&](const auto& g) { return g.first == f; });
    if (it == grouped.end()) grouped.emplace_back(f, 1);
    else ++it->second;
  }
  std::vector<std::string> parts;
  for (const auto& [f, m] : grouped) parts.push_back("(" + to_string(f, "H") + ")" + (m > 1 ? "^" + std::to_string(m) : ""));
  return join(parts, " ");
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::verification_failed: return "verification_failed";
    case Status::usage_error: return "usage_error";
  }
  throw std::logic_error("status_name: unknown status");
}

Status parse_status(std::string_view name) {
  if (name == "ok") return Status::ok;
  if (name == "verification_failed") return Status::verification_failed;
  if (name == "usage_error") return Status::usage_error;
  throw std::invalid_argument("unknown status '" + std::string(name) + "'");
}

int exit_code(Status s) { return static_cast<int>(s); }

std::string emit_json(const CommandResult& r) {
  Json doc;
  doc["command"] = r.command;
  doc["parameters"] = Json::object();
  for (const auto& [k, v] : r.parameters) doc["parameters"][k] = v;
  doc["values"] = Json::array();
  for (const auto& [label, value] : r.values) doc["values"].push_back({{"label", label}, {"value", value}});
  doc["details"] = Json::array();
  for (const auto& [label, text] : r.details) doc["details"].push_back({{"label", label}, {"text", text}});
  doc["status"] = status_name(r.status);
  return doc.dump(2) + "\n";
}

CommandResult parse_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("parse_json: ") + e.what());
  }
  try {
    CommandResult r;
    r.command = doc.at("command").get<std::string>();
    for (const auto& [k, v] : doc.at("parameters").items()) r.parameters[k] = v.get<std::string>();
    for (const auto& item : doc.at("values")) {
      std::string value = item.at("value").get<std::string>();
      if (to_string(parse_rat(value)) != value) throw std::invalid_argument("parse_json: non-canonical rational " + value);
      r.values.emplace_back(item.at("label").get<std::string>(), std::move(value));
    }
    for (const auto& item : doc.at("details")) {
      r.details.emplace_back(item.at("label").get<std::string>(), item.at("text").get<std::string>());
    }
    r.status = parse_status(doc.at("status").get<std::string>());
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("parse_json: ") + e.what());
  }
}

std::string emit_text(const CommandResult& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "status:  " << status_name(r.status) << "\n";
  auto table = [&](const char* title, const auto& rows) {
    if (rows.empty()) return;
    std::size_t width = 0;
    for (const auto& [label, text] : rows) width = std::max(width, label.size());
    out << title << ":\n";
    for (const auto& [label, text] : rows) {
      out << "  " << label << std::string(width - label.size() + 2, ' ') << text << "\n";
    }
  };
  table("parameters", r.parameters);
  table("values", r.values);
  table("details", r.details);
  return out.str();
}

CommandResult cmd_fan(int d) {
  require_positive("--degree", d);
  const FanData fan = build_fan(d);
  CommandResult r;
  r.command = "fan";
  r.parameters["degree"] = std::to_string(d);
  r.values.emplace_back("rays", std::to_string(fan.rays.cols()));
  r.values.emplace_back("dimension", std::to_string(fan.rays.rows()));
  r.values.emplace_back("primitive_collections", std::to_string(fan.primitive_collections.size()));
  r.values.emplace_back("maximal_cones", to_string(maximal_cone_count(fan)));
  const auto rel = relation_check(fan);
  r.details.emplace_back("relation_check", rel.ok ? "pass" : "fail at relation " + std::to_string(rel.first_failing));
  for (std::size_t i = 0; i < fan.primitive_collections.size(); ++i) {
    r.details.emplace_back("P" + std::to_string(i), join(fan.collection_labels(i), " "));
  }
  for (Eigen::Index c = 0; c < fan.rays.cols(); ++c) {
    r.details.emplace_back(fan.labels[static_cast<std::size_t>(c)], ray_text(fan.rays, c));
  }
  if (!rel.ok) r.status = Status::verification_failed;
  return r;
}

CommandResult cmd_chow(int d) {
  require_positive("--degree", d);
  const FanData fan = build_fan(d);
  const DivisorClasses dc = divisor_classes(d);
  const auto gens = sr_ideal(d);
  const auto factors = sr_ideal_factors(d);
  CommandResult r;
  r.command = "chow";
  r.parameters["degree"] = std::to_string(d);
  r.values.emplace_back("generators", std::to_string(gens.size()));
  r.values.emplace_back("volume_degree", std::to_string(volume_form(d).total_degree()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    r.values.emplace_back("r" + std::to_string(i) + ".degree", std::to_string(gens[i].total_degree()));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    r.details.emplace_back("r" + std::to_string(i), factor_text(factors[i]));
    r.details.emplace_back("r" + std::to_string(i) + ".expanded", to_string(gens[i], "H"));
  }
  for (Eigen::Index c = 0; c < fan.rays.cols(); ++c) {
    r.details.emplace_back("[D " + fan.labels[static_cast<std::size_t>(c)] + "]",
                           to_string(dc.class_polynomial(static_cast<int>(c)), "H"));
  }
  return r;
}

CommandResult cmd_intersect(int d, int a, int b, const EngineOptions& options, E6Variant variant) {
  require_positive("--degree", d);
  CommandResult r;
  r.command = "intersect";
  r.parameters["degree"] = std::to_string(d);
  r.parameters["a"] = std::to_string(a);
  r.parameters["b"] = std::to_string(b);
  if (variant != E6Variant::corrected) r.parameters["e6_variant"] = variant_name(variant);
  r.values.emplace_back("w", to_string(compute_w(d, a, b, options, variant)));
  return r;
}

CommandResult cmd_mirror(int order) {
  require_positive("--order", order);
  const auto w = mirror_w(order);
  CommandResult r;
  r.command = "mirror";
  r.parameters["order"] = std::to_string(order);
  for (std::size_t i = 0; i < w.size(); ++i) r.values.emplace_back("w_" + std::to_string(i + 1), to_string(w[i]));
  return r;
}

CommandResult cmd_jinv(int order) {
  require_positive("--order", order);
  const auto w = mirror_w(order);
  const auto by_compositions = j_from_w(w);
  const auto by_lagrange = lagrange_oracle(w);
  CommandResult r;
  r.command = "jinv";
  r.parameters["order"] = std::to_string(order);
  for (std::size_t i = 0; i < by_compositions.size(); ++i) {
    r.values.emplace_back("j_" + std::to_string(i + 1), to_string(by_compositions[i]));
  }
  for (std::size_t i = 0; i < by_lagrange.size(); ++i) {
    r.values.emplace_back("j_" + std::to_string(i + 1) + ".lagrange", to_string(by_lagrange[i]));
  }
  const bool agree = by_compositions == by_lagrange;
  r.details.emplace_back("routes_agree", agree ? "true" : "false");
  if (!agree) r.status = Status::verification_failed;
  return r;
}

CommandResult cmd_verify(int degree_max, const EngineOptions& options, E6Variant variant) {
  require_positive("--degree-max", degree_max);
  LadderConfig config;
  config.degree_max = degree_max;
  config.engine = options;
  config.e6_variant = variant;
  const auto checks = run_ladder(config);
  CommandResult r;
  r.command = "verify";
  r.parameters["degree_max"] = std::to_string(degree_max);
  if (variant != E6Variant::corrected) r.parameters["e6_variant"] = variant_name(variant);
  long passed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    passed += c.passed ? 1 : 0;
    r.details.emplace_back("C" + std::to_string(c.criterion) + " " + c.name,
                           std::string(c.passed ? "PASS" : "FAIL") + "  expected " + c.expected + "  actual " + c.actual);
  }
  r.values.emplace_back("checks", std::to_string(checks.size()));
  r.values.emplace_back("passed", std::to_string(passed));
  if (auto bad = first_failure(checks)) {
    r.status = Status::verification_failed;
    r.parameters["first_failure"] = "C" + std::to_string(bad->criterion) + " " + bad->name;
  }
  return r;
}

}  // namespace quasimap
