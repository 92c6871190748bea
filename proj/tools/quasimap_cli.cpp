#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "quasimap/commands.hpp"

using namespace quasimap;

namespace {

constexpr int kInternalError = 3;

void print(const CommandResult& r, const std::string& format) {
  std::cout << (format == "json" ? emit_json(r) : emit_text(r));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-map moduli of P(1,1,1,3): toric data, intersection numbers, mirror check"};
  app.require_subcommand(1);

  std::string format = "text";
  unsigned threads = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", threads, "Worker threads for the residue engine (0 = all cores)");

  int degree = 0;
  int a = 0;
  int b = 0;
  int order = 0;
  int degree_max = 0;
  std::string variant = "corrected";

  auto* fan = app.add_subcommand("fan", "Rays, primitive collections and relation check");
  fan->add_option("--degree,-d", degree, "Degree d")->required();
  auto* chow = app.add_subcommand("chow", "Stanley-Reisner generators and divisor classes");
  chow->add_option("--degree,-d", degree, "Degree d")->required();
  auto* intersect = app.add_subcommand("intersect", "Two-point number w(O_{z^a} O_{z^b})_{0,d}");
  intersect->add_option("--degree,-d", degree, "Degree d")->required();
  intersect->add_option("--a", a, "Exponent at the first point")->required();
  intersect->add_option("--b", b, "Exponent at the second point")->required();
  auto* mirror = app.add_subcommand("mirror", "Mirror-map coefficients w_1..w_N");
  mirror->add_option("--order,-n", order, "Number of coefficients")->required();
  auto* jinv = app.add_subcommand("jinv", "j-invariant coefficients j_1..j_N by two routes");
  jinv->add_option("--order,-n", order, "Number of coefficients")->required();
  auto* verify = app.add_subcommand("verify", "Run every check up to the given degree");
  verify->add_option("--degree-max,-D", degree_max, "Largest degree")->required();
  for (auto* sub : {intersect, verify}) {
    sub->add_option("--e6-variant", variant, "e^6 product (printed is a negative control)")
        ->check(CLI::IsMember({"corrected", "printed"}));
  }
  for (auto* sub : {fan, chow, intersect, mirror, jinv, verify}) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--threads", threads, "Worker threads for the residue engine (0 = all cores)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code(Status::usage_error);
  }

  const EngineOptions options{threads};
  const E6Variant e6 = variant == "printed" ? E6Variant::printed : E6Variant::corrected;
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    CommandResult r;
    if (command == "fan") r = cmd_fan(degree);
    else if (command == "chow") r = cmd_chow(degree);
    else if (command == "intersect") r = cmd_intersect(degree, a, b, options, e6);
    else if (command == "mirror") r = cmd_mirror(order);
    else if (command == "jinv") r = cmd_jinv(order);
    else r = cmd_verify(degree_max, options, e6);
    print(r, format);
    return exit_code(r.status);
  } catch (const UsageError& e) {
    CommandResult r;
    r.command = command;
    r.status = Status::usage_error;
    r.details.emplace_back("error", e.what());
    print(r, format);
    return exit_code(Status::usage_error);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
