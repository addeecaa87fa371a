// confset: command-line driver for configuration-set analyses.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "confset/analysis.hpp"
#include "confset/config_set.hpp"
#include "confset/errors.hpp"

namespace {

struct Flags {
  std::string group;
  std::size_t k = 0;
  std::uint32_t p = 0;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t max_order = confset::kDefaultOrderCap;
  std::uint64_t dot_cap = confset::kDefaultDotCap;
  bool timings = false;
  bool punctured = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "seed for sampled checks")->capture_default_str();
  cmd->add_option("--max-order", f.max_order,
                  "largest ambient group for closure/BFS (env CONFSET_MAX_ORDER overrides)")
      ->capture_default_str();
  cmd->add_flag("--timings", f.timings, "record wall_ms per check (breaks byte-stability)");
}

int emit(const confset::AnalysisReport& report, const Flags& f) {
  std::cout << (f.format == "text" ? report.to_text() : report.to_json_string());
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Configuration sets of finite groups: generation, Cayley graphs, Z_p structure"};
  app.require_subcommand(1);
  Flags f;

  auto* analyze = app.add_subcommand("analyze", "generation analysis of F(G,k)");
  analyze->add_option("--group", f.group, "group spec, e.g. Z4, D3, S3, Z2xZ3, table:path")->required();
  analyze->add_option("--k", f.k, "arity")->required()->check(CLI::PositiveNumber);
  add_common(analyze, f);

  auto* zp = app.add_subcommand("zp", "configuration group of Z_p");
  zp->add_option("--p", f.p, "prime, 3 <= p <= 8")->required();
  add_common(zp, f);

  auto* cayley = app.add_subcommand("cayley", "Cayley graph of G^k with connection set F(G,k)");
  cayley->add_option("--group", f.group, "group spec")->required();
  cayley->add_option("--k", f.k, "arity")->required()->check(CLI::PositiveNumber);
  cayley->add_option("--out", f.out, "DOT or JSON summary output path")->required();
  cayley->add_option("--dot-cap", f.dot_cap, "largest vertex count written as DOT")->capture_default_str();
  add_common(cayley, f);

  auto* punctured = app.add_subcommand("punctured", "audits of phi: F(G,k+1) -> F(G-{1},k)");
  punctured->add_option("--group", f.group, "group spec")->required();
  punctured->add_option("--k", f.k, "arity of the punctured set")->required()->check(CLI::PositiveNumber);
  add_common(punctured, f);

  auto* verify = app.add_subcommand("verify-all", "full verification matrix");
  add_common(verify, f);
  verify->add_option("--dot-cap", f.dot_cap, "unused; accepted for uniformity");

  auto* enumerate = app.add_subcommand("enumerate", "list F(G,k) in lexicographic order");
  enumerate->add_option("--group", f.group, "group spec")->required();
  enumerate->add_option("--k", f.k, "arity")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--punctured", f.punctured, "list F(G-{1},k) instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (const char* env = std::getenv("CONFSET_MAX_ORDER")) {
    try {
      f.max_order = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: CONFSET_MAX_ORDER must be a non-negative integer\n";
      return 1;
    }
  }
  const confset::RunOptions options{f.seed, f.max_order, f.dot_cap, f.timings};

  try {
    if (*analyze) return emit(confset::cmd_analyze(f.group, f.k, options), f);
    if (*zp) return emit(confset::cmd_zp(f.p, options), f);
    if (*cayley) return emit(confset::cmd_cayley(f.group, f.k, f.out, options), f);
    if (*punctured) return emit(confset::cmd_punctured(f.group, f.k, options), f);
    if (*verify) return emit(confset::cmd_verify_all(options), f);
    if (*enumerate) {
      const auto g = confset::make_group(f.group, {f.max_order, 1024});
      auto stream = f.punctured ? confset::punctured_config_iter(g, f.k) : confset::config_iter(g, f.k);
      while (auto t = stream.next()) std::cout << t->to_string() << '\n';
      return 0;
    }
  } catch (const confset::ParseError& e) {
    std::cerr << "error: " << e.what() << " (at position " << e.position() << ")\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const confset::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const confset::NotAGroup& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
