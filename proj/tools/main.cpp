#include <CLI11.hpp>

#include <iostream>

#include "cli_common.hpp"

using namespace l1basis;
using namespace l1basis::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact basis constants of finite bases of l1^n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit the machine-readable report on stdout");
  app.add_option("--seed", g.seed, "Seed for randomized constructions and suites");
  app.add_option("--cap", g.cap, "Largest n for sign enumeration");
  app.add_flag("--force-cap", g.force_cap, "Run sign enumeration above --cap");
  app.add_option("--precision", g.precision, "Significant digits in decimal renderings")->check(CLI::Range(1u, 200u));
  app.add_option("--workers", g.workers, "Worker threads (0 = hardware concurrency)");

  std::string analyze_input;
  auto* analyze = app.add_subcommand("analyze", "Equivalence constants, dual norms and unconditional constant");
  analyze->add_option("input", analyze_input, "Basis file (line-oriented or JSON)")->required();
  analyze->fallthrough();

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "Write a basis file");
  construct->add_option("kind", co.kind, "prop1 | prop1_sum | random")
      ->required()
      ->check(CLI::IsMember({"prop1", "prop1_sum", "random"}));
  construct->add_option("--n", co.n, "Dimension");
  construct->add_option("--sizes", co.sizes, "Block sizes for prop1_sum, e.g. 3,4,5 or 3..12");
  construct->add_option("--mode", co.mode, "dense | near_standard | signed_permutation");
  construct->add_option("--radius", co.radius, "near_standard perturbation radius (rational)");
  construct->add_flag("--normalized", co.normalized, "Rescale every vector to unit l1 norm");
  construct->add_flag("--verify", co.verify, "Run the construction's self-checks");
  construct->add_option("-o,--output", co.output, "Output path (default stdout)");
  construct->add_option("--format", co.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  construct->fallthrough();

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a certificate suite; exit 0 iff no violations");
  verify->add_option("statement", vo.statement, "fact1 | thm1 | thm2 | fact2 | prop1 | c2")
      ->required()
      ->check(CLI::IsMember({"fact1", "thm1", "thm2", "fact2", "prop1", "c2"}));
  verify->add_option("--n-range", vo.n_range, "Dimension range a..b");
  verify->add_option("--n", vo.n, "Dimension for randomized suites");
  verify->add_option("--trials", vo.trials, "Number of randomized trials");
  verify->add_option("--input", vo.input, "Check this basis file instead of random ones (thm2, fact2)");
  verify->fallthrough();

  SearchOptions so;
  auto* search = app.add_subcommand("search-c", "Search for bases far from every reindexing of the standard basis");
  search->add_option("--n-range", so.n_range, "Dimension range a..b");
  search->add_option("--trials", so.trials, "Random bases per run");
  search->add_option("--family", so.family, "dense | prop1 | signed_permutation")
      ->check(CLI::IsMember({"dense", "prop1", "signed_permutation"}));
  search->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(g, analyze_input);
    if (*construct) return cmd_construct(g, co);
    if (*verify) return cmd_verify(g, vo);
    if (*search) return cmd_search_c(g, so);
  } catch (const SingularMatrix& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSingularInput;
  } catch (const DimensionTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const Error& e) {
    // Parse errors, bad parameters, unnormalized or mismatched input.
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
