#include <iostream>

#include "cli_common.hpp"

namespace l1basis::cli {

namespace {

constexpr std::size_t kInversionCap = 64;

}  // namespace

int cmd_analyze(const GlobalOptions& g, const std::string& input) {
  const unsigned digits = g.precision;
  io::BasisFile file = io::parse_basis_file(read_file(input));
  InversionOptions inversion;
  if (file.dimension > kInversionCap && g.force_cap) inversion.dimension_cap = file.dimension;
  Basis b = file.to_basis(inversion);
  const std::size_t n = b.dimension();

  DualSystem dual = coefficient_functionals(b);
  auto norms = dual_norms(dual);
  auto eq = equivalence_constants(b);
  auto bottleneck = min_dominating_delta(b);
  const auto xs = b.vectors();
  auto to_standard = perturbation_radius(Basis::standard(n), xs);

  std::optional<UnconditionalConstant> K;
  if (n > g.cap && !g.force_cap) {
    std::cerr << "error: n = " << n << " exceeds the sign-enumeration cap " << g.cap << " ("
              << enumeration_cost(n) << "); rerun with --force-cap or a larger --cap\n";
    return kResourceCap;
  }
  if (n > g.cap) std::cerr << "note: forcing sign enumeration: " << enumeration_cost(n) << "\n";
  K = unconditional_constant(b, {.cap = std::max(g.cap, n), .workers = g.workers});

  io::Json report;
  report["command"] = "analyze";
  report["input"] = {{"digest", io::input_digest(file)}, {"dimension", n}, {"normalized", b.is_normalized()}};
  io::Json k1 = io::exact_value(eq.k1, digits);
  k1["witness_coordinate"] = eq.k1_witness + 1;
  k1["witness_coefficients"] = io::vector_strings(eq.k1_coefficients(b));
  k1["provenance"] = "coefficient-functional formula 1/k1 = max_i sum_j |x_j*(i)|; exact optimum";
  io::Json k2 = io::exact_value(eq.k2, digits);
  k2["witness_index"] = eq.k2_witness + 1;
  k2["provenance"] = "coefficient-functional formula k2 = max_j ||x_j||_1; exact optimum";
  io::Json uc = io::exact_value(K->value, digits);
  uc["witness_signs"] = io::signs_json(K->witness_signs);
  uc["provenance"] = "sign enumeration over 2^(n-1) classes of ||T D T^-1||_1";
  report["constants"] = {{"k1", k1}, {"k2", k2}, {"unconditional", uc}};
  report["dual_norms"] = io::scalar_list(norms, digits);
  io::Json pert;
  pert["radius_to_standard"] = io::exact_value(to_standard.m, digits);
  pert["radius_to_standard"]["provenance"] = "index-wise max_j ||x_j - e_j||_1";
  pert["min_dominating_delta"] = io::exact_value(bottleneck.delta_min, digits);
  pert["min_dominating_delta"]["assignment"] = one_based(bottleneck.assignment);
  pert["min_dominating_delta"]["provenance"] =
      "bottleneck assignment over reindexings (extension: the index-wise radius is radius_to_standard)";
  if (!bottleneck.input_normalized) pert["min_dominating_delta"]["warning"] = "basis is not normalized";
  report["perturbation"] = pert;

  if (g.json) {
    std::cout << io::render(report);
    return kOk;
  }
  std::cout << "l1basis " << kVersion << " analyze " << input << "\n";
  std::cout << "dimension " << n << (b.is_normalized() ? " (normalized)" : "") << "\n\n";
  Table t({"quantity", "exact", "decimal", "witness"});
  t.add({"k1", to_string(eq.k1), to_decimal(eq.k1, digits), "image e_" + std::to_string(eq.k1_witness + 1)});
  t.add({"k2", to_string(eq.k2), to_decimal(eq.k2, digits), "x_" + std::to_string(eq.k2_witness + 1)});
  std::string signs;
  for (int s : K->witness_signs) signs += s > 0 ? '+' : '-';
  t.add({"K", to_string(K->value), to_decimal(K->value, digits), signs});
  t.add({"radius to standard", to_string(to_standard.m), to_decimal(to_standard.m, digits), "index-wise"});
  t.add({"min dominating delta", to_string(bottleneck.delta_min), to_decimal(bottleneck.delta_min, digits),
         "bottleneck assignment"});
  for (std::size_t j = 0; j < n; ++j)
    t.add({"||x_" + std::to_string(j + 1) + "*||", to_string(norms[j]), to_decimal(norms[j], digits), ""});
  std::cout << t.str();
  return kOk;
}

}  // namespace l1basis::cli
