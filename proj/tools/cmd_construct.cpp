#include <iostream>

#include "cli_common.hpp"

namespace l1basis::cli {

namespace {

std::string serialize(const io::BasisFile& f, const std::string& format) {
  return format == "json" ? io::serialize_json(f) : io::serialize_csv(f);
}

}  // namespace

int cmd_construct(const GlobalOptions& g, const ConstructOptions& o) {
  std::vector<std::string> failures;
  std::optional<Matrix> matrix;

  if (o.kind == "prop1") {
    if (o.n < 3) throw UsageError("construct prop1 needs --n >= 3");
    try {
      InversionOptions inversion;
      if (g.force_cap) inversion.dimension_cap = std::max(inversion.dimension_cap, o.n);
      Prop1Block block = prop1_block(o.n, o.normalized, inversion);
      if (o.verify) failures = verify_prop1_block(block);
      matrix = block.basis.matrix();
    } catch (const Error& e) {
      if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const DimensionTooLarge*>(&e)) throw;
      failures.push_back(e.what());
    }
  } else if (o.kind == "prop1_sum") {
    auto sizes = parse_size_list(o.sizes.empty() ? std::to_string(o.n) : o.sizes);
    for (auto s : sizes)
      if (s < 3) throw UsageError("every block size must be >= 3");
    Prop1DirectSum sum = prop1_direct_sum(sizes, o.normalized);
    if (o.verify) {
      for (const auto& blk : sum.blocks)
        for (auto& f : verify_prop1_block(blk)) failures.push_back("block n=" + std::to_string(blk.n) + ": " + f);
      std::size_t largest = *std::max_element(sizes.begin(), sizes.end());
      if (sum.sup_norm_witness != Scalar(1, largest))
        failures.push_back("sup-norm witness " + to_string(sum.sup_norm_witness) + " != 1/" + std::to_string(largest));
    }
    matrix = sum.matrix();
    // The blockwise constants are cross-checked on the full matrix when it is
    // small enough to invert.
    if (o.verify && (sum.dimension <= 64 || g.force_cap)) {
      auto c = equivalence_constants(sum.assemble({.dimension_cap = sum.dimension}));
      if (c.k1 != sum.k1 || c.k2 != sum.k2) failures.push_back("assembled constants differ from blockwise constants");
    }
  } else {
    if (o.n < 1) throw UsageError("construct random needs --n >= 1");
    RandomMode mode;
    mode.kind = parse_random_kind(o.mode);
    mode.radius = parse_scalar(o.radius);
    if (sgn(mode.radius) <= 0) throw UsageError("--radius must be positive");
    Basis b = random_basis(o.n, g.seed, mode);
    if (o.normalized) b = b.normalized();
    if (o.verify) {
      Basis again = random_basis(o.n, g.seed, mode);
      if (o.normalized) again = again.normalized();
      if (!(again == b)) failures.push_back("regeneration with the same seed differs");
      if (mode.kind == RandomKind::near_standard && !o.normalized) {
        const auto ys = b.vectors();
        if (!perturbation_radius(Basis::standard(o.n), ys, mode.radius).dominated)
          failures.push_back("near_standard draw is not within the radius");
      }
    }
    matrix = b.matrix();
  }

  for (const auto& f : failures) std::cerr << "verification failed: " << f << "\n";
  if (!matrix) return kVerificationFailed;

  const auto columns = matrix->columns();
  io::BasisFile file = io::BasisFile::from_vectors(columns, default_labels(matrix->size()));
  const std::string text = serialize(file, o.format);
  if (o.verify && io::parse_basis_file(text).values() != columns)
    failures.push_back("serialized file does not reparse to the same values");
  write_output(o.output, text);
  if (!failures.empty()) return kVerificationFailed;
  if (o.verify) std::cerr << "verified: all construction checks passed\n";
  return kOk;
}

}  // namespace l1basis::cli
