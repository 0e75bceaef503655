#include <iostream>

#include "cli_common.hpp"

namespace l1basis::cli {

namespace {

struct Observation {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Scalar delta_min;
  Scalar delta_min_up_to_sign;
  Scalar index_wise;
  std::optional<Basis> basis;
};

Observation observe(Basis b, std::size_t n, std::uint64_t seed) {
  const auto xs = b.vectors();
  Observation o;
  o.n = n;
  o.seed = seed;
  o.delta_min = min_dominating_delta(b).delta_min;
  o.delta_min_up_to_sign = min_dominating_delta_up_to_sign(b).delta_min;
  o.index_wise = perturbation_radius(Basis::standard(n), xs).m;
  o.basis = std::move(b);
  return o;
}

}  // namespace

int cmd_search_c(const GlobalOptions& g, const SearchOptions& o) {
  const unsigned d = g.precision;
  NRange r = parse_n_range(o.n_range);
  if (r.lo < 1) throw UsageError("--n-range must start at 1 or more");
  if (o.family == "prop1" && r.lo < 3) r.lo = 3;
  if (r.lo > r.hi) throw UsageError("empty --n-range for family " + o.family);

  std::vector<Observation> seen;
  if (o.family == "prop1") {
    for (std::size_t n = r.lo; n <= r.hi; ++n) seen.push_back(observe(prop1_block(n, true).basis, n, 0));
  } else {
    const RandomMode mode{.kind = parse_random_kind(o.family)};
    seen = run_trials<Observation>(
        o.trials,
        [&](std::size_t i) {
          const std::uint64_t seed = trial_seed(g.seed, i);
          const std::size_t n = r.lo + static_cast<std::size_t>(Rng(seed).below(r.hi - r.lo + 1));
          return observe(random_basis(n, seed, mode).normalized(), n, seed);
        },
        g.workers);
  }

  std::size_t best = 0, best_index_wise = 0, best_signed = 0, exceed = 0;
  io::Json observations = io::Json::array();
  for (std::size_t i = 0; i < seen.size(); ++i) {
    const auto& s = seen[i];
    if (s.delta_min > seen[best].delta_min) best = i;
    if (s.index_wise > seen[best_index_wise].index_wise) best_index_wise = i;
    if (s.delta_min_up_to_sign > seen[best_signed].delta_min_up_to_sign) best_signed = i;
    io::Json obs{{"n", s.n}};
    if (o.family != "prop1") obs["seed"] = s.seed;
    obs["delta_min"] = io::exact_value(s.delta_min, d);
    obs["delta_min_up_to_sign"] = io::exact_value(s.delta_min_up_to_sign, d);
    obs["index_wise_radius"] = io::exact_value(s.index_wise, d);
    if (s.delta_min > 2) {
      ++exceed;
      obs["violation"] = "delta_min exceeds 2";
      obs["instance"] = io::to_json(io::BasisFile::from_basis(*s.basis, default_labels(s.n)));
    }
    observations.push_back(obs);
  }

  const bool ok = exceed == 0;
  if (g.json) {
    io::Json report;
    report["command"] = "search-c";
    report["parameters"] = {{"family", o.family}, {"n_range", {r.lo, r.hi}}, {"trials", seen.size()}, {"seed", g.seed}};
    if (!seen.empty()) {
      const auto& b = seen[best];
      report["best"] = {{"delta_min", io::exact_value(b.delta_min, d)},
                        {"n", b.n},
                        {"witness", io::to_json(io::BasisFile::from_basis(*b.basis, default_labels(b.n)))}};
      report["best_index_wise_radius"] = io::exact_value(seen[best_index_wise].index_wise, d);
      report["best_delta_min_up_to_sign"] = io::exact_value(seen[best_signed].delta_min_up_to_sign, d);
    }
    report["observations"] = observations;
    report["exceeding_two"] = exceed;
    report["status"] = ok ? "verified" : "violated";
    std::cout << io::render(report);
  } else {
    std::cout << "l1basis " << kVersion << " search-c family " << o.family << ", n " << r.lo << ".." << r.hi << ", "
              << seen.size() << " bases\n\n";
    Table t({"quantity", "best", "n"});
    if (!seen.empty()) {
      t.add({"min dominating delta", show(seen[best].delta_min, d), std::to_string(seen[best].n)});
      t.add({"  up to sign", show(seen[best_signed].delta_min_up_to_sign, d), std::to_string(seen[best_signed].n)});
      t.add({"index-wise radius", show(seen[best_index_wise].index_wise, d), std::to_string(seen[best_index_wise].n)});
    }
    std::cout << t.str() << "\n";
    if (!seen.empty()) std::cout << "witness basis:\n" << io::serialize_csv(io::BasisFile::from_basis(*seen[best].basis));
    std::cout << (ok ? "every observed delta_min <= 2\n" : "VIOLATED: " + std::to_string(exceed) + " value(s) exceed 2\n");
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace l1basis::cli
