#include <iostream>

#include "cli_common.hpp"

namespace l1basis::cli {

namespace {

struct Suite {
  io::Json trials = io::Json::array();
  std::size_t violations = 0;
  Table table;
  io::Json parameters = io::Json::object();
};

io::Json instance_json(const Basis& b) {
  const auto cols = b.vectors();
  return io::to_json(io::BasisFile::from_vectors(cols, default_labels(b.dimension())));
}

void record_violation(Suite& s, io::Json& trial, const Basis& instance, const std::string& what) {
  ++s.violations;
  trial["violation"] = what;
  trial["instance"] = instance_json(instance);
  std::cerr << "violation: " << what << "\n" << io::serialize_json(io::BasisFile::from_vectors(instance.vectors()));
}

std::size_t default_n(const VerifyOptions& o, std::size_t fallback) { return o.n ? o.n : fallback; }
std::size_t default_trials(const VerifyOptions& o, std::size_t fallback) { return o.trials ? o.trials : fallback; }

NRange default_range(const VerifyOptions& o, NRange fallback) {
  return o.n_range.empty() ? fallback : parse_n_range(o.n_range);
}

void require_cap(const GlobalOptions& g, std::size_t n) {
  if (n > g.cap && !g.force_cap) throw DimensionTooLarge(n, g.cap, enumeration_cost(n));
}

EnumerationOptions enumeration(const GlobalOptions& g, std::size_t n) {
  return {.cap = std::max(g.cap, n), .workers = g.workers};
}

Suite verify_prop1(const GlobalOptions& g, const VerifyOptions& o) {
  const unsigned d = g.precision;
  NRange r = default_range(o, {3, 20});
  if (r.lo < 3) throw UsageError("prop1 needs n >= 3");
  Suite s{.table = Table({"n", "k1", "expected k1", "k2", "max|x_1(i)|", "status"})};
  s.parameters = {{"n_range", {r.lo, r.hi}}};
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    io::Json trial{{"n", n}};
    std::vector<std::string> failures;
    std::optional<Prop1Block> block;
    try {
      block = prop1_block(n);
    } catch (const Error& e) {
      failures.push_back(e.what());
    }
    if (!block) {
      ++s.violations;
      trial["violation"] = failures.front();
      s.trials.push_back(trial);
      continue;
    }
    auto c = equivalence_constants(block->basis);
    Scalar sup = linf_norm(block->basis.matrix().column_view(0));
    trial["k1"] = io::exact_value(c.k1, d);
    trial["k2"] = io::exact_value(c.k2, d);
    trial["expected_k1"] = io::exact_value(prop1_expected_k1(n), d);
    trial["sup_norm_x1"] = io::exact_value(sup, d);
    trial["margin_k1_over_one_fifth"] = io::exact_value(c.k1 - Scalar(1, 5), d);
    failures = verify_prop1_block(*block);
    if (!failures.empty()) record_violation(s, trial, block->basis, failures.front());
    s.table.add({std::to_string(n), to_string(c.k1), to_string(prop1_expected_k1(n)), to_string(c.k2), to_string(sup),
                 failures.empty() ? "ok" : "VIOLATED"});
    s.trials.push_back(trial);
  }
  return s;
}

Suite verify_c2(const GlobalOptions& g, const VerifyOptions& o) {
  const unsigned d = g.precision;
  NRange r = default_range(o, {3, 10});
  if (r.lo < 3) throw UsageError("c2 needs n >= 3");
  const std::size_t trials = default_trials(o, 100);
  Suite s{.table = Table({"instance", "n", "delta_min", "expected", "status"})};
  s.parameters = {{"n_range", {r.lo, r.hi}}, {"random_trials", trials}, {"seed", g.seed}};
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    Basis b = prop1_block(n, true).basis;
    auto res = min_dominating_delta(b);
    Scalar expected = ratio(2 * (static_cast<long>(n) - 1), static_cast<long>(n));
    io::Json trial{{"family", "prop1_normalized"}, {"n", n}};
    trial["delta_min"] = io::exact_value(res.delta_min, d);
    trial["expected"] = io::exact_value(expected, d);
    trial["assignment"] = one_based(res.assignment);
    trial["margin_to_two"] = io::exact_value(2 - res.delta_min, d);
    bool ok = res.delta_min == expected && res.delta_min <= 2;
    if (!ok) record_violation(s, trial, b, "delta_min differs from 2(n-1)/n");
    s.table.add({"prop1 normalized", std::to_string(n), to_string(res.delta_min), to_string(expected), ok ? "ok" : "VIOLATED"});
    s.trials.push_back(trial);
  }
  auto random = run_trials<io::Json>(
      trials,
      [&](std::size_t i) {
        const std::uint64_t seed = trial_seed(g.seed, i);
        const std::size_t n = r.lo + static_cast<std::size_t>(Rng(seed).below(r.hi - r.lo + 1));
        Basis b = random_basis(n, seed).normalized();
        auto res = min_dominating_delta(b);
        io::Json trial{{"family", "random_normalized"}, {"n", n}, {"seed", seed}};
        trial["delta_min"] = io::exact_value(res.delta_min, d);
        trial["margin_to_two"] = io::exact_value(2 - res.delta_min, d);
        if (res.delta_min > 2) trial["instance"] = instance_json(b);
        return trial;
      },
      g.workers);
  Scalar worst = 0;
  for (auto& t : random) {
    Scalar v = parse_scalar(t["delta_min"]["exact"].get<std::string>());
    if (v > worst) worst = v;
    if (v > 2) {
      ++s.violations;
      t["violation"] = "delta_min exceeds 2";
    }
    s.trials.push_back(t);
  }
  if (trials)
    s.table.add({"random normalized (max of " + std::to_string(trials) + ")", std::to_string(r.lo) + ".." + std::to_string(r.hi),
                 to_string(worst), "<= 2", worst <= 2 ? "ok" : "VIOLATED"});
  return s;
}

Suite verify_thm1(const GlobalOptions& g, const VerifyOptions& o) {
  const unsigned d = g.precision;
  const std::size_t n = default_n(o, 4);
  const std::size_t trials = default_trials(o, 100);
  Suite s{.table = Table({"trials", "n", "applicable", "violations", "min low margin", "min high margin"})};
  s.parameters = {{"n", n}, {"trials", trials}, {"seed", g.seed}};
  struct Outcome {
    io::Json trial;
    std::optional<Scalar> low_margin, high_margin;
    bool violated = false;
  };
  auto outcomes = run_trials<Outcome>(
      trials,
      [&](std::size_t i) {
        const std::uint64_t seed = trial_seed(g.seed, i);
        Basis x = random_basis(n, seed);
        Scalar k = equivalence_constants(x).k1;
        Rng rng(seed ^ 0x5bd1e995ULL);
        const auto xs = x.vectors();
        Outcome out;
        out.trial = {{"index", i}, {"seed", seed}};
        std::optional<Basis> y;
        try {
          y = Basis::from_columns(random_perturbation(xs, k, rng));
        } catch (const SingularMatrix&) {
          out.violated = true;
          out.trial["violation"] = "perturbation with m < k is singular";
          out.trial["instance"] = instance_json(x);
          return out;
        }
        auto outcome = sandwich_check(x, *y);
        if (auto* na = std::get_if<NotApplicable>(&outcome)) {
          out.trial["not_applicable"] = {{"k", io::exact_value(na->k, d)}, {"m", io::exact_value(na->m, d)}};
          return out;
        }
        const auto& c = std::get<SandwichCertificate>(outcome);
        out.low_margin = c.actual_low - c.bound_low;
        out.high_margin = c.bound_high - c.actual_high;
        out.trial["k"] = io::exact_value(c.k, d);
        out.trial["m"] = io::exact_value(c.m, d);
        out.trial["bound_low"] = io::exact_value(c.bound_low, d);
        out.trial["actual_low"] = io::exact_value(c.actual_low, d);
        out.trial["actual_high"] = io::exact_value(c.actual_high, d);
        out.trial["bound_high"] = io::exact_value(c.bound_high, d);
        out.trial["margin_low"] = io::exact_value(*out.low_margin, d);
        out.trial["margin_high"] = io::exact_value(*out.high_margin, d);
        if (!c.holds) {
          out.violated = true;
          out.trial["violation"] = "sandwich bounds fail";
          out.trial["instance"] = instance_json(x);
          out.trial["perturbed"] = instance_json(*y);
        }
        return out;
      },
      g.workers);
  std::size_t applicable = 0;
  std::optional<Scalar> min_low, min_high;
  for (auto& out : outcomes) {
    if (out.violated) ++s.violations;
    if (out.low_margin) {
      ++applicable;
      if (!min_low || *out.low_margin < *min_low) min_low = out.low_margin;
      if (!min_high || *out.high_margin < *min_high) min_high = out.high_margin;
    }
    s.trials.push_back(std::move(out.trial));
  }
  s.table.add({std::to_string(trials), std::to_string(n), std::to_string(applicable), std::to_string(s.violations),
               min_low ? to_decimal(*min_low, d) : "-", min_high ? to_decimal(*min_high, d) : "-"});
  return s;
}

Suite verify_fact1(const GlobalOptions& g, const VerifyOptions& o) {
  const unsigned d = g.precision;
  const std::size_t n = default_n(o, 4);
  const std::size_t trials = default_trials(o, 100);
  Suite s{.table = Table({"trials", "n", "passing bp sum", "singular", "max bp sum"})};
  s.parameters = {{"n", n}, {"trials", trials}, {"seed", g.seed}};
  struct Outcome {
    io::Json trial;
    Scalar sum;
    bool passes = false, violated = false;
  };
  auto outcomes = run_trials<Outcome>(
      trials,
      [&](std::size_t i) {
        const std::uint64_t seed = trial_seed(g.seed, i);
        Basis x = random_basis(n, seed, {.kind = RandomKind::near_standard, .radius = Scalar(1, 4)});
        auto norms = dual_norms(coefficient_functionals(x));
        Rng rng(seed ^ 0x27d4eb2fULL);
        std::vector<Vector> ys;
        for (std::size_t j = 0; j < n; ++j) {
          // Distance below 1 / (n ||x_j*||) keeps the weighted sum below 1.
          Vector xj = x.vector(j);
          Scalar bound = 1 / (Scalar(static_cast<long>(n)) * norms[j]);
          ys.push_back(random_perturbation(std::span<const Vector>(&xj, 1), bound, rng).front());
        }
        auto bp = bp_criterion(x, ys);
        Outcome out;
        out.sum = bp.sum;
        out.passes = bp.passes;
        out.trial = {{"index", i}, {"seed", seed}, {"bp_sum", io::exact_value(bp.sum, d)}, {"passes", bp.passes}};
        if (!bp.passes) return out;
        try {
          Basis y = Basis::from_columns(ys);
          out.trial["y_over_x"] = io::exact_value(operator_norm_l1(y.matrix() * x.inverse()), d);
          out.trial["x_over_y"] = io::exact_value(operator_norm_l1(x.matrix() * y.inverse()), d);
        } catch (const SingularMatrix&) {
          out.violated = true;
          out.trial["violation"] = "passing perturbation is singular";
          out.trial["instance"] = instance_json(x);
        }
        return out;
      },
      g.workers);
  std::size_t passing = 0;
  Scalar max_sum = 0;
  for (auto& out : outcomes) {
    if (out.passes) ++passing;
    if (out.violated) ++s.violations;
    if (out.sum > max_sum) max_sum = out.sum;
    s.trials.push_back(std::move(out.trial));
  }
  s.table.add({std::to_string(trials), std::to_string(n), std::to_string(passing), std::to_string(s.violations),
               to_decimal(max_sum, d)});
  return s;
}

io::Json thm2_trial(const Thm2Certificate& c, unsigned d) {
  io::Json t;
  t["K"] = io::exact_value(c.K, d);
  t["K_witness"] = io::signs_json(c.K_witness);
  t["inf_l2_sq"] = io::exact_value(c.inf_l2_sq, d);
  t["k_sq"] = io::exact_value(c.k_sq_scaled, d);
  t["k1_actual"] = io::exact_value(c.k1_actual, d);
  t["k2_actual"] = io::exact_value(c.k2_actual, d);
  t["margin"] = io::exact_value(c.k1_actual * c.k1_actual - c.k_sq_scaled, d);
  t["holds"] = c.holds;
  return t;
}

Suite verify_thm2(const GlobalOptions& g, const VerifyOptions& o) {
  const unsigned d = g.precision;
  Suite s{.table = Table({"instance", "n", "K", "k1^2", "k^2", "status"})};
  auto add_row = [&](const std::string& name, const Basis& b, io::Json trial) {
    auto c = thm2_check(b, enumeration(g, b.dimension()));
    io::Json t = thm2_trial(c, d);
    t.update(trial);
    if (!c.holds) record_violation(s, t, b, "k1^2 * 2K^2 < inf ||x_n||_2^2");
    s.table.add({name, std::to_string(b.dimension()), to_string(c.K), to_decimal(c.k1_actual * c.k1_actual, d),
                 to_decimal(c.k_sq_scaled, d), c.holds ? "ok" : "VIOLATED"});
    s.trials.push_back(t);
  };
  if (!o.input.empty()) {
    Basis b = io::parse_basis_file(read_file(o.input)).to_basis();
    require_cap(g, b.dimension());
    s.parameters = {{"input", o.input}};
    add_row(o.input, b, {{"source", "input"}});
    return s;
  }
  const std::size_t n = default_n(o, 6);
  const std::size_t trials = default_trials(o, 50);
  NRange blocks = default_range(o, {3, 12});
  require_cap(g, std::max(n, blocks.hi));
  s.parameters = {{"n", n}, {"trials", trials}, {"seed", g.seed}, {"prop1_range", {blocks.lo, blocks.hi}}};
  for (std::size_t m = std::max<std::size_t>(3, blocks.lo); m <= blocks.hi; ++m)
    add_row("prop1 normalized", prop1_block(m, true).basis, {{"source", "prop1_normalized"}, {"n", m}});
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = trial_seed(g.seed, i);
    const std::size_t dim = 1 + static_cast<std::size_t>(Rng(seed).below(n));
    add_row("random normalized", random_basis(dim, seed).normalized(), {{"source", "random_normalized"}, {"seed", seed}});
  }
  return s;
}

Suite verify_fact2(const GlobalOptions& g, const VerifyOptions& o) {
  const unsigned d = g.precision;
  Suite s{.table = Table({"bases", "pairs", "violations", "exact fallbacks", "min lhs/rhs^2"})};
  std::vector<Basis> bases;
  const std::size_t trials = default_trials(o, 200);
  constexpr std::size_t kAlphasPerBasis = 20;
  if (!o.input.empty()) {
    bases.push_back(io::parse_basis_file(read_file(o.input)).to_basis());
    s.parameters = {{"input", o.input}, {"pairs", trials}, {"seed", g.seed}};
  } else {
    const std::size_t n = default_n(o, 5);
    s.parameters = {{"n", n}, {"pairs", trials}, {"seed", g.seed}};
    for (std::size_t i = 0; i * kAlphasPerBasis < trials; ++i) {
      const std::uint64_t seed = trial_seed(g.seed, i);
      const std::size_t dim = 1 + static_cast<std::size_t>(Rng(seed).below(n));
      bases.push_back(random_basis(dim, seed));
    }
  }
  std::vector<Scalar> C;
  for (const auto& b : bases) {
    require_cap(g, b.dimension());
    C.push_back(unconditional_constant(b, enumeration(g, b.dimension())).value);
  }
  std::size_t fallbacks = 0;
  double min_ratio = 0;
  bool first = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t bi = bases.size() == 1 ? 0 : t / kAlphasPerBasis;
    const Basis& b = bases[bi];
    Rng rng(trial_seed(g.seed ^ 0xa5a5a5a5ULL, t));
    Vector alphas(b.dimension());
    for (auto& a : alphas) a = rng.grid(8, 4);
    if (l1_norm(alphas) == 0) alphas[0] = 1;
    auto r = fact2_check(b, C[bi], alphas);
    io::Json trial{{"index", t}, {"basis", bi}, {"alphas", io::vector_strings(alphas)}};
    trial["C"] = io::exact_value(C[bi], d);
    trial["lhs_sq_scaled"] = io::exact_value(r.lhs_sq_scaled, d);
    trial["rhs"] = io::interval_value(r.rhs_bounds, d);
    trial["holds"] = r.holds;
    if (r.needed_refinement) {
      ++fallbacks;
      trial["needed_refinement"] = true;
    }
    double ratio = r.rhs_approx == 0 ? 0 : r.lhs_sq_scaled.get_d() / (r.rhs_approx * r.rhs_approx);
    if (r.rhs_approx != 0 && (first || ratio < min_ratio)) {
      min_ratio = ratio;
      first = false;
    }
    if (!r.holds) record_violation(s, trial, b, "2C^2 ||sum a x||_1^2 < (sum |a| ||x||_2)^2");
    s.trials.push_back(trial);
  }
  s.table.add({std::to_string(bases.size()), std::to_string(trials), std::to_string(s.violations),
               std::to_string(fallbacks), std::to_string(min_ratio)});
  return s;
}

}  // namespace

int cmd_verify(const GlobalOptions& g, const VerifyOptions& o) {
  Suite s;
  if (o.statement == "prop1") s = verify_prop1(g, o);
  else if (o.statement == "c2") s = verify_c2(g, o);
  else if (o.statement == "thm1") s = verify_thm1(g, o);
  else if (o.statement == "fact1") s = verify_fact1(g, o);
  else if (o.statement == "thm2") s = verify_thm2(g, o);
  else if (o.statement == "fact2") s = verify_fact2(g, o);
  else throw UsageError("unknown statement '" + o.statement + "'");

  const bool ok = s.violations == 0;
  if (g.json) {
    io::Json report;
    report["command"] = "verify";
    report["statement"] = o.statement;
    report["parameters"] = s.parameters;
    report["trials"] = s.trials;
    report["violations"] = s.violations;
    report["status"] = ok ? "verified" : "violated";
    std::cout << io::render(report);
  } else {
    std::cout << "l1basis " << kVersion << " verify " << o.statement << "\n\n" << s.table.str() << "\n"
              << (ok ? "verified: 0 violations" : "VIOLATED: " + std::to_string(s.violations) + " violation(s)") << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace l1basis::cli
