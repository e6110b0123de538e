#include "symplectica/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "symplectica/kernels.hpp"
#include "symplectica/rng.hpp"

namespace symplectica {

using nlohmann::ordered_json;

namespace {

constexpr double kRelTol = 1e-9;  // spectrum agreement, relative

double sum_abs_peak(std::span<const double> v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::fabs(x));
  return peak;
}

double max_rel_dev(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max({1.0, std::fabs(a[i]), std::fabs(b[i])});
    worst = std::max(worst, std::fabs(a[i] - b[i]) / scale);
  }
  return worst;
}

ordered_json verdict_json(const MajorizationVerdict& v) {
  ordered_json j;
  j["holds"] = v.holds;
  j["worst_margin"] = v.worst_margin;
  j["first_violation"] = v.first_violation();
  j["sum_gap"] = v.sum_gap;
  j["tol"] = v.tol_used;
  j["k_sums_x"] = v.k_sums_x;
  j["k_sums_y"] = v.k_sums_y;
  return j;
}

std::vector<double> sqrt_all(std::vector<double> v) {
  for (double& x : v) x = std::sqrt(x);
  return v;
}

// lambda((G^{1/2} E G^{1/2})^{1/2}) as sorted square roots of sigma(G^{1/2} E G^{1/2}).
std::vector<double> lambda_of_sandwich_root(const SpdMatrix& e, const SpdMatrix& g) {
  const SquareMatrix g_root = spd_sqrt(g).matrix();
  return sqrt_all(sym_eig(symmetrize(matmul(g_root, matmul(e.matrix(), g_root)))).values);
}

SpdMatrix pinch_spd(const SpdMatrix& s, const Partition& p) {
  // Pinching keeps the diagonal blocks of an SPD matrix: SPD by construction.
  return SpdMatrix::trusted(pinch(s.matrix(), p));
}

}  // namespace

ordered_json CheckReport::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["passed"] = passed;
  if (seed) j["seed"] = *seed;
  j["inputs_digest"] = inputs_digest;
  j["details"] = details;
  return j;
}

const char* ensemble_kind_name(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::GenericSpd: return "generic-spd";
    case EnsembleKind::BlockedSpd: return "blocked-spd";
    case EnsembleKind::DiagonalBlocks: return "diagonal-blocks";
  }
  return "?";
}

std::string digest(std::initializer_list<const SquareMatrix*> ms) {
  std::uint64_t h = 1469598103934665603ULL;
  auto absorb = [&h](std::uint64_t bits) {
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  for (const SquareMatrix* m : ms) {
    absorb(static_cast<std::uint64_t>(m->dim()));
    for (double v : m->entries()) {
      std::uint64_t bits;
      std::memcpy(&bits, &v, sizeof(bits));
      absorb(bits);
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// --- generators -------------------------------------------------------------

namespace {

// Gaussian columns orthogonalized by modified Gram-Schmidt, two passes.
SquareMatrix random_orthogonal(int n, Rng& rng) {
  SquareMatrix q(n);
  for (int j = 0; j < n; ++j) {
    std::vector<double> v(n);
    while (true) {
      for (double& x : v) x = rng.normal();
      for (int pass = 0; pass < 2; ++pass) {
        for (int prev = 0; prev < j; ++prev) {
          double proj = 0.0;
          for (int i = 0; i < n; ++i) proj += q(i, prev) * v[i];
          for (int i = 0; i < n; ++i) v[i] -= proj * q(i, prev);
        }
      }
      const double nv = norm2(v);
      if (nv > 1e-8) {
        for (double& x : v) x /= nv;
        break;
      }
    }
    for (int i = 0; i < n; ++i) q(i, j) = v[i];
  }
  return q;
}

}  // namespace

SpdMatrix gen_spd(int n, std::uint64_t seed, double condition_cap) {
  if (n < 1) throw Error(ErrorKind::BadInput, "n must be >= 1");
  if (condition_cap < 1.0) throw Error(ErrorKind::BadInput, "condition_cap must be >= 1");
  Rng rng(seed);
  std::vector<double> lambda(n);
  for (double& l : lambda) l = rng.log_uniform(1.0, condition_cap);
  const SquareMatrix q = random_orthogonal(n, rng);
  SquareMatrix qd = q;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) qd(i, j) *= lambda[j];
  return SpdMatrix::trusted(matmul(qd, transpose(q)));
}

SymplecticMatrix gen_symplectic(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::BadInput, "n must be >= 1");
  Rng rng(seed);

  auto orthogonal_layer = [&]() {
    const SquareMatrix o = random_orthogonal(n, rng);
    return direct_sum(o, o);
  };
  auto scaling_layer = [&]() {
    SquareMatrix s(2 * n);
    for (int i = 0; i < n; ++i) {
      const double c = rng.log_uniform(0.5, 2.0);
      s(i, i) = c;
      s(n + i, n + i) = 1.0 / c;
    }
    return s;
  };
  auto shear_layer = [&]() {
    SquareMatrix sym(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) sym(i, j) = sym(j, i) = 0.4 * rng.normal();
    SquareMatrix s = SquareMatrix::identity(2 * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s(i, n + j) = sym(i, j);
    return s;
  };

  SquareMatrix m = orthogonal_layer();
  m = matmul(m, scaling_layer());
  m = matmul(m, shear_layer());
  m = matmul(m, orthogonal_layer());
  return SymplecticMatrix::validate(m);
}

BlockedSpd gen_blocked_spd(int n, std::uint64_t seed, double condition_cap) {
  return BlockedSpd(gen_spd(2 * n, seed, condition_cap));
}

BlockedSpd DiagonalBlocks::assemble() const {
  const int n = static_cast<int>(eta.size());
  SquareMatrix a(2 * n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = eta[i];
    a(n + i, n + i) = gamma[i];
    a(i, n + i) = a(n + i, i) = beta[i];
  }
  return BlockedSpd(SpdMatrix::validate(a));
}

DiagonalBlocks gen_diagonal_blocks(int n, std::uint64_t seed, double condition_cap) {
  Rng rng(seed);
  DiagonalBlocks db;
  db.eta.resize(n);
  db.gamma.resize(n);
  db.beta.resize(n);
  for (int i = 0; i < n; ++i) {
    db.eta[i] = rng.log_uniform(1.0, condition_cap);
    db.gamma[i] = rng.log_uniform(1.0, condition_cap);
    // |beta| < 0.9 sqrt(eta gamma) keeps every 2x2 minor positive definite.
    db.beta[i] = rng.uniform(-0.9, 0.9) * std::sqrt(db.eta[i] * db.gamma[i]);
  }
  return db;
}

// --- relation checks --------------------------------------------------------

CheckReport check_lemma1(const SpdMatrix& e, const SpdMatrix& g) {
  const std::vector<double> d_eg = symplectic_eigenvalues(direct_sum(e, g));
  const std::vector<double> lam_root = lambda_of_sandwich_root(e, g);

  // Third route: eigenvalues of the actual square-root matrix.
  const SquareMatrix g_root = spd_sqrt(g).matrix();
  const SpdMatrix sandwich =
      SpdMatrix::trusted(matmul(g_root, matmul(e.matrix(), g_root)));
  const std::vector<double> lam_of_root = sym_eig(spd_sqrt(sandwich).matrix()).values;

  const double dev_root = max_rel_dev(d_eg, lam_root);
  const double dev_matrix = max_rel_dev(d_eg, lam_of_root);

  CheckReport r;
  r.name = "lemma1";
  r.passed = dev_root <= kRelTol && dev_matrix <= kRelTol;
  r.inputs_digest = digest({&e.matrix(), &g.matrix()});
  r.details["d_block_sum"] = d_eg;
  r.details["lambda_sandwich_sqrt"] = lam_root;
  r.details["lambda_root_matrix"] = lam_of_root;
  r.details["max_rel_dev_sqrt_route"] = dev_root;
  r.details["max_rel_dev_matrix_route"] = dev_matrix;
  return r;
}

CheckReport check_main_theorem(const BlockedSpd& ab) {
  const std::vector<double> d_eg = symplectic_eigenvalues(direct_sum(ab.e(), ab.g()));
  const std::vector<double> d_a = symplectic_eigenvalues(ab.a());
  const MajorizationVerdict v =
      weak_supermajorize(d_eg, d_a, default_majorization_tol(d_a));

  CheckReport r;
  r.name = "main-theorem";
  r.passed = v.holds;
  r.inputs_digest = digest({&ab.a().matrix()});
  r.details["d_blocks"] = d_eg;
  r.details["d_a"] = d_a;
  r.details["verdict"] = verdict_json(v);
  return r;
}

CheckReport check_corollary_gavg(const BlockedSpd& ab) {
  const std::vector<double> d_a = symplectic_eigenvalues(ab.a());
  const std::vector<double> lam_root = lambda_of_sandwich_root(ab.e(), ab.g());
  const std::vector<double> lam_avg =
      sym_eig(0.5 * (ab.e().matrix() + ab.g().matrix())).values;

  const MajorizationVerdict v_root =
      weak_supermajorize(lam_root, d_a, default_majorization_tol(d_a));
  const MajorizationVerdict v_avg =
      weak_supermajorize(lam_avg, d_a, default_majorization_tol(d_a));

  double elementwise_slack = 0.0;  // max over i of lam_root_i - lam_avg_i (<= 0 expected)
  for (size_t i = 0; i < lam_root.size(); ++i)
    elementwise_slack = std::max(elementwise_slack, lam_root[i] - lam_avg[i]);
  const bool elementwise_ok =
      elementwise_slack <= kRelTol * std::max(1.0, sum_abs_peak(lam_avg));

  CheckReport r;
  r.name = "corollary-gavg";
  r.passed = v_root.holds && elementwise_ok && v_avg.holds;
  r.inputs_digest = digest({&ab.a().matrix()});
  r.details["lambda_sandwich_sqrt"] = lam_root;
  r.details["lambda_average"] = lam_avg;
  r.details["d_a"] = d_a;
  r.details["root_vs_da"] = verdict_json(v_root);
  r.details["elementwise_slack"] = elementwise_slack;
  r.details["avg_vs_da"] = verdict_json(v_avg);
  return r;
}

CheckReport check_hiroshima_instance(const SpdMatrix& e, const SpdMatrix& g) {
  const SquareMatrix sum = e.matrix() + g.matrix();
  const std::vector<double> lam_sum = sym_eig(sum).values;

  const SpdMatrix doubled = SpdMatrix::trusted(direct_sum(sum, sum));
  const std::vector<double> d_doubled = symplectic_eigenvalues(doubled);
  const double dev = max_rel_dev(lam_sum, d_doubled);

  std::vector<double> twice_d_eg = symplectic_eigenvalues(direct_sum(e, g));
  for (double& x : twice_d_eg) x *= 2.0;
  const MajorizationVerdict v =
      weak_supermajorize(lam_sum, twice_d_eg, default_majorization_tol(twice_d_eg));

  CheckReport r;
  r.name = "hiroshima";
  r.passed = dev <= kRelTol && v.holds;
  r.inputs_digest = digest({&e.matrix(), &g.matrix()});
  r.details["lambda_sum"] = lam_sum;
  r.details["d_doubled_sum"] = d_doubled;
  r.details["max_rel_dev"] = dev;
  r.details["twice_d_blocks"] = twice_d_eg;
  r.details["verdict"] = verdict_json(v);
  return r;
}

CheckReport check_schur_analog(const BlockedSpd& ab) {
  const std::vector<double> ds = delta_s(ab);
  const std::vector<double> d_eg = symplectic_eigenvalues(direct_sum(ab.e(), ab.g()));
  const std::vector<double> d_a = symplectic_eigenvalues(ab.a());
  const MajorizationVerdict v_blocks =
      weak_supermajorize(ds, d_eg, default_majorization_tol(d_eg));
  const MajorizationVerdict v_full = weak_supermajorize(ds, d_a, default_majorization_tol(d_a));

  CheckReport r;
  r.name = "schur-analog";
  r.passed = v_blocks.holds && v_full.holds;
  r.inputs_digest = digest({&ab.a().matrix()});
  r.details["delta_s"] = ds;
  r.details["d_blocks"] = d_eg;
  r.details["d_a"] = d_a;
  r.details["deltas_vs_blocks"] = verdict_json(v_blocks);
  r.details["deltas_vs_da"] = verdict_json(v_full);
  return r;
}

CheckReport check_corollary_pinch(const BlockedSpd& ab, const Partition& p) {
  const SpdMatrix ce = pinch_spd(ab.e(), p);
  const SpdMatrix cg = pinch_spd(ab.g(), p);

  const std::vector<double> lam_pinched = lambda_of_sandwich_root(ce, cg);
  const std::vector<double> lam_full = lambda_of_sandwich_root(ab.e(), ab.g());
  const MajorizationVerdict v_sandwich =
      weak_supermajorize(lam_pinched, lam_full, default_majorization_tol(lam_full));

  const std::vector<double> lam_ce_sqrt = sqrt_all(sym_eig(ce.matrix()).values);
  const std::vector<double> lam_e_sqrt = sqrt_all(sym_eig(ab.e().matrix()).values);
  const MajorizationVerdict v_identity =
      weak_supermajorize(lam_ce_sqrt, lam_e_sqrt, default_majorization_tol(lam_e_sqrt));

  const std::vector<double> d_pinched_blocks = symplectic_eigenvalues(direct_sum(ce, cg));
  const std::vector<double> d_a = symplectic_eigenvalues(ab.a());
  const MajorizationVerdict v_against_a =
      weak_supermajorize(d_pinched_blocks, d_a, default_majorization_tol(d_a));

  CheckReport r;
  r.name = "corollary-pinch";
  r.passed = v_sandwich.holds && v_identity.holds && v_against_a.holds;
  r.inputs_digest = digest({&ab.a().matrix()});
  r.details["partition"] = p.to_string();
  r.details["pinched_vs_full"] = verdict_json(v_sandwich);
  r.details["identity_specialization"] = verdict_json(v_identity);
  r.details["pinched_blocks_vs_da"] = verdict_json(v_against_a);
  return r;
}

CheckReport check_classical_pinching(const SquareMatrix& h, const Partition& p) {
  const std::vector<double> lam_pinched = sym_eig(pinch(h, p)).values;
  const std::vector<double> lam_h = sym_eig(h).values;

  const MajorizationVerdict v =
      majorize(lam_pinched, lam_h, default_majorization_tol(lam_h));
  const double sum_y = v.k_sums_y.back();
  const bool sum_tight = v.sum_gap <= 1e-12 * std::max(1.0, std::fabs(sum_y));
  // Pinching copies the diagonal, so the trace matches bit for bit.
  const double trace_gap = std::fabs(trace(pinch(h, p)) - trace(h));

  CheckReport r;
  r.name = "classical-pinching";
  r.passed = v.holds && sum_tight && trace_gap == 0.0;
  r.inputs_digest = digest({&h});
  r.details["partition"] = p.to_string();
  r.details["lambda_pinched"] = lam_pinched;
  r.details["lambda_h"] = lam_h;
  r.details["verdict"] = verdict_json(v);
  r.details["eig_sum_gap"] = v.sum_gap;
  r.details["trace_gap"] = trace_gap;
  return r;
}

CheckReport check_spinching_supermajorization(const BlockedSpd& ab, const Partition& p) {
  const std::vector<double> d_pinched = symplectic_eigenvalues(s_pinch(ab, p));
  const std::vector<double> d_a = symplectic_eigenvalues(ab.a());
  const MajorizationVerdict v =
      weak_supermajorize(d_pinched, d_a, default_majorization_tol(d_a));

  CheckReport r;
  r.name = "s-pinching";
  r.passed = v.holds;
  r.inputs_digest = digest({&ab.a().matrix()});
  r.details["partition"] = p.to_string();
  r.details["d_s_pinched"] = d_pinched;
  r.details["d_a"] = d_a;
  r.details["verdict"] = verdict_json(v);
  return r;
}

CheckReport check_williamson_contract(const SpdMatrix& a) {
  const WilliamsonForm wf = williamson(a);
  const WilliamsonResiduals res = williamson_residuals(a, wf);
  const double budget = 1e-9 * std::max(1.0, max_abs(a.matrix()));
  bool ascending_positive = wf.d.front() > 0.0;
  for (size_t i = 1; i < wf.d.size(); ++i)
    ascending_positive = ascending_positive && wf.d[i] >= wf.d[i - 1];

  CheckReport r;
  r.name = "williamson";
  r.passed = res.form <= budget && res.symplectic <= budget && ascending_positive;
  r.inputs_digest = digest({&a.matrix()});
  r.details["d"] = wf.d;
  r.details["form_residual"] = res.form;
  r.details["symplectic_residual"] = res.symplectic;
  r.details["budget"] = budget;
  return r;
}

CheckReport reproduce_example() {
  const SquareMatrix e{{7.0, 6.0}, {6.0, 7.0}};
  const SpdMatrix a = SpdMatrix::validate(direct_sum(e, e));
  const std::vector<double> d_a = symplectic_eigenvalues(a);

  const SpdMatrix pinched = SpdMatrix::validate(pinch(a.matrix(), Partition({1, 3})));
  const std::vector<double> d_pinched = symplectic_eigenvalues(pinched);

  const std::vector<double> expected_a{1.0, 13.0};
  const std::vector<double> expected_pinched{std::sqrt(7.0), std::sqrt(91.0)};
  double dev_a = 0.0, dev_pinched = 0.0;
  for (int i = 0; i < 2; ++i) {
    dev_a = std::max(dev_a, std::fabs(d_a[i] - expected_a[i]));
    dev_pinched = std::max(dev_pinched, std::fabs(d_pinched[i] - expected_pinched[i]));
  }

  const MajorizationVerdict v =
      weak_supermajorize(d_pinched, d_a, default_majorization_tol(d_a));

  CheckReport r;
  r.name = "example-counterexample";
  r.passed = dev_a <= 1e-10 && dev_pinched <= 1e-10 && !v.holds && v.first_violation() == 2;
  r.inputs_digest = digest({&a.matrix()});
  r.details["d_a"] = d_a;
  r.details["expected_d_a"] = expected_a;
  r.details["d_pinched"] = d_pinched;
  r.details["expected_d_pinched"] = expected_pinched;
  r.details["dev_a"] = dev_a;
  r.details["dev_pinched"] = dev_pinched;
  r.details["supermajorization"] = verdict_json(v);
  r.details["expected_failure_at_k"] = 2;
  return r;
}

// --- ensemble runner ---------------------------------------------------------

std::vector<std::string> known_checks() {
  return {"lemma1",          "main-theorem",       "corollary-gavg",
          "hiroshima",       "schur-analog",       "corollary-pinch",
          "classical-pinching", "s-pinching",      "williamson"};
}

bool is_known_check(const std::string& name) {
  const auto names = known_checks();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Partition> standard_partitions(int n) {
  std::vector<std::vector<int>> raw;
  raw.push_back({n});
  if (n >= 2) {
    raw.push_back({1, n - 1});
    raw.push_back({(n + 1) / 2, n / 2});
    raw.push_back(std::vector<int>(n, 1));
  }
  std::vector<Partition> out;
  for (auto& sizes : raw) {
    bool seen = false;
    for (const auto& p : out) seen = seen || p.sizes() == sizes;
    if (!seen) out.emplace_back(std::move(sizes));
  }
  return out;
}

namespace {

using PartitionedCheck = CheckReport (*)(const BlockedSpd&, const Partition&);

CheckReport aggregate_partitions(const BlockedSpd& ab, PartitionedCheck check,
                                 const std::string& name) {
  CheckReport merged;
  merged.name = name;
  merged.passed = true;
  merged.inputs_digest = digest({&ab.a().matrix()});
  auto parts = ordered_json::array();
  for (const Partition& p : standard_partitions(ab.block_dim())) {
    CheckReport r = check(ab, p);
    merged.passed = merged.passed && r.passed;
    parts.push_back(r.details);
  }
  merged.details["partitions"] = std::move(parts);
  return merged;
}

CheckReport classical_on_blocked(const BlockedSpd& ab, const Partition& p) {
  return check_classical_pinching(ab.a().matrix(), p.doubled());
}

}  // namespace

CheckReport run_named_check(const std::string& name, const BlockedSpd& ab,
                            const std::optional<Partition>& p) {
  if (name == "lemma1") return check_lemma1(ab.e(), ab.g());
  if (name == "main-theorem") return check_main_theorem(ab);
  if (name == "corollary-gavg") return check_corollary_gavg(ab);
  if (name == "hiroshima") return check_hiroshima_instance(ab.e(), ab.g());
  if (name == "schur-analog") return check_schur_analog(ab);
  if (name == "williamson") return check_williamson_contract(ab.a());
  if (name == "corollary-pinch") {
    if (p) return check_corollary_pinch(ab, *p);
    return aggregate_partitions(ab, &check_corollary_pinch, "corollary-pinch");
  }
  if (name == "s-pinching") {
    if (p) return check_spinching_supermajorization(ab, *p);
    return aggregate_partitions(ab, &check_spinching_supermajorization, "s-pinching");
  }
  if (name == "classical-pinching") {
    if (p) {
      // Accept a partition of either the full or the block dimension.
      if (p->total() == ab.a().dim()) return check_classical_pinching(ab.a().matrix(), *p);
      if (p->total() == ab.block_dim())
        return check_classical_pinching(ab.a().matrix(), p->doubled());
      throw Error(ErrorKind::PartitionMismatch,
                  "partition sums to " + std::to_string(p->total()));
    }
    return aggregate_partitions(ab, &classical_on_blocked, "classical-pinching");
  }
  throw Error(ErrorKind::UnknownCheckName, name);
}

std::vector<CheckReport> run_ensemble(const EnsembleSpec& spec,
                                      const std::vector<std::string>& checks) {
  if (spec.trials < 1) throw Error(ErrorKind::BadInput, "trials must be >= 1");
  for (const auto& name : checks)
    if (!is_known_check(name)) throw Error(ErrorKind::UnknownCheckName, name);

  std::vector<std::vector<CheckReport>> per_trial(spec.trials);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < spec.trials; ++t) {
    const std::uint64_t trial_seed = Rng::derive_seed(spec.seed, static_cast<std::uint64_t>(t));
    std::vector<CheckReport>& slot = per_trial[t];
    try {
      const BlockedSpd ab =
          spec.kind == EnsembleKind::DiagonalBlocks
              ? gen_diagonal_blocks(spec.n, trial_seed, spec.condition_cap).assemble()
              : gen_blocked_spd(spec.n, trial_seed, spec.condition_cap);
      for (const auto& name : checks) {
        CheckReport r = run_named_check(name, ab, std::nullopt);
        r.seed = trial_seed;
        r.details["trial"] = t;
        if (!r.passed)
          r.details["replay_a"] = ordered_json::parse(
              serialize_matrix(ab.a().matrix(), MatrixFormat::Json));
        slot.push_back(std::move(r));
      }
    } catch (const Error& err) {
      CheckReport r;
      r.name = "trial-error";
      r.passed = false;
      r.seed = trial_seed;
      r.inputs_digest = "";
      r.details["trial"] = t;
      r.details["error"] = err.what();
      slot.push_back(std::move(r));
    }
  }

  std::vector<CheckReport> out;
  out.reserve(static_cast<size_t>(spec.trials) * checks.size());
  for (auto& slot : per_trial)
    for (auto& r : slot) out.push_back(std::move(r));
  return out;
}

}  // namespace symplectica
