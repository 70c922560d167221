#include "hardyop/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <set>

#include "hardyop/corona.hpp"
#include "hardyop/error.hpp"
#include "hardyop/model_space.hpp"
#include "hardyop/operators.hpp"

namespace hardyop {

namespace {

constexpr int kPropertyTrials = 8;
constexpr int kPropertyDegree = 20;
constexpr double kPropertyTol = 1e-8;
constexpr double kBoundSlack = 1e-9;

Json verdict(double value, double tolerance, const char* comparison) {
  const bool passed = std::string(comparison) == "<=" ? value <= tolerance : value > tolerance;
  Json v;
  v["value"] = value;
  v["tolerance"] = tolerance;
  v["comparison"] = comparison;
  v["passed"] = passed;
  return v;
}

Json complex_list(const std::vector<cplx>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json real_list(const Eigen::VectorXd& values) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < values.size(); ++i) out.push_back(values(i));
  return out;
}

Json tolerances_json() {
  const CoronaTolerances c;
  const OperatorTolerances o;
  const ModelTolerances m;
  Json t;
  t["common_zero"] = c.common_zero;
  t["bezout_residual"] = c.bezout_residual;
  t["inverse_residual"] = c.inverse_residual;
  t["membership"] = c.membership;
  t["singular"] = c.singular;
  t["expansion"] = o.expansion;
  t["commutation"] = o.commutation;
  t["recovery"] = o.recovery;
  t["rank_threshold"] = o.rank_threshold;
  t["rank_gap"] = o.rank_gap;
  t["basis_construction"] = m.construction;
  t["property"] = kPropertyTol;
  t["bound_slack"] = kBoundSlack;
  return t;
}

// Random analytic polynomial with coefficients uniform in the unit square.
BoundaryFunction random_analytic(std::mt19937_64& rng, const CircleGrid& grid, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return BoundaryFunction::polynomial(grid, c);
}

class ReportBuilder {
 public:
  explicit ReportBuilder(const RunConfig& config)
      : cfg_(config), grid_(config.grid()), params_(config.p), wanted_(config.checks.begin(), config.checks.end()) {}

  ReportResult run() {
    doc_["schema"] = kReportSchema;
    Json cfg;
    cfg["inner"] = to_json(cfg_.inner);
    cfg["symbol"] = to_json(cfg_.symbol);
    cfg["p"] = cfg_.p;
    cfg["grid_m"] = cfg_.grid_m;
    cfg["band_n"] = cfg_.band_n;
    cfg["seed"] = cfg_.seed;
    doc_["config"] = std::move(cfg);
    doc_["verdicts"] = Json::object();
    doc_["errors"] = Json::array();

    guarded("delta", [&] { check_delta(); });
    guarded("bezout", [&] { check_bezout(); });
    guarded("spectrum", [&] { check_spectrum(); });
    guarded("inverse", [&] { check_inverse(); });
    guarded("commutant", [&] { check_commutant(); });
    guarded("adjoint", [&] { check_adjoint(); });
    guarded("duality", [&] { check_duality(); });
    guarded("kernel", [&] { check_kernel(); });
    guarded("properties", [&] { check_properties(); });

    doc_["tolerances"] = tolerances_json();
    return {std::move(doc_), numerical_failure_};
  }

 private:
  template <class F>
  void guarded(const std::string& name, F&& body) {
    if (!wanted_.count(name)) return;
    try {
      body();
    } catch (const NumericalError& e) {
      record_error(name, e.kind(), e.what());
      if (e.kind() == "IllConditioned" || e.kind() == "RankAmbiguity") numerical_failure_ = true;
    } catch (const CommonZeroError& e) {
      record_error(name, "CommonZero", e.what());
    } catch (const PreconditionError& e) {
      record_error(name, "Precondition", e.what());
    }
  }

  void record_error(const std::string& check, const std::string& kind, const std::string& message) {
    Json e;
    e["check"] = check;
    e["kind"] = kind;
    e["message"] = message;
    doc_["errors"].push_back(std::move(e));
  }

  void check_delta() {
    const double delta = corona_delta(cfg_.symbol, cfg_.inner);
    doc_["delta"] = delta;
    doc_["min_at_zeros"] = min_at_zeros(cfg_.symbol, cfg_.inner);
    doc_["verdicts"]["corona_pair"] = verdict(delta, 0.0, ">");
  }

  void check_bezout() {
    try {
      cert_ = solve_bezout(cfg_.symbol, cfg_.inner, grid_);
    } catch (const CommonZeroError& e) {
      Json b;
      b["error"] = "CommonZero";
      b["message"] = e.what();
      doc_["bezout"] = std::move(b);
      return;
    }
    Json b;
    b["u"] = to_json(cert_->u.numerator());
    b["u_den"] = to_json(cert_->u.denominator());
    b["v"] = to_json(cert_->v);
    b["residual"] = cert_->residual;
    b["sup_u"] = cert_->sup_u;
    b["sup_v"] = cert_->sup_v;
    b["consistent"] = cert_->consistent;
    doc_["bezout"] = std::move(b);
    doc_["verdicts"]["bezout_residual"] = verdict(cert_->residual, CoronaTolerances{}.bezout_residual, "<=");
  }

  const InvertibilityCheck& invertibility() {
    if (!inv_) inv_ = coanalytic_invertibility(cfg_.symbol, cfg_.inner, grid_);
    return *inv_;
  }

  void check_spectrum() {
    const auto& inv = invertibility();
    doc_["invertible"] = inv.invertible;
    doc_["sigma_min"] = inv.sigma_min;
    doc_["sigma_max"] = inv.sigma_max;
    doc_["spectrum"] = real_list(inv.singular_values);
    doc_["eigenvalues"] = complex_list(inv.eigenvalues);
    doc_["verdicts"]["invertible"] = verdict(inv.sigma_min, CoronaTolerances{}.singular, ">");
    // sigma_min <= min_k |a(z_k)|, checked with slack
    doc_["verdicts"]["sigma_min_bound"] =
        verdict(inv.sigma_min - min_at_zeros(cfg_.symbol, cfg_.inner), kBoundSlack, "<=");
  }

  void check_inverse() {
    if (!cert_) {
      try {
        cert_ = solve_bezout(cfg_.symbol, cfg_.inner, grid_);
      } catch (const CommonZeroError&) {
        Json i;
        i["applicable"] = false;
        doc_["inverse"] = std::move(i);
        return;
      }
    }
    const auto basis = takenaka_malmquist_basis(cfg_.inner, params_, grid_);
    double residual = 0.0;
    double reverse = 0.0;
    for (const auto& e : basis.functions()) {
      const auto r = apply_corona_inverse(cfg_.inner, *cert_, e, params_);
      residual = std::max(residual, r.residual);
      reverse = std::max(reverse, r.reverse_residual);
    }
    const double inverse_norm = 1.0 / invertibility().sigma_min;
    const double u_norm = inverse_operator_norm(cfg_.inner, *cert_, grid_);
    Json i;
    i["applicable"] = true;
    i["residual"] = residual;
    i["reverse_residual"] = reverse;
    i["inverse_norm"] = inverse_norm;
    i["toeplitz_u_norm"] = u_norm;
    doc_["inverse"] = std::move(i);
    const double tol = CoronaTolerances{}.inverse_residual;
    doc_["verdicts"]["inverse_residual"] = verdict(std::max(residual, reverse), tol, "<=");
    doc_["verdicts"]["inverse_norm_bound"] = verdict(inverse_norm - u_norm, kBoundSlack * u_norm, "<=");
  }

  void check_commutant() {
    const auto basis = takenaka_malmquist_basis(cfg_.inner, params_, grid_);
    const auto cb = commutant_basis(basis);
    doc_["commutant_dim"] = cb.elements.size();
    Json symbols = Json::array();
    double residual = 0.0;
    for (const auto& x : cb.elements) {
      const auto rec = recover_symbol(basis, x.entries());
      symbols.push_back(to_json(rec.symbol));
      residual = std::max(residual, rec.recovery_residual);
    }
    doc_["commutant_symbols"] = std::move(symbols);
    doc_["commutant_rank_gap"] = cb.smallest_kept;
    doc_["verdicts"]["commutant_dimension"] =
        verdict(std::abs(static_cast<double>(cb.elements.size()) - static_cast<double>(basis.dimension())), 0.0, "<=");
    doc_["verdicts"]["symbol_recovery"] = verdict(residual, OperatorTolerances{}.recovery, "<=");
  }

  void check_adjoint() {
    const double d = adjoint_defect(cfg_.inner, cfg_.symbol, params_, grid_);
    doc_["adjoint_defect"] = d;
    doc_["verdicts"]["adjoint_defect"] = verdict(d, kPropertyTol, "<=");
  }

  void check_duality() {
    const auto g = duality_gram(cfg_.inner, params_, grid_);
    doc_["duality_condition"] = g.condition_number;
    doc_["verdicts"]["duality_nonsingular"] = verdict(1.0 / g.condition_number, 1e-12, ">");
  }

  void check_kernel() {
    const auto split = inner_outer_split(cfg_.symbol);
    Json k;
    if (split.first.degree() == 0) {
      k["applicable"] = false;
      doc_["kernel"] = std::move(k);
      return;
    }
    const auto r = coanalytic_kernel_check(cfg_.symbol, grid_);
    k["applicable"] = true;
    k["inner_degree"] = r.inner_degree;
    k["kernel_residual"] = r.kernel_residual;
    k["eigen_residual"] = r.eigen_residual;
    k["min_off_zero_ratio"] = r.min_off_zero_ratio;
    doc_["kernel"] = std::move(k);
    doc_["verdicts"]["kernel_contains_model_space"] = verdict(r.kernel_residual, kPropertyTol, "<=");
  }

  void check_properties() {
    std::mt19937_64 rng(cfg_.seed);
    const BoundaryFunction ib = cfg_.inner.boundary(grid_);
    const auto basis = takenaka_malmquist_basis(cfg_.inner, params_, grid_);
    double idempotence = 0.0;
    double annihilation = 0.0;
    double resum = 0.0;
    double annihilator = 0.0;
    double fixes_basis = 0.0;
    for (int t = 0; t < kPropertyTrials; ++t) {
      const BoundaryFunction f = random_analytic(rng, grid_, kPropertyDegree);
      const BoundaryFunction h = random_analytic(rng, grid_, kPropertyDegree);
      const BoundaryFunction pf = model_projection(cfg_.inner, f);
      const double scale = std::max(1.0, f.l2_norm());
      idempotence = std::max(idempotence, (model_projection(cfg_.inner, pf) - pf).l2_norm() / scale);
      annihilation = std::max(annihilation, model_projection(cfg_.inner, ib * h).l2_norm() / std::max(1.0, h.l2_norm()));
      const auto [g, k] = decompose(cfg_.inner, f);
      resum = std::max(resum, (g + k - f).l2_norm() / scale);
      annihilator = std::max(annihilator, annihilator_defect(cfg_.inner, f, h) / (scale * std::max(1.0, h.l2_norm())));
    }
    for (const auto& e : basis.functions())
      fixes_basis = std::max(fixes_basis, (model_projection(cfg_.inner, e) - e).l2_norm());
    Json p;
    p["trials"] = kPropertyTrials;
    p["input_degree"] = kPropertyDegree;
    p["idempotence"] = idempotence;
    p["annihilates_inner_multiples"] = annihilation;
    p["decompose_resum"] = resum;
    p["annihilator_defect"] = annihilator;
    p["fixes_basis"] = fixes_basis;
    doc_["properties"] = p;
    for (const auto& key : {"idempotence", "annihilates_inner_multiples", "decompose_resum", "annihilator_defect",
                            "fixes_basis"})
      doc_["verdicts"][std::string("property_") + key] = verdict(p[key].get<double>(), kPropertyTol, "<=");
  }

  const RunConfig& cfg_;
  CircleGrid grid_;
  HardyParams params_;
  std::set<std::string> wanted_;
  Json doc_;
  bool numerical_failure_ = false;
  std::optional<CoronaCertificate> cert_;
  std::optional<InvertibilityCheck> inv_;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"delta",   "bezout",  "spectrum", "inverse",   "commutant",
                                              "adjoint", "duality", "kernel",   "properties"};
  return names;
}

RunConfig parse_run_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> fields{"inner", "symbol", "p", "grid_m", "band_n", "checks", "output", "seed"};
  for (const auto& [key, value] : j.items())
    if (!fields.count(key)) throw ConfigError("unknown config field '" + key + "'");
  RunConfig c;
  try {
    // checks first: unknown names are rejected before anything else is interpreted
    if (j.contains("checks")) {
      const std::set<std::string> known(known_checks().begin(), known_checks().end());
      for (const auto& name : j.at("checks")) {
        const auto s = name.get<std::string>();
        if (!known.count(s)) throw ConfigError("unknown check '" + s + "'");
        if (std::find(c.checks.begin(), c.checks.end(), s) == c.checks.end()) c.checks.push_back(s);
      }
    } else {
      c.checks = known_checks();
    }
    c.inner = blaschke_from_json(j.at("inner"));
    c.symbol = polynomial_from_json(j.at("symbol"));
    if (j.contains("p")) c.p = j.at("p").get<double>();
    if (j.contains("grid_m")) c.grid_m = j.at("grid_m").get<std::size_t>();
    if (j.contains("band_n")) c.band_n = j.at("band_n").get<std::size_t>();
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    (void)HardyParams(c.p);
    (void)c.grid();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  if (c.inner.degree() == 0) throw ConfigError("inner function must have at least one zero");
  if (c.symbol.is_zero()) throw ConfigError("symbol must not be identically zero");
  return c;
}

ReportResult build_report(const RunConfig& config) { return ReportBuilder(config).run(); }

std::string render_report(const Json& document) { return document.dump(2) + "\n"; }

SweepResult run_sweep(const RunConfig& config, const Json& family) {
  struct Member {
    double parameter;
    Polynomial symbol;
    cplx probe;
  };
  std::vector<Member> members;
  try {
    const auto kind = family.at("kind").get<std::string>();
    const auto values = family.at("values").get<std::vector<double>>();
    if (values.empty()) throw ConfigError("sweep family has no parameter values");
    if (kind == "symbol_root_path") {
      std::vector<cplx> fixed;
      if (family.contains("fixed_roots"))
        for (const auto& r : family.at("fixed_roots")) fixed.push_back(complex_from_json(r));
      const cplx start = complex_from_json(family.at("moving_root_start"));
      const cplx dir = complex_from_json(family.at("direction"));
      const cplx lead = family.contains("lead") ? complex_from_json(family.at("lead")) : cplx{1.0, 0.0};
      cplx probe;
      if (family.contains("probe")) {
        probe = complex_from_json(family.at("probe"));
      } else {
        const auto zeros = config.inner.ordered_zeros();
        probe = *std::min_element(zeros.begin(), zeros.end(),
                                  [&](cplx x, cplx y) { return std::abs(x - start) < std::abs(y - start); });
      }
      for (const double t : values) {
        auto roots = fixed;
        roots.push_back(start + t * dir);
        members.push_back({t, Polynomial::from_roots(roots, lead), probe});
      }
    } else if (kind == "probe_radius") {
      const double angle = family.at("angle").get<double>();
      for (const double r : values) members.push_back({r, config.symbol, std::polar(r, angle)});
    } else {
      throw ConfigError("unknown sweep family '" + kind + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid sweep family: ") + e.what());
  }

  SweepResult out;
  out.csv = "parameter,delta,sigma_min,invertible,sup_u,sup_v,z_re,z_im,corona_value,f_norm,Taf_norm,p\n";
  const HardyParams params(config.p);
  const CircleGrid grid = config.grid();
  for (const auto& m : members) {
    if (m.symbol.is_zero()) throw ConfigError("sweep produced an identically zero symbol");
    std::string sup_u;
    std::string sup_v;
    try {
      const auto cert = solve_bezout(m.symbol, config.inner, grid);
      sup_u = fmt(cert.sup_u);
      sup_v = fmt(cert.sup_v);
    } catch (const CommonZeroError&) {
    } catch (const NumericalError&) {
      out.numerical_failure = true;
    }
    const double delta = corona_delta(m.symbol, config.inner);
    const ProbeReport probe = probe_near_degeneracy(config.inner, m.symbol, {m.probe}, params, grid);
    const ProbeRow& row = probe.rows.front();
    const bool invertible = probe.sigma_min > CoronaTolerances{}.singular;
    out.csv += fmt(m.parameter) + "," + fmt(delta) + "," + fmt(probe.sigma_min) + "," + (invertible ? "true" : "false") +
               "," + sup_u + "," + sup_v + "," + fmt(row.z.real()) + "," + fmt(row.z.imag()) + "," +
               fmt(row.corona_value) + "," + fmt(row.f_norm) + "," + fmt(row.taf_norm) + "," + fmt(config.p) + "\n";
  }
  return out;
}

}  // namespace hardyop
