#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "handles.hpp"

namespace mwcli {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

Wright make_wright(const RunConfig& cfg) {
  std::vector<double> up;
  std::vector<double> lo;
  for (const auto& [v, w] : cfg.upper) {
    up.push_back(v);
    up.push_back(w);
  }
  for (const auto& [v, w] : cfg.lower) {
    lo.push_back(v);
    lo.push_back(w);
  }
  mw_wright* wp = nullptr;
  check(mw_wright_create(up.data(), cfg.upper.size(), lo.data(), cfg.lower.size(), &wp), "wright");
  return Wright(wp);
}

mw_class_params class_params(const RunConfig& cfg) {
  if (!cfg.alpha || !cfg.eta) throw ConfigError("class.alpha and class.eta are required");
  const mw_class_params cp{*cfg.alpha, *cfg.eta};
  check(mw_class_validate(cp), "class");
  return cp;
}

struct Plan {
  std::vector<double> radii;
  mw_sampling_plan view{};

  Plan(std::vector<double> r, int angles, bool ramp) : radii(std::move(r)) {
    view = {radii.data(), radii.size(), angles, ramp ? 1 : 0};
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
};

double margin_of(const mw_function* f, mw_class_params cp, const mw_wright* wp) {
  double m = 0.0;
  check(mw_membership_margin(f, cp, wp, &m), "membership margin");
  return m;
}

void add_margin_check(Outcome& o, const std::string& subject, const std::string& name, double margin) {
  std::vector<json> row{subject, name, std::isfinite(margin) && margin >= 0.0, number_or_null(margin)};
  row.resize(o.checks.columns.size());
  o.checks.rows.push_back(std::move(row));
}

void add_report_check(Outcome& o, const std::string& subject, const mw_report* rep) {
  std::vector<json> row{subject, mw_report_check_name(rep), mw_report_passed(rep) == 1,
                        number_or_null(mw_report_margin(rep)), mw_report_samples(rep),
                        mw_report_singular_samples(rep)};
  mw_sample s{};
  if (mw_report_worst(rep, &s)) {
    for (json v : {number_or_null(s.radius), json(s.angle_index), number_or_null(s.z.re), number_or_null(s.z.im),
                   number_or_null(s.observed), number_or_null(s.bound)}) {
      row.push_back(v);
    }
  } else {
    row.resize(row.size() + 6);
  }
  double h = 0.0;
  row.push_back(mw_report_hypothesis_margin(rep, &h) ? number_or_null(h) : json(nullptr));
  o.checks.rows.push_back(std::move(row));
}

Table coefficient_table(const std::string& name, const std::vector<double>& a) {
  Table t{name, {"k", "coefficient"}, {}};
  for (std::size_t i = 0; i < a.size(); ++i) t.rows.push_back({static_cast<int>(i + 1), a[i]});
  return t;
}

double radius_value(const RadiusResult& r) { return mw_radius_result_radius(r.get()); }

const char* tail_name(mw_tail_trend t) {
  switch (t) {
    case MW_TAIL_DECREASING: return "decreasing";
    case MW_TAIL_INCREASING: return "increasing";
    case MW_TAIL_MIXED: return "mixed";
  }
  return "mixed";
}

RadiusResult starlike(mw_class_params cp, const mw_wright* wp, const RunConfig& cfg) {
  mw_radius_result* r = nullptr;
  check(mw_starlike_radius(cp, wp, cfg.delta, cfg.k_max, &r), "starlike radius");
  return RadiusResult(r);
}

RadiusResult convex(mw_class_params cp, const mw_wright* wp, const RunConfig& cfg) {
  mw_radius_result* r = nullptr;
  check(mw_convex_radius(cp, wp, cfg.kappa, cfg.k_max, &r), "convex radius");
  return RadiusResult(r);
}

void radius_checks(Outcome& o, const std::string& subject, const mw_function* f, const RunConfig& cfg,
                   double r_star, double r_conv, const Plan& plan) {
  mw_report* rep = nullptr;
  check(mw_verify_radius(f, MW_STARLIKE, cfg.delta, r_star, &plan.view, &rep), "verify starlike radius");
  Report star(rep);
  add_report_check(o, subject, star.get());
  check(mw_verify_radius(f, MW_CONVEX, cfg.kappa, r_conv, &plan.view, &rep), "verify convex radius");
  Report conv(rep);
  add_report_check(o, subject, conv.get());
}

// Random member whose coefficients satisfy the k-weighted coefficient test and
// the weight-growth hypotheses of the envelope theorems, so every theorem
// conclusion applies to it.
std::vector<double> gated_member(mw_class_params cp, const mw_wright* wp, int support, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double budget = 2.0 * cp.eta * (1.0 - cp.alpha);
  double w1 = 0.0;
  check(mw_coefficient_weight(cp, wp, 1, &w1), "coefficient weight");
  std::vector<double> a(static_cast<std::size_t>(support));
  double used = 0.0;
  std::vector<double> weight(a.size());
  for (int k = 1; k <= support; ++k) {
    double wk = 0.0;
    check(mw_coefficient_weight(cp, wp, k, &wk), "coefficient weight");
    weight[k - 1] = k * std::max(wk, w1);
    a[k - 1] = unit(rng);
    used += weight[k - 1] * a[k - 1];
  }
  const double fill = 0.05 + 0.9 * unit(rng);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= fill * budget / used;
  return a;
}

Plan default_plan(const RunConfig& cfg) { return Plan(cfg.plan_radii, cfg.angles, cfg.include_ramp); }

}  // namespace

Outcome cmd_sigma(const RunConfig& cfg, const Arguments& args) {
  Outcome o;
  o.command = "sigma";
  o.arguments = {{"k_from", args.k_from}, {"k_to", args.k_to}};
  auto wp = make_wright(cfg);
  double om = 0.0;
  double log_om = 0.0;
  const mw_status st = mw_omega(wp.get(), &om, &log_om);
  if (st != MW_ERR_RANGE) check(st, "omega");
  o.summary["omega"] = st == MW_OK ? number_or_null(om) : json(nullptr);
  o.summary["log_omega"] = log_om;
  Table t{"sigma", {"k", "sigma", "log_sigma", "overflow"}, {}};
  for (int k = args.k_from; k <= args.k_to; ++k) {
    double v = nan_value;
    double lv = nan_value;
    const mw_status s = mw_sigma_k(wp.get(), k, &v, &lv);
    if (s == MW_ERR_RANGE) {
      t.rows.push_back({k, nullptr, lv, true});
      continue;
    }
    check(s, "sigma_k");
    t.rows.push_back({k, v, lv, false});
  }
  o.tables.push_back(std::move(t));
  o.csv_table = "sigma";
  return o;
}

Outcome cmd_member(const RunConfig& cfg, const Arguments&) {
  Outcome o;
  o.command = "member";
  o.e1 = true;
  const auto cp = class_params(cfg);
  auto wp = make_wright(cfg);
  const std::vector<double> a = cfg.coeffs.value_or(std::vector<double>{});
  auto f = make_function(a);
  const double margin = margin_of(f.get(), cp, wp.get());
  o.summary["budget"] = 2.0 * cp.eta * (1.0 - cp.alpha);
  o.summary["margin"] = margin;
  Table t{"weights", {"k", "coefficient", "weight", "bound", "term"}, {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int k = static_cast<int>(i + 1);
    double w = 0.0;
    double b = 0.0;
    check(mw_coefficient_weight(cp, wp.get(), k, &w), "coefficient weight");
    check(mw_coefficient_bound(cp, wp.get(), k, &b), "coefficient bound");
    t.rows.push_back({k, a[i], w, b, w * a[i]});
  }
  o.tables.push_back(std::move(t));
  add_margin_check(o, "input", "coefficient_membership", margin);
  const Plan plan = default_plan(cfg);
  mw_report* rep = nullptr;
  check(mw_verify_membership(f.get(), cp, wp.get(), &plan.view, &rep), "verify membership");
  Report r(rep);
  add_report_check(o, "input", r.get());
  o.csv_table = "checks";
  return o;
}

Outcome cmd_extremal(const RunConfig& cfg, const Arguments& args) {
  Outcome o;
  o.command = "extremal";
  o.e1 = true;
  o.arguments = {{"k", args.k}};
  const auto cp = class_params(cfg);
  auto wp = make_wright(cfg);
  mw_function* raw = nullptr;
  check(mw_extremal_function(cp, wp.get(), args.k, &raw), "extremal function");
  Function f(raw);
  double bound = 0.0;
  check(mw_coefficient_bound(cp, wp.get(), args.k, &bound), "coefficient bound");
  o.summary["k"] = args.k;
  o.summary["bound"] = bound;
  o.summary["margin"] = margin_of(f.get(), cp, wp.get());
  o.tables.push_back(coefficient_table("coefficients", coefficients(f.get())));
  o.csv_table = "coefficients";
  return o;
}

Outcome cmd_bounds(const RunConfig& cfg, const Arguments& args) {
  Outcome o;
  o.command = "bounds";
  const std::vector<double> radii = args.r.empty() ? cfg.plan_radii : args.r;
  o.arguments = {{"r", radii}};
  const auto cp = class_params(cfg);
  auto wp = make_wright(cfg);
  Table t{"bounds", {"r", "growth_lower", "growth_upper", "distortion_lower", "distortion_upper"}, {}};
  for (double r : radii) {
    double gl = 0.0, gu = 0.0, dl = 0.0, du = 0.0;
    check(mw_growth_bounds(cp, wp.get(), r, &gl, &gu), "growth bounds");
    check(mw_distortion_bounds(cp, wp.get(), r, &dl, &du), "distortion bounds");
    t.rows.push_back({r, gl, gu, dl, du});
  }
  o.tables.push_back(std::move(t));
  o.csv_table = "bounds";
  if (cfg.coeffs) {
    auto f = make_function(*cfg.coeffs);
    const Plan plan(radii, cfg.angles, false);
    mw_report* rep = nullptr;
    check(mw_verify_growth(f.get(), cp, wp.get(), &plan.view, cfg.slack, &rep), "verify growth");
    Report g(rep);
    add_report_check(o, "input", g.get());
    check(mw_verify_distortion(f.get(), cp, wp.get(), &plan.view, cfg.slack, &rep), "verify distortion");
    Report d(rep);
    add_report_check(o, "input", d.get());
  }
  return o;
}

Outcome cmd_radii(const RunConfig& cfg, const Arguments&) {
  Outcome o;
  o.command = "radii";
  o.e3 = true;
  const auto cp = class_params(cfg);
  auto wp = make_wright(cfg);
  auto star = starlike(cp, wp.get(), cfg);
  auto conv = convex(cp, wp.get(), cfg);
  o.summary["starlike_radius"] = radius_value(star);
  o.summary["starlike_attained_k"] = mw_radius_result_attained_k(star.get());
  o.summary["starlike_tail"] = tail_name(mw_radius_result_tail(star.get()));
  o.summary["convex_radius"] = radius_value(conv);
  o.summary["convex_attained_k"] = mw_radius_result_attained_k(conv.get());
  o.summary["convex_tail"] = tail_name(mw_radius_result_tail(conv.get()));
  Table t{"radii", {"k", "starlike_candidate", "convex_candidate", "convex_printed_candidate"}, {}};
  for (std::size_t i = 0; i < mw_radius_result_size(star.get()); ++i) {
    mw_radius_entry s{};
    mw_radius_entry c{};
    check(mw_radius_result_entry(star.get(), i, &s), "starlike entry");
    check(mw_radius_result_entry(conv.get(), i, &c), "convex entry");
    t.rows.push_back({s.k, s.candidate, c.candidate, c.printed_candidate});
  }
  o.tables.push_back(std::move(t));
  o.csv_table = "radii";
  if (cfg.coeffs) {
    auto f = make_function(*cfg.coeffs);
    double ns = 0.0;
    double nc = 0.0;
    check(mw_numeric_radius(f.get(), MW_STARLIKE, cfg.delta, cfg.tol, cfg.angles, &ns), "numeric radius");
    check(mw_numeric_radius(f.get(), MW_CONVEX, cfg.kappa, cfg.tol, cfg.angles, &nc), "numeric radius");
    o.summary["numeric_starlike_radius"] = ns;
    o.summary["numeric_convex_radius"] = nc;
    const Plan plan = default_plan(cfg);
    radius_checks(o, "input", f.get(), cfg, radius_value(star), radius_value(conv), plan);
  }
  return o;
}

Outcome cmd_convolve(const RunConfig& cfg, const Arguments& args) {
  Outcome o;
  o.command = "convolve";
  o.arguments = {{"mode", args.mode}};
  if (args.mode != "hadamard" && args.mode != "quadratic" && args.mode != "bounded") {
    throw ConfigError("mode must be hadamard, quadratic or bounded");
  }
  const auto cp = class_params(cfg);
  auto wp = make_wright(cfg);
  const std::vector<double> a = cfg.coeffs.value_or(std::vector<double>{});
  const std::vector<double> b = cfg.partner.value_or(std::vector<double>{});
  auto f = make_function(a);
  const double margin_f = margin_of(f.get(), cp, wp.get());
  o.summary["margin_f"] = margin_f;
  add_margin_check(o, "f", "coefficient_membership", margin_f);

  mw_function* raw = nullptr;
  if (args.mode == "bounded") {
    double margin = 0.0;
    if (margin_f < 0.0) {
      o.summary["margin_product"] = nullptr;
      add_margin_check(o, "f*g", "margin_monotone", nan_value);
      return o;
    }
    check(mw_bounded_multiplier_convolve(f.get(), b.data(), b.size(), cp, wp.get(), &raw, &margin),
          "bounded multiplier");
    Function h(raw);
    o.summary["margin_product"] = margin;
    add_margin_check(o, "f*g", "margin_monotone", margin - margin_f);
    const auto hc = coefficients(h.get());
    Table t{"product", {"k", "f", "g", "product"}, {}};
    for (std::size_t i = 0; i < hc.size(); ++i) {
      t.rows.push_back({static_cast<int>(i + 1), i < a.size() ? json(a[i]) : json(nullptr),
                        i < b.size() ? json(b[i]) : json(nullptr), hc[i]});
    }
    o.tables.push_back(std::move(t));
    o.csv_table = "product";
    return o;
  }

  o.e2 = true;
  const bool quadratic = args.mode == "quadratic";
  auto g = make_function(b);
  const double margin_g = margin_of(g.get(), cp, wp.get());
  o.summary["margin_g"] = margin_g;
  add_margin_check(o, "g", "coefficient_membership", margin_g);
  if (quadratic) {
    check(mw_quadratic_combination(f.get(), g.get(), &raw), "quadratic combination");
  } else {
    check(mw_hadamard(f.get(), g.get(), &raw), "hadamard");
  }
  Function h(raw);
  const auto hc = coefficients(h.get());

  const auto order_fn = quadratic ? mw_quadratic_mean_order : mw_convolution_order;
  mw_closure_order* ord = nullptr;
  check(order_fn(cp, wp.get(), cfg.k_max, &ord), "closure order");
  ClosureOrder table_order(ord);
  double aggregate = 0.0;
  int first_bad = 0;
  const bool defined = mw_closure_order_aggregate(table_order.get(), &aggregate, &first_bad) == 1;
  o.summary["aggregate_order"] = defined ? json(aggregate) : json(nullptr);
  o.summary["first_bad_k"] = defined ? json(nullptr) : json(first_bad);

  int support = 1;
  for (std::size_t i = 0; i < hc.size(); ++i) {
    if (hc[i] != 0.0) support = static_cast<int>(i + 1);
  }
  check(order_fn(cp, wp.get(), support, &ord), "closure order");
  ClosureOrder support_order(ord);
  double effective = 0.0;
  const bool eff_defined = mw_closure_order_aggregate(support_order.get(), &effective, nullptr) == 1;
  o.summary["support_k"] = support;
  o.summary["effective_order"] = eff_defined ? json(effective) : json(nullptr);

  double closure_margin = nan_value;
  const mw_class_params target{cp.alpha, effective};
  if (margin_f >= 0.0 && margin_g >= 0.0 && eff_defined && mw_class_validate(target) == MW_OK) {
    closure_margin = margin_of(h.get(), target, wp.get());
  }
  o.summary["closure_margin"] = number_or_null(closure_margin);
  std::vector<json> row{"f*g", "closure_membership",
                        std::isfinite(closure_margin) && closure_margin >= -cfg.slack, number_or_null(closure_margin)};
  row.resize(o.checks.columns.size());
  o.checks.rows.push_back(std::move(row));

  Table orders{"orders", {"k", "order", "denominator", "denominator_positive", "out_of_range"}, {}};
  for (std::size_t i = 0; i < mw_closure_order_size(table_order.get()); ++i) {
    mw_closure_entry e{};
    check(mw_closure_order_entry(table_order.get(), i, &e), "closure entry");
    orders.rows.push_back({e.k, number_or_null(e.order), e.denominator, e.denominator_positive == 1,
                           e.out_of_range == 1});
  }
  o.tables.push_back(std::move(orders));
  Table t{"product", {"k", "f", "g", "product"}, {}};
  for (std::size_t i = 0; i < hc.size(); ++i) {
    t.rows.push_back({static_cast<int>(i + 1), i < a.size() ? json(a[i]) : json(nullptr),
                      i < b.size() ? json(b[i]) : json(nullptr), hc[i]});
  }
  o.tables.push_back(std::move(t));
  o.csv_table = "orders";
  return o;
}

Outcome cmd_verify(const RunConfig& cfg, const Arguments& args) {
  Outcome o;
  o.command = "verify";
  o.e1 = true;
  o.e3 = true;
  o.arguments = {{"seed", args.seed}};
  const auto cp = class_params(cfg);
  auto wp = make_wright(cfg);
  const Plan plan = default_plan(cfg);
  auto star = starlike(cp, wp.get(), cfg);
  auto conv = convex(cp, wp.get(), cfg);
  o.summary["starlike_radius"] = radius_value(star);
  o.summary["convex_radius"] = radius_value(conv);

  std::vector<std::pair<std::string, Function>> subjects;
  subjects.emplace_back("reciprocal", make_function({}));
  mw_function* raw = nullptr;
  check(mw_extremal_function(cp, wp.get(), 1, &raw), "extremal function");
  subjects.emplace_back("extremal_k1", Function(raw));
  const auto member = gated_member(cp, wp.get(), std::min(cfg.k_max, 6), args.seed);
  subjects.emplace_back("random_member", make_function(member));
  if (cfg.coeffs) subjects.emplace_back("input", make_function(*cfg.coeffs));

  Table fns{"functions", {"subject", "k", "coefficient"}, {}};
  for (const auto& [name, f] : subjects) {
    const auto c = coefficients(f.get());
    for (std::size_t i = 0; i < c.size(); ++i) fns.rows.push_back({name, static_cast<int>(i + 1), c[i]});

    add_margin_check(o, name, "coefficient_membership", margin_of(f.get(), cp, wp.get()));
    mw_report* rep = nullptr;
    check(mw_verify_membership(f.get(), cp, wp.get(), &plan.view, &rep), "verify membership");
    Report m(rep);
    add_report_check(o, name, m.get());
    check(mw_verify_growth(f.get(), cp, wp.get(), &plan.view, cfg.slack, &rep), "verify growth");
    Report g(rep);
    add_report_check(o, name, g.get());
    check(mw_verify_distortion(f.get(), cp, wp.get(), &plan.view, cfg.slack, &rep), "verify distortion");
    Report d(rep);
    add_report_check(o, name, d.get());
    radius_checks(o, name, f.get(), cfg, radius_value(star), radius_value(conv), plan);
  }
  o.tables.push_back(std::move(fns));
  o.csv_table = "checks";
  return o;
}

Outcome run_command(const std::string& name, const RunConfig& cfg, const Arguments& args) {
  if (name == "sigma") return cmd_sigma(cfg, args);
  if (name == "member") return cmd_member(cfg, args);
  if (name == "extremal") return cmd_extremal(cfg, args);
  if (name == "bounds") return cmd_bounds(cfg, args);
  if (name == "radii") return cmd_radii(cfg, args);
  if (name == "convolve") return cmd_convolve(cfg, args);
  if (name == "verify") return cmd_verify(cfg, args);
  throw ConfigError("unknown command: " + name);
}

}  // namespace mwcli
