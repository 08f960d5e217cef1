// sievelab: one entry point for every experiment, with deterministic seeds
// and machine-readable reports. Exit codes: 0 success, 1 compute-gate
// rejection (gate named in the report), 2 validation failure.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "sievelab/classical.hpp"
#include "sievelab/elliptic.hpp"
#include "sievelab/finite_groups.hpp"
#include "sievelab/frobenius.hpp"
#include "sievelab/group_walk.hpp"
#include "sievelab/numutil.hpp"
#include "sievelab/parallel.hpp"
#include "sievelab/rep_degrees.hpp"
#include "sievelab/serialization.hpp"
#include "sievelab/sieve_core.hpp"
#include "sievelab/small_sieve.hpp"
#include "sievelab/walk_z.hpp"
#include "sievelab/zpoly.hpp"

using nlohmann::json;
using namespace sievelab;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
  std::string path;      // empty = stdout
  std::string format;    // json | csv
  bool timings = false;
  bool dry_run = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit_json(const std::string& subcommand, const json& params, const json& results) {
    json report = {{"tool", "sievelab"},
                   {"version", kVersion},
                   {"subcommand", subcommand},
                   {"params", params},
                   {"results", results}};
    if (timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      report["wall_clock_ms"] = ms;
    }
    write(report.dump(2) + "\n");
  }

  void emit_csv(const std::string& header, const std::vector<std::string>& rows) {
    std::string text = header + "\n";
    for (const auto& r : rows) text += r + "\n";
    write(text);
  }

  void write(const std::string& text) {
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot open output path: " + path);
      out << text;
    }
  }

  // dry-run: echo the resolved plan without computing
  bool handle_dry_run(const std::string& subcommand, const json& params) {
    if (!dry_run) return false;
    json report = {{"tool", "sievelab"},
                   {"version", kVersion},
                   {"subcommand", subcommand},
                   {"dry_run", true},
                   {"params", params}};
    write(report.dump(2) + "\n");
    return true;
  }
};

void add_common(CLI::App* cmd, Output& out) {
  cmd->add_option("--output", out.path, "write the report to this path (default: stdout)");
  cmd->add_option("--format", out.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  cmd->add_flag("--timings", out.timings, "include wall-clock in the report (breaks byte-identity)");
  cmd->add_flag("--dry-run", out.dry_run, "validate and print the resolved plan, compute nothing");
}

json gram_summary(const GramDelta& g) {
  return {{"dimension", (long)g.index.size()},
          {"top_eigenvalue", g.top_eigenvalue},
          {"min_eigenvalue", g.min_eigenvalue},
          {"row_sum_bound", row_sum_delta_bound(g)}};
}

// ---- classical -----------------------------------------------------------

struct ClassicalArgs {
  long long N = 10;
  long long M = 0;
  int r = 1;
  long L = 3;
  bool zywina = false;
  bool sweep = false;
};

json classical_point(long long M, long long N, int r, long L, bool zywina) {
  IntervalSpec spec{M, N, r};
  std::vector<long> primes = primes_up_to(L);
  auto inst = interval_sample(spec, primes);
  set_zero_sieving_sets(inst.system);
  auto support = classical_support(inst.system, primes, L, zywina);
  GramDelta g = gram_delta(inst.sample, inst.system, support, inst.basis);
  Rat h = compute_H(inst.system, support);
  Rat sifted = sifted_measure(inst.sample, inst.system);
  double bound = analytic_delta_bound(spec, L);
  return {{"N", N},
          {"L", L},
          {"delta_exact", g.top_eigenvalue},
          {"delta_bound", bound},
          {"H", rat_to_string(h)},
          {"sifted", rat_to_string(sifted)},
          {"bound", g.top_eigenvalue / h.get_d()},
          {"gram", gram_summary(g)}};
}

int run_classical(const ClassicalArgs& a, Output& out) {
  json params = {{"N", a.N}, {"M", a.M}, {"r", a.r}, {"L", a.L},
                 {"zywina", a.zywina}, {"sweep", a.sweep}};
  if (out.handle_dry_run("classical", params)) return 0;
  std::vector<json> rows;
  if (a.sweep) {
    for (long long n = 2; n <= a.N; ++n)
      for (long l = 1; l <= a.L; ++l) rows.push_back(classical_point(a.M, n, a.r, l, a.zywina));
  } else {
    rows.push_back(classical_point(a.M, a.N, a.r, a.L, a.zywina));
  }
  if (out.format == "csv") {
    std::vector<std::string> lines;
    for (const auto& r : rows) {
      std::ostringstream os;
      os << r["N"].get<long long>() << "," << r["L"].get<long>() << ","
         << r["delta_exact"].get<double>() << "," << r["delta_bound"].get<double>() << ","
         << r["H"].get<std::string>() << "," << r["sifted"].get<std::string>() << ","
         << r["bound"].get<double>();
      lines.push_back(os.str());
    }
    out.emit_csv("N,L,delta_exact,delta_bound,H,sifted,bound", lines);
  } else {
    out.emit_json("classical", params, a.sweep ? json{{"rows", rows}} : rows.front());
  }
  return 0;
}

// ---- walkz ---------------------------------------------------------------

struct WalkzArgs {
  long n = 4;
  long q = 3;
  long a = 2;
  long L = 0;  // 0: auto q*max(1, floor(n^(1/4)))
  bool lazy = false;
};

int run_walkz(const WalkzArgs& w, Output& out) {
  long L = w.L > 0 ? w.L : w.q * std::max(1L, (long)std::floor(std::pow((double)w.n, 0.25)));
  json params = {{"n", w.n}, {"q", w.q}, {"a", w.a}, {"L", L}, {"lazy", w.lazy}};
  if (out.handle_dry_run("walkz", params)) return 0;
  Rat p = prime_ap_probability(w.n, w.q, w.a);
  auto b = walk_corollary_bound(w.n, w.q, L);
  Rat bound = Rat(b.delta_bound) / b.h;
  double ratio = bound == 0 ? 0.0 : p.get_d() / bound.get_d();
  json results = {{"probability", rat_to_string(p)},
                  {"sieve_bound", bound.get_d()},
                  {"delta_bound", b.delta_bound},
                  {"H", rat_to_string(b.h)},
                  {"ratio", ratio}};
  if (w.lazy) {
    auto d = exact_distribution_lazy(w.n);
    Rat lazy_total = 0;
    for (long k = 2; k <= w.n; ++k)
      if (is_prime_u64((uint64_t)k) && ((k - w.a) % w.q + w.q) % w.q == 0) lazy_total += d.at(k);
    results["lazy_probability"] = rat_to_string(lazy_total);
  }
  if (out.format == "csv") {
    std::ostringstream os;
    os << w.n << "," << w.q << "," << w.a << "," << rat_to_string(p) << ","
       << bound.get_d() << "," << ratio;
    out.emit_csv("n,q,a,probability,sieve_bound,ratio", {os.str()});
  } else {
    out.emit_json("walkz", params, results);
  }
  return 0;
}

// ---- groupwalk / cayley ---------------------------------------------------

struct GroupwalkArgs {
  int n = 3;
  long steps = 60;
  long trials = 1000;
  uint64_t seed = 0;
  std::vector<long> checkpoints = {10, 30, 60};
  bool coupon = false;
};

int run_groupwalk(const GroupwalkArgs& a, Output& out) {
  json params = {{"n", a.n}, {"steps", a.steps}, {"trials", a.trials},
                 {"seed", a.seed}, {"checkpoints", a.checkpoints}, {"coupon", a.coupon}};
  if (out.handle_dry_run("groupwalk", params)) return 0;
  json results;
  if (a.coupon) {
    auto s = coupon_and_transition_times(a.n, a.trials, a.seed);
    results = {{"t_mean", s.t_mean},
               {"t_stderr", s.t_stderr},
               {"t_exact", rat_to_string(s.t_exact)},
               {"tau_mean", s.tau_mean},
               {"tau_stderr", s.tau_stderr},
               {"ratio", s.ratio},
               {"censored", s.max_steps_hit}};
  } else {
    WalkConfig cfg{a.n, a.steps, a.trials, a.seed};
    auto rows = run_reducibility_experiment(cfg, a.checkpoints);
    json table = json::array();
    for (const auto& r : rows)
      table.push_back({{"k", r.k},
                       {"reducible", r.reducible},
                       {"trials", r.trials},
                       {"frequency", r.frequency},
                       {"wilson_lo", r.wilson_lo},
                       {"wilson_hi", r.wilson_hi}});
    results = {{"rows", table}, {"generators", cfg.generator_count()}};
  }
  out.emit_json("groupwalk", params, results);
  return 0;
}

struct CayleyArgs {
  int n = 2;
  long prime = 3;
};

int run_cayley(const CayleyArgs& a, Output& out) {
  json params = {{"n", a.n}, {"prime", a.prime}};
  if (out.handle_dry_run("cayley", params)) return 0;
  auto s = cayley_spectrum(a.n, a.prime);
  json results = {{"group_size", s.group_size},
                  {"generators", s.generator_count},
                  {"rho", s.rho},
                  {"alpha", s.alpha},
                  {"trivial_simple", s.trivial_simple},
                  {"has_minus_one", s.has_minus_one},
                  {"eigenvalues", s.eigenvalues}};
  out.emit_json("cayley", params, results);
  return 0;
}

// ---- appendixB ------------------------------------------------------------

struct AppendixBArgs {
  std::string family = "SL";
  int n = 2;
  long ell = 3;
  int part = 1;
  long q = 0;
  int entry_i = 1, entry_j = 1;  // 1-based in the interface
};

int run_appendixB(const AppendixBArgs& a, Output& out) {
  json params = {{"family", a.family}, {"n", a.n}, {"ell", a.ell}, {"part", a.part},
                 {"q", a.q}, {"i", a.entry_i}, {"j", a.entry_j}};
  if (out.handle_dry_run("appendixB", params)) return 0;
  MatrixGroupSpec spec;
  if (a.family == "SL") spec.family = GroupFamily::SL;
  else if (a.family == "Sp") spec.family = GroupFamily::Sp;
  else if (a.family == "CSp") spec.family = GroupFamily::CSp;
  else throw std::invalid_argument("appendixB: family must be SL, Sp or CSp");
  spec.degree = a.n;
  spec.ell = a.ell;
  auto r = local_density(spec, a.part, a.q, a.entry_i - 1, a.entry_j - 1);
  Rat density = Rat(r.count) / Rat(r.divisor);

  // paper bound per part: (3)/(4) lower, (5)/(6) upper, (1)/(2) qualitative
  json bound = nullptr;
  bool satisfied = true;
  int g = spec.genus();
  if (a.part == 3 || a.part == 4) {
    Rat lower = 1;
    for (int i = 0; i < g; ++i) lower *= Rat(a.ell, a.ell + 1);
    lower /= 2;
    bound = rat_to_string(lower);
    satisfied = density >= lower;
  } else if (a.part == 5 || a.part == 6) {
    Rat upper = 1;
    Int num = 1, den = 1;
    for (int i = 0; i < g - 1; ++i) num *= a.ell;
    for (int i = 0; i < g; ++i) den *= (a.ell - 1);
    Rat alt = Rat(num) / Rat(den);
    if (alt < upper) upper = alt;
    bound = rat_to_string(upper);
    satisfied = density <= upper;
  }
  json results = {{"order", r.order.get_str()},
                  {"count", r.count.get_str()},
                  {"density_num", density.get_num().get_str()},
                  {"density_den", density.get_den().get_str()},
                  {"paper_bound", bound},
                  {"satisfied", satisfied}};
  out.emit_json("appendixB", params, results);
  return 0;
}

// ---- repdegrees -----------------------------------------------------------

struct RepdegreesArgs {
  long q = 3;
  std::string family = "both";
};

int run_repdegrees(const RepdegreesArgs& a, Output& out) {
  json params = {{"q", a.q}, {"family", a.family}};
  if (out.handle_dry_run("repdegrees", params)) return 0;
  std::vector<std::pair<std::string, DegreeFamily>> families;
  if (a.family == "GL2" || a.family == "both") families.push_back({"GL2", DegreeFamily::GL2});
  if (a.family == "SL2" || a.family == "both") families.push_back({"SL2", DegreeFamily::SL2});
  if (families.empty()) throw std::invalid_argument("repdegrees: family must be GL2, SL2 or both");

  json rows = json::array();
  std::vector<std::string> csv;
  for (auto& [name, fam] : families) {
    auto ms = degree_multiset(fam, a.q);
    Int gow = (fam == DegreeFamily::GL2) ? gow_symmetric_count(a.q) : Int(0);
    json row = {{"family", name},
                {"q", a.q},
                {"A_1", a1_exact(ms).get_str()},
                {"A_2", a_p(ms, 2.0)},
                {"A_inf", a_inf_exact(ms).get_str()},
                {"bound_A1", a1_bound(fam, a.q)},
                {"bound_Ainf", ainf_bound(fam, a.q)},
                {"gow_count", gow.get_str()}};
    rows.push_back(row);
    std::ostringstream os;
    os << name << "," << a.q << "," << a1_exact(ms).get_str() << "," << a_p(ms, 2.0) << ","
       << a_inf_exact(ms).get_str() << "," << a1_bound(fam, a.q) << "," << ainf_bound(fam, a.q)
       << "," << gow.get_str();
    csv.push_back(os.str());
  }
  if (out.format == "csv")
    out.emit_csv("family,q,A_1,A_2,A_inf,bound_A1,bound_Ainf,gow_count", csv);
  else
    out.emit_json("repdegrees", params, json{{"rows", rows}});
  return 0;
}

// ---- elliptic / eds -------------------------------------------------------

struct EllipticArgs {
  std::vector<long> a = {0, 0, -1, -1, 0};  // a1 a2 a3 a4 a6
  std::string px = "0", py = "0";
  long nmax = 20;
  long ellmax = 0;  // > 0: also emit the nu coverage report
  long trial_bound = 1'000'000;
};

int run_elliptic(const EllipticArgs& a, Output& out) {
  if (a.a.size() != 5) throw std::invalid_argument("elliptic: need five coefficients a1..a6");
  json params = {{"a", a.a}, {"px", a.px}, {"py", a.py}, {"nmax", a.nmax},
                 {"ellmax", a.ellmax}, {"trial_bound", a.trial_bound}};
  if (out.handle_dry_run("elliptic", params)) return 0;
  WeierstrassCurve e(a.a[0], a.a[1], a.a[2], a.a[3], a.a[4]);
  CurvePoint p = CurvePoint::affine(rat_from_string(a.px), rat_from_string(a.py));
  if (!on_curve(e, p)) throw std::invalid_argument("elliptic: point not on the curve");

  json rows = json::array();
  std::vector<std::string> csv;
  CurvePoint q = CurvePoint::at_infinity();
  for (long n = 1; n <= a.nmax; ++n) {
    q = point_add(e, q, p);
    auto info = denominator_and_omega(q, a.trial_bound);
    long digits = info.is_infinity ? 0 : (long)mpz_sizeinbase(info.d.get_mpz_t(), 10);
    json row = {{"n", n},
                {"digits_dn", digits},
                {"omega_lower", info.omega},
                {"cofactor_flag", info.cofactor},
                {"infinity", info.is_infinity}};
    rows.push_back(row);
    std::ostringstream os;
    os << n << "," << digits << "," << info.omega << "," << (info.cofactor ? 1 : 0);
    csv.push_back(os.str());
  }
  json results = {{"discriminant", e.discriminant.get_str()}, {"rows", rows}};
  if (a.ellmax > 0) {
    auto cov = nu_coverage(e, p, a.ellmax, 50);
    results["nu_coverage"] = {{"covered", cov.covered_primes},
                              {"missing", cov.missing_primes},
                              {"coverage", cov.coverage}};
  }
  if (out.format == "csv")
    out.emit_csv("n,digits_dn,omega_lower,cofactor_flag", csv);
  else
    out.emit_json("elliptic", params, results);
  return 0;
}

struct EdsArgs {
  long w2 = 1, w3 = -1, w4 = 1;
  long N = 50;
};

int run_eds(const EdsArgs& a, Output& out) {
  json params = {{"w2", a.w2}, {"w3", a.w3}, {"w4", a.w4}, {"N", a.N}};
  if (out.handle_dry_run("eds", params)) return 0;
  auto s = eds_extend(a.w2, a.w3, a.w4, a.N);
  json rows = json::array();
  std::vector<std::string> csv;
  for (long n = 0; n <= a.N; ++n) {
    const Int& w = s.at((size_t)n);
    long digits = (long)mpz_sizeinbase(w.get_mpz_t(), 10);
    json row = {{"n", n}, {"digits", digits}};
    if (digits <= 40) row["W"] = w.get_str();
    rows.push_back(row);
    csv.push_back(std::to_string(n) + "," + std::to_string(digits));
  }
  json results = {{"discriminant", eds_discriminant(a.w2, a.w3, a.w4).get_str()}, {"rows", rows}};
  if (out.format == "csv")
    out.emit_csv("n,digits", csv);
  else
    out.emit_json("eds", params, results);
  return 0;
}

// ---- frobenius ------------------------------------------------------------

struct FrobeniusArgs {
  long q = 41;
  int g = 1;
  std::vector<long> f_coeffs = {1, 0, 1};
  bool sweep = false;
  long t = 0;
};

int run_frobenius(const FrobeniusArgs& a, Output& out) {
  json params = {{"q", a.q}, {"g", a.g}, {"f_coeffs", a.f_coeffs},
                 {"sweep", a.sweep}, {"t", a.t}};
  if (out.handle_dry_run("frobenius", params)) return 0;
  FamilySpec spec;
  spec.q = a.q;
  spec.g = a.g;
  spec.f_coeffs = a.f_coeffs;
  spec.validate();

  auto fiber_row = [&](long t) {
    ZetaNumerator zn = zeta_numerator(spec, t);
    json counts = json::array(), coeffs = json::array(), traces = json::array();
    for (int r = 1; r <= spec.g; ++r) counts.push_back(point_count(spec, t, r));
    for (const auto& c : zn.coeffs) coeffs.push_back(c.get_str());
    for (const auto& tr : zn.traces) traces.push_back(tr.get_str());
    Int j = jacobian_order(zn);
    long c1 = point_count(spec, t, 1);
    return json{{"t", t},
                {"counts", counts},
                {"a", traces},
                {"P", coeffs},
                {"J_order", j.get_str()},
                {"C_square", is_perfect_square(Int(c1))},
                {"J_square", is_perfect_square(j)},
                {"q_symplectic", zeta_is_q_symplectic(zn, spec.q, spec.g)},
                {"weil_ok", count_within_weil(spec, c1)}};
  };

  if (a.sweep) {
    auto census = square_census(spec);
    json results = {{"fibers", census.fibers},
                    {"excluded", census.excluded},
                    {"c_square", census.c_square},
                    {"j_square", census.j_square},
                    {"fraction_C_square", rat_to_string(census.fraction_c_square)},
                    {"fraction_J_square", rat_to_string(census.fraction_j_square)}};
    if (out.format == "csv") {
      std::vector<std::string> csv;
      auto excluded = spec.excluded_fibers();
      for (long t = 0; t < spec.q; ++t) {
        if (std::find(excluded.begin(), excluded.end(), t) != excluded.end()) continue;
        json row = fiber_row(t);
        std::ostringstream os;
        os << t << "," << row["counts"][0].get<long>() << "," << row["a"][0].get<std::string>()
           << ",\"" << row["P"].dump() << "\"," << row["J_order"].get<std::string>() << ","
           << (row["C_square"].get<bool>() ? 1 : 0) << ","
           << (row["J_square"].get<bool>() ? 1 : 0);
        csv.push_back(os.str());
      }
      out.emit_csv("t,count_r1,a1,P_coeffs,J_order,C_square,J_square", csv);
    } else {
      out.emit_json("frobenius", params, results);
    }
  } else {
    out.emit_json("frobenius", params, fiber_row(a.t));
  }
  return 0;
}

// ---- smallsieve / dualsieve / inclusionexclusion ---------------------------

struct SmallsieveArgs {
  long N = 30;
  std::vector<long> primes = {2, 3, 5};
  int kmax = -1;
};

int run_smallsieve(const SmallsieveArgs& a, Output& out) {
  json params = {{"N", a.N}, {"primes", a.primes}, {"kmax", a.kmax}};
  if (out.handle_dry_run("smallsieve", params)) return 0;
  int kmax = a.kmax >= 0 ? a.kmax : (int)a.primes.size();
  SieveSystem sys;
  for (long p : a.primes) {
    SievePlace pl;
    pl.label = p;
    pl.size = (int)p;
    pl.density.assign((size_t)p, Rat(1, p));
    pl.in_omega.assign((size_t)p, 0);
    pl.in_omega[0] = 1;
    sys.places.push_back(pl);
  }
  SiftableSample sample;
  for (long n = 1; n <= a.N; ++n) {
    SiftableSample::Item it;
    it.weight = 1;
    for (long p : a.primes) it.values.push_back((int)(n % p));
    sample.items.push_back(it);
  }
  int full_k = (int)a.primes.size();
  auto full_upper = bonferroni_coeffs(a.primes, full_k + (full_k % 2));
  json rows = json::array();
  std::vector<std::string> csv;
  for (int k = 0; k <= kmax; ++k) {
    auto coeffs = bonferroni_coeffs(a.primes, k);
    SandwichResult res;
    if (coeffs.side == SieveSide::upper)
      res = sandwich_bounds(sample, sys, coeffs, bonferroni_coeffs(a.primes, 1));
    else
      res = sandwich_bounds(sample, sys, full_upper, coeffs);
    Rat value = coeffs.side == SieveSide::upper ? res.upper : res.lower;
    json row = {{"k", k},
                {"side", coeffs.side == SieveSide::upper ? "upper" : "lower"},
                {"value", rat_to_string(value)},
                {"exact", rat_to_string(res.exact)}};
    rows.push_back(row);
    std::ostringstream os;
    os << 1 << "," << k << "," << rat_to_string(res.lower) << "," << rat_to_string(res.exact)
       << "," << rat_to_string(res.upper);
    csv.push_back(os.str());
  }
  if (out.format == "csv")
    out.emit_csv("instance_id,k,lower,exact,upper", csv);
  else
    out.emit_json("smallsieve", params, json{{"rows", rows}});
  return 0;
}

struct DualsieveArgs {
  long N = 6;
  std::vector<long> primes = {2, 3};
};

int run_dualsieve(const DualsieveArgs& a, Output& out) {
  json params = {{"N", a.N}, {"primes", a.primes}};
  if (out.handle_dry_run("dualsieve", params)) return 0;
  auto inst = interval_sample({0, a.N, 1}, a.primes);
  set_zero_sieving_sets(inst.system);
  auto res = dual_variance_check(inst.sample, inst.system, inst.basis);
  json results = {{"lhs", rat_to_string(res.lhs)},
                  {"P_L", rat_to_string(res.p_l)},
                  {"Q_L", rat_to_string(res.q_l)},
                  {"delta", res.delta},
                  {"delta_q", res.delta_q},
                  {"holds", res.lhs.get_d() <= res.delta_q * (1 + 1e-9) + 1e-9}};
  out.emit_json("dualsieve", params, results);
  return 0;
}

struct InclExclArgs {
  std::vector<std::string> probs = {"1/2", "1/2"};
};

int run_inclusionexclusion(const InclExclArgs& a, Output& out) {
  json params = {{"probs", a.probs}};
  if (out.handle_dry_run("inclusionexclusion", params)) return 0;
  std::vector<Rat> probs;
  for (const auto& s : a.probs) probs.push_back(rat_from_string(s));
  auto [sys, basis] = binary_event_system(probs);
  auto sample = binary_product_sample(probs);
  auto support = SieveSupport::power_set((int)probs.size());
  GramDelta g = gram_delta(sample, sys, support, basis);
  Rat h = compute_H(sys, support);
  Rat none = 1;
  for (const Rat& p : probs) none *= (1 - p);
  Rat sifted = sifted_measure(sample, sys);
  json results = {{"delta", g.top_eigenvalue},
                  {"H", rat_to_string(h)},
                  {"sieve_bound", g.top_eigenvalue / h.get_d()},
                  {"prob_no_event", rat_to_string(none)},
                  {"sifted", rat_to_string(sifted)},
                  {"equality_gap", std::abs(g.top_eigenvalue / h.get_d() - none.get_d())}};
  out.emit_json("inclusionexclusion", params, results);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sievelab: computational laboratory for the abstract large sieve"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "worker cap (default: SIEVELAB_THREADS or all cores)");

  Output out;
  ClassicalArgs ca;
  auto* classical = app.add_subcommand("classical", "interval sieve: exact Delta vs N-1+L^2");
  classical->add_option("--N", ca.N, "interval length")->required();
  classical->add_option("--L", ca.L, "prime/support cap")->required();
  classical->add_option("--M", ca.M, "interval offset");
  classical->add_option("--r", ca.r, "dimension (cube)");
  classical->add_flag("--zywina", ca.zywina, "use the psi(m) <= L+1 support");
  classical->add_flag("--sweep", ca.sweep, "full (N,L) grid");
  add_common(classical, out);

  WalkzArgs wa;
  auto* walkz = app.add_subcommand("walkz", "random walk on Z: P(S_n prime = a mod q) vs bound");
  walkz->add_option("--n", wa.n, "step count")->required();
  walkz->add_option("--q", wa.q, "odd squarefree modulus")->required();
  walkz->add_option("--a", wa.a, "residue class")->required();
  walkz->add_option("--L", wa.L, "support cap (default q*n^(1/4))");
  walkz->add_flag("--lazy", wa.lazy, "also report the lazy-walk probability");
  add_common(walkz, out);

  GroupwalkArgs ga;
  auto* groupwalk = app.add_subcommand("groupwalk", "SL(n,Z) walk: reducibility decay / coupon times");
  groupwalk->add_option("--n", ga.n, "matrix size")->required();
  groupwalk->add_option("--steps", ga.steps, "walk length");
  groupwalk->add_option("--trials", ga.trials, "independent walks")->required();
  groupwalk->add_option("--seed", ga.seed, "master seed (mandatory: stochastic)")->required();
  groupwalk->add_option("--checkpoints", ga.checkpoints, "steps at which to test reducibility");
  groupwalk->add_flag("--coupon", ga.coupon, "coupon-collector / transition-time experiment");
  add_common(groupwalk, out);

  CayleyArgs cy;
  auto* cayley = app.add_subcommand("cayley", "spectrum of the averaging operator on SL(n,F_ell)");
  cayley->add_option("--n", cy.n, "matrix size")->required();
  cayley->add_option("--prime", cy.prime, "the prime ell")->required();
  add_common(cayley, out);

  AppendixBArgs ab;
  auto* appendixB = app.add_subcommand("appendixB", "local densities in matrix groups");
  appendixB->add_option("--family", ab.family, "SL, Sp or CSp")->required();
  appendixB->add_option("--n", ab.n, "degree (n or 2g)")->required();
  appendixB->add_option("--ell", ab.ell, "odd prime")->required();
  appendixB->add_option("--part", ab.part, "predicate 1-6")->required();
  appendixB->add_option("--q", ab.q, "fiber multiplicator (parts 3-6)");
  appendixB->add_option("--i", ab.entry_i, "entry row, 1-based (part 2)");
  appendixB->add_option("--j", ab.entry_j, "entry column, 1-based (part 2)");
  add_common(appendixB, out);

  RepdegreesArgs rd;
  auto* repdegrees = app.add_subcommand("repdegrees", "character degrees of GL(2,q)/SL(2,q)");
  repdegrees->add_option("--q", rd.q, "odd prime")->required();
  repdegrees->add_option("--family", rd.family, "GL2, SL2 or both");
  add_common(repdegrees, out);

  EllipticArgs el;
  auto* elliptic = app.add_subcommand("elliptic", "denominators and omega along multiples of a point");
  elliptic->add_option("--a", el.a, "curve coefficients a1 a2 a3 a4 a6")->expected(5);
  elliptic->add_option("--px", el.px, "x(P) as p/q");
  elliptic->add_option("--py", el.py, "y(P) as p/q");
  elliptic->add_option("--nmax", el.nmax, "multiples to scan");
  elliptic->add_option("--ellmax", el.ellmax, "emit nu coverage up to this prime");
  elliptic->add_option("--trial-bound", el.trial_bound, "trial-division bound for omega");
  add_common(elliptic, out);

  EdsArgs ed;
  auto* eds = app.add_subcommand("eds", "elliptic divisibility sequence from (W2,W3,W4)");
  eds->add_option("--w2", ed.w2, "W_2");
  eds->add_option("--w3", ed.w3, "W_3");
  eds->add_option("--w4", ed.w4, "W_4");
  eds->add_option("--N", ed.N, "extend to W_N");
  add_common(eds, out);

  FrobeniusArgs fr;
  auto* frobenius = app.add_subcommand("frobenius", "hyperelliptic fibers: zeta numerators and squares");
  frobenius->add_option("--q", fr.q, "odd prime >= 5")->required();
  frobenius->add_option("--g", fr.g, "genus")->required();
  frobenius->add_option("--f-coeffs", fr.f_coeffs, "monic f, low to high, 2g+1 values")->expected(-1);
  frobenius->add_flag("--sweep", fr.sweep, "full t census");
  frobenius->add_option("--t", fr.t, "single fiber");
  add_common(frobenius, out);

  SmallsieveArgs ss;
  auto* smallsieve = app.add_subcommand("smallsieve", "Bonferroni sandwich bounds");
  smallsieve->add_option("--N", ss.N, "interval 1..N");
  smallsieve->add_option("--primes", ss.primes, "prime labels")->expected(-1);
  smallsieve->add_option("--kmax", ss.kmax, "largest truncation order");
  add_common(smallsieve, out);

  DualsieveArgs du;
  auto* dualsieve = app.add_subcommand("dualsieve", "Renyi variance inequality on an interval");
  dualsieve->add_option("--N", du.N, "interval 1..N");
  dualsieve->add_option("--primes", du.primes, "prime labels")->expected(-1);
  add_common(dualsieve, out);

  InclExclArgs ie;
  auto* inclexcl = app.add_subcommand("inclusionexclusion", "independent binary events: equality case");
  inclexcl->add_option("--p", ie.probs, "event probabilities as p/q")->expected(-1);
  add_common(inclexcl, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (threads > 0) set_thread_cap(threads);

  try {
    if (classical->parsed()) return run_classical(ca, out);
    if (walkz->parsed()) return run_walkz(wa, out);
    if (groupwalk->parsed()) return run_groupwalk(ga, out);
    if (cayley->parsed()) return run_cayley(cy, out);
    if (appendixB->parsed()) return run_appendixB(ab, out);
    if (repdegrees->parsed()) return run_repdegrees(rd, out);
    if (elliptic->parsed()) return run_elliptic(el, out);
    if (eds->parsed()) return run_eds(ed, out);
    if (frobenius->parsed()) return run_frobenius(fr, out);
    if (smallsieve->parsed()) return run_smallsieve(ss, out);
    if (dualsieve->parsed()) return run_dualsieve(du, out);
    if (inclexcl->parsed()) return run_inclusionexclusion(ie, out);
  } catch (const GateError& e) {
    json report = {{"tool", "sievelab"}, {"version", kVersion},
                   {"error", e.what()}, {"gate", e.gate()}};
    std::cerr << report.dump(2) << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
