// python bindings for the main operations; exact rationals cross the
// boundary as "p/q" strings.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sievelab/classical.hpp"
#include "sievelab/elliptic.hpp"
#include "sievelab/finite_groups.hpp"
#include "sievelab/frobenius.hpp"
#include "sievelab/group_walk.hpp"
#include "sievelab/numutil.hpp"
#include "sievelab/rep_degrees.hpp"
#include "sievelab/sieve_core.hpp"
#include "sievelab/small_sieve.hpp"
#include "sievelab/walk_z.hpp"
#include "sievelab/zpoly.hpp"

namespace py = pybind11;
using namespace sievelab;

namespace {

SieveSystem system_from_tables(
    const std::vector<std::tuple<long long, std::vector<std::string>, std::vector<int>>>& places) {
  SieveSystem sys;
  for (const auto& [label, density, omega] : places) {
    SievePlace pl;
    pl.label = label;
    pl.size = (int)density.size();
    for (const auto& d : density) pl.density.push_back(rat_from_string(d));
    pl.in_omega.assign(pl.size, 0);
    for (int y : omega) pl.in_omega.at((size_t)y) = 1;
    sys.places.push_back(std::move(pl));
  }
  sys.validate();
  return sys;
}

SiftableSample sample_from_tables(
    const std::vector<std::pair<std::string, std::vector<int>>>& items) {
  SiftableSample sample;
  for (const auto& [w, values] : items) {
    SiftableSample::Item it;
    it.weight = rat_from_string(w);
    it.values = values;
    sample.items.push_back(std::move(it));
  }
  return sample;
}

SieveSupport support_from_lists(const std::vector<std::vector<int>>& sets) {
  SieveSupport s;
  s.sets = sets;
  return s;
}

OrthonormalBasisSpec basis_from_tables(const std::vector<std::vector<std::vector<cd>>>& tables) {
  OrthonormalBasisSpec b;
  b.tables = tables;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "large sieve laboratory: exact sieve constants on finite instances";
  m.attr("__version__") = "0.1.0";

  // ---- sieve core ----
  m.def(
      "compute_h",
      [](const std::vector<std::tuple<long long, std::vector<std::string>, std::vector<int>>>& places,
         const std::vector<std::vector<int>>& support) {
        return rat_to_string(compute_H(system_from_tables(places), support_from_lists(support)));
      },
      py::arg("places"), py::arg("support"),
      "H-sum of a sieve system over a support; places are (label, density "
      "strings, omega indices); returns an exact rational string.");

  m.def(
      "sifted_measure",
      [](const std::vector<std::tuple<long long, std::vector<std::string>, std::vector<int>>>& places,
         const std::vector<std::pair<std::string, std::vector<int>>>& items) {
        return rat_to_string(sifted_measure(sample_from_tables(items), system_from_tables(places)));
      },
      py::arg("places"), py::arg("items"));

  m.def(
      "gram_delta",
      [](const std::vector<std::tuple<long long, std::vector<std::string>, std::vector<int>>>& places,
         const std::vector<std::pair<std::string, std::vector<int>>>& items,
         const std::vector<std::vector<int>>& support,
         const std::vector<std::vector<std::vector<cd>>>& basis) {
        auto g = gram_delta(sample_from_tables(items), system_from_tables(places),
                            support_from_lists(support), basis_from_tables(basis));
        return py::make_tuple(g.top_eigenvalue, g.min_eigenvalue, row_sum_delta_bound(g));
      },
      py::arg("places"), py::arg("items"), py::arg("support"), py::arg("basis"),
      "Returns (top eigenvalue = exact large-sieve constant, min eigenvalue, row-sum bound).");

  m.def(
      "binary_equality_case",
      [](const std::vector<std::string>& prob_strings) {
        std::vector<Rat> probs;
        for (const auto& s : prob_strings) probs.push_back(rat_from_string(s));
        auto [sys, basis] = binary_event_system(probs);
        auto sample = binary_product_sample(probs);
        auto support = SieveSupport::power_set((int)probs.size());
        GramDelta g = gram_delta(sample, sys, support, basis);
        Rat h = compute_H(sys, support);
        Rat none = 1;
        for (const Rat& p : probs) none *= (1 - p);
        return py::make_tuple(g.top_eigenvalue, rat_to_string(h), rat_to_string(none));
      },
      py::arg("probs"),
      "Independent binary events: (Delta, H, P(no event)); Delta should be 1.");

  // ---- classical ----
  m.def(
      "classical_delta",
      [](long long N, long L, long long M, int r, bool zywina) {
        IntervalSpec spec{M, N, r};
        auto primes = primes_up_to(L);
        auto inst = interval_sample(spec, primes);
        set_zero_sieving_sets(inst.system);
        auto support = classical_support(inst.system, primes, L, zywina);
        GramDelta g = gram_delta(inst.sample, inst.system, support, inst.basis);
        Rat h = compute_H(inst.system, support);
        Rat sifted = sifted_measure(inst.sample, inst.system);
        return py::make_tuple(g.top_eigenvalue, analytic_delta_bound(spec, L),
                              rat_to_string(h), rat_to_string(sifted));
      },
      py::arg("N"), py::arg("L"), py::arg("M") = 0, py::arg("r") = 1, py::arg("zywina") = false,
      "(exact Delta, analytic bound, H, sifted measure) for the interval instance.");

  // ---- walk on Z ----
  m.def("walk_pmf", [](long n, long k) { return rat_to_string(exact_distribution(n).at(k)); },
        py::arg("n"), py::arg("k"));
  m.def("walk_w", &walk_w, py::arg("n"), py::arg("a1"), py::arg("m1"), py::arg("a2"),
        py::arg("m2"));
  m.def("walk_delta_bound", &walk_delta_bound, py::arg("n"), py::arg("L"));
  m.def(
      "prime_ap_probability",
      [](long n, long q, long a) { return rat_to_string(prime_ap_probability(n, q, a)); },
      py::arg("n"), py::arg("q"), py::arg("a"));
  m.def(
      "walk_corollary_bound",
      [](long n, long q, long L) {
        auto b = walk_corollary_bound(n, q, L);
        return py::make_tuple(b.delta_bound, rat_to_string(b.h));
      },
      py::arg("n"), py::arg("q"), py::arg("L"));

  // ---- finite groups ----
  m.def(
      "group_order",
      [](const std::string& family, int degree, long ell) {
        MatrixGroupSpec spec;
        spec.family = family == "SL"   ? GroupFamily::SL
                      : family == "Sp" ? GroupFamily::Sp
                                       : GroupFamily::CSp;
        spec.degree = degree;
        spec.ell = ell;
        return group_order(spec).get_str();
      },
      py::arg("family"), py::arg("degree"), py::arg("ell"));
  m.def(
      "local_density",
      [](const std::string& family, int degree, long ell, int part, long q, int i, int j) {
        MatrixGroupSpec spec;
        spec.family = family == "SL"   ? GroupFamily::SL
                      : family == "Sp" ? GroupFamily::Sp
                                       : GroupFamily::CSp;
        spec.degree = degree;
        spec.ell = ell;
        auto r = local_density(spec, part, q, i, j);
        return py::make_tuple(r.count.get_str(), r.divisor.get_str(), r.order.get_str());
      },
      py::arg("family"), py::arg("degree"), py::arg("ell"), py::arg("part"), py::arg("q") = 0,
      py::arg("i") = 0, py::arg("j") = 0, "(count, divisor, order), exact.");
  m.def(
      "q_symplectic_census",
      [](long ell, int g, long q, const std::string& predicate) {
        QSymplecticPredicate pred;
        if (predicate == "f1_square") pred = QSymplecticPredicate::f1_square;
        else if (predicate == "trace_square") pred = QSymplecticPredicate::trace_square;
        else if (predicate == "f1_zero") pred = QSymplecticPredicate::f1_zero;
        else if (predicate == "trace_qplus1") pred = QSymplecticPredicate::trace_qplus1;
        else throw std::invalid_argument("unknown predicate");
        auto [count, total] = q_symplectic_census(ell, g, q, pred);
        return py::make_tuple(count.get_str(), total.get_str());
      },
      py::arg("ell"), py::arg("g"), py::arg("q"), py::arg("predicate"));

  // ---- representation degrees ----
  m.def(
      "degree_multiset",
      [](const std::string& family, long q) {
        auto ms = degree_multiset(family == "GL2" ? DegreeFamily::GL2 : DegreeFamily::SL2, q);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [d, mult] : ms.entries) out.push_back({d.get_str(), mult.get_str()});
        return out;
      },
      py::arg("family"), py::arg("q"), "list of (degree, multiplicity) pairs");
  m.def(
      "a_p",
      [](const std::string& family, long q, double p) {
        auto ms = degree_multiset(family == "GL2" ? DegreeFamily::GL2 : DegreeFamily::SL2, q);
        return a_p(ms, p);
      },
      py::arg("family"), py::arg("q"), py::arg("p"));
  m.def("gow_symmetric_count", [](long q) { return gow_symmetric_count(q).get_str(); },
        py::arg("q"));

  // ---- group walk ----
  m.def(
      "reducibility_experiment",
      [](int n, long steps, long trials, uint64_t seed, const std::vector<long>& checkpoints) {
        WalkConfig cfg{n, steps, trials, seed};
        auto rows = run_reducibility_experiment(cfg, checkpoints);
        std::vector<std::tuple<long, long, double, double, double>> out;
        for (const auto& r : rows)
          out.push_back({r.k, r.reducible, r.frequency, r.wilson_lo, r.wilson_hi});
        return out;
      },
      py::arg("n"), py::arg("steps"), py::arg("trials"), py::arg("seed"), py::arg("checkpoints"),
      "rows (k, reducible, frequency, wilson_lo, wilson_hi); deterministic per seed.");
  m.def(
      "cayley_spectrum",
      [](int n, long ell) {
        auto s = cayley_spectrum(n, ell);
        return py::make_tuple(s.group_size, s.rho, s.alpha, s.trivial_simple, s.has_minus_one);
      },
      py::arg("n"), py::arg("ell"));
  m.def(
      "rational_irreducibility",
      [](const std::vector<std::string>& coeffs) {
        ZPoly f;
        for (const auto& c : coeffs) f.push_back(Int(c));
        return rational_irreducibility(f);
      },
      py::arg("coeffs"), "monic integer polynomial, low-to-high coefficient strings");

  // ---- elliptic / EDS ----
  m.def(
      "eds_extend",
      [](const std::string& w2, const std::string& w3, const std::string& w4, long N) {
        auto s = eds_extend(Int(w2), Int(w3), Int(w4), N);
        std::vector<std::string> out;
        for (const auto& w : s.w) out.push_back(w.get_str());
        return out;
      },
      py::arg("w2"), py::arg("w3"), py::arg("w4"), py::arg("N"));
  m.def(
      "point_multiple_denominator",
      [](const std::vector<long>& a, const std::string& px, const std::string& py_, long n) {
        WeierstrassCurve e(a.at(0), a.at(1), a.at(2), a.at(3), a.at(4));
        auto p = CurvePoint::affine(rat_from_string(px), rat_from_string(py_));
        auto q = point_mul(e, p, n);
        if (q.infinity) return std::string("0");
        return shared_denominator(q).get_str();
      },
      py::arg("a"), py::arg("px"), py::arg("py"), py::arg("n"),
      "shared denominator d of x(nP) = a/d^2; '0' for the point at infinity");
  m.def(
      "order_mod_ell",
      [](const std::vector<long>& a, const std::string& px, const std::string& py_, long ell) {
        WeierstrassCurve e(a.at(0), a.at(1), a.at(2), a.at(3), a.at(4));
        auto p = CurvePoint::affine(rat_from_string(px), rat_from_string(py_));
        return order_mod_ell(e, p, ell);
      },
      py::arg("a"), py::arg("px"), py::arg("py"), py::arg("ell"));

  // ---- frobenius family ----
  m.def(
      "point_count",
      [](long q, int g, const std::vector<long>& f, long t, int r) {
        FamilySpec spec;
        spec.q = q;
        spec.g = g;
        spec.f_coeffs = f;
        return point_count(spec, t, r);
      },
      py::arg("q"), py::arg("g"), py::arg("f"), py::arg("t"), py::arg("r") = 1);
  m.def(
      "zeta_numerator",
      [](long q, int g, const std::vector<long>& f, long t) {
        FamilySpec spec;
        spec.q = q;
        spec.g = g;
        spec.f_coeffs = f;
        auto zn = zeta_numerator(spec, t);
        std::vector<std::string> coeffs;
        for (const auto& c : zn.coeffs) coeffs.push_back(c.get_str());
        return py::make_tuple(coeffs, jacobian_order(zn).get_str());
      },
      py::arg("q"), py::arg("g"), py::arg("f"), py::arg("t"),
      "(P_t coefficients, |J_t(F_q)| = P_t(1))");
  m.def(
      "square_census",
      [](long q, int g, const std::vector<long>& f) {
        FamilySpec spec;
        spec.q = q;
        spec.g = g;
        spec.f_coeffs = f;
        auto c = square_census(spec);
        return py::make_tuple(c.fibers, c.excluded, rat_to_string(c.fraction_c_square),
                              rat_to_string(c.fraction_j_square));
      },
      py::arg("q"), py::arg("g"), py::arg("f"));

  // ---- small sieve ----
  m.def(
      "bonferroni_sandwich",
      [](long N, const std::vector<long>& primes, int k_upper, int k_lower) {
        SieveSystem sys;
        for (long p : primes) {
          SievePlace pl;
          pl.label = p;
          pl.size = (int)p;
          pl.density.assign((size_t)p, Rat(1, p));
          pl.in_omega.assign((size_t)p, 0);
          pl.in_omega[0] = 1;
          sys.places.push_back(pl);
        }
        SiftableSample sample;
        for (long n = 1; n <= N; ++n) {
          SiftableSample::Item it;
          it.weight = 1;
          for (long p : primes) it.values.push_back((int)(n % p));
          sample.items.push_back(it);
        }
        auto res = sandwich_bounds(sample, sys, bonferroni_coeffs(primes, k_upper),
                                   bonferroni_coeffs(primes, k_lower));
        return py::make_tuple(rat_to_string(res.lower), rat_to_string(res.exact),
                              rat_to_string(res.upper));
      },
      py::arg("N"), py::arg("primes"), py::arg("k_upper"), py::arg("k_lower"),
      "(lower, exact, upper) for sieving multiples out of 1..N");
}
