#include "sievelab/sieve_core.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

#include "sievelab/parallel.hpp"

namespace sievelab {

static constexpr int kGramDimGate = 5000;

Rat SievePlace::nu_omega() const {
  Rat s = 0;
  for (int y = 0; y < size; ++y)
    if (in_omega[y]) s += density[y];
  return s;
}

void SieveSystem::validate() const {
  std::set<long long> seen;
  for (const auto& pl : places) {
    if (!seen.insert(pl.label).second)
      throw std::invalid_argument("SieveSystem: duplicate label");
    if (pl.size <= 0 || (int)pl.density.size() != pl.size || (int)pl.in_omega.size() != pl.size)
      throw std::invalid_argument("SieveSystem: inconsistent place tables");
    Rat total = 0;
    for (int y = 0; y < pl.size; ++y) {
      const Rat& nu = pl.density[y];
      if (nu < 0) throw std::invalid_argument("SieveSystem: negative density");
      // zero density permitted only off Omega_ell (multiplicative relaxation)
      if (nu == 0 && pl.in_omega[y])
        throw std::invalid_argument("SieveSystem: zero density on Omega");
      total += nu;
    }
    if (total != 1) throw std::invalid_argument("SieveSystem: density does not sum to 1");
    if (pl.nu_omega() >= 1)
      throw std::invalid_argument("SieveSystem: nu(Omega) = 1 (H denominator vanishes)");
  }
}

int SieveSystem::place_index(long long label) const {
  for (size_t i = 0; i < places.size(); ++i)
    if (places[i].label == label) return (int)i;
  return -1;
}

void SieveSupport::validate(const SieveSystem& sys) const {
  int n = (int)sys.places.size();
  bool has_empty = false;
  std::set<int> singled;
  std::set<std::vector<int>> distinct;
  for (const auto& m : sets) {
    if (!std::is_sorted(m.begin(), m.end()) ||
        std::adjacent_find(m.begin(), m.end()) != m.end())
      throw std::invalid_argument("SieveSupport: sets must be sorted and squarefree");
    for (int p : m)
      if (p < 0 || p >= n) throw std::invalid_argument("SieveSupport: place index out of range");
    if (!distinct.insert(m).second)
      throw std::invalid_argument("SieveSupport: duplicate set");
    if (m.empty()) has_empty = true;
    if (m.size() == 1) singled.insert(m[0]);
  }
  if (!has_empty) throw std::invalid_argument("SieveSupport: missing empty set");
  for (const auto& m : sets)
    for (int p : m)
      if (!singled.count(p))
        throw std::invalid_argument("SieveSupport: closure violated (singleton missing)");
}

SieveSupport SieveSupport::empty_only() { return SieveSupport{{{}}}; }

SieveSupport SieveSupport::singletons(int n_places) {
  SieveSupport s;
  s.sets.push_back({});
  for (int i = 0; i < n_places; ++i) s.sets.push_back({i});
  return s;
}

SieveSupport SieveSupport::power_set(int n_places) {
  if (n_places > 20) throw GateError("support_size", "power_set: too many places");
  SieveSupport s;
  for (uint32_t mask = 0; mask < (1u << n_places); ++mask) {
    std::vector<int> m;
    for (int i = 0; i < n_places; ++i)
      if (mask & (1u << i)) m.push_back(i);
    s.sets.push_back(std::move(m));
  }
  return s;
}

Rat SiftableSample::total_mass() const {
  Rat s = 0;
  for (const auto& it : items) s += it.weight;
  return s;
}

void SiftableSample::validate(const SieveSystem& sys) const {
  for (const auto& it : items) {
    if (it.weight < 0) throw std::invalid_argument("SiftableSample: negative weight");
    if (it.values.size() < sys.places.size())
      throw std::invalid_argument("SiftableSample: item misses a place value");
    for (size_t i = 0; i < sys.places.size(); ++i)
      if (it.values[i] < 0 || it.values[i] >= sys.places[i].size)
        throw std::invalid_argument("SiftableSample: value outside Y_ell");
  }
  if (total_mass() <= 0) throw std::invalid_argument("SiftableSample: total mass must be > 0");
}

void OrthonormalBasisSpec::validate(const SieveSystem& sys, double tol) const {
  if (tables.size() != sys.places.size())
    throw std::invalid_argument("basis: one table per place required");
  for (size_t i = 0; i < tables.size(); ++i) {
    const auto& tab = tables[i];
    const auto& pl = sys.places[i];
    if ((int)tab.size() != pl.size)
      throw std::invalid_argument("basis: size must equal |Y_ell|");
    for (const auto& fn : tab)
      if ((int)fn.size() != pl.size)
        throw std::invalid_argument("basis: value table has wrong length");
    for (int y = 0; y < pl.size; ++y)
      if (std::abs(tab[0][y] - cd(1.0, 0.0)) > tol)
        throw std::invalid_argument("basis: first function must be the constant 1");
    for (size_t a = 0; a < tab.size(); ++a) {
      for (size_t b = a; b < tab.size(); ++b) {
        cd ip = 0;
        for (int y = 0; y < pl.size; ++y)
          ip += pl.density[y].get_d() * tab[a][y] * std::conj(tab[b][y]);
        cd expect = (a == b) ? cd(1, 0) : cd(0, 0);
        if (std::abs(ip - expect) > tol)
          throw std::invalid_argument("basis: not orthonormal within tolerance");
      }
    }
  }
}

Rat compute_H(const SieveSystem& sys, const SieveSupport& support) {
  sys.validate();
  support.validate(sys);
  std::vector<Rat> ratio(sys.places.size());
  for (size_t i = 0; i < sys.places.size(); ++i) {
    Rat nu = sys.places[i].nu_omega();
    ratio[i] = nu / (1 - nu);  // validate() guarantees nu < 1
  }
  Rat h = 0;
  for (const auto& m : support.sets) {
    Rat term = 1;
    for (int p : m) term *= ratio[p];
    h += term;
  }
  return h;
}

Rat sifted_measure(const SiftableSample& sample, const SieveSystem& sys) {
  sample.validate(sys);
  Rat s = 0;
  for (const auto& it : sample.items) {
    bool sifted = true;
    for (size_t i = 0; i < sys.places.size(); ++i) {
      if (sys.places[i].in_omega[it.values[i]]) { sifted = false; break; }
    }
    if (sifted) s += it.weight;
  }
  return s;
}

// Enumerates the primitive index (m, phi) for a support: for m = {} the
// constant, otherwise all products of non-constant per-place functions.
static std::vector<GramIndexEntry> build_index(const SieveSystem&,
                                               const SieveSupport& support,
                                               const OrthonormalBasisSpec& basis) {
  std::vector<GramIndexEntry> index;
  for (const auto& m : support.sets) {
    if (m.empty()) {
      index.push_back({{}, {}});
      continue;
    }
    std::vector<int> fns(m.size(), 1);
    for (;;) {
      index.push_back({m, fns});
      size_t j = 0;
      for (; j < m.size(); ++j) {
        int limit = (int)basis.tables[m[j]].size();
        if (++fns[j] < limit) break;
        fns[j] = 1;
      }
      if (j == m.size()) break;
    }
  }
  return index;
}

GramDelta gram_delta(const SiftableSample& sample, const SieveSystem& sys,
                     const SieveSupport& support, const OrthonormalBasisSpec& basis) {
  sample.validate(sys);
  support.validate(sys);
  basis.validate(sys);

  GramDelta g;
  g.index = build_index(sys, support, basis);
  size_t dim = g.index.size();
  if (dim > kGramDimGate)
    throw GateError("gram_dimension",
                    "gram_delta: index size " + std::to_string(dim) + " exceeds 5000");

  // Evaluate every phi(rho_m(F_x)) once per item, then form T*T entries.
  size_t nitems = sample.items.size();
  Eigen::MatrixXcd vals(dim, nitems);
  std::vector<double> weights(nitems);
  for (size_t x = 0; x < nitems; ++x) weights[x] = sample.items[x].weight.get_d();

  parallel_for(0, dim, [&](size_t r) {
    const auto& e = g.index[r];
    for (size_t x = 0; x < nitems; ++x) {
      cd v(1.0, 0.0);
      for (size_t j = 0; j < e.places.size(); ++j) {
        int pl = e.places[j];
        v *= basis.tables[pl][e.fns[j]][sample.items[x].values[pl]];
      }
      vals(r, x) = v;
    }
  });

  g.matrix.resize(dim, dim);
  parallel_for(0, dim, [&](size_t r) {
    for (size_t c = r; c < dim; ++c) {
      cd w = 0;
      for (size_t x = 0; x < nitems; ++x)
        w += weights[x] * vals(r, x) * std::conj(vals(c, x));
      g.matrix(r, c) = w;
      g.matrix(c, r) = std::conj(w);
    }
  });

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.matrix, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gram_delta: eigensolver failed");
  g.top_eigenvalue = es.eigenvalues().maxCoeff();
  g.min_eigenvalue = es.eigenvalues().minCoeff();
  return g;
}

double row_sum_delta_bound(const GramDelta& gram) {
  double best = 0.0;
  for (Eigen::Index r = 0; r < gram.matrix.rows(); ++r) {
    double s = 0.0;
    for (Eigen::Index c = 0; c < gram.matrix.cols(); ++c) s += std::abs(gram.matrix(r, c));
    best = std::max(best, s);
  }
  return best;
}

DualVarianceResult dual_variance_check(const SiftableSample& sample, const SieveSystem& sys,
                                       const OrthonormalBasisSpec& basis) {
  if (sys.places.empty()) throw std::invalid_argument("dual_variance_check: no labels");
  sample.validate(sys);

  DualVarianceResult r;
  r.p_l = 0;
  r.q_l = 0;
  for (const auto& pl : sys.places) {
    Rat nu = pl.nu_omega();
    r.p_l += nu;
    r.q_l += nu * (1 - nu);
  }
  r.lhs = 0;
  for (const auto& it : sample.items) {
    long hits = 0;
    for (size_t i = 0; i < sys.places.size(); ++i)
      if (sys.places[i].in_omega[it.values[i]]) ++hits;
    Rat d = Rat(hits) - r.p_l;
    r.lhs += it.weight * d * d;
  }
  GramDelta g = gram_delta(sample, sys, SieveSupport::singletons((int)sys.places.size()), basis);
  r.delta = g.top_eigenvalue;
  r.delta_q = r.delta * r.q_l.get_d();
  return r;
}

std::pair<SieveSystem, OrthonormalBasisSpec> binary_event_system(const std::vector<Rat>& probs) {
  SieveSystem sys;
  OrthonormalBasisSpec basis;
  long long label = 0;
  for (const Rat& p : probs) {
    if (p <= 0 || p >= 1)
      throw std::invalid_argument("binary_event_system: p must lie in (0,1)");
    SievePlace pl;
    pl.label = ++label;
    pl.size = 2;
    pl.density = {1 - p, p};   // nu(0) = 1-p, nu(1) = p
    pl.in_omega = {0, 1};      // Omega = {1}: the event happens
    sys.places.push_back(pl);

    double pd = p.get_d();
    double s = std::sqrt(pd * (1.0 - pd));
    basis.tables.push_back({{cd(1, 0), cd(1, 0)},
                            {cd((0.0 - pd) / s, 0), cd((1.0 - pd) / s, 0)}});
  }
  sys.validate();
  return {sys, basis};
}

SiftableSample binary_product_sample(const std::vector<Rat>& probs) {
  size_t k = probs.size();
  if (k > 20) throw GateError("sample_size", "binary_product_sample: too many events");
  SiftableSample sample;
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    SiftableSample::Item it;
    it.weight = 1;
    for (size_t i = 0; i < k; ++i) {
      int v = (mask >> i) & 1;
      it.values.push_back(v);
      it.weight *= v ? probs[i] : (1 - probs[i]);
    }
    sample.items.push_back(std::move(it));
  }
  return sample;
}

}  // namespace sievelab
