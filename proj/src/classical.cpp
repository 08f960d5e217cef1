#include "sievelab/classical.hpp"

#include <cmath>
#include <numbers>

#include "sievelab/numutil.hpp"

namespace sievelab {

ClassicalInstance interval_sample(const IntervalSpec& spec, const std::vector<long>& primes) {
  if (spec.N < 1) throw std::invalid_argument("interval_sample: empty interval");
  if (spec.r < 1) throw std::invalid_argument("interval_sample: dimension must be >= 1");
  {
    std::vector<long> sorted(primes);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("interval_sample: primes must be distinct");
    for (long p : sorted)
      if (p < 2) throw std::invalid_argument("interval_sample: labels must be >= 2");
  }

  ClassicalInstance inst;
  for (long p : primes) {
    SievePlace pl;
    pl.label = p;
    long size = 1;
    for (int i = 0; i < spec.r; ++i) size *= p;
    pl.size = (int)size;
    pl.density.assign(pl.size, Rat(1, size));
    pl.in_omega.assign(pl.size, 0);
    inst.system.places.push_back(std::move(pl));

    // additive characters on (Z/p)^r indexed by a in mixed radix, a = 0 first
    std::vector<std::vector<cd>> table((size_t)size, std::vector<cd>((size_t)size));
    for (long a = 0; a < size; ++a) {
      for (long y = 0; y < size; ++y) {
        long aa = a, yy = y, dot = 0;
        for (int i = 0; i < spec.r; ++i) {
          dot = (dot + (aa % p) * (yy % p)) % p;
          aa /= p;
          yy /= p;
        }
        double th = 2.0 * std::numbers::pi * (double)dot / (double)p;
        table[(size_t)a][(size_t)y] = cd(std::cos(th), std::sin(th));
      }
    }
    inst.basis.tables.push_back(std::move(table));
  }
  inst.system.validate();

  // lattice points of the cube, coordinate-wise residues
  long long count = 1;
  for (int i = 0; i < spec.r; ++i) count *= spec.N;
  if (count > 2'000'000) throw GateError("sample_size", "interval_sample: cube too large");
  std::vector<long long> coord((size_t)spec.r, 1);
  for (long long idx = 0; idx < count; ++idx) {
    SiftableSample::Item it;
    it.weight = 1;
    for (size_t i = 0; i < inst.system.places.size(); ++i) {
      long p = primes[i];
      long v = 0;
      for (int j = spec.r - 1; j >= 0; --j) {
        long long x = spec.M + coord[(size_t)j];
        long rem = (long)(((x % p) + p) % p);
        v = v * p + rem;
      }
      it.values.push_back((int)v);
    }
    inst.sample.items.push_back(std::move(it));
    for (int j = 0; j < spec.r; ++j) {
      if (++coord[(size_t)j] <= spec.N) break;
      coord[(size_t)j] = 1;
    }
  }
  return inst;
}

void set_zero_sieving_sets(SieveSystem& sys) {
  for (auto& pl : sys.places) {
    pl.in_omega.assign(pl.size, 0);
    pl.in_omega[0] = 1;
  }
}

double analytic_delta_bound(const IntervalSpec& spec, long L) {
  if (L < 1) throw std::invalid_argument("analytic_delta_bound: L >= 1 required");
  double N = (double)spec.N;
  if (spec.r == 1) return N - 1.0 + (double)L * (double)L;
  return std::pow(std::sqrt(N) + (double)L, 2.0 * spec.r);
}

Rat equidist_remainder(const SiftableSample& sample, const SieveSystem& sys,
                       const std::vector<int>& d_places, const std::vector<int>& y) {
  if (d_places.size() != y.size())
    throw std::invalid_argument("equidist_remainder: mismatched d and y");
  Rat count = 0;
  for (const auto& it : sample.items) {
    bool match = true;
    for (size_t j = 0; j < d_places.size(); ++j) {
      int pl = d_places[j];
      if (y[j] < 0 || y[j] >= sys.places.at(pl).size)
        throw std::invalid_argument("equidist_remainder: y outside Y_d");
      if (it.values[pl] != y[j]) { match = false; break; }
    }
    if (match) count += it.weight;
  }
  Rat nu = 1;
  for (size_t j = 0; j < d_places.size(); ++j)
    nu *= sys.places[d_places[j]].density[y[j]];
  return count - nu * sample.total_mass();
}

SieveSupport classical_support(const SieveSystem& sys, const std::vector<long>& primes,
                               long L, bool zywina) {
  std::vector<long> used;
  for (long p : primes)
    if (p <= L) used.push_back(p);
  auto subsets = squarefree_subsets(used, zywina ? 2 : 1, zywina ? L + 1 : L);
  SieveSupport support;
  for (const auto& labels : subsets) {
    std::vector<int> m;
    for (long p : labels) {
      int idx = sys.place_index(p);
      if (idx < 0) throw std::invalid_argument("classical_support: prime not in system");
      m.push_back(idx);
    }
    std::sort(m.begin(), m.end());
    support.sets.push_back(std::move(m));
  }
  return support;
}

}  // namespace sievelab
