#include "sievelab/group_walk.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "sievelab/finite_groups.hpp"
#include "sievelab/numutil.hpp"
#include "sievelab/parallel.hpp"
#include "sievelab/sieve_core.hpp"

namespace sievelab {

void WalkConfig::validate() const {
  if (n < 2 || n > 6) throw std::invalid_argument("WalkConfig: n must lie in [2,6]");
  if (steps < 1 || trials < 1) throw std::invalid_argument("WalkConfig: steps, trials >= 1");
  if ((double)n * (double)steps * (double)trials > 2e8)
    throw GateError("walk_budget", "WalkConfig: n*steps*trials exceeds the compute budget");
}

namespace {

struct BigMat {
  int n;
  std::vector<Int> a;
  explicit BigMat(int n_) : n(n_), a((size_t)(n_ * n_), Int(0)) {
    for (int i = 0; i < n_; ++i) at(i, i) = 1;
  }
  Int& at(int i, int j) { return a[(size_t)(i * n + j)]; }
  const Int& at(int i, int j) const { return a[(size_t)(i * n + j)]; }
};

// left-multiply by E_ij(c): row_i += c * row_j
void apply_elementary(BigMat& m, int i, int j, int c) {
  for (int k = 0; k < m.n; ++k) {
    if (c == 1)
      m.at(i, k) += m.at(j, k);
    else
      m.at(i, k) -= m.at(j, k);
  }
}

Int det_big(const BigMat& m) {
  std::vector<std::vector<Int>> mm((size_t)m.n, std::vector<Int>((size_t)m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) mm[(size_t)i][(size_t)j] = m.at(i, j);
  // cofactor expansion; n <= 6
  std::function<Int(const std::vector<std::vector<Int>>&)> rec =
      [&](const std::vector<std::vector<Int>>& w) -> Int {
    size_t k = w.size();
    if (k == 1) return w[0][0];
    Int s = 0;
    int sign = 1;
    for (size_t c = 0; c < k; ++c) {
      if (w[0][c] != 0) {
        std::vector<std::vector<Int>> minor;
        for (size_t r = 1; r < k; ++r) {
          std::vector<Int> row;
          for (size_t cc = 0; cc < k; ++cc)
            if (cc != c) row.push_back(w[r][cc]);
          minor.push_back(std::move(row));
        }
        if (sign > 0)
          s += w[0][c] * rec(minor);
        else
          s -= w[0][c] * rec(minor);
      }
      sign = -sign;
    }
    return s;
  };
  return rec(mm);
}

ZPoly walk_charpoly(const BigMat& m) {
  std::vector<std::vector<Int>> mm((size_t)m.n, std::vector<Int>((size_t)m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) mm[(size_t)i][(size_t)j] = m.at(i, j);
  return charpoly_int(mm);
}

struct GenPick {
  int i, j, c;  // E_ij(c), c = +-1
};

GenPick pick_generator(std::mt19937_64& rng, int n) {
  long count = 2L * n * (n - 1);
  std::uniform_int_distribution<long> dist(0, count - 1);
  long idx = dist(rng);
  int c = (idx % 2 == 0) ? 1 : -1;
  long pair = idx / 2;  // 0 .. n(n-1)-1
  int i = (int)(pair / (n - 1));
  int off = (int)(pair % (n - 1));
  int j = off >= i ? off + 1 : off;
  return {i, j, c};
}

}  // namespace

std::pair<double, double> wilson_interval(long successes, long trials, double z) {
  double n = (double)trials;
  double p = (double)successes / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2 * n)) / denom;
  double half = z / denom * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::vector<ReducibilityRow> run_reducibility_experiment(const WalkConfig& config,
                                                         const std::vector<long>& checkpoints) {
  config.validate();
  std::vector<long> ks(checkpoints);
  std::sort(ks.begin(), ks.end());
  if (ks.empty() || ks.front() < 0 || ks.back() > config.steps)
    throw std::invalid_argument("run_reducibility_experiment: checkpoints out of range");

  std::vector<std::vector<char>> reducible((size_t)config.trials,
                                           std::vector<char>(ks.size(), 0));
  parallel_for(0, (size_t)config.trials, [&](size_t trial) {
    std::mt19937_64 rng(splitmix64(config.seed ^ (0x9e3779b97f4a7c15ull * (trial + 1))));
    BigMat m(config.n);
    size_t next_ck = 0;
    for (long k = 0; k <= config.steps && next_ck < ks.size(); ++k) {
      if (k == ks[next_ck]) {
        reducible[trial][next_ck] = !rational_irreducibility(walk_charpoly(m));
        ++next_ck;
      }
      if (k == config.steps) break;
      GenPick g = pick_generator(rng, config.n);
      apply_elementary(m, g.i, g.j, g.c);
    }
    if (det_big(m) != 1) throw std::logic_error("walk determinant drifted from 1");
  });

  std::vector<ReducibilityRow> rows;
  for (size_t c = 0; c < ks.size(); ++c) {
    ReducibilityRow row;
    row.k = ks[c];
    row.trials = config.trials;
    for (long t = 0; t < config.trials; ++t) row.reducible += reducible[(size_t)t][c];
    row.frequency = (double)row.reducible / (double)config.trials;
    auto [lo, hi] = wilson_interval(row.reducible, config.trials);
    row.wilson_lo = lo;
    row.wilson_hi = hi;
    rows.push_back(row);
  }
  return rows;
}

CayleySpectrum cayley_spectrum(int n, long ell) {
  if (ell < 2 || !is_prime_u64((uint64_t)ell))
    throw std::invalid_argument("cayley_spectrum: ell must be prime");

  // enumerate SL(n, F_ell)
  std::vector<MatFp> elements;
  if (ell == 2) {
    if (n != 2) throw std::invalid_argument("cayley_spectrum: ell = 2 supported for n = 2 only");
    // SL(2,F_2): all six invertible 2x2 matrices
    for (long a = 0; a < 2; ++a)
      for (long b = 0; b < 2; ++b)
        for (long c = 0; c < 2; ++c)
          for (long d = 0; d < 2; ++d)
            if (((a * d - b * c) % 2 + 2) % 2 == 1) {
              MatFp m;
              m.n = 2;
              m.ell = 2;
              m.at(0, 0) = (uint8_t)a;
              m.at(0, 1) = (uint8_t)b;
              m.at(1, 0) = (uint8_t)c;
              m.at(1, 1) = (uint8_t)d;
              elements.push_back(m);
            }
  } else {
    MatrixGroupSpec spec;
    spec.family = GroupFamily::SL;
    spec.degree = n;
    spec.ell = ell;
    Int order = group_order(spec);
    if (order > 5000)
      throw GateError("cayley_size", "cayley_spectrum: |SL(n,F_ell)| = " + order.get_str() +
                                         " exceeds the dense eigensolve gate 5000");
    enumerate_group(spec, [&](const MatFp& m) { elements.push_back(m); });
  }

  size_t size = elements.size();
  std::unordered_map<uint64_t, int> index;
  index.reserve(size * 2);
  for (size_t i = 0; i < size; ++i) index[elements[i].key()] = (int)i;

  // generators: images of E_ij(+-1), kept as a multiset (collapses mod 2)
  std::vector<MatFp> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int c : {1, -1}) {
        MatFp e = MatFp::identity(n, ell);
        e.at(i, j) = (uint8_t)(((c % ell) + ell) % ell);
        gens.push_back(e);
      }
    }

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero((Eigen::Index)size, (Eigen::Index)size);
  double w = 1.0 / (double)gens.size();
  for (size_t v = 0; v < size; ++v) {
    for (const auto& s : gens) {
      MatFp target = mul(s, elements[v]);
      int u = index.at(target.key());
      M((Eigen::Index)u, (Eigen::Index)v) += w;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("cayley_spectrum: eigensolver failed");

  CayleySpectrum out;
  out.n = n;
  out.ell = ell;
  out.group_size = (long)size;
  out.generator_count = (long)gens.size();
  out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + size);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());

  const double tol = 1e-9;
  int ones = 0;
  double rho = 0.0;
  // drop exactly one eigenvalue 1 (the constant vector), track the rest
  bool dropped = false;
  for (int i = (int)size - 1; i >= 0; --i) {
    double lam = out.eigenvalues[(size_t)i];
    if (!dropped && std::abs(lam - 1.0) <= tol) {
      dropped = true;
      ++ones;
      continue;
    }
    if (std::abs(lam - 1.0) <= tol) ++ones;
    rho = std::max(rho, std::abs(lam));
  }
  out.rho = rho;
  out.trivial_simple = (ones == 1);
  out.has_minus_one = std::abs(out.eigenvalues.front() + 1.0) <= tol;
  out.alpha = (rho > 0 && rho < 1) ? -std::log(rho) / std::log((double)gens.size()) : 0.0;
  return out;
}

Rat coupon_collector_expectation(int n) {
  Rat h = 0;
  for (int k = 1; k <= n; ++k) h += Rat(1, k);
  return Rat(n) * h;
}

CouponStats coupon_and_transition_times(int n, long trials, uint64_t seed) {
  if (n < 2 || n > 6) throw std::invalid_argument("coupon_and_transition_times: n in [2,6]");
  if (trials < 1000) throw std::invalid_argument("coupon_and_transition_times: trials >= 10^3");
  const long cap = 10000;

  std::vector<long> t_vals((size_t)trials), tau_vals((size_t)trials);
  std::vector<char> censored((size_t)trials, 0);

  parallel_for(0, (size_t)trials, [&](size_t trial) {
    std::mt19937_64 rng(splitmix64(seed ^ (0xbf58476d1ce4e5b9ull * (trial + 1))));
    BigMat m(n);
    std::vector<char> touched((size_t)n, 0);
    int touched_count = 0;
    long t_n = -1, tau_n = -1;
    for (long k = 1; k <= cap; ++k) {
      GenPick g = pick_generator(rng, n);
      apply_elementary(m, g.i, g.j, g.c);
      if (!touched[(size_t)g.i]) {
        touched[(size_t)g.i] = 1;
        if (++touched_count == n && t_n < 0) t_n = k;
      }
      if (tau_n < 0 && touched_count == n) {
        // charpoly stays reducible while a basis row is untouched
        if (rational_irreducibility(walk_charpoly(m))) tau_n = k;
      }
      if (t_n >= 0 && tau_n >= 0) break;
    }
    if (t_n < 0 || tau_n < 0) {
      censored[trial] = 1;
      if (t_n < 0) t_n = cap;
      if (tau_n < 0) tau_n = cap;
    }
    if (tau_n < t_n) throw std::logic_error("transition before coupon collection");
    t_vals[trial] = t_n;
    tau_vals[trial] = tau_n;
  });

  auto mean_stderr = [&](const std::vector<long>& xs) {
    double mean = 0;
    for (long v : xs) mean += (double)v;
    mean /= (double)xs.size();
    double var = 0;
    for (long v : xs) var += ((double)v - mean) * ((double)v - mean);
    var /= (double)(xs.size() - 1);
    return std::pair<double, double>(mean, std::sqrt(var / (double)xs.size()));
  };

  CouponStats s;
  s.n = n;
  s.trials = trials;
  std::tie(s.t_mean, s.t_stderr) = mean_stderr(t_vals);
  std::tie(s.tau_mean, s.tau_stderr) = mean_stderr(tau_vals);
  s.t_exact = coupon_collector_expectation(n);
  s.ratio = s.tau_mean / s.t_mean;
  for (char c : censored) s.max_steps_hit += c;
  return s;
}

}  // namespace sievelab
