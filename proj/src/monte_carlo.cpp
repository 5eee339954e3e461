#include "hypack/monte_carlo.hpp"

#include "hypack/errors.hpp"
#include "hypack/simplex_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hypack {
namespace {

constexpr std::uint64_t kBatchSize = 1u << 16;

struct BatchSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t accepted = 0;
};

struct Problem {
  int n = 0;
  Eigen::VectorXd lo, hi;
  std::vector<Eigen::VectorXd> rows;  // side * covector, pairs with (1, y)
  double exponent = 0.0;
};

BatchSums run_batch(const Problem& pr, std::uint64_t seed, std::uint64_t batch, std::uint64_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  BatchSums out;
  Eigen::VectorXd x(pr.n + 1);
  x[0] = 1.0;
  for (std::uint64_t k = 0; k < count; ++k) {
    for (int i = 0; i < pr.n; ++i) x[i + 1] = pr.lo[i] + (pr.hi[i] - pr.lo[i]) * unit(rng);
    bool inside = true;
    for (const auto& r : pr.rows) {
      if (r.dot(x) < 0.0) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    const double r2 = x.tail(pr.n).squaredNorm();
    if (r2 >= 1.0) throw GeometryError("Monte Carlo region reaches the absolute; polytope is not compact");
    const double w = std::pow(1.0 - r2, pr.exponent);
    out.sum += w;
    out.sum_sq += w * w;
    ++out.accepted;
  }
  return out;
}

}  // namespace

unsigned worker_threads() {
  if (const char* env = std::getenv("HYPACK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MonteCarloEstimate monte_carlo_volume(std::span<const Halfspace> halfspaces,
                                      std::span<const LorentzVector> hull_points,
                                      const MonteCarloOptions& options) {
  if (hull_points.empty() || halfspaces.empty()) throw std::invalid_argument("monte_carlo_volume: empty input");
  if (options.samples == 0) throw std::invalid_argument("monte_carlo_volume: need at least one sample");
  Problem pr;
  pr.n = hull_points.front().dim();
  pr.exponent = -0.5 * (pr.n + 1);
  pr.lo = Eigen::VectorXd::Constant(pr.n, 1.0);
  pr.hi = Eigen::VectorXd::Constant(pr.n, -1.0);
  for (const auto& v : hull_points) {
    if (v.dim() != pr.n) throw std::invalid_argument("monte_carlo_volume: dimension mismatch");
    const Eigen::VectorXd y = v.affine().coords().tail(pr.n);
    pr.lo = pr.lo.cwiseMin(y);
    pr.hi = pr.hi.cwiseMax(y);
  }
  for (const auto& h : halfspaces) {
    if (h.form.dim() != pr.n) throw std::invalid_argument("monte_carlo_volume: dimension mismatch");
    pr.rows.push_back(h.side * h.form.covector());
  }

  const std::uint64_t batches = (options.samples + kBatchSize - 1) / kBatchSize;
  std::vector<BatchSums> sums(batches);
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(options.threads ? options.threads : worker_threads(), batches));
  auto work = [&](unsigned tid) {
    for (std::uint64_t b = tid; b < batches; b += threads) {
      const std::uint64_t count = std::min(kBatchSize, options.samples - b * kBatchSize);
      sums[b] = run_batch(pr, options.seed, b, count);
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  BatchSums total;
  for (const auto& s : sums) {
    total.sum += s.sum;
    total.sum_sq += s.sum_sq;
    total.accepted += s.accepted;
  }
  const double box = (pr.hi - pr.lo).prod();
  const double n = static_cast<double>(options.samples);
  const double mean = total.sum / n;
  const double var = std::max(0.0, total.sum_sq / n - mean * mean);

  MonteCarloEstimate est;
  est.volume = box * mean;
  est.std_error = box * std::sqrt(var / n);
  est.samples = options.samples;
  est.accepted = total.accepted;
  return est;
}

MonteCarloEstimate mc_truncated_orthoscheme4_volume(double p, const MonteCarloOptions& options) {
  const RegularSimplex4 g = build_simplex(p_to_s(p));
  std::vector<Halfspace> hs;
  for (const auto& f : g.face_forms) hs.push_back({f, 1});
  // Keep the side of pol(B1) that holds the simplex centre.
  const HyperplaneForm& beta1 = g.polar_forms[0];
  hs.push_back({beta1, bilinear_form(beta1, g.centers[0]) > 0 ? 1 : -1});

  std::vector<LorentzVector> hull = g.centers;
  hull.insert(hull.end(), g.feet.begin(), g.feet.end());
  return monte_carlo_volume(hs, hull, options);
}

MonteCarloEstimate mc_base_orthoscheme_volume(double p, const MonteCarloOptions& options) {
  const RegularSimplex4 g = build_simplex(p_to_s(p));
  std::vector<Halfspace> hs;
  for (const auto& f : g.base_forms) hs.push_back({f, 1});
  return monte_carlo_volume(hs, g.base_cell, options);
}

}  // namespace hypack
