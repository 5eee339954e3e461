#include "hypack/verify.hpp"

#include "hypack/density.hpp"
#include "hypack/monte_carlo.hpp"
#include "hypack/oracles.hpp"
#include "hypack/simplex_model.hpp"
#include "hypack/special_functions.hpp"
#include "hypack/truncation.hpp"
#include "hypack/volumes.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hypack {
namespace {

using std::numbers::pi;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Each check gets `bump` = 1 when tampered, 0 otherwise, and shifts its
// reference by a decisive amount.

Outcome check_domain(double bump) {
  const double lo = p_lower();
  const double hi = p_upper_computed();
  const double lo_min = 5.1042 + bump;
  const double lo_max = 5.1044 + bump;
  const bool ok = lo >= lo_min && lo <= lo_max && std::abs(hi - 6.0) <= 1e-14;
  return {ok, fmt("lower = %.17g in [%.4f, %.4f], |upper - 6| = %.3g", lo, lo_min, lo_max, std::abs(hi - 6.0))};
}

Outcome check_optimum(double bump) {
  const auto t0 = Clock::now();
  const OptimumResult r = maximize(1e-10);
  const double secs = seconds_since(t0);
  const double p_ref = 5.19550 + 0.01 * bump;
  const double d_ref = 0.7586482;
  const bool ok = std::abs(r.p_opt - p_ref) <= 5e-4 && std::abs(r.delta_opt - d_ref) <= 1e-5 && secs < 1.0;
  return {ok, fmt("p_opt = %.10f (ref %.5f +- 5e-4), delta_opt = %.10f (ref %.7f +- 1e-5), %.3f s", r.p_opt, p_ref,
                  r.delta_opt, d_ref, secs)};
}

Outcome check_unimodal(double bump) {
  const auto t0 = Clock::now();
  const auto rows = sweep(p_lower(), kPUpper, 10000);
  int changes = 0;
  int last = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double d = rows[i].delta - rows[i - 1].delta;
    const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  const double secs = seconds_since(t0);
  const int expected = 1 + static_cast<int>(bump);
  return {changes == expected && secs < 5.0,
          fmt("%d sign changes over %zu points (expected %d), %.3f s", changes, rows.size(), expected, secs)};
}

Outcome check_ideal_limit(double bump) {
  const double d = density(p_lower() + 1e-6).delta;
  const double lo = 0.72 + 0.1 * bump;
  const double hi = 0.75 + 0.1 * bump;
  return {d > lo && d < hi, fmt("delta(lower + 1e-6) = %.10f, band (%.2f, %.2f)", d, lo, hi)};
}

Outcome check_vanishing(double bump) {
  const double p = kPUpper - 1e-9;
  const double d = density(p).delta;
  const double h = height(p);
  const double d_max = 1e-6 * (1.0 - bump);
  const double h_max = 1e-4 * (1.0 - bump);
  return {d < d_max && h < h_max, fmt("delta(6 - 1e-9) = %.6g (< %.0e required), height = %.6g (< %.0e required)",
                                      d, d_max, h, h_max)};
}

Outcome check_witness(double bump) {
  const MonotonicityWitness w = monotonicity_witness();
  const double margin = 0.01 + bump;
  return {w.h1 < w.h2 && w.d1 > w.d2 + margin,
          fmt("h1 = %.6f < h2 = %.6f, d1 = %.7f > d2 = %.7f + %.2f", w.h1, w.h2, w.d1, w.d2, margin)};
}

Outcome check_gram(double bump, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pick(1.0, s_upper());
  double worst_g = 0.0, worst_gs = 0.0;
  for (int k = 0; k < 20; ++k) {
    double s = pick(rng);
    while (s <= 1.0) s = pick(rng);
    const RegularSimplex4 g = build_simplex(s);
    Eigen::MatrixXd expected = Eigen::MatrixXd::Identity(5, 5);
    const double c = std::sqrt(10.0) / std::sqrt(16.0 - s * s) + bump;
    expected(0, 1) = expected(1, 0) = -c;
    for (int i = 1; i < 4; ++i) expected(i, i + 1) = expected(i + 1, i) = -0.5;
    worst_g = std::max(worst_g, (gram_of_forms(g.face_forms).entries() - expected).cwiseAbs().maxCoeff());

    const double off = (s * s + 4.0) / (s * s - 16.0);
    const Eigen::MatrixXd gs = gram_of_forms(g.facet_forms).entries();
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        if (i != j) worst_gs = std::max(worst_gs, std::abs(gs(i, j) - off));
      }
    }
  }
  return {worst_g <= 1e-12 && worst_gs <= 1e-12,
          fmt("max deviation: orthoscheme Gram %.3g, simplex Gram %.3g over 20 values of s", worst_g, worst_gs)};
}

Outcome check_height_cross(double bump, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pick(p_lower() + kEvalGuard, kPUpper - kEvalGuard);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double p = pick(rng);
    const RegularSimplex4 g = build_simplex(p_to_s(p));
    const double h = height(p) + bump;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        const PlaneRelation rel = plane_plane_relation(g.polar_forms[i], g.polar_forms[j]);
        worst = std::max(worst, std::abs(h - 0.5 * rel.distance));
      }
    }
  }
  return {worst <= 1e-12, fmt("max |h(p) - d(beta_i, beta_j)/2| = %.3g over 50 values of p, all pairs", worst)};
}

Outcome check_bolyai(double bump, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> area(0.001, 2.0);
  std::uniform_real_distribution<double> h(0.001, 3.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = 3 + k % 3;
    const double a = area(rng);
    const double t = h(rng);
    const double closed = hyperball_piece_volume({n, a, t}) * (1.0 + bump);
    const double quad = oracle::hyperball_piece_quadrature(n, a, t);
    worst = std::max(worst, std::abs(closed - quad) / quad);
  }
  return {worst <= 1e-10, fmt("max relative error %.3g over 100 cases, n = 3, 4, 5", worst)};
}

Outcome check_volumes(double bump, const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  MonteCarloOptions mc;
  mc.samples = opt.mc_samples;
  mc.seed = opt.seed;
  const double p = 5.5;
  const MonteCarloEstimate e4 = mc_truncated_orthoscheme4_volume(p, mc);
  const MonteCarloEstimate e3 = mc_base_orthoscheme_volume(p, mc);
  const double v4 = truncated_orthoscheme4_volume(p) * (1.0 + bump);
  const double v3 = base_orthoscheme_volume(p) * (1.0 + bump);
  // 2% at full sample size; fewer samples widen the band to five standard errors.
  const double tol4 = std::max(0.02, 5.0 * e4.relative_error());
  const double tol3 = std::max(0.02, 5.0 * e3.relative_error());
  const double r4 = std::abs(e4.volume - v4) / v4;
  const double r3 = std::abs(e3.volume - v3) / v3;
  const double secs = seconds_since(t0);
  return {r4 <= tol4 && r3 <= tol3 && secs < 60.0,
          fmt("Vol4 %.8g vs MC %.8g (rel %.2e, tol %.2e); Vol3 %.8g vs MC %.8g (rel %.2e, tol %.2e); %llu samples, "
              "%.2f s",
              v4, e4.volume, r4, tol4, v3, e3.volume, r3, tol3, static_cast<unsigned long long>(opt.mc_samples), secs)};
}

Outcome check_lobachevsky(double bump, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pick(0.0, pi);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double x = pick(rng);
    worst = std::max(worst, std::abs(lobachevsky(x) + bump - oracle::lobachevsky_quadrature(x)));
  }
  const double q = oracle::lobachevsky_quadrature(pi / 6);
  const double ref = 0.5074708;
  return {worst <= 1e-10 && std::abs(q - ref) <= 1e-7,
          fmt("max |series - quadrature| = %.3g over 100 points; quadrature L(pi/6) = %.10f (ref %.7f)", worst, q,
              ref)};
}

Outcome check_decomposition(double bump) {
  const double s = 1.2;
  const DecompositionFixture reg = regular_simplex_fixture(s);
  const auto reg_bases = reg.base_planes();
  const Decomposition dr = decompose(vertex_enumeration(reg.halfspaces, reg.dim), reg_bases, reg.height);
  const bool reg_ok = dr.events.empty() && dr.pieces.size() == 1 && is_truncated_simplex(dr.pieces[0], reg_bases);

  const DecompositionFixture glued = glued_simplices_fixture(s);
  const auto glued_bases = glued.base_planes();
  const Decomposition dg = decompose(vertex_enumeration(glued.halfspaces, glued.dim), glued_bases, glued.height);
  const std::size_t expected_pieces = 2 + static_cast<std::size_t>(bump);
  bool glued_ok = dg.pieces.size() == expected_pieces;
  for (const auto& p : dg.pieces) glued_ok = glued_ok && is_truncated_simplex(p, glued_bases);
  bool events_ok = !dg.events.empty();
  for (const auto& e : dg.events) {
    events_ok = events_ok && e.lemma31_checked && e.n_after_first < e.n_before && e.n_after_second < e.n_before;
  }
  return {reg_ok && glued_ok && events_ok,
          fmt("regular: %zu piece(s), %zu cuts; glued: %zu pieces (expected %zu), %zu cuts, hyperball and outer-point "
              "checks %s",
              dr.pieces.size(), dr.events.size(), dg.pieces.size(), expected_pieces, dg.events.size(),
              events_ok ? "passed" : "failed")};
}

const char* check_name(int id) {
  static const char* names[kCheckCount] = {
      "domain endpoints",   "density optimum",       "unimodality",       "ideal limit density",
      "vanishing limit",    "monotonicity witness",  "Gram matrices",     "height cross-check",
      "hyperball pieces",   "Monte Carlo volumes",   "Lobachevsky",       "decomposition harness",
  };
  return names[id - 1];
}

}  // namespace

CheckResult run_check(int id, const VerifyOptions& options) {
  if (id < 1 || id > kCheckCount) throw std::out_of_range("no check with id " + std::to_string(id));
  const double bump = options.tamper == id ? 1.0 : 0.0;
  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(id));
  const auto t0 = Clock::now();
  Outcome out{false, ""};
  try {
    switch (id) {
      case 1: out = check_domain(bump); break;
      case 2: out = check_optimum(bump); break;
      case 3: out = check_unimodal(bump); break;
      case 4: out = check_ideal_limit(bump); break;
      case 5: out = check_vanishing(bump); break;
      case 6: out = check_witness(bump); break;
      case 7: out = check_gram(bump, rng); break;
      case 8: out = check_height_cross(bump, rng); break;
      case 9: out = check_bolyai(bump, rng); break;
      case 10: out = check_volumes(bump, options); break;
      case 11: out = check_lobachevsky(bump, rng); break;
      case 12: out = check_decomposition(bump); break;
    }
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  return {id, check_name(id), out.passed, out.detail, seconds_since(t0)};
}

std::vector<CheckResult> run_checks(const VerifyOptions& options,
                                    const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> results;
  for (int id = 1; id <= kCheckCount; ++id) {
    results.push_back(run_check(id, options));
    if (on_result) on_result(results.back());
  }
  return results;
}

}  // namespace hypack
