#include "cqroots/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cqroots/sqrt_engine.hpp"

namespace cqroots {

namespace {

bool lex_less(const Multivector3& a, const Multivector3& b) {
  for (size_t i = 0; i < 8; ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

double inf_dist(const Multivector3& a, const Multivector3& b) {
  double m = 0.0;
  for (size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
  return m;
}

// Damped Newton on F(A) = A^2 - B: full step first, then halve until the
// residual decreases (up to 30 halvings). Returns true on convergence.
bool newton_from(Multivector3& A, const Multivector3& B, int max_iter,
                 double tol) {
  double res = inf_norm(A * A - B);
  for (int iter = 0; iter < max_iter; ++iter) {
    if (res <= tol) return true;
    Mat8 J = square_jacobian(A);
    std::array<double, 8> step;
    Multivector3 F = A * A - B;
    for (size_t i = 0; i < 8; ++i) step[i] = -F.c[i];
    if (!solve8(J, step)) return false;
    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h < 30; ++h) {
      Multivector3 trial = A;
      for (size_t i = 0; i < 8; ++i) trial.c[i] += lambda * step[i];
      const double trial_res = inf_norm(trial * trial - B);
      if (std::isfinite(trial_res) && trial_res < res) {
        A = trial;
        res = trial_res;
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) return res <= tol;
  }
  return res <= tol;
}

}  // namespace

Mat8 square_jacobian(const Multivector3& A) {
  const BladeProductTable& t = blade_table(A.sig);
  Mat8 J{};
  for (size_t col = 0; col < 8; ++col) {
    for (size_t i = 0; i < 8; ++i) {
      if (A.c[i] == 0.0) continue;
      J[static_cast<size_t>(t.idx[i][col])][col] += t.sign[i][col] * A.c[i];
      J[static_cast<size_t>(t.idx[col][i])][col] += t.sign[col][i] * A.c[i];
    }
  }
  return J;
}

std::vector<Multivector3> oracle_roots(const Multivector3& B,
                                       const OracleConfig& cfg) {
  if (!(B.sig == Signature::cl30()))
    throw std::invalid_argument("oracle operates in Cl(3,0)");
  if (cfg.starts < 1 || cfg.residual_tol <= 0 || cfg.cluster_tol <= 0)
    throw std::invalid_argument("bad oracle config");
  for (double x : B.c)
    if (!std::isfinite(x))
      throw std::invalid_argument("non-finite coefficient");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  const double tol = cfg.residual_tol * (1.0 + inf_norm(B));

  std::vector<Multivector3> clusters;
  for (int s = 0; s < cfg.starts; ++s) {
    Multivector3 A(Signature::cl30());
    for (size_t i = 0; i < 8; ++i) A.c[i] = box(rng);
    if (!newton_from(A, B, cfg.max_iter, tol)) continue;
    if (inf_norm(A * A - B) > tol) continue;
    bool merged = false;
    for (Multivector3& rep : clusters) {
      if (inf_dist(rep, A) <= cfg.cluster_tol) {
        if (inf_norm(A * A - B) < inf_norm(rep * rep - B)) rep = A;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back(A);
  }
  std::sort(clusters.begin(), clusters.end(), lex_less);
  return clusters;
}

CrossCheckReport cross_check(const Multivector3& B, const OracleConfig& cfg) {
  const std::vector<Multivector3> found = oracle_roots(B, cfg);
  const SqrtSolution sol = sqrt_mv(B);
  const std::vector<Multivector3> engine = sol.isolated_roots();
  const std::vector<ContinuumFamily> families = sol.continuum_families();

  CrossCheckReport rep;
  rep.oracle_solutions = static_cast<int>(found.size());
  rep.engine_isolated = static_cast<int>(engine.size());
  rep.engine_continuum = static_cast<int>(families.size());

  const double match_tol = std::max(cfg.cluster_tol, 1e-6);
  const double member_tol = 1e-8 * (1.0 + inf_norm(B));
  for (size_t i = 0; i < found.size(); ++i) {
    bool matched = false;
    for (const Multivector3& R : engine)
      if (inf_dist(found[i], R) <= match_tol) {
        matched = true;
        break;
      }
    if (!matched)
      for (const ContinuumFamily& f : families)
        if (continuum_residual(f, found[i]) <= member_tol) {
          matched = true;
          break;
        }
    if (matched)
      ++rep.matched;
    else
      rep.mismatches.push_back("oracle solution " + std::to_string(i) +
                               " not explained by the engine");
  }
  for (size_t i = 0; i < engine.size(); ++i) {
    bool reached = false;
    for (const Multivector3& O : found)
      if (inf_dist(engine[i], O) <= match_tol) {
        reached = true;
        break;
      }
    if (!reached)
      rep.mismatches.push_back("engine root " + std::to_string(i) +
                               " not reached by the oracle");
  }
  return rep;
}

}  // namespace cqroots
