#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqroots/linsolve.hpp"
#include "cqroots/multivector.hpp"

namespace cqroots {

struct OracleConfig {
  int starts = 512;          // random initial points in [-3,3]^8
  int max_iter = 100;        // Newton iteration cap per start
  double residual_tol = 1e-10;
  double cluster_tol = 1e-6;  // solutions closer than this are one root
  uint64_t seed = 0;
};

/// Brute-force solver for A^2 = B: damped Newton iteration from `starts`
/// random points, keeping solutions whose inf-norm residual is within
/// residual_tol, clustered by cluster_tol. Deterministic given the seed.
/// An empty result is a valid outcome (no roots found).
std::vector<Multivector3> oracle_roots(const Multivector3& B,
                                       const OracleConfig& cfg = {});

/// Jacobian of A -> A^2 assembled from the blade product table;
/// column b is A e_b + e_b A.
Mat8 square_jacobian(const Multivector3& A);

/// Agreement report between the oracle and sqrt_mv on one input: every
/// oracle solution must match an engine isolated root or lie on an engine
/// continuum family, and every engine isolated root must be reached by the
/// oracle.
struct CrossCheckReport {
  int oracle_solutions = 0;
  int engine_isolated = 0;
  int engine_continuum = 0;
  int matched = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

CrossCheckReport cross_check(const Multivector3& B,
                             const OracleConfig& cfg = {});

}  // namespace cqroots
