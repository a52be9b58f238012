#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "cqroots/isomaps.hpp"
#include "cqroots/multivector.hpp"

namespace cqroots {

/// Intermediate quantities of the root extraction. For B = b0 + ... + b123
/// e123 in Cl(3,0):
///   bS = b0^2 - b1^2 - b2^2 - b3^2 + b12^2 + b13^2 + b23^2 - b123^2
///   bI = 2 b3 b12 - 2 b2 b13 + 2 b1 b23 - 2 b0 b123
///   D  = bS^2 + bI^2
struct Discriminants {
  double bS, bI, D;
};

struct TtPair {
  double t, T;
};

struct ScalarPair {
  double s, S;
};

/// Constraint data for a continuum of roots A = v + V e123 with
/// v^2 - V^2 = b0 and 2 v.V = b123 (scalar and pseudoscalar parts of A zero).
struct ContinuumFamily {
  double b0, b123;
};

using RootBranch = std::variant<Multivector3, ContinuumFamily>;

/// All square roots of a multivector: isolated roots (listed explicitly,
/// closed under negation, sorted) and/or continuum families. Empty when no
/// multivector squares to the input.
struct SqrtSolution {
  std::vector<RootBranch> branches;

  std::vector<Multivector3> isolated_roots() const;
  std::vector<ContinuumFamily> continuum_families() const;
  bool empty() const { return branches.empty(); }
};

Discriminants discriminants(const Multivector3& B);

/// The (t,T) pairs feeding the scalar back-solve; empty when the
/// discriminant configuration admits no roots. A doubly degenerate
/// discriminant (bS = bI = 0) yields a single coincident pair.
std::vector<TtPair> tT_pairs(const Discriminants& d, double b0, double b123);

/// Both sign choices of (s,S) with s^2 - S^2 = -2T and sS = t. The formula
/// S = t/s degenerates at t = 0 and is replaced by the exact back-solve:
/// t=0,T>0 -> (0, +-sqrt(2T)); t=0,T<0 -> (+-sqrt(-2T), 0); t=T=0 -> (0,0).
std::vector<ScalarPair> sS_from_tT(const TtPair& p);

/// One isolated-root candidate or continuum family for a scalar pair;
/// nullopt when the pair admits neither (the no-root outcome).
std::optional<RootBranch> vV_solve(const Multivector3& B,
                                   const ScalarPair& sp);

/// Complete square-root extraction in Cl(3,0). Every isolated root is
/// verified by squaring (inf-norm residual <= verify_tol * (1+inf_norm(B)))
/// and candidates failing verification are dropped.
SqrtSolution sqrt_mv(const Multivector3& B, double verify_tol = 1e-10);

/// One member of a continuum family: v is reconstructed from V and `phase`
/// (the angle of the free component of v in the plane orthogonal to V).
/// nullopt when the parameters are infeasible. V = 0 requires b123 = 0 and
/// b0 >= 0, with `phase` picking the direction of v in the e1-e2 plane.
std::optional<Multivector3> continuum_sample(const ContinuumFamily& f,
                                             const std::array<double, 3>& V,
                                             double phase);

/// Distance of A from a continuum family: max over the defect in the two
/// constraints and the magnitudes of A's scalar and pseudoscalar parts.
double continuum_residual(const ContinuumFamily& f, const Multivector3& A);

/// Quaternion-level square roots: map through the family's Cl(3,0) basis
/// map, extract, and map every isolated root back. Continuum families stay
/// in multivector form, to be sampled and pulled back through `map`.
struct CqSqrtSolution {
  std::vector<ComplexQuaternion> isolated;
  std::vector<ContinuumFamily> continuum;
  const BasisMap* map = nullptr;
};

CqSqrtSolution sqrt_cq(const ComplexQuaternion& Q, double verify_tol = 1e-10);

}  // namespace cqroots
