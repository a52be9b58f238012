#include "cqroots/sqrt_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cqroots/linsolve.hpp"

namespace cqroots {

namespace {

void require_cl30(const Multivector3& B) {
  if (!(B.sig == Signature::cl30()))
    throw std::invalid_argument("square roots are extracted in Cl(3,0)");
  for (double x : B.c)
    if (!std::isfinite(x))
      throw std::invalid_argument("non-finite coefficient");
}

// A root is written A = s + v + (S + V)e123 with v, V vectors. In blade
// coefficients: s = c0, v = (c1,c2,c3), S = c123, V = (c23, -c13, c12).
Multivector3 assemble_root(double s, double S, const std::array<double, 3>& v,
                           const std::array<double, 3>& V) {
  Multivector3 A(Signature::cl30());
  A.c[kScalar] = s;
  A.c[kE1] = v[0];
  A.c[kE2] = v[1];
  A.c[kE3] = v[2];
  A.c[kE23] = V[0];
  A.c[kE13] = -V[1];
  A.c[kE12] = V[2];
  A.c[kE123] = S;
  return A;
}

// A couple of plain Newton steps on F(A) = A^2 - B. The closed-form
// coefficients lose accuracy near branch degeneracies (the t,T formulas
// divide by nearly vanishing discriminant combinations); polishing restores
// full precision so the verification filter keeps legitimate roots.
Multivector3 polish_root(Multivector3 A, const Multivector3& B) {
  const double scale = 1.0 + inf_norm(B);
  for (int step = 0; step < 3; ++step) {
    Multivector3 F = A * A - B;
    if (inf_norm(F) <= 1e-14 * scale) break;
    Mat8 J;
    const BladeProductTable& t = blade_table(A.sig);
    for (size_t col = 0; col < 8; ++col) {
      // d(A^2) in blade direction e_col: A e_col + e_col A.
      std::array<double, 8> d{};
      for (size_t i = 0; i < 8; ++i) {
        if (A.c[i] == 0.0) continue;
        d[static_cast<size_t>(t.idx[i][col])] += t.sign[i][col] * A.c[i];
        d[static_cast<size_t>(t.idx[col][i])] += t.sign[col][i] * A.c[i];
      }
      for (size_t row = 0; row < 8; ++row) J[row][col] = d[row];
    }
    std::array<double, 8> rhs;
    for (size_t i = 0; i < 8; ++i) rhs[i] = -F.c[i];
    if (!solve8(J, rhs)) break;
    for (size_t i = 0; i < 8; ++i) A.c[i] += rhs[i];
  }
  return A;
}

Multivector3 canonical_sign(const Multivector3& A) {
  const double tol = 1e-12 * (1.0 + inf_norm(A));
  for (double x : A.c) {
    if (std::abs(x) <= tol) continue;
    return x > 0 ? A : neg(A);
  }
  return A;
}

bool lex_less(const Multivector3& a, const Multivector3& b) {
  for (size_t i = 0; i < 8; ++i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

}  // namespace

std::vector<Multivector3> SqrtSolution::isolated_roots() const {
  std::vector<Multivector3> out;
  for (const RootBranch& b : branches)
    if (const auto* mv = std::get_if<Multivector3>(&b)) out.push_back(*mv);
  return out;
}

std::vector<ContinuumFamily> SqrtSolution::continuum_families() const {
  std::vector<ContinuumFamily> out;
  for (const RootBranch& b : branches)
    if (const auto* f = std::get_if<ContinuumFamily>(&b)) out.push_back(*f);
  return out;
}

Discriminants discriminants(const Multivector3& B) {
  require_cl30(B);
  const auto& c = B.c;
  const double bS = c[kScalar] * c[kScalar] - c[kE1] * c[kE1] -
                    c[kE2] * c[kE2] - c[kE3] * c[kE3] + c[kE12] * c[kE12] +
                    c[kE13] * c[kE13] + c[kE23] * c[kE23] -
                    c[kE123] * c[kE123];
  const double bI = 2.0 * c[kE3] * c[kE12] - 2.0 * c[kE2] * c[kE13] +
                    2.0 * c[kE1] * c[kE23] - 2.0 * c[kScalar] * c[kE123];
  return {bS, bI, bS * bS + bI * bI};
}

std::vector<TtPair> tT_pairs(const Discriminants& d, double b0, double b123) {
  const double sqrtD = std::sqrt(d.D);
  const double eps = 1e-12 * (1.0 + std::abs(d.bS) + sqrtD);
  // g = -bS + sqrt(D). For bS > 0 the direct form cancels; the conjugate
  // form g = bI^2 / (sqrt(D) + bS) is exact.
  const double g = d.bS > 0 ? d.bI * d.bI / (sqrtD + d.bS) : -d.bS + sqrtD;
  if (g > eps) {
    const double r = std::sqrt(0.5 * g);
    // q = bI / (sqrt(2) sqrt(g)); for bS > 0 this equals
    // sign(bI) sqrt((sqrt(D) + bS)/2), which avoids the tiny-g division.
    const double q = d.bS > 0
                         ? std::copysign(std::sqrt(0.5 * (sqrtD + d.bS)), d.bI)
                         : d.bI / (std::sqrt(2.0) * std::sqrt(g));
    return {{0.25 * (b123 + r), 0.25 * (q - b0)},
            {0.25 * (b123 - r), 0.25 * (-q - b0)}};
  }
  if (d.bS > eps) {
    const double sb = std::sqrt(d.bS);
    return {{0.25 * b123, 0.25 * (sb - b0)},
            {0.25 * b123, 0.25 * (-sb - b0)}};
  }
  if (std::abs(d.bS) <= eps) {
    // Doubly degenerate discriminant: the two pairs coincide.
    return {{0.25 * b123, -0.25 * b0}};
  }
  return {};  // unreachable for finite input: g >= -2 bS > 0 when bS < 0
}

std::vector<ScalarPair> sS_from_tT(const TtPair& p) {
  if (std::abs(p.t) > 1e-14 * (1.0 + std::abs(p.T))) {
    const double s = std::sqrt(-p.T + std::sqrt(p.T * p.T + p.t * p.t));
    const double S = p.t / s;
    return {{s, S}, {-s, -S}};
  }
  if (p.T > 1e-14) {
    const double S = std::sqrt(2.0 * p.T);
    return {{0.0, S}, {0.0, -S}};
  }
  if (p.T < -1e-14) {
    const double s = std::sqrt(-2.0 * p.T);
    return {{s, 0.0}, {-s, 0.0}};
  }
  return {{0.0, 0.0}};
}

std::optional<RootBranch> vV_solve(const Multivector3& B,
                                   const ScalarPair& sp) {
  require_cl30(B);
  const auto& c = B.c;
  const double scale = 1.0 + inf_norm(B);
  const double n2 = sp.s * sp.s + sp.S * sp.S;
  if (n2 > 1e-12 * scale) {
    const double d = 2.0 * n2;
    const std::array<double, 3> v = {
        (c[kE1] * sp.s + c[kE23] * sp.S) / d,
        (c[kE2] * sp.s - c[kE13] * sp.S) / d,
        (c[kE3] * sp.s + c[kE12] * sp.S) / d};
    const std::array<double, 3> V = {
        (c[kE23] * sp.s - c[kE1] * sp.S) / d,
        -(c[kE13] * sp.s + c[kE2] * sp.S) / d,
        (c[kE12] * sp.s - c[kE3] * sp.S) / d};
    return RootBranch(assemble_root(sp.s, sp.S, v, V));
  }
  const double btol = 1e-12 * scale;
  if (std::abs(c[kE1]) <= btol && std::abs(c[kE2]) <= btol &&
      std::abs(c[kE3]) <= btol && std::abs(c[kE12]) <= btol &&
      std::abs(c[kE13]) <= btol && std::abs(c[kE23]) <= btol) {
    return RootBranch(ContinuumFamily{c[kScalar], c[kE123]});
  }
  return std::nullopt;
}

SqrtSolution sqrt_mv(const Multivector3& B, double verify_tol) {
  require_cl30(B);
  const Discriminants d = discriminants(B);
  const double scale = 1.0 + inf_norm(B);

  std::vector<Multivector3> roots;
  std::vector<ContinuumFamily> families;
  for (const TtPair& p : tT_pairs(d, B.c[kScalar], B.c[kE123])) {
    for (const ScalarPair& sp : sS_from_tT(p)) {
      std::optional<RootBranch> branch = vV_solve(B, sp);
      if (!branch) continue;
      if (auto* mv = std::get_if<Multivector3>(&*branch)) {
        Multivector3 A = polish_root(*mv, B);
        if (inf_norm(A * A - B) <= verify_tol * scale) roots.push_back(A);
      } else {
        families.push_back(std::get<ContinuumFamily>(*branch));
      }
    }
  }

  // Canonicalize so +-A pairs collapse to one representative, dedupe, sort,
  // then list both signs explicitly.
  std::vector<Multivector3> reps;
  for (const Multivector3& A : roots) {
    Multivector3 r = canonical_sign(A);
    const double tol = 1e-9 * (1.0 + inf_norm(r));
    bool dup = false;
    for (const Multivector3& seen : reps)
      if (inf_norm(r - seen) <= tol) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(r);
  }
  std::sort(reps.begin(), reps.end(), lex_less);

  SqrtSolution out;
  for (const Multivector3& r : reps) {
    out.branches.emplace_back(r);
    out.branches.emplace_back(neg(r));
  }
  std::vector<ContinuumFamily> seen;
  for (const ContinuumFamily& f : families) {
    bool dup = false;
    for (const ContinuumFamily& g : seen)
      if (std::abs(f.b0 - g.b0) <= 1e-12 * scale &&
          std::abs(f.b123 - g.b123) <= 1e-12 * scale) {
        dup = true;
        break;
      }
    if (!dup) {
      seen.push_back(f);
      out.branches.emplace_back(f);
    }
  }
  return out;
}

std::optional<Multivector3> continuum_sample(const ContinuumFamily& f,
                                             const std::array<double, 3>& V,
                                             double phase) {
  for (double x : V)
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite V");
  const double c = 0.5 * f.b123;
  const double V2 = V[0] * V[0] + V[1] * V[1] + V[2] * V[2];
  std::array<double, 3> v{};
  if (V2 == 0.0) {
    // v.V = 0 forces b123 = 0, and |v|^2 = b0 needs b0 >= 0. The free
    // direction of v lives in the e1-e2 plane, selected by `phase`.
    if (c != 0.0 || f.b0 < 0.0) return std::nullopt;
    const double len = std::sqrt(f.b0);
    v = {len * std::cos(phase), len * std::sin(phase), 0.0};
  } else {
    // v = (c/|V|^2) V + w with w in the plane orthogonal to V.
    const double w2 = f.b0 + V2 - c * c / V2;
    if (w2 < 0.0) return std::nullopt;
    // Deterministic orthonormal basis (u1,u2) of that plane.
    const std::array<double, 3> axis =
        std::abs(V[0]) <= std::abs(V[1]) && std::abs(V[0]) <= std::abs(V[2])
            ? std::array<double, 3>{1, 0, 0}
        : std::abs(V[1]) <= std::abs(V[2]) ? std::array<double, 3>{0, 1, 0}
                                           : std::array<double, 3>{0, 0, 1};
    std::array<double, 3> u1 = {V[1] * axis[2] - V[2] * axis[1],
                                V[2] * axis[0] - V[0] * axis[2],
                                V[0] * axis[1] - V[1] * axis[0]};
    const double n1 =
        std::sqrt(u1[0] * u1[0] + u1[1] * u1[1] + u1[2] * u1[2]);
    for (double& x : u1) x /= n1;
    std::array<double, 3> u2 = {V[1] * u1[2] - V[2] * u1[1],
                                V[2] * u1[0] - V[0] * u1[2],
                                V[0] * u1[1] - V[1] * u1[0]};
    const double n2 =
        std::sqrt(u2[0] * u2[0] + u2[1] * u2[1] + u2[2] * u2[2]);
    for (double& x : u2) x /= n2;
    const double w = std::sqrt(w2);
    for (int i = 0; i < 3; ++i)
      v[static_cast<size_t>(i)] =
          c / V2 * V[static_cast<size_t>(i)] +
          w * (std::cos(phase) * u1[static_cast<size_t>(i)] +
               std::sin(phase) * u2[static_cast<size_t>(i)]);
  }
  return assemble_root(0.0, 0.0, v, V);
}

double continuum_residual(const ContinuumFamily& f, const Multivector3& A) {
  if (!(A.sig == Signature::cl30()))
    throw std::invalid_argument("continuum families live in Cl(3,0)");
  const std::array<double, 3> v = {A.c[kE1], A.c[kE2], A.c[kE3]};
  const std::array<double, 3> V = {A.c[kE23], -A.c[kE13], A.c[kE12]};
  const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  const double V2 = V[0] * V[0] + V[1] * V[1] + V[2] * V[2];
  const double vV = v[0] * V[0] + v[1] * V[1] + v[2] * V[2];
  double r = std::abs(v2 - V2 - f.b0);
  r = std::max(r, std::abs(2.0 * vV - f.b123));
  r = std::max(r, std::abs(A.c[kScalar]));
  r = std::max(r, std::abs(A.c[kE123]));
  return r;
}

CqSqrtSolution sqrt_cq(const ComplexQuaternion& Q, double verify_tol) {
  const BasisMap& m = default_map(Q.family);
  const SqrtSolution sol = sqrt_mv(to_mv(Q, m), verify_tol);
  CqSqrtSolution out;
  out.map = &m;
  for (const Multivector3& A : sol.isolated_roots())
    out.isolated.push_back(from_mv(A, m));
  out.continuum = sol.continuum_families();
  return out;
}

}  // namespace cqroots
