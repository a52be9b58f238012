#include "cqroots/cquat.hpp"

#include <cmath>
#include <stdexcept>

namespace cqroots {

namespace {

// The off-diagonal products follow from the squares and the triple product:
//   ij = t*sq_k*k,  jk = t*sq_i*i,  ik = t*sq_i*sq_k*j   (t = sign of ijk),
// with reversed orders anticommuting. This reproduces every printed product
// rule of all four families.
FamilyTraits build_traits(int sq_i, int sq_j, int sq_k, int triple) {
  FamilyTraits t{sq_i, sq_j, sq_k, triple, {}, {}};
  auto set = [&t](int a, int b, int idx, int sign) {
    t.idx[static_cast<size_t>(a)][static_cast<size_t>(b)] =
        static_cast<int8_t>(idx);
    t.sign[static_cast<size_t>(a)][static_cast<size_t>(b)] =
        static_cast<int8_t>(sign);
  };
  for (int x = 0; x < 4; ++x) {
    set(0, x, x, 1);
    set(x, 0, x, 1);
  }
  set(1, 1, 0, sq_i);
  set(2, 2, 0, sq_j);
  set(3, 3, 0, sq_k);
  set(1, 2, 3, triple * sq_k);   // ij
  set(2, 1, 3, -triple * sq_k);  // ji
  set(2, 3, 1, triple * sq_i);   // jk
  set(3, 2, 1, -triple * sq_i);  // kj
  set(1, 3, 2, triple * sq_i * sq_k);   // ik
  set(3, 1, 2, -triple * sq_i * sq_k);  // ki
  return t;
}

void require_same_family(const ComplexQuaternion& a,
                         const ComplexQuaternion& b) {
  if (a.family != b.family)
    throw std::invalid_argument(std::string("family mismatch: ") +
                                family_name(a.family) + " vs " +
                                family_name(b.family));
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Hamilton: return "hamilton";
    case Family::Coquaternion: return "coquaternion";
    case Family::Conectorine: return "conectorine";
    case Family::Nectorine: return "nectorine";
  }
  return "?";
}

const FamilyTraits& family_traits(Family f) {
  static const FamilyTraits hamilton = build_traits(-1, -1, -1, -1);
  static const FamilyTraits coquaternion = build_traits(-1, 1, 1, 1);
  static const FamilyTraits conectorine = build_traits(1, 1, -1, -1);
  static const FamilyTraits nectorine = build_traits(1, -1, 1, 1);
  switch (f) {
    case Family::Hamilton: return hamilton;
    case Family::Coquaternion: return coquaternion;
    case Family::Conectorine: return conectorine;
    case Family::Nectorine: return nectorine;
  }
  throw std::invalid_argument("unknown family");
}

ComplexQuaternion ComplexQuaternion::scalar(Complex x, Family f) {
  ComplexQuaternion r(f);
  r.q[0] = x;
  return r;
}

ComplexQuaternion ComplexQuaternion::basis(int index, Family f) {
  if (index < 0 || index > 7)
    throw std::invalid_argument("basis index out of range");
  ComplexQuaternion r(f);
  r.q[static_cast<size_t>(index % 4)] =
      index < 4 ? Complex(1, 0) : Complex(0, 1);
  return r;
}

std::array<double, 8> ComplexQuaternion::coeffs() const {
  return {q[0].real(), q[1].real(), q[2].real(), q[3].real(),
          q[0].imag(), q[1].imag(), q[2].imag(), q[3].imag()};
}

ComplexQuaternion ComplexQuaternion::from_coeffs(
    const std::array<double, 8>& co, Family f) {
  for (double x : co)
    if (!std::isfinite(x))
      throw std::invalid_argument("non-finite quaternion coefficient");
  return ComplexQuaternion(f, {co[0], co[4]}, {co[1], co[5]}, {co[2], co[6]},
                           {co[3], co[7]});
}

ComplexQuaternion cq_mul(const ComplexQuaternion& p,
                         const ComplexQuaternion& q) {
  require_same_family(p, q);
  const FamilyTraits& t = family_traits(p.family);
  ComplexQuaternion r(p.family);
  for (size_t a = 0; a < 4; ++a) {
    if (p.q[a] == Complex{}) continue;
    for (size_t b = 0; b < 4; ++b) {
      if (q.q[b] == Complex{}) continue;
      r.q[static_cast<size_t>(t.idx[a][b])] +=
          double(t.sign[a][b]) * p.q[a] * q.q[b];
    }
  }
  return r;
}

ComplexQuaternion cq_add(const ComplexQuaternion& p,
                         const ComplexQuaternion& q) {
  require_same_family(p, q);
  ComplexQuaternion r(p.family);
  for (size_t i = 0; i < 4; ++i) r.q[i] = p.q[i] + q.q[i];
  return r;
}

ComplexQuaternion cq_sub(const ComplexQuaternion& p,
                         const ComplexQuaternion& q) {
  require_same_family(p, q);
  ComplexQuaternion r(p.family);
  for (size_t i = 0; i < 4; ++i) r.q[i] = p.q[i] - q.q[i];
  return r;
}

ComplexQuaternion cq_scale(const ComplexQuaternion& p, Complex c) {
  ComplexQuaternion r(p.family);
  for (size_t i = 0; i < 4; ++i) r.q[i] = p.q[i] * c;
  return r;
}

ComplexQuaternion cq_neg(const ComplexQuaternion& p) {
  return cq_scale(p, Complex(-1, 0));
}

ComplexQuaternion conj_complex(const ComplexQuaternion& p) {
  ComplexQuaternion r(p.family);
  for (size_t i = 0; i < 4; ++i) r.q[i] = std::conj(p.q[i]);
  return r;
}

ComplexQuaternion conj_quat(const ComplexQuaternion& p) {
  ComplexQuaternion r = p;
  for (size_t i = 1; i < 4; ++i) r.q[i] = -r.q[i];
  return r;
}

Complex pseudo_norm(const ComplexQuaternion& p) {
  // Q Q*(star) = q0^2 - q1^2 i^2 - q2^2 j^2 - q3^2 k^2; the i,j,k parts of
  // the product cancel identically, so the scalar part is the whole value.
  return cq_mul(p, conj_quat(p)).q[0];
}

double norm_squared(const ComplexQuaternion& p) {
  double s = 0.0;
  for (const Complex& x : p.q) s += std::norm(x);
  return s;
}

std::optional<ComplexQuaternion> inverse(const ComplexQuaternion& p) {
  Complex n = pseudo_norm(p);
  if (std::abs(n) <= 1e-12 * (1.0 + norm_squared(p))) return std::nullopt;
  return cq_scale(conj_quat(p), Complex(1, 0) / n);
}

double cq_inf_norm(const ComplexQuaternion& p) {
  double m = 0.0;
  for (double x : p.coeffs()) m = std::max(m, std::abs(x));
  return m;
}

bool cq_approx_eq(const ComplexQuaternion& a, const ComplexQuaternion& b,
                  double tol) {
  require_same_family(a, b);
  return cq_inf_norm(cq_sub(a, b)) <= tol;
}

Matrix2c mat_mul(const Matrix2c& a, const Matrix2c& b) {
  Matrix2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

double mat_inf_dist(const Matrix2c& a, const Matrix2c& b) {
  double m = 0.0;
  for (size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
  return m;
}

Matrix2c matrix_rep(const ComplexQuaternion& p) {
  if (p.family != Family::Hamilton)
    throw std::invalid_argument(
        "matrix_rep is defined for the Hamilton family only");
  const Complex I(0, 1);
  Matrix2c r;
  r(0, 0) = p.q[0] + I * p.q[1];
  r(0, 1) = p.q[2] + I * p.q[3];
  r(1, 0) = -p.q[2] + I * p.q[3];
  r(1, 1) = p.q[0] - I * p.q[1];
  return r;
}

}  // namespace cqroots
