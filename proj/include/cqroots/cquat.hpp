#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace cqroots {

using Complex = std::complex<double>;

/// The four noncommutative quaternion families, distinguished by the signs
/// of i^2, j^2, k^2 and of the triple product ijk.
enum class Family : int {
  Hamilton = 0,     // i^2=j^2=k^2=-1, ijk=-1
  Coquaternion,     // i^2=-1, j^2=k^2=+1, ijk=+1
  Conectorine,      // i^2=j^2=+1, k^2=-1, ijk=-1
  Nectorine,        // i^2=+1, j^2=-1, k^2=+1, ijk=+1
};

const char* family_name(Family f);

/// Signed 4x4 product table over the real basis (1,i,j,k):
/// u_a u_b = sign[a][b] * u_idx[a][b]. Derived from the family's squares and
/// triple product; the off-diagonal products anticommute.
struct FamilyTraits {
  int sq_i, sq_j, sq_k;
  int triple;  // sign of ijk
  std::array<std::array<int8_t, 4>, 4> idx;
  std::array<std::array<int8_t, 4>, 4> sign;
};

const FamilyTraits& family_traits(Family f);

/// Quaternion with complex coefficients,
///   Q = q0 + q1 i + q2 j + q3 k,  q_l = Re(q_l) + I Im(q_l),
/// where the imaginary unit I commutes with i, j, k and I^2 = -1.
struct ComplexQuaternion {
  Family family = Family::Hamilton;
  std::array<Complex, 4> q{};

  ComplexQuaternion() = default;
  explicit ComplexQuaternion(Family f) : family(f) {}
  ComplexQuaternion(Family f, Complex q0, Complex q1, Complex q2, Complex q3)
      : family(f), q{q0, q1, q2, q3} {}

  static ComplexQuaternion scalar(Complex x, Family f = Family::Hamilton);
  // Unit basis element by index in (1,i,j,k,I,Ii,Ij,Ik) order.
  static ComplexQuaternion basis(int index, Family f = Family::Hamilton);

  // Real coefficients in basis order (1,i,j,k,I,Ii,Ij,Ik).
  std::array<double, 8> coeffs() const;
  static ComplexQuaternion from_coeffs(const std::array<double, 8>& co,
                                       Family f);

  bool operator==(const ComplexQuaternion&) const = default;
};

ComplexQuaternion cq_mul(const ComplexQuaternion& p,
                         const ComplexQuaternion& q);
ComplexQuaternion cq_add(const ComplexQuaternion& p,
                         const ComplexQuaternion& q);
ComplexQuaternion cq_sub(const ComplexQuaternion& p,
                         const ComplexQuaternion& q);
ComplexQuaternion cq_scale(const ComplexQuaternion& p, Complex c);
ComplexQuaternion cq_neg(const ComplexQuaternion& p);

/// Complex conjugation (*): flips the I-part of every coefficient.
ComplexQuaternion conj_complex(const ComplexQuaternion& p);
/// Quaternionic conjugation (star): negates the i, j, k components.
ComplexQuaternion conj_quat(const ComplexQuaternion& p);

/// Q Q* (star) -- a complex scalar; vanishes exactly on zero divisors and
/// nilpotents.
Complex pseudo_norm(const ComplexQuaternion& p);

/// |Q|^2 = sum of squares of all 8 real coefficients; positive unless Q = 0.
double norm_squared(const ComplexQuaternion& p);

/// Q^-1 = Q*(star) / (Q Q*(star)) when the pseudo-norm is nonzero; nullopt
/// for zero divisors and nilpotents.
std::optional<ComplexQuaternion> inverse(const ComplexQuaternion& p);

double cq_inf_norm(const ComplexQuaternion& p);
bool cq_approx_eq(const ComplexQuaternion& a, const ComplexQuaternion& b,
                  double tol);

/// 2x2 complex matrix, row major.
struct Matrix2c {
  std::array<Complex, 4> m{};
  Complex operator()(int r, int c) const {
    return m[static_cast<size_t>(2 * r + c)];
  }
  Complex& operator()(int r, int c) {
    return m[static_cast<size_t>(2 * r + c)];
  }
};

Matrix2c mat_mul(const Matrix2c& a, const Matrix2c& b);
double mat_inf_dist(const Matrix2c& a, const Matrix2c& b);

/// Hamilton-family matrix representation
///   [[q0 + I q1, q2 + I q3], [-q2 + I q3, q0 - I q1]];
/// multiplicative. Throws for the other families.
Matrix2c matrix_rep(const ComplexQuaternion& p);

inline ComplexQuaternion operator*(const ComplexQuaternion& a,
                                   const ComplexQuaternion& b) {
  return cq_mul(a, b);
}
inline ComplexQuaternion operator+(const ComplexQuaternion& a,
                                   const ComplexQuaternion& b) {
  return cq_add(a, b);
}
inline ComplexQuaternion operator-(const ComplexQuaternion& a,
                                   const ComplexQuaternion& b) {
  return cq_sub(a, b);
}
inline ComplexQuaternion operator-(const ComplexQuaternion& a) {
  return cq_neg(a);
}

}  // namespace cqroots
