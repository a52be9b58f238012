#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cqroots {

/// Diagonal metric signature of a 3-D Clifford algebra. Only Cl(3,0) and
/// Cl(1,2) are supported; anything else is rejected at construction.
class Signature {
 public:
  Signature(int p, int q);

  static Signature cl30() { return Signature(3, 0); }
  static Signature cl12() { return Signature(1, 2); }

  int p() const { return p_; }
  int q() const { return q_; }

  // +1 or -1: the square of basis vector e_{i+1}, i in {0,1,2}.
  int metric(int i) const { return i < p_ ? 1 : -1; }

  bool operator==(const Signature&) const = default;

  std::string name() const;  // "Cl(3,0)" or "Cl(1,2)"

 private:
  int p_, q_;
};

// Fixed blade order used everywhere: index -> blade.
enum Blade : int {
  kScalar = 0,
  kE1 = 1,
  kE2 = 2,
  kE3 = 3,
  kE12 = 4,
  kE13 = 5,
  kE23 = 6,
  kE123 = 7,
};

inline constexpr std::array<const char*, 8> kBladeNames = {
    "1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};

/// Signed product table over the 8 blades: e_a e_b = sign[a][b] * e_idx[a][b].
/// Generated once per signature and checked against the algebra axioms.
struct BladeProductTable {
  std::array<std::array<int8_t, 8>, 8> idx;
  std::array<std::array<int8_t, 8>, 8> sign;
};

const BladeProductTable& blade_table(Signature sig);

/// General element of Cl(3,0) or Cl(1,2): 8 real coefficients over the blade
/// basis (1, e1, e2, e3, e12, e13, e23, e123), with e12 = e1^e2, e13 = e1^e3,
/// e23 = e2^e3, e123 = e1^e2^e3.
struct Multivector3 {
  std::array<double, 8> c{};
  Signature sig = Signature::cl30();

  Multivector3() = default;
  explicit Multivector3(Signature s) : sig(s) {}

  static Multivector3 scalar(double x, Signature s = Signature::cl30());
  static Multivector3 blade(int blade_index, double coeff = 1.0,
                            Signature s = Signature::cl30());
  // Validates that every coefficient is finite.
  static Multivector3 from_coeffs(const std::array<double, 8>& coeffs,
                                  Signature s = Signature::cl30());

  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<size_t>(i)]; }

  bool operator==(const Multivector3&) const = default;
};

Multivector3 geometric_product(const Multivector3& a, const Multivector3& b);
Multivector3 add(const Multivector3& a, const Multivector3& b);
Multivector3 sub(const Multivector3& a, const Multivector3& b);
Multivector3 scale(const Multivector3& a, double c);
Multivector3 neg(const Multivector3& a);

/// Grade projection, k in {0,1,2,3}.
Multivector3 grade(const Multivector3& a, int k);

double inf_norm(const Multivector3& a);
bool approx_eq(const Multivector3& a, const Multivector3& b, double tol);

inline Multivector3 operator*(const Multivector3& a, const Multivector3& b) {
  return geometric_product(a, b);
}
inline Multivector3 operator+(const Multivector3& a, const Multivector3& b) {
  return add(a, b);
}
inline Multivector3 operator-(const Multivector3& a, const Multivector3& b) {
  return sub(a, b);
}
inline Multivector3 operator-(const Multivector3& a) { return neg(a); }
inline Multivector3 operator*(const Multivector3& a, double s) {
  return scale(a, s);
}
inline Multivector3 operator*(double s, const Multivector3& a) {
  return scale(a, s);
}

}  // namespace cqroots
