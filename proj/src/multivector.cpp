#include "cqroots/multivector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cqroots {

namespace {

// Blade index <-> bitmask over basis vectors (bit i = e_{i+1}).
// Order matches the declared blade order (1,e1,e2,e3,e12,e13,e23,e123).
constexpr std::array<unsigned, 8> kIdxToMask = {0b000, 0b001, 0b010, 0b100,
                                                0b011, 0b101, 0b110, 0b111};

constexpr int mask_to_idx(unsigned m) {
  for (int i = 0; i < 8; ++i)
    if (kIdxToMask[static_cast<size_t>(i)] == m) return i;
  return -1;
}

// Product of two basis blades given as bitmasks. The reordering sign counts
// the transpositions needed to sort the concatenated factors; repeated
// vectors contract through the metric.
std::pair<int, int> blade_product(unsigned a, unsigned b, const Signature& sig) {
  int sign = 1;
  unsigned t = a >> 1;
  int swaps = 0;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  if (swaps % 2 != 0) sign = -sign;
  unsigned common = a & b;
  for (int i = 0; i < 3; ++i)
    if (common & (1u << i)) sign *= sig.metric(i);
  return {mask_to_idx(a ^ b), sign};
}

BladeProductTable build_table(Signature sig) {
  BladeProductTable t{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      auto [idx, s] = blade_product(kIdxToMask[static_cast<size_t>(i)],
                                    kIdxToMask[static_cast<size_t>(j)], sig);
      t.idx[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          static_cast<int8_t>(idx);
      t.sign[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          static_cast<int8_t>(s);
    }
  }
  // Axiom check: e_i e_j + e_j e_i = 2 delta_ij metric(i) on the vectors.
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const size_t si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
      if (i == j) {
        if (t.idx[si][sj] != kScalar ||
            t.sign[si][sj] != sig.metric(i - 1))
          throw std::logic_error("blade table violates metric axiom");
      } else {
        if (t.idx[si][sj] != t.idx[sj][si] ||
            t.sign[si][sj] != -t.sign[sj][si])
          throw std::logic_error("blade table violates anticommutation");
      }
    }
  }
  return t;
}

const std::array<int, 8> kGradeOf = {0, 1, 1, 1, 2, 2, 2, 3};

void require_same_sig(const Multivector3& a, const Multivector3& b) {
  if (!(a.sig == b.sig))
    throw std::invalid_argument("signature mismatch: " + a.sig.name() +
                                " vs " + b.sig.name());
}

}  // namespace

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (!((p == 3 && q == 0) || (p == 1 && q == 2)))
    throw std::invalid_argument("unsupported signature (" + std::to_string(p) +
                                "," + std::to_string(q) + ")");
}

std::string Signature::name() const {
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

const BladeProductTable& blade_table(Signature sig) {
  static const BladeProductTable t30 = build_table(Signature::cl30());
  static const BladeProductTable t12 = build_table(Signature::cl12());
  return sig == Signature::cl30() ? t30 : t12;
}

Multivector3 Multivector3::scalar(double x, Signature s) {
  Multivector3 r(s);
  r.c[kScalar] = x;
  return r;
}

Multivector3 Multivector3::blade(int blade_index, double coeff, Signature s) {
  if (blade_index < 0 || blade_index > 7)
    throw std::invalid_argument("blade index out of range");
  Multivector3 r(s);
  r.c[static_cast<size_t>(blade_index)] = coeff;
  return r;
}

Multivector3 Multivector3::from_coeffs(const std::array<double, 8>& coeffs,
                                       Signature s) {
  for (double x : coeffs)
    if (!std::isfinite(x))
      throw std::invalid_argument("non-finite multivector coefficient");
  Multivector3 r(s);
  r.c = coeffs;
  return r;
}

Multivector3 geometric_product(const Multivector3& a, const Multivector3& b) {
  require_same_sig(a, b);
  const BladeProductTable& t = blade_table(a.sig);
  Multivector3 r(a.sig);
  for (size_t i = 0; i < 8; ++i) {
    if (a.c[i] == 0.0) continue;
    for (size_t j = 0; j < 8; ++j) {
      if (b.c[j] == 0.0) continue;
      r.c[static_cast<size_t>(t.idx[i][j])] += t.sign[i][j] * a.c[i] * b.c[j];
    }
  }
  return r;
}

Multivector3 add(const Multivector3& a, const Multivector3& b) {
  require_same_sig(a, b);
  Multivector3 r(a.sig);
  for (size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Multivector3 sub(const Multivector3& a, const Multivector3& b) {
  require_same_sig(a, b);
  Multivector3 r(a.sig);
  for (size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Multivector3 scale(const Multivector3& a, double c) {
  Multivector3 r(a.sig);
  for (size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] * c;
  return r;
}

Multivector3 neg(const Multivector3& a) { return scale(a, -1.0); }

Multivector3 grade(const Multivector3& a, int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("grade out of range");
  Multivector3 r(a.sig);
  for (size_t i = 0; i < 8; ++i)
    if (kGradeOf[i] == k) r.c[i] = a.c[i];
  return r;
}

double inf_norm(const Multivector3& a) {
  double m = 0.0;
  for (double x : a.c) m = std::max(m, std::abs(x));
  return m;
}

bool approx_eq(const Multivector3& a, const Multivector3& b, double tol) {
  if (tol < 0) throw std::invalid_argument("negative tolerance");
  require_same_sig(a, b);
  return inf_norm(sub(a, b)) <= tol;
}

}  // namespace cqroots
