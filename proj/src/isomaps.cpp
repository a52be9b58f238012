#include "cqroots/isomaps.hpp"

#include <stdexcept>

namespace cqroots {

namespace {

constexpr std::array<const char*, 8> kQuatBasisNames = {"1",  "i",  "j",  "k",
                                                        "I", "Ii", "Ij", "Ik"};

BasisMap make_map(std::string name, AlgebraTag source, Signature target,
                  std::array<std::pair<int, int>, 8> entries) {
  BasisMap m{std::move(name), source, target, {}, {}};
  std::array<bool, 8> used{};
  for (size_t i = 0; i < 8; ++i) {
    auto [blade, sign] = entries[i];
    m.blade[i] = static_cast<int8_t>(blade);
    m.sign[i] = static_cast<int8_t>(sign);
    if (used[static_cast<size_t>(blade)])
      throw std::logic_error("basis map is not a bijection");
    used[static_cast<size_t>(blade)] = true;
  }
  if (m.blade[0] != kScalar || m.sign[0] != 1)
    throw std::logic_error("basis map must send 1 to +1");
  return m;
}

std::vector<BasisMap> build_maps() {
  std::vector<BasisMap> maps;
  // Hamilton: i->e12, j->-e13, k->e23, I->e123, Ii->-e3, Ij->-e2, Ik->-e1.
  maps.push_back(make_map(
      "hamilton<->cl30", AlgebraTag::Hamilton, Signature::cl30(),
      {{{kScalar, 1},
        {kE12, 1},
        {kE13, -1},
        {kE23, 1},
        {kE123, 1},
        {kE3, -1},
        {kE2, -1},
        {kE1, -1}}}));
  // Coquaternion: i->-e23, j->e2, k->e3, I->e123, Ii->e1, Ij->-e13, Ik->e12.
  // The signs of i and Ii are flipped relative to the usual listing of this
  // table; as listed, the map reverses products (an antihomomorphism), and
  // the i/Ii sign flip is the minimal change that makes it a homomorphism.
  // Root sets are unaffected either way since squaring is order-blind.
  maps.push_back(make_map(
      "coquaternion<->cl30", AlgebraTag::Coquaternion, Signature::cl30(),
      {{{kScalar, 1},
        {kE23, -1},
        {kE2, 1},
        {kE3, 1},
        {kE123, 1},
        {kE1, 1},
        {kE13, -1},
        {kE12, 1}}}));
  // Conectorine: i->e1, j->e2, k->e12, I->e123, Ii->e23, Ij->-e13, Ik->-e3.
  maps.push_back(make_map(
      "conectorine<->cl30", AlgebraTag::Conectorine, Signature::cl30(),
      {{{kScalar, 1},
        {kE1, 1},
        {kE2, 1},
        {kE12, 1},
        {kE123, 1},
        {kE23, 1},
        {kE13, -1},
        {kE3, -1}}}));
  // Nectorine: i->e1, j->e12, k->e2, I->e123, Ii->e23, Ij->-e3, Ik->-e13.
  maps.push_back(make_map(
      "nectorine<->cl30", AlgebraTag::Nectorine, Signature::cl30(),
      {{{kScalar, 1},
        {kE1, 1},
        {kE12, 1},
        {kE2, 1},
        {kE123, 1},
        {kE23, 1},
        {kE3, -1},
        {kE13, -1}}}));
  // Cl(3,0) -> Cl(1,2): e1->e1, e2->e13, e3->e12, e12->e3, e13->e2,
  // e23->e23, e123->e123.
  maps.push_back(make_map(
      "cl30<->cl12", AlgebraTag::Cl30, Signature::cl12(),
      {{{kScalar, 1},
        {kE1, 1},
        {kE13, 1},
        {kE12, 1},
        {kE3, 1},
        {kE2, 1},
        {kE23, 1},
        {kE123, 1}}}));
  // Coquaternion -> Cl(1,2): i->e2, j->e1, k->-e12, I->e123, Ii->e13,
  // Ij->e23, Ik->-e3.
  maps.push_back(make_map(
      "coquaternion<->cl12", AlgebraTag::Coquaternion, Signature::cl12(),
      {{{kScalar, 1},
        {kE2, 1},
        {kE1, 1},
        {kE12, -1},
        {kE123, 1},
        {kE13, 1},
        {kE23, 1},
        {kE3, -1}}}));
  return maps;
}

}  // namespace

const char* algebra_tag_name(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::Hamilton: return "hamilton";
    case AlgebraTag::Coquaternion: return "coquaternion";
    case AlgebraTag::Conectorine: return "conectorine";
    case AlgebraTag::Nectorine: return "nectorine";
    case AlgebraTag::Cl30: return "cl30";
    case AlgebraTag::Cl12: return "cl12";
  }
  return "?";
}

bool is_quaternion_tag(AlgebraTag t) {
  return t == AlgebraTag::Hamilton || t == AlgebraTag::Coquaternion ||
         t == AlgebraTag::Conectorine || t == AlgebraTag::Nectorine;
}

Family family_of_tag(AlgebraTag t) {
  if (!is_quaternion_tag(t))
    throw std::invalid_argument("not a quaternion algebra tag");
  return static_cast<Family>(static_cast<int>(t));
}

const std::vector<BasisMap>& builtin_maps() {
  static const std::vector<BasisMap> maps = build_maps();
  return maps;
}

const BasisMap& default_map(Family f) {
  return builtin_maps()[static_cast<size_t>(f)];
}

const BasisMap* find_map(AlgebraTag source, AlgebraTag target) {
  AlgebraTag target_tag;
  for (const BasisMap& m : builtin_maps()) {
    target_tag = m.target == Signature::cl30() ? AlgebraTag::Cl30
                                               : AlgebraTag::Cl12;
    if (m.source == source && target_tag == target) return &m;
  }
  return nullptr;
}

std::array<double, 8> map_forward(const BasisMap& m,
                                  const std::array<double, 8>& src) {
  std::array<double, 8> dst{};
  for (size_t i = 0; i < 8; ++i)
    dst[static_cast<size_t>(m.blade[i])] = m.sign[i] * src[i];
  return dst;
}

std::array<double, 8> map_backward(const BasisMap& m,
                                   const std::array<double, 8>& dst) {
  std::array<double, 8> src{};
  for (size_t i = 0; i < 8; ++i)
    src[i] = m.sign[i] * dst[static_cast<size_t>(m.blade[i])];
  return src;
}

Multivector3 to_mv(const ComplexQuaternion& q, const BasisMap& m) {
  if (!is_quaternion_tag(m.source) || family_of_tag(m.source) != q.family)
    throw std::invalid_argument("map does not match quaternion family");
  Multivector3 r(m.target);
  r.c = map_forward(m, q.coeffs());
  return r;
}

ComplexQuaternion from_mv(const Multivector3& a, const BasisMap& m) {
  if (!is_quaternion_tag(m.source))
    throw std::invalid_argument("map source is not a quaternion algebra");
  if (!(a.sig == m.target))
    throw std::invalid_argument("multivector signature does not match map");
  return ComplexQuaternion::from_coeffs(map_backward(m, a.c),
                                        family_of_tag(m.source));
}

Multivector3 apply_mv(const BasisMap& m, const Multivector3& a) {
  if (m.source != AlgebraTag::Cl30 && m.source != AlgebraTag::Cl12)
    throw std::invalid_argument("map source is not a Clifford algebra");
  Signature src_sig = m.source == AlgebraTag::Cl30 ? Signature::cl30()
                                                   : Signature::cl12();
  if (!(a.sig == src_sig))
    throw std::invalid_argument("multivector signature does not match map");
  Multivector3 r(m.target);
  r.c = map_forward(m, a.c);
  return r;
}

Multivector3 unapply_mv(const BasisMap& m, const Multivector3& a) {
  if (m.source != AlgebraTag::Cl30 && m.source != AlgebraTag::Cl12)
    throw std::invalid_argument("map source is not a Clifford algebra");
  if (!(a.sig == m.target))
    throw std::invalid_argument("multivector signature does not match map");
  Multivector3 r(m.source == AlgebraTag::Cl30 ? Signature::cl30()
                                              : Signature::cl12());
  r.c = map_backward(m, a.c);
  return r;
}

std::pair<int, int> source_basis_product(AlgebraTag source, int a, int b) {
  if (a < 0 || a > 7 || b < 0 || b > 7)
    throw std::invalid_argument("basis index out of range");
  if (is_quaternion_tag(source)) {
    // (u_a I^p)(u_b I^q) with I central and I^2 = -1.
    const FamilyTraits& t = family_traits(family_of_tag(source));
    const size_t ua = static_cast<size_t>(a % 4), ub = static_cast<size_t>(b % 4);
    int p = a / 4 + b / 4;
    int idx = t.idx[ua][ub];
    int sign = t.sign[ua][ub];
    if (p == 2) {
      sign = -sign;
      p = 0;
    }
    return {idx + 4 * p, sign};
  }
  Signature sig = source == AlgebraTag::Cl30 ? Signature::cl30()
                                             : Signature::cl12();
  const BladeProductTable& t = blade_table(sig);
  const size_t sa = static_cast<size_t>(a), sb = static_cast<size_t>(b);
  return {t.idx[sa][sb], t.sign[sa][sb]};
}

bool verify_homomorphism(const BasisMap& m, std::string* first_failure) {
  const BladeProductTable& tgt = blade_table(m.target);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      auto [sidx, ssign] = source_basis_product(m.source, a, b);
      // Image of the source product.
      const int img_idx = m.blade[static_cast<size_t>(sidx)];
      const int img_sign = ssign * m.sign[static_cast<size_t>(sidx)];
      // Product of the images.
      const size_t ia = static_cast<size_t>(m.blade[static_cast<size_t>(a)]);
      const size_t ib = static_cast<size_t>(m.blade[static_cast<size_t>(b)]);
      const int prod_idx = tgt.idx[ia][ib];
      const int prod_sign =
          tgt.sign[ia][ib] * m.sign[static_cast<size_t>(a)] *
          m.sign[static_cast<size_t>(b)];
      if (img_idx != prod_idx || img_sign != prod_sign) {
        if (first_failure) {
          const auto* names = is_quaternion_tag(m.source)
                                  ? kQuatBasisNames.data()
                                  : kBladeNames.data();
          *first_failure = m.name + ": product (" + names[a] + ")(" +
                           names[b] + ") is not preserved";
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace cqroots
