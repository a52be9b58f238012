#pragma once

#include <array>
#include <string>
#include <vector>

#include "cqroots/cquat.hpp"
#include "cqroots/multivector.hpp"

namespace cqroots {

/// The algebras connected by the builtin basis maps.
enum class AlgebraTag : int {
  Hamilton = 0,
  Coquaternion,
  Conectorine,
  Nectorine,
  Cl30,
  Cl12,
};

const char* algebra_tag_name(AlgebraTag t);
bool is_quaternion_tag(AlgebraTag t);
Family family_of_tag(AlgebraTag t);  // throws for Cl30/Cl12

/// Signed bijection from a source algebra's 8 basis elements onto the 8
/// blades of a Clifford algebra. Quaternion sources use the basis order
/// (1,i,j,k,I,Ii,Ij,Ik); Clifford sources use the blade order.
struct BasisMap {
  std::string name;
  AlgebraTag source;
  Signature target = Signature::cl30();
  std::array<int8_t, 8> blade{};  // source basis index -> target blade index
  std::array<int8_t, 8> sign{};   // +1 / -1
};

/// All six builtin maps: the four quaternion families onto Cl(3,0),
/// Cl(3,0) onto Cl(1,2), and the coquaternion directly onto Cl(1,2).
const std::vector<BasisMap>& builtin_maps();

/// The family's Cl(3,0) map, the one used for root extraction.
const BasisMap& default_map(Family f);

/// Look up a builtin map by endpoints; nullptr when none exists.
const BasisMap* find_map(AlgebraTag source, AlgebraTag target);

// Raw signed-permutation application to 8-coefficient vectors.
std::array<double, 8> map_forward(const BasisMap& m,
                                  const std::array<double, 8>& src);
std::array<double, 8> map_backward(const BasisMap& m,
                                   const std::array<double, 8>& dst);

/// Linear extension of a quaternion-source map; exact (entries are +-1).
Multivector3 to_mv(const ComplexQuaternion& q, const BasisMap& m);
/// Exact inverse of to_mv.
ComplexQuaternion from_mv(const Multivector3& a, const BasisMap& m);

/// Apply / invert a Clifford-source map (e.g. Cl(3,0) -> Cl(1,2)).
Multivector3 apply_mv(const BasisMap& m, const Multivector3& a);
Multivector3 unapply_mv(const BasisMap& m, const Multivector3& a);

/// Product of source basis elements a,b (indices 0..7) as a signed basis
/// element, used by the homomorphism check.
std::pair<int, int> source_basis_product(AlgebraTag source, int a, int b);

/// True iff map(x y) == map(x) map(y) for all 64 ordered basis pairs,
/// exactly (integer signs). On failure, *first_failure names the first
/// offending pair.
bool verify_homomorphism(const BasisMap& m,
                         std::string* first_failure = nullptr);

}  // namespace cqroots
