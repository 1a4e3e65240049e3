#pragma once

// The special p-group G of order q^3 acting on the Hermitian curve
// y^q - y = x^{q+1}: explicit coordinates (t, r) with r^{q^2} + r = 0 and
// t^q - t = r^{q+1}, group law (t,r)(t',r') = (t + t' - r^q r', r + r').

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "wqs/gf.hpp"

namespace wqs {
namespace group {

struct GroupElement {
  gf::FieldElement t;
  gf::FieldElement r;
  bool operator==(const GroupElement& o) const { return t == o.t && r == o.r; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

struct SubgroupCensus {
  std::vector<int> center;               // element ids
  std::vector<int> commutator_subgroup;  // element ids
  std::vector<int> frattini;             // element ids
};

struct ConjugacyClass {
  std::vector<int> members;  // element ids, ascending
  int representative;        // smallest id
};

class GroupTable {
 public:
  // q = p^m <= 9. Picks the minimal ambient field splitting both defining
  // equations, enumerates all q^3 elements (r outer, t inner, both in field
  // enumeration order).
  explicit GroupTable(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int m() const { return m_; }
  const gf::FieldSpec& field() const { return *spec_; }
  size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(int id) const { return elements_[static_cast<size_t>(id)]; }
  GroupElement identity() const;
  int id_of(const GroupElement& a) const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  // Closed form (r^q r' - r r'^q, 0); always central.
  GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
  GroupElement conjugate(const GroupElement& g, const GroupElement& a) const;  // g a g^{-1}
  GroupElement power(const GroupElement& a, uint64_t e) const;
  int element_order(const GroupElement& a) const;

  bool is_member(const GroupElement& a) const;
  bool is_central(const GroupElement& a) const { return a.r.is_zero(); }

  // Center, commutator subgroup and Frattini subgroup, each computed from
  // first principles; throws StructureViolation unless all three coincide
  // with {(t,0) | t in F_q}.
  SubgroupCensus subgroup_census() const;

  int exponent() const;

  // Partition into conjugacy classes (deterministic order by smallest id);
  // throws StructureViolation unless the partition is the q central
  // singletons plus the q^2 - 1 size-q fibers of G -> G/Z.
  std::vector<ConjugacyClass> conjugacy_classes() const;
  // Class id per element, aligned with conjugacy_classes() order.
  std::vector<int> class_of_element(const std::vector<ConjugacyClass>& classes) const;

  // (t, r) -> (zeta^{q+1} t, zeta r) for zeta in the multiplicative group of
  // F_{q^2}; a group automorphism. Throws NotInMultiplicativeGroup.
  GroupElement zeta_conjugation(const gf::FieldElement& zeta, const GroupElement& a) const;

 private:
  int q_, p_, m_;
  const gf::FieldSpec* spec_;
  std::vector<GroupElement> elements_;
  std::unordered_map<uint64_t, int> index_;
};

// Factor a prime power <= 9; throws Error("NotAPrimePower") otherwise.
void factor_prime_power(int q, int& p, int& m);

}  // namespace group
}  // namespace wqs
