#pragma once

// Exact arithmetic in GF(p^M), elements stored as coefficient vectors over
// F_p with respect to the power basis of a fixed monic irreducible modulus.
// Specs are interned: the same (p, M) always yields the identical modulus
// (the lexicographically smallest irreducible, see FieldSpec::make).

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wqs {

// Error with a stable machine-readable kind ("NonPrime", "DivisionByZero", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

namespace gf {

inline constexpr int kMaxDegree = 24;

bool is_prime(long long n);

class FieldSpec;

// Immutable element of GF(p^M). Carries a pointer to its interned spec.
class FieldElement {
 public:
  FieldElement() : spec_(nullptr) { c_.fill(0); }
  FieldElement(const FieldSpec* spec, const std::array<uint8_t, kMaxDegree>& c)
      : spec_(spec), c_(c) {}

  const FieldSpec& spec() const { return *spec_; }
  const FieldSpec* spec_ptr() const { return spec_; }
  uint8_t coeff(int i) const { return c_[static_cast<size_t>(i)]; }

  // Canonical index: sum coeff[i] * p^i. Defines the enumeration order.
  uint32_t index() const;

  bool is_zero() const;
  bool operator==(const FieldElement& o) const { return spec_ == o.spec_ && c_ == o.c_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  friend class FieldSpec;

 private:
  const FieldSpec* spec_;
  std::array<uint8_t, kMaxDegree> c_;
};

class FieldSpec {
 public:
  // Interned accessor; p prime, 1 <= M <= 24. Throws NonPrime / DegreeTooLarge.
  static const FieldSpec& make(int p, int M);

  int p() const { return p_; }
  int degree() const { return M_; }
  uint64_t order() const { return order_; }  // p^M
  // Monic irreducible modulus, constant term first, length M+1.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long k) const;  // image of k under Z -> F_p -> field
  FieldElement element(uint64_t index) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;  // throws DivisionByZero
  FieldElement pow(const FieldElement& a, uint64_t e) const;
  FieldElement frobenius(const FieldElement& a, int e = 1) const;  // a^(p^e)

  // All p^d members of the subfield GF(p^d), d | M, in enumeration order.
  std::vector<FieldElement> subfield_members(int d) const;  // throws NotASubfieldDegree

 private:
  FieldSpec(int p, int M);
  void check(const FieldElement& a, const char* op) const;

  int p_, M_;
  uint64_t order_;
  std::vector<int> modulus_;
};

// A ->  sum_i c_i * A^(p^{e_i}); every such map is F_p-linear on coordinates.
struct AdditiveTerm {
  FieldElement coeff;
  int frob_power;  // e_i
};
using AdditiveMap = std::vector<AdditiveTerm>;

// M x M matrix over F_p (row-major) of an F_p-linear map, columns = images
// of the power basis 1, x, ..., x^{M-1}.
std::vector<std::vector<uint8_t>> linear_map_matrix(const FieldSpec& spec, const AdditiveMap& L);

// All solutions of L(a) = target, by Gaussian elimination over F_p on the
// coordinate matrix. Sorted by element index. Empty when unsolvable.
std::vector<FieldElement> solve_additive(const FieldSpec& spec, const AdditiveMap& L,
                                         const FieldElement& target);

// Row-reduction certificate for membership in the image of L: target is in
// Im(L) iff every row r of the check matrix has r . target == 0 (mod p).
// Empty when L is surjective.
std::vector<std::vector<uint8_t>> image_check_matrix(const FieldSpec& spec, const AdditiveMap& L);

}  // namespace gf
}  // namespace wqs
