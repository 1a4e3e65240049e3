#pragma once

// Character-level representation theory of the special p-group: irreducible
// censuses over various coefficient fields, the cohomology class function of
// H^1 of the Hermitian curve, and the dimension bookkeeping derived from it.
// Everything is exact rational arithmetic on class data; no representation
// matrices are ever built.

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "wqs/group.hpp"

namespace wqs {
namespace rep {

using Rational = boost::rational<long long>;

enum class FieldKind { Complex, ContainsMuP, NoMuP };

// Exact rational function on conjugacy classes (values aligned with the
// class order of GroupTable::conjugacy_classes).
struct ClassFunction {
  std::vector<Rational> values;
};

struct IrrEntry {
  std::string label;
  long long count;
  long long degree;
  long long endo_dim;
};

struct IrrCensus {
  int q = 0;
  FieldKind kind = FieldKind::Complex;
  std::vector<IrrEntry> entries;
  long long total = 0;  // number of irreducibles, with multiplicity over entries
};

// Closed-form number of irreducibles over a characteristic-zero field:
// 1 + (q^2 + q - 2)/(p - 1) without p-th roots of unity, q^2 + q - 1 otherwise.
long long irr_count(int q, FieldKind kind);

// The same number, recomputed as the count of orbits of conjugacy classes
// under the power maps a -> a^s, s in (Z/p^2 Z)^x (trivial action when the
// field contains mu_p). Throws StructureViolation on mismatch with irr_count.
long long irr_count_by_orbits(const group::GroupTable& G,
                              const std::vector<group::ConjugacyClass>& classes, FieldKind kind);

// Basic set of irreducibles: over a field without mu_p the rational basic
// set (trivial, W_y, and V_x or 2V_x); otherwise the split census.
IrrCensus basic_set(int q, FieldKind kind);

// Wedderburn dimension audit: sum count * degree^2 / endo_dim == q^3, exactly.
bool wedderburn_audit(const IrrCensus& census);

// chi(e) = q(q-1), chi = -q on nontrivial central classes, 0 elsewhere.
ClassFunction cohomology_character(const group::GroupTable& G,
                                   const std::vector<group::ConjugacyClass>& classes);

// <f, g>_G with exact rationals.
Rational inner_product(const ClassFunction& f, const ClassFunction& g,
                       const group::GroupTable& G,
                       const std::vector<group::ConjugacyClass>& classes);

struct InvariantDims {
  long long dim_h1_g;         // <chi, 1>_G
  long long dim_h1_z;         // (1/q) sum over central classes
  long long dim_h1_tensor_g;  // <chi^2, 1>_G
};

// Throws NonIntegralDimension unless all three are non-negative integers.
InvariantDims invariant_dims(const group::GroupTable& G,
                             const std::vector<group::ConjugacyClass>& classes);

// 2 - chi(sigma) == fixed_scheme_length(sigma) for every sigma != e.
bool trace_vs_lefschetz(const group::GroupTable& G,
                        const std::vector<group::ConjugacyClass>& classes);

// q(q-1) == #P(Z) * dim(V_x) == ((q-1)/(p-1)) * q(p-1).
bool dimension_match(int q);

}  // namespace rep
}  // namespace wqs
