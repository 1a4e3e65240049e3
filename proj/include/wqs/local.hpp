#pragma once

// Ramification theory at the fixed point at infinity of the Hermitian curve:
// the complete local ring is k[[u]] with u = X/Y, and w = Z/Y satisfies
// w - w^q = u^{q+1}. Group elements act on u by an explicit substitution;
// the higher ramification groups and Swan conductors fall out of valuations.

#include <map>
#include <vector>

#include "wqs/group.hpp"
#include "wqs/series.hpp"

namespace wqs {
namespace local {

inline int default_precision(int q) { return 2 * q + 4; }
inline constexpr int kPrecisionCap = 512;

// w = Z/Y as a series in u = X/Y, the solution of w - w^q = u^{q+1} with
// leading term u^{q+1}, by fixed-point iteration w <- u^{q+1} + w^q.
TruncatedSeries expand_w(const gf::FieldSpec& spec, int q, int precision);

// sigma(u) = u (1 + r w / u) (1 - r^q u + t w)^{-1} mod u^N.
TruncatedSeries act_on_uniformizer(const group::GroupTable& G, const group::GroupElement& sigma,
                                   int precision);

// Largest i with sigma in G_i, i.e. valuation(sigma(u) - u) - 1; retries with
// doubled precision up to kPrecisionCap, then throws PrecisionExhausted.
int ramification_jump(const group::GroupTable& G, const group::GroupElement& sigma);

// Length of the fixed scheme of sigma != e at infinity: valuation(sigma(u) - u).
int fixed_scheme_length(const group::GroupTable& G, const group::GroupElement& sigma);

struct RamificationProfile {
  int q = 0;
  std::vector<int> jumps;                      // per element id; identity gets INT_MAX sentinel
  std::vector<std::pair<int, size_t>> filtration;  // (i, |G_i|) for i = 0 .. first trivial level
};

// Computes every jump, assembles |G_i| for i = 0,1,..., verifies each G_i is
// a normal subgroup and that the filtration is decreasing.
RamificationProfile filtration(const group::GroupTable& G);

// Swan conductor  delta = sum_{i>=1} dim(M/M^{G_i}) / [G:G_i]  as an exact
// rational; dim_fixed maps each level i >= 1 with G_i != 1 to dim M^{G_i}.
// Throws NonIntegralSwan when the sum is not an integer.
long long swan_conductor(const RamificationProfile& profile, int dim_m,
                         const std::map<int, int>& dim_fixed);

// Closed form dim(M/M^G) + dim(M/M^Z)/q, valid for the Hermitian profile.
long long swan_conductor_closed_form(int q, int dim_m, int dim_m_g, int dim_m_z);

}  // namespace local
}  // namespace wqs
