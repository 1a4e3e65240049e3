#include "wqs/local.hpp"

#include <climits>
#include <map>
#include <mutex>
#include <numeric>

namespace wqs {
namespace local {

namespace {

TruncatedSeries expand_w_uncached(const gf::FieldSpec& spec, int q, int precision) {
  TruncatedSeries uq1 = TruncatedSeries::u_power(spec, precision, q + 1);
  TruncatedSeries w(spec, precision);
  for (int it = 0; it <= precision + 1; ++it) {
    TruncatedSeries next = uq1 + w.pow(q);
    if (next == w) return w;
    w = next;
  }
  throw Error("PrecisionTooSmall", "fixed-point iteration for w did not stabilize");
}

}  // namespace

TruncatedSeries expand_w(const gf::FieldSpec& spec, int q, int precision) {
  if (precision < q + 3) throw Error("PrecisionTooSmall", "need precision >= q + 3");
  static std::mutex mu;
  static std::map<std::tuple<const gf::FieldSpec*, int, int>, TruncatedSeries> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_tuple(&spec, q, precision);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, expand_w_uncached(spec, q, precision)).first;
  return it->second;
}

TruncatedSeries act_on_uniformizer(const group::GroupTable& G, const group::GroupElement& sigma,
                                   int precision) {
  const gf::FieldSpec& F = G.field();
  const int q = G.q();
  TruncatedSeries u = TruncatedSeries::u_power(F, precision, 1);
  if (sigma == G.identity()) return u;
  TruncatedSeries w = expand_w(F, q, precision);
  // numerator u (1 + r w / u) = u + r w
  TruncatedSeries num = u + w.scaled(sigma.r);
  // denominator 1 - r^q u + t w
  TruncatedSeries den = TruncatedSeries::constant(F, precision, F.one()) -
                        u.scaled(F.pow(sigma.r, static_cast<uint64_t>(q))) + w.scaled(sigma.t);
  return num * den.inverse_unit();
}

namespace {

// valuation(sigma(u) - u), raising precision until it resolves.
int displacement_valuation(const group::GroupTable& G, const group::GroupElement& sigma) {
  if (sigma == G.identity()) throw Error("PrecisionExhausted", "identity fixes u exactly");
  for (int N = default_precision(G.q()); N <= kPrecisionCap; N *= 2) {
    TruncatedSeries su = act_on_uniformizer(G, sigma, N);
    TruncatedSeries d = su - TruncatedSeries::u_power(G.field(), N, 1);
    int v = d.valuation();
    if (v < N) return v;
  }
  throw Error("PrecisionExhausted", "valuation beyond precision cap");
}

}  // namespace

int ramification_jump(const group::GroupTable& G, const group::GroupElement& sigma) {
  return displacement_valuation(G, sigma) - 1;
}

int fixed_scheme_length(const group::GroupTable& G, const group::GroupElement& sigma) {
  return displacement_valuation(G, sigma);
}

RamificationProfile filtration(const group::GroupTable& G) {
  RamificationProfile out;
  out.q = G.q();
  const int n = static_cast<int>(G.size());
  out.jumps.assign(static_cast<size_t>(n), INT_MAX);
  int max_jump = 0;
  for (int i = 0; i < n; ++i) {
    if (G.element(i) == G.identity()) continue;
    int j = ramification_jump(G, G.element(i));
    out.jumps[static_cast<size_t>(i)] = j;
    max_jump = std::max(max_jump, j);
  }

  // G_i = {sigma | jump(sigma) >= i}; verify subgroup + normality per level.
  for (int i = 0; i <= max_jump + 1; ++i) {
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if (out.jumps[static_cast<size_t>(a)] >= i) members.push_back(a);
    if (members.size() < static_cast<size_t>(n)) {  // G_i = G needs no check
      for (int a : members)
        for (int b : members)
          if (out.jumps[static_cast<size_t>(G.id_of(G.mul(G.element(a), G.element(b))))] < i)
            throw Error("StructureViolation", "G_i not closed under multiplication");
      for (int a : members)
        for (int g = 0; g < n; ++g)
          if (out.jumps[static_cast<size_t>(G.id_of(G.conjugate(G.element(g), G.element(a)))) ] < i)
            throw Error("StructureViolation", "G_i not normal");
    }
    if (!out.filtration.empty() && members.size() > out.filtration.back().second)
      throw Error("StructureViolation", "filtration not decreasing");
    out.filtration.emplace_back(i, members.size());
  }
  return out;
}

long long swan_conductor(const RamificationProfile& profile, int dim_m,
                         const std::map<int, int>& dim_fixed) {
  const long long ord_g = profile.filtration.empty() ? 0 : static_cast<long long>(profile.filtration.front().second);
  long long num = 0, den = 1;  // running exact rational num/den
  for (const auto& [i, order] : profile.filtration) {
    if (i < 1 || order <= 1) continue;
    auto it = dim_fixed.find(i);
    if (it == dim_fixed.end()) throw Error("NonIntegralSwan", "missing dim M^{G_i} for level " + std::to_string(i));
    long long codim = dim_m - it->second;
    long long index = ord_g / static_cast<long long>(order);  // [G : G_i]
    // num/den += codim/index
    num = num * index + codim * den;
    den *= index;
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (den != 1) throw Error("NonIntegralSwan", "Swan sum is not an integer");
  return num;
}

long long swan_conductor_closed_form(int q, int dim_m, int dim_m_g, int dim_m_z) {
  long long wild = dim_m - dim_m_z;
  if (wild % q != 0) throw Error("NonIntegralSwan", "closed form is not an integer");
  return (dim_m - dim_m_g) + wild / q;
}

}  // namespace local
}  // namespace wqs
