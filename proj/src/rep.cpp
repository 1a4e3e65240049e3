#include "wqs/rep.hpp"

#include <set>

#include "wqs/local.hpp"

namespace wqs {
namespace rep {

long long irr_count(int q, FieldKind kind) {
  int p = 0, m = 0;
  group::factor_prime_power(q, p, m);
  long long qq = static_cast<long long>(q) * q;
  if (kind == FieldKind::NoMuP) return 1 + (qq + q - 2) / (p - 1);
  return qq + q - 1;
}

long long irr_count_by_orbits(const group::GroupTable& G,
                              const std::vector<group::ConjugacyClass>& classes, FieldKind kind) {
  long long orbits;
  if (kind != FieldKind::NoMuP) {
    orbits = static_cast<long long>(classes.size());
  } else {
    // Orbits of classes under a -> a^s for all units s mod p^2.
    const int p = G.p();
    std::vector<int> cls = G.class_of_element(classes);
    std::vector<int> units;
    for (int s = 1; s < p * p; ++s)
      if (s % p != 0) units.push_back(s);
    std::vector<char> seen(classes.size(), 0);
    orbits = 0;
    for (size_t c = 0; c < classes.size(); ++c) {
      if (seen[c]) continue;
      ++orbits;
      for (int s : units) {
        group::GroupElement img = G.power(G.element(classes[c].representative), static_cast<uint64_t>(s));
        seen[static_cast<size_t>(cls[static_cast<size_t>(G.id_of(img))])] = 1;
      }
    }
  }
  if (orbits != irr_count(G.q(), kind))
    throw Error("StructureViolation", "orbit count disagrees with the closed-form census");
  return orbits;
}

IrrCensus basic_set(int q, FieldKind kind) {
  int p = 0, m = 0;
  group::factor_prime_power(q, p, m);
  const long long qq = static_cast<long long>(q) * q;
  IrrCensus census;
  census.q = q;
  census.kind = kind;
  census.entries.push_back({"trivial", 1, 1, 1});
  if (kind == FieldKind::NoMuP) {
    census.entries.push_back({"W", (qq - 1) / (p - 1), p - 1, p - 1});
    if (p != 2)
      census.entries.push_back({"V", (q - 1) / (p - 1), static_cast<long long>(q) * (p - 1), p - 1});
    else
      census.entries.push_back({"2V", q - 1, 2LL * q, 4});
  } else {
    census.entries.push_back({"linear", qq - 1, 1, 1});
    census.entries.push_back({"induced", q - 1, q, 1});
  }
  for (const auto& e : census.entries) census.total += e.count;
  return census;
}

bool wedderburn_audit(const IrrCensus& census) {
  Rational sum(0);
  for (const auto& e : census.entries) sum += Rational(e.count * e.degree * e.degree, e.endo_dim);
  long long q3 = static_cast<long long>(census.q) * census.q * census.q;
  if (sum != Rational(q3)) throw Error("AuditFailure", "Wedderburn dimension sum != q^3");
  return true;
}

ClassFunction cohomology_character(const group::GroupTable& G,
                                   const std::vector<group::ConjugacyClass>& classes) {
  const long long q = G.q();
  ClassFunction chi;
  chi.values.reserve(classes.size());
  for (const auto& c : classes) {
    const group::GroupElement& rep = G.element(c.representative);
    if (rep == G.identity())
      chi.values.emplace_back(q * (q - 1));
    else if (G.is_central(rep))
      chi.values.emplace_back(-q);
    else
      chi.values.emplace_back(0);
  }
  return chi;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g,
                       const group::GroupTable& G,
                       const std::vector<group::ConjugacyClass>& classes) {
  Rational sum(0);
  for (size_t c = 0; c < classes.size(); ++c)
    sum += Rational(static_cast<long long>(classes[c].members.size())) * f.values[c] * g.values[c];
  return sum / Rational(static_cast<long long>(G.size()));
}

namespace {

long long as_nonneg_integer(const Rational& r, const char* what) {
  if (r.denominator() != 1 || r.numerator() < 0)
    throw Error("NonIntegralDimension", std::string(what) + " is not a non-negative integer");
  return r.numerator();
}

}  // namespace

InvariantDims invariant_dims(const group::GroupTable& G,
                             const std::vector<group::ConjugacyClass>& classes) {
  ClassFunction chi = cohomology_character(G, classes);
  ClassFunction one, chi2;
  for (size_t c = 0; c < classes.size(); ++c) {
    one.values.emplace_back(1);
    chi2.values.push_back(chi.values[c] * chi.values[c]);
  }
  Rational dim_g = inner_product(chi, one, G, classes);
  Rational dim_t = inner_product(chi2, one, G, classes);
  Rational z_sum(0);
  long long z_count = 0;
  for (size_t c = 0; c < classes.size(); ++c) {
    if (!G.is_central(G.element(classes[c].representative))) continue;
    z_sum += chi.values[c];
    ++z_count;
  }
  Rational dim_z = z_sum / Rational(z_count);
  InvariantDims out{as_nonneg_integer(dim_g, "<chi,1>_G"), as_nonneg_integer(dim_z, "<chi,1>_Z"),
                    as_nonneg_integer(dim_t, "<chi^2,1>_G")};
  return out;
}

bool trace_vs_lefschetz(const group::GroupTable& G,
                        const std::vector<group::ConjugacyClass>& classes) {
  ClassFunction chi = cohomology_character(G, classes);
  std::vector<int> cls = G.class_of_element(classes);
  for (size_t i = 0; i < G.size(); ++i) {
    const group::GroupElement& sigma = G.element(static_cast<int>(i));
    if (sigma == G.identity()) continue;
    Rational lefschetz = Rational(2) - chi.values[static_cast<size_t>(cls[i])];
    long long length = local::fixed_scheme_length(G, sigma);
    if (lefschetz != Rational(length))
      throw Error("Mismatch", "Lefschetz number differs from fixed-scheme length");
  }
  return true;
}

bool dimension_match(int q) {
  int p = 0, m = 0;
  group::factor_prime_power(q, p, m);
  long long pz_points = static_cast<long long>(q - 1) / (p - 1);
  long long v_degree = static_cast<long long>(q) * (p - 1);
  return static_cast<long long>(q) * (q - 1) == pz_points * v_degree;
}

}  // namespace rep
}  // namespace wqs
