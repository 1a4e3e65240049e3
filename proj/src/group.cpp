#include "wqs/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wqs {
namespace group {

void factor_prime_power(int q, int& p, int& m) {
  if (q < 2) throw Error("NotAPrimePower", std::to_string(q));
  for (int d = 2; d <= q; ++d) {
    if (q % d) continue;
    p = d;
    m = 0;
    int n = q;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (n != 1) throw Error("NotAPrimePower", std::to_string(q));
    return;
  }
  throw Error("NotAPrimePower", std::to_string(q));
}

namespace {

uint64_t key_of(const GroupElement& a) {
  return (static_cast<uint64_t>(a.t.index()) << 32) | a.r.index();
}

}  // namespace

GroupTable::GroupTable(int q) : q_(q) {
  if (q > 9) throw Error("NotAPrimePower", "q > 9 is outside desk scale");
  factor_prime_power(q, p_, m_);
  const uint64_t qq = static_cast<uint64_t>(q) * static_cast<uint64_t>(q);

  // Minimal ambient degree: smallest multiple of m splitting both defining
  // equations (q^2 solutions in r, q solutions in t for each r). In practice
  // this is 2m for p = 2 and 4m for odd p.
  spec_ = nullptr;
  for (int mult = 1; mult <= 4; ++mult) {
    const gf::FieldSpec& cand = gf::FieldSpec::make(p_, mult * m_);
    gf::AdditiveMap r_eq{{cand.one(), 2 * m_}, {cand.one(), 0}};  // a^{q^2} + a
    std::vector<gf::FieldElement> rs = gf::solve_additive(cand, r_eq, cand.zero());
    if (rs.size() != qq) continue;
    gf::AdditiveMap t_eq{{cand.one(), m_}, {cand.neg(cand.one()), 0}};  // a^q - a
    bool ok = true;
    std::vector<GroupElement> els;
    for (const auto& r : rs) {
      std::vector<gf::FieldElement> ts = gf::solve_additive(cand, t_eq, cand.pow(r, static_cast<uint64_t>(q) + 1));
      if (ts.size() != static_cast<size_t>(q)) {
        ok = false;
        break;
      }
      for (const auto& t : ts) els.push_back({t, r});
    }
    if (!ok) continue;
    spec_ = &cand;
    elements_ = std::move(els);
    break;
  }
  if (!spec_) throw Error("AmbientFieldTooSmall", "no candidate degree splits both equations");
  index_.reserve(elements_.size() * 2);
  for (size_t i = 0; i < elements_.size(); ++i) index_[key_of(elements_[i])] = static_cast<int>(i);
}

GroupElement GroupTable::identity() const { return {spec_->zero(), spec_->zero()}; }

int GroupTable::id_of(const GroupElement& a) const {
  auto it = index_.find(key_of(a));
  if (it == index_.end()) throw Error("StructureViolation", "element not in group table");
  return it->second;
}

bool GroupTable::is_member(const GroupElement& a) const { return index_.count(key_of(a)) != 0; }

GroupElement GroupTable::mul(const GroupElement& a, const GroupElement& b) const {
  const gf::FieldSpec& F = *spec_;
  gf::FieldElement t = F.sub(F.add(a.t, b.t), F.mul(F.pow(a.r, static_cast<uint64_t>(q_)), b.r));
  return {t, F.add(a.r, b.r)};
}

GroupElement GroupTable::inv(const GroupElement& a) const {
  const gf::FieldSpec& F = *spec_;
  return {F.sub(F.neg(F.pow(a.r, static_cast<uint64_t>(q_) + 1)), a.t), F.neg(a.r)};
}

GroupElement GroupTable::commutator(const GroupElement& a, const GroupElement& b) const {
  // a b a^{-1} b^{-1} under the scheme-automorphism law is (r r'^q - r^q r', 0);
  // the composition-of-functions law carries the opposite sign (equal in char 2).
  const gf::FieldSpec& F = *spec_;
  gf::FieldElement t = F.sub(F.mul(a.r, F.pow(b.r, static_cast<uint64_t>(q_))),
                             F.mul(F.pow(a.r, static_cast<uint64_t>(q_)), b.r));
  return {t, F.zero()};
}

GroupElement GroupTable::conjugate(const GroupElement& g, const GroupElement& a) const {
  return mul(mul(g, a), inv(g));
}

GroupElement GroupTable::power(const GroupElement& a, uint64_t e) const {
  GroupElement r = identity();
  for (uint64_t i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int GroupTable::element_order(const GroupElement& a) const {
  GroupElement x = a;
  int n = 1;
  const GroupElement e = identity();
  while (!(x == e)) {
    x = mul(x, a);
    ++n;
    if (n > static_cast<int>(size())) throw Error("StructureViolation", "order exceeds |G|");
  }
  return n;
}

namespace {

// Closure of a generating set under the group operation.
std::vector<int> subgroup_closure(const GroupTable& G, std::set<int> gens) {
  gens.insert(G.id_of(G.identity()));
  std::vector<int> frontier(gens.begin(), gens.end());
  std::set<int> members = gens;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier) {
      for (int b : members) {
        int c = G.id_of(G.mul(G.element(a), G.element(b)));
        if (members.insert(c).second) next.push_back(c);
        int d = G.id_of(G.mul(G.element(b), G.element(a)));
        if (members.insert(d).second) next.push_back(d);
      }
    }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

}  // namespace

SubgroupCensus GroupTable::subgroup_census() const {
  const int n = static_cast<int>(size());
  SubgroupCensus out;

  for (int i = 0; i < n; ++i) {
    bool central = true;
    for (int j = 0; j < n; ++j) {
      if (!(mul(element(i), element(j)) == mul(element(j), element(i)))) {
        central = false;
        break;
      }
    }
    if (central) out.center.push_back(i);
  }

  std::set<int> comms, frat;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      GroupElement c1 = mul(mul(element(i), element(j)), mul(inv(element(i)), inv(element(j))));
      comms.insert(id_of(c1));
    }
    frat.insert(id_of(power(element(i), static_cast<uint64_t>(p_))));
  }
  out.commutator_subgroup = subgroup_closure(*this, comms);
  for (int c : out.commutator_subgroup) frat.insert(c);
  out.frattini = subgroup_closure(*this, frat);

  // All three must coincide with {(t,0) | t^q = t}, of order q.
  std::vector<int> expected;
  for (int i = 0; i < n; ++i) {
    const GroupElement& a = element(i);
    if (a.r.is_zero() && spec_->pow(a.t, static_cast<uint64_t>(q_)) == a.t) expected.push_back(i);
  }
  std::sort(expected.begin(), expected.end());
  if (out.center != expected || out.commutator_subgroup != expected || out.frattini != expected ||
      expected.size() != static_cast<size_t>(q_))
    throw Error("StructureViolation", "center / G' / Frattini do not coincide as expected");
  return out;
}

int GroupTable::exponent() const {
  long long e = 1;
  for (size_t i = 0; i < size(); ++i)
    e = std::lcm(e, static_cast<long long>(element_order(element(static_cast<int>(i)))));
  return static_cast<int>(e);
}

std::vector<ConjugacyClass> GroupTable::conjugacy_classes() const {
  const int n = static_cast<int>(size());
  std::vector<int> cls(static_cast<size_t>(n), -1);
  std::vector<ConjugacyClass> out;
  for (int i = 0; i < n; ++i) {
    if (cls[static_cast<size_t>(i)] >= 0) continue;
    std::set<int> orbit;
    for (int g = 0; g < n; ++g) orbit.insert(id_of(conjugate(element(g), element(i))));
    ConjugacyClass c;
    c.members.assign(orbit.begin(), orbit.end());
    c.representative = c.members.front();
    int cid = static_cast<int>(out.size());
    for (int memb : c.members) cls[static_cast<size_t>(memb)] = cid;
    out.push_back(std::move(c));
  }

  // Expected partition: q central singletons, q^2 - 1 fibers of size q where
  // a fiber is an r-coordinate level set.
  size_t singles = 0, fibers = 0;
  for (const auto& c : out) {
    const GroupElement& rep = element(c.representative);
    if (rep.r.is_zero()) {
      if (c.members.size() != 1) throw Error("StructureViolation", "central class not a singleton");
      ++singles;
    } else {
      if (c.members.size() != static_cast<size_t>(q_))
        throw Error("StructureViolation", "noncentral class has wrong size");
      for (int memb : c.members)
        if (element(memb).r != rep.r) throw Error("StructureViolation", "class not an r-fiber");
      ++fibers;
    }
  }
  if (singles != static_cast<size_t>(q_) || fibers != static_cast<size_t>(q_) * q_ - 1)
    throw Error("StructureViolation", "class census mismatch");
  return out;
}

std::vector<int> GroupTable::class_of_element(const std::vector<ConjugacyClass>& classes) const {
  std::vector<int> cls(size(), -1);
  for (size_t cid = 0; cid < classes.size(); ++cid)
    for (int memb : classes[cid].members) cls[static_cast<size_t>(memb)] = static_cast<int>(cid);
  return cls;
}

GroupElement GroupTable::zeta_conjugation(const gf::FieldElement& zeta, const GroupElement& a) const {
  const gf::FieldSpec& F = *spec_;
  const uint64_t qq = static_cast<uint64_t>(q_) * q_;
  if (zeta.is_zero() || F.pow(zeta, qq - 1) != F.one())
    throw Error("NotInMultiplicativeGroup", "zeta^{q^2-1} != 1");
  GroupElement out{F.mul(F.pow(zeta, static_cast<uint64_t>(q_) + 1), a.t), F.mul(zeta, a.r)};
  return out;
}

}  // namespace group
}  // namespace wqs
