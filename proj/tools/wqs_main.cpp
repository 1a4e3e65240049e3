// wqs - verification toolkit for the special p-group on Hermitian curves,
// its ramification and representation theory, and the resolved singular
// fiber of the diagonal quotient surface.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "wqs/curve.hpp"
#include "wqs/graph.hpp"
#include "wqs/group.hpp"
#include "wqs/local.hpp"
#include "wqs/rep.hpp"
#include "wqs/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_q_list(const std::string& arg) {
  std::vector<int> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      int q = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(q);
    } catch (const std::exception&) {
      throw wqs::Error("NotAPrimePower", "cannot parse q value '" + item + "'");
    }
  }
  if (out.empty()) throw wqs::Error("NotAPrimePower", "empty q list");
  return out;
}

void require_prime_power(int q) {
  int p = 0, m = 0;
  wqs::group::factor_prime_power(q, p, m);  // throws when not a prime power
  if (q > 9) throw wqs::Error("NotAPrimePower", "q must be a prime power <= 9");
}

int cmd_verify(const std::string& q_arg, const std::string& json_path, int fmax, int threads) {
  std::vector<int> qs = parse_q_list(q_arg);
  for (int q : qs) require_prime_power(q);
  bool all_pass = true;
  nlohmann::json out = nlohmann::json::array();
  for (int q : qs) {
    wqs::report::Report rep = wqs::verify::run(q, {fmax, threads});
    all_pass = all_pass && rep.overall;
    for (const auto& c : rep.claims)
      std::cout << "q=" << q << "  " << (c.status ? "pass" : "FAIL") << "  " << c.id << "  observed "
                << c.observed << (c.status ? "" : "  expected " + c.expected) << "\n";
    std::cout << "q=" << q << "  overall: " << (rep.overall ? "pass" : "FAIL") << "\n";
    out.push_back(wqs::report::to_json(rep));
  }
  if (!json_path.empty()) {
    std::ofstream os(json_path);
    if (!os) throw wqs::Error("IoError", "cannot write " + json_path);
    os << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  }
  return all_pass ? kExitOk : kExitClaimFailure;
}

int cmd_group(int q) {
  require_prime_power(q);
  wqs::group::GroupTable G(q);
  std::cout << "q = " << q << ": |G| = " << G.size() << " over GF(" << G.p() << "^"
            << G.field().degree() << ")\n";
  auto census = G.subgroup_census();
  std::cout << "center = G' = Frattini, order " << census.center.size() << "\n";
  std::cout << "exponent " << G.exponent() << "\n";
  auto classes = G.conjugacy_classes();
  std::map<size_t, int> sizes;
  for (const auto& c : classes) sizes[c.members.size()]++;
  std::cout << classes.size() << " conjugacy classes:";
  for (auto [sz, n] : sizes) std::cout << " " << n << " of size " << sz;
  std::cout << "\n";
  return kExitOk;
}

int cmd_ramify(int q) {
  require_prime_power(q);
  wqs::group::GroupTable G(q);
  auto profile = wqs::local::filtration(G);
  std::cout << "higher ramification filtration for q = " << q << ":\n";
  for (auto [i, n] : profile.filtration) std::cout << "  |G_" << i << "| = " << n << "\n";
  auto classes = G.conjugacy_classes();
  auto dims = wqs::rep::invariant_dims(G, classes);
  std::map<int, int> fixed;
  for (auto [i, n] : profile.filtration) {
    if (i < 1 || n <= 1) continue;
    fixed[i] = (n == G.size()) ? static_cast<int>(dims.dim_h1_g) : static_cast<int>(dims.dim_h1_z);
  }
  long long delta = wqs::local::swan_conductor(profile, q * (q - 1), fixed);
  std::cout << "Swan conductor of H^1: " << delta << "\n";
  return kExitOk;
}

int cmd_reps(int q) {
  require_prime_power(q);
  wqs::group::GroupTable G(q);
  auto classes = G.conjugacy_classes();
  for (auto kind : {wqs::rep::FieldKind::NoMuP, wqs::rep::FieldKind::Complex}) {
    const char* name = kind == wqs::rep::FieldKind::NoMuP ? "no mu_p" : "split";
    std::cout << "irreducibles (" << name << "): " << wqs::rep::irr_count(q, kind)
              << " (orbit count " << wqs::rep::irr_count_by_orbits(G, classes, kind) << ")\n";
    auto census = wqs::rep::basic_set(q, kind);
    for (const auto& e : census.entries)
      std::cout << "  " << e.label << ": count " << e.count << ", degree " << e.degree << ", endo dim "
                << e.endo_dim << "\n";
    wqs::rep::wedderburn_audit(census);
  }
  auto chi = wqs::rep::cohomology_character(G, classes);
  std::cout << "character of H^1 on classes:";
  for (const auto& v : chi.values) std::cout << " " << v;
  std::cout << "\n";
  auto dims = wqs::rep::invariant_dims(G, classes);
  std::cout << "invariant dimensions: <chi,1>_G = " << dims.dim_h1_g << ", <chi,1>_Z = " << dims.dim_h1_z
            << ", <chi^2,1>_G = " << dims.dim_h1_tensor_g << "\n";
  return kExitOk;
}

int cmd_curve(int q, int fmax, int threads) {
  require_prime_power(q);
  auto ss = wqs::curve::verify_supersingular(q, fmax, threads);
  std::cout << "Hermitian curve, q = " << q << ", genus " << wqs::curve::curve_spec(q).genus
            << ", sign " << (ss.sign < 0 ? "-1" : "+1") << "\n";
  for (size_t i = 0; i < ss.counts.size(); ++i)
    std::cout << "  f = " << ss.counts[i].f << ": #C(F_{q^" << 2 * ss.counts[i].f
              << "}) = " << ss.counts[i].count << ", predicted " << ss.predictions[i] << "\n";
  if (ss.fmax_checked < fmax)
    std::cout << "  (levels above f = " << ss.fmax_checked << " exceed the 2^24 field cap)\n";
  std::cout << "all levels match: P_1(T) = (1 + qT)^{b1}, supersingular witness\n";
  return kExitOk;
}

int cmd_hj(long long m, long long b, long long p) {
  if (p != 1 && !wqs::gf::is_prime(p))
    throw wqs::Error("NonPrime", "characteristic exponent must be 1 or a prime");
  auto hj = wqs::graph::cf_expand(m, b);
  std::cout << "m/b = " << m << "/" << b << ", expansion [";
  for (size_t i = 0; i < hj.expansion.size(); ++i) std::cout << (i ? "," : "") << hj.expansion[i];
  std::cout << "]\n";
  std::vector<long long> rev(hj.expansion.rbegin(), hj.expansion.rend());
  auto [m2, b2] = wqs::graph::cf_eval(rev);
  std::cout << "reversed type " << m2 << "/" << b2 << "  (b b' = " << b * b2 << " = 1 mod " << m
            << ")\n";
  auto factors = wqs::graph::discriminant_group(wqs::graph::chain_graph(hj.expansion));
  std::cout << "discriminant group: Z/" << (factors.empty() ? 1 : factors[0]);
  for (size_t i = 1; i < factors.size(); ++i) std::cout << " + Z/" << factors[i];
  std::cout << "\n";
  std::cout << "local pi_1 order (char exponent " << p << "): " << wqs::graph::local_pi1_order(m, p)
            << "\n";
  return kExitOk;
}

int cmd_fiber(int q, const std::string& dot_path) {
  require_prime_power(q);
  auto fiber = wqs::graph::solve_self_intersections(wqs::graph::build_fiber_graph(q));
  if (!dot_path.empty()) {
    std::ofstream os(dot_path);
    if (!os) throw wqs::Error("IoError", "cannot write " + dot_path);
    os << wqs::graph::to_dot(fiber, "fiber_q" + std::to_string(q));
    std::cout << "wrote " << fiber.vertices.size() << "-vertex fiber graph to " << dot_path << "\n";
  } else {
    auto adj = fiber.adjacency();
    std::cout << "singular fiber for q = " << q << " (" << fiber.vertices.size() << " vertices, "
              << wqs::graph::node_count(fiber) << " nodes):\n";
    for (size_t i = 0; i < fiber.vertices.size(); ++i) {
      const auto& v = fiber.vertices[i];
      std::cout << "  " << v.label << " [m=" << v.multiplicity << ", s=" << *v.self_intersection
                << "] --";
      for (int w : adj[i]) std::cout << " " << fiber.vertices[static_cast<size_t>(w)].label;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_invariants(int q) {
  require_prime_power(q);
  const long long qq = static_cast<long long>(q) * q;
  auto inv = wqs::graph::surface_invariants(q, qq - 1, q - 1);
  std::cout << "q = " << q << ": e = " << inv.e << ", K^2 = " << inv.K2 << ", rho = " << inv.rho
            << "\n";
  std::cout << "fiber components c = " << inv.components_c << ", Mordell-Weil rank r = "
            << inv.mw_rank_r << ", Tate-Shioda: 2 + (c-1) + r = "
            << 2 + (inv.components_c - 1) + inv.mw_rank_r << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wqs: exact verification of the Hermitian-curve quotient surface data"};
  app.require_subcommand(1);

  std::string q_list = "2";
  std::string json_path, dot_path;
  int q = 2, fmax = 3, threads = 1;
  long long hj_m = 0, hj_b = 0, hj_p = 1;

  auto* verify = app.add_subcommand("verify", "run the full per-q verification suite");
  verify->add_option("--q", q_list, "prime power or comma list, each <= 9")->required();
  verify->add_option("--json", json_path, "write the report as JSON");
  verify->add_option("--fmax", fmax, "point-count levels to check")->default_val(3);
  verify->add_option("--threads", threads, "threads for the point-count loop")->default_val(1);

  auto* group = app.add_subcommand("group", "group order, census, exponent, classes");
  group->add_option("--q", q, "prime power <= 9")->required();

  auto* ramify = app.add_subcommand("ramify", "higher ramification filtration and Swan conductor");
  ramify->add_option("--q", q, "prime power <= 9")->required();

  auto* reps = app.add_subcommand("reps", "irreducible censuses and the cohomology character");
  reps->add_option("--q", q, "prime power <= 9")->required();

  auto* curve = app.add_subcommand("curve", "point counts and the supersingularity witness");
  curve->add_option("--q", q, "prime power <= 9")->required();
  curve->add_option("--fmax", fmax, "levels to check")->default_val(3);
  curve->add_option("--threads", threads, "threads for the point-count loop")->default_val(1);

  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung data for a type m/b");
  hj->add_option("m", hj_m, "m > b > 0")->required();
  hj->add_option("b", hj_b, "coprime to m")->required();
  hj->add_option("--p", hj_p, "characteristic exponent (prime or 1)")->default_val(1);

  auto* fiber = app.add_subcommand("fiber", "resolved singular fiber dual graph");
  fiber->add_option("--q", q, "prime power <= 9")->required();
  fiber->add_option("--dot", dot_path, "write graphviz DOT here");

  auto* invariants = app.add_subcommand("invariants", "Chern invariants and Picard number");
  invariants->add_option("--q", q, "prime power <= 9")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(q_list, json_path, fmax, threads);
    if (group->parsed()) return cmd_group(q);
    if (ramify->parsed()) return cmd_ramify(q);
    if (reps->parsed()) return cmd_reps(q);
    if (curve->parsed()) return cmd_curve(q, fmax, threads);
    if (hj->parsed()) return cmd_hj(hj_m, hj_b, hj_p);
    if (fiber->parsed()) return cmd_fiber(q, dot_path);
    if (invariants->parsed()) return cmd_invariants(q);
  } catch (const wqs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    // Failed mathematical claims exit 1; configuration problems exit 2.
    static const std::set<std::string> claim_kinds = {
        "StructureViolation", "MismatchAtLevel",  "CrossCheckFailure",
        "AuditFailure",       "Mismatch",         "NonIntegralSwan",
        "NonIntegralDimension", "NonIntegralSelfIntersection", "ActionViolation"};
    return claim_kinds.count(e.kind()) ? kExitClaimFailure : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
