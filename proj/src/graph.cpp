#include "wqs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/rational.hpp>

namespace wqs {
namespace graph {

HJType cf_expand(long long m, long long b) {
  if (m < 2 || b < 1 || b >= m) throw Error("OutOfRange", "need 0 < b < m, m >= 2");
  if (std::gcd(m, b) != 1) throw Error("NotCoprime", "gcd(m, b) != 1");
  HJType out{m, b, {}};
  long long mm = m, bb = b;
  while (bb > 0) {
    long long s = (mm + bb - 1) / bb;  // ceil(m/b)
    out.expansion.push_back(s);
    long long next = s * bb - mm;
    mm = bb;
    bb = next;
  }
  return out;
}

std::pair<long long, long long> cf_eval(const std::vector<long long>& expansion) {
  for (long long s : expansion)
    if (s < 2) throw Error("InvalidEntry", "continued fraction entries must be >= 2");
  long long num = expansion.back(), den = 1;
  for (auto it = expansion.rbegin() + 1; it != expansion.rend(); ++it) {
    long long n2 = *it * num - den;
    den = num;
    num = n2;
  }
  return {num, den};
}

std::vector<std::vector<int>> DualGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  return adj;
}

int DualGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

bool DualGraph::is_tree() const {
  if (vertices.empty()) return false;
  if (edges.size() + 1 != vertices.size()) return false;
  std::vector<char> seen(vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  auto adj = adjacency();
  size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertices.size();
}

DualGraph chain_graph(const std::vector<long long>& expansion) {
  DualGraph g;
  for (size_t i = 0; i < expansion.size(); ++i) {
    if (expansion[i] < 2) throw Error("InvalidEntry", "chain weights must be >= 2");
    g.vertices.push_back({"E" + std::to_string(i + 1), 1, -expansion[i]});
    if (i > 0) g.edges.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
  }
  return g;
}

std::vector<std::vector<long long>> intersection_matrix(const DualGraph& g) {
  const size_t n = g.vertices.size();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    if (!g.vertices[i].self_intersection)
      throw Error("InvalidEntry", "vertex without self-intersection");
    a[i][i] = *g.vertices[i].self_intersection;
  }
  for (auto [u, v] : g.edges) {
    a[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
    a[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
  }
  return a;
}

long long determinant(std::vector<std::vector<long long>> a) {
  // Bareiss fraction-free elimination.
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(piv)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
             a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
            prev;
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return sign * a[static_cast<size_t>(n) - 1][static_cast<size_t>(n) - 1];
}

bool is_negative_definite(const std::vector<std::vector<long long>>& a) {
  const size_t n = a.size();
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<long long>> minor(k, std::vector<long long>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) minor[i][j] = a[i][j];
    long long d = determinant(std::move(minor));
    if ((k % 2 == 0 && d <= 0) || (k % 2 == 1 && d >= 0)) return false;
  }
  return true;
}

std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  const int rank_bound = std::min(rows, cols);
  int s = 0;
  auto at = [&a](int i, int j) -> long long& { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
  while (s < rank_bound) {
    // pick the nonzero entry of least magnitude in the trailing block
    int pi = -1, pj = -1;
    for (int i = s; i < rows; ++i)
      for (int j = s; j < cols; ++j)
        if (at(i, j) != 0 && (pi < 0 || std::llabs(at(i, j)) < std::llabs(at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(a[static_cast<size_t>(s)], a[static_cast<size_t>(pi)]);
    for (int i = s; i < rows; ++i) std::swap(at(i, s), at(i, pj));

    bool clean = true;
    for (int i = s + 1; i < rows; ++i) {
      if (at(i, s) == 0) continue;
      long long f = at(i, s) / at(s, s);
      for (int j = s; j < cols; ++j) at(i, j) -= f * at(s, j);
      if (at(i, s) != 0) clean = false;  // remainder survives; re-pivot
    }
    for (int j = s + 1; j < cols; ++j) {
      if (at(s, j) == 0) continue;
      long long f = at(s, j) / at(s, s);
      for (int i = s; i < rows; ++i) at(i, j) -= f * at(i, s);
      if (at(s, j) != 0) clean = false;
    }
    if (!clean) continue;

    // divisibility: pivot must divide the trailing block
    bool fixed = false;
    for (int i = s + 1; i < rows && !fixed; ++i)
      for (int j = s + 1; j < cols && !fixed; ++j)
        if (at(i, j) % at(s, s) != 0) {
          for (int jj = s; jj < cols; ++jj) at(s, jj) += at(i, jj);
          fixed = true;
        }
    if (fixed) continue;
    ++s;
  }
  std::vector<long long> diag;
  for (int k = 0; k < rank_bound; ++k) diag.push_back(std::llabs(at(k, k)));
  return diag;
}

std::vector<long long> discriminant_group(const DualGraph& g) {
  auto a = intersection_matrix(g);
  if (!is_negative_definite(a)) throw Error("NotNegativeDefinite", "intersection matrix");
  std::vector<long long> out;
  for (long long d : smith_normal_form(std::move(a)))
    if (d != 1) out.push_back(d);
  return out;
}

long long local_pi1_order(long long m, long long p) {
  if (m < 1 || p < 1) throw Error("OutOfRange", "need m >= 1 and p >= 1");
  if (p == 1) return m;
  while (m % p == 0) m /= p;
  return m;
}

namespace {

using Rat = boost::rational<long long>;

// Solve A x = target over Q; returns false when singular/inconsistent,
// stores whether the solution is integral.
bool solve_rational(const std::vector<std::vector<long long>>& A, const std::vector<long long>& target,
                    bool& integral) {
  const int n = static_cast<int>(A.size());
  std::vector<std::vector<Rat>> M(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n) + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(A[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    M[static_cast<size_t>(i)][static_cast<size_t>(n)] = Rat(target[static_cast<size_t>(i)]);
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (M[static_cast<size_t>(r)][static_cast<size_t>(c)] != Rat(0)) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(M[static_cast<size_t>(c)], M[static_cast<size_t>(piv)]);
    for (int r = 0; r < n; ++r) {
      if (r == c || M[static_cast<size_t>(r)][static_cast<size_t>(c)] == Rat(0)) continue;
      Rat f = M[static_cast<size_t>(r)][static_cast<size_t>(c)] / M[static_cast<size_t>(c)][static_cast<size_t>(c)];
      for (int j = c; j <= n; ++j)
        M[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * M[static_cast<size_t>(c)][static_cast<size_t>(j)];
    }
  }
  integral = true;
  for (int i = 0; i < n; ++i) {
    Rat x = M[static_cast<size_t>(i)][static_cast<size_t>(n)] / M[static_cast<size_t>(i)][static_cast<size_t>(i)];
    if (x.denominator() != 1) integral = false;
  }
  return true;
}

}  // namespace

MonoidP::MonoidP(long long m, long long b) : type_(cf_expand(m, b)) {
  matrix_ = intersection_matrix(chain_graph(type_.expansion));
}

bool MonoidP::contains(long long n, long long n2) const {
  if (n < 0 || n2 < 0) return false;
  std::vector<long long> target(matrix_.size(), 0);
  target.front() += n;
  target.back() += n2;
  bool integral = false;
  if (!solve_rational(matrix_, target, integral)) return false;
  return integral;
}

std::vector<std::pair<long long, long long>> MonoidP::hilbert_basis() const {
  const long long m = type_.m;
  std::vector<std::pair<long long, long long>> members;
  for (long long n = 0; n <= m; ++n)
    for (long long n2 = 0; n2 <= m; ++n2)
      if ((n || n2) && contains(n, n2)) members.emplace_back(n, n2);
  std::set<std::pair<long long, long long>> memberset(members.begin(), members.end());
  std::vector<std::pair<long long, long long>> irred;
  for (auto [n, n2] : members) {
    bool decomposable = false;
    for (auto [w, w2] : members) {
      if (w > n || w2 > n2 || (w == n && w2 == n2)) continue;
      if (memberset.count({n - w, n2 - w2})) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) irred.emplace_back(n, n2);
  }
  return irred;
}

long long MonoidP::index() const {
  // [Z^2 : P^gp] equals the number of kernel points in a fundamental box
  // [0,m)^2 divided into m^2, i.e. m^2 / count.
  const long long m = type_.m;
  long long count = 0;
  for (long long n = 0; n < m; ++n)
    for (long long n2 = 0; n2 < m; ++n2) {
      std::vector<long long> target(matrix_.size(), 0);
      target.front() += n;
      target.back() += n2;
      bool integral = false;
      if (solve_rational(matrix_, target, integral) && integral) ++count;
    }
  if (count == 0 || (m * m) % count != 0) throw Error("StructureViolation", "P^gp index not determined");
  return m * m / count;
}

std::vector<long long> fundamental_cycle(const DualGraph& g) {
  auto a = intersection_matrix(g);
  if (!is_negative_definite(a)) throw Error("NotNegativeDefinite", "intersection matrix");
  const size_t n = g.vertices.size();
  std::vector<long long> z(n, 1);
  // Termination is guaranteed on negative definite graphs; the cap is a
  // safety net against inconsistent input.
  for (long long rounds = 0; rounds < static_cast<long long>(n) * 1000; ++rounds) {
    bool bumped = false;
    for (size_t i = 0; i < n && !bumped; ++i) {
      long long dot = 0;
      for (size_t j = 0; j < n; ++j) dot += z[j] * a[j][i];
      if (dot > 0) {
        ++z[i];
        bumped = true;
      }
    }
    if (!bumped) return z;
  }
  throw Error("NotNegativeDefinite", "Laufer iteration did not terminate");
}

DualGraph build_fiber_graph(int q) {
  if (q < 2) throw Error("OutOfRange", "q >= 2 required");
  DualGraph g;
  auto add_vertex = [&g](const std::string& label, long long mult) {
    g.vertices.push_back({label, mult, std::nullopt});
    return static_cast<int>(g.vertices.size()) - 1;
  };
  // E_1 .. E_{q-1}: multiplicities 1, 2, ..., q-1 with E_1 at the free end.
  std::vector<int> e_ids;
  for (int i = 1; i <= q - 1; ++i) {
    int id = add_vertex("E" + std::to_string(i), i == 1 ? 1 : i);
    if (i > 1) g.edges.emplace_back(e_ids.back(), id);
    e_ids.push_back(id);
  }
  int f0 = add_vertex("F0", 1);
  int f1 = add_vertex("F1", q);
  int f2 = add_vertex("F2", q);
  int f3 = add_vertex("F3", q);
  int f4 = add_vertex("F4", q);
  g.edges.emplace_back(e_ids.back(), f1);
  g.edges.emplace_back(f0, f1);
  g.edges.emplace_back(f1, f2);
  g.edges.emplace_back(f2, f3);
  g.edges.emplace_back(f3, f4);
  // q strings of length q-1 off F4, multiplicities q-1 .. 1 outward.
  for (int s = 0; s < q; ++s) {
    int prev = f4;
    for (int j = 0; j < q - 1; ++j) {
      int id = add_vertex("S" + std::to_string(s + 1) + "_" + std::to_string(j + 1), q - 1 - j);
      g.edges.emplace_back(prev, id);
      prev = id;
    }
  }
  return g;
}

DualGraph solve_self_intersections(const DualGraph& g) {
  DualGraph out = g;
  auto adj = g.adjacency();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    long long neighbor_sum = 0;
    for (int w : adj[i]) neighbor_sum += g.vertices[static_cast<size_t>(w)].multiplicity;
    long long mi = g.vertices[i].multiplicity;
    if (mi <= 0 || neighbor_sum % mi != 0)
      throw Error("NonIntegralSelfIntersection",
                  "vertex " + g.vertices[i].label + ": multiplicity vector is not a fiber");
    out.vertices[i].self_intersection = -neighbor_sum / mi;
  }
  return out;
}

int node_count(const DualGraph& g) {
  int nodes = 0;
  auto adj = g.adjacency();
  for (size_t i = 0; i < g.vertices.size(); ++i)
    if (adj[i].size() >= 3) ++nodes;
  return nodes;
}

long long tree_euler_number(const DualGraph& g) {
  if (!g.is_tree()) throw Error("InvalidEntry", "euler number formula needs a tree");
  return static_cast<long long>(g.vertices.size()) + 1;
}

SurfaceInvariants surface_invariants(int q, long long swan_delta, long long mw_rank) {
  DualGraph fiber = build_fiber_graph(q);
  const long long c = static_cast<long long>(fiber.vertices.size());
  const long long e_curve = -static_cast<long long>(q) * q + q + 2;  // 2 - 2g
  const long long e_fiber = tree_euler_number(fiber);
  const long long e = e_curve * 2 + (e_fiber - e_curve) + swan_delta;
  SurfaceInvariants inv{q, e, 12 - e, e - 2, c, mw_rank};
  const long long tate_shioda = 2 + (c - 1) + mw_rank;
  if (inv.rho != tate_shioda)
    throw Error("CrossCheckFailure", "Picard number: Euler route disagrees with Tate-Shioda");
  const long long qq = static_cast<long long>(q) * q;
  if (inv.e != qq + q + 6 || inv.K2 != -qq - q + 6 || inv.rho != qq + q + 4)
    throw Error("CrossCheckFailure", "invariants disagree with the closed forms");
  if (inv.e + inv.K2 != 12)
    throw Error("CrossCheckFailure", "Noether formula violated");
  return inv;
}

std::string to_dot(const DualGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    const Vertex& v = g.vertices[i];
    os << "  v" << i << " [label=\"" << v.label << " [m=" << v.multiplicity;
    if (v.self_intersection) os << ", s=" << *v.self_intersection;
    os << "]\"];\n";
  }
  for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace graph
}  // namespace wqs
