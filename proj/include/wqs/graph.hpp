#pragma once

// Hirzebruch-Jung combinatorics and the resolved singular fiber: continued
// fractions, intersection matrices, discriminant groups via Smith normal
// form, the Cartier monoid P, fundamental cycles, the fiber dual graph with
// multiplicities and self-intersections, and the surface invariants.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wqs/gf.hpp"  // for wqs::Error

namespace wqs {
namespace graph {

struct HJType {
  long long m = 0;
  long long b = 0;
  std::vector<long long> expansion;  // [s_1 .. s_r], all >= 2
};

// m/b = s_1 - 1/(s_2 - 1/(... - 1/s_r)); requires 0 < b < m, gcd(m,b) = 1.
HJType cf_expand(long long m, long long b);
std::pair<long long, long long> cf_eval(const std::vector<long long>& expansion);

struct Vertex {
  std::string label;
  long long multiplicity = 1;
  std::optional<long long> self_intersection;
};

struct DualGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;
  bool is_tree() const;
  int degree(int v) const;
};

// Chain graph of an HJ expansion: E_1 -- ... -- E_r, E_i^2 = -s_i.
DualGraph chain_graph(const std::vector<long long>& expansion);

// Intersection matrix: diagonal self-intersections, off-diagonal adjacency.
std::vector<std::vector<long long>> intersection_matrix(const DualGraph& g);

// Exact integer determinant (fraction-free elimination).
long long determinant(std::vector<std::vector<long long>> a);

// All leading principal minors satisfy (-1)^k det_k > 0.
bool is_negative_definite(const std::vector<std::vector<long long>>& a);

// Diagonal of the Smith normal form, absolute values, in divisibility order.
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> a);

// Invariant factors > 1 of the cokernel of the intersection matrix; for an
// HJ chain this is the single factor m. Throws NotNegativeDefinite.
std::vector<long long> discriminant_group(const DualGraph& g);

// Order of the local fundamental group: the prime-to-p part of Z/mZ.
long long local_pi1_order(long long m, long long p);

// The monoid P = ker(phi) cap (N + N) where phi sends (n, n') to the class
// of (n, 0, ..., 0, n') in the discriminant group of the chain.
class MonoidP {
 public:
  MonoidP(long long m, long long b);
  bool contains(long long n, long long n2) const;
  // Irreducible elements; coordinates <= m suffice since (m,0),(0,m) are in P.
  std::vector<std::pair<long long, long long>> hilbert_basis() const;
  long long index() const;  // [Z^2 : P^gp], equals m
 private:
  HJType type_;
  std::vector<std::vector<long long>> matrix_;
};

// Laufer iteration: Z = sum E_i; while Z . E_i > 0 for some i, add E_i.
// For HJ chains the result is the all-ones vector. Throws NotNegativeDefinite
// when the iteration fails to terminate.
std::vector<long long> fundamental_cycle(const DualGraph& g);

// The resolved singular fiber: chain E_1..E_{q-1} into F_1, leaf F_0 at F_1,
// spine F_1-F_2-F_3-F_4, and q strings of length q-1 hanging off F_4.
DualGraph build_fiber_graph(int q);

// Self-intersections forced by numerical triviality of the multiplicity
// vector: s_i = -(sum of neighbor multiplicities)/m_i.
// Throws NonIntegralSelfIntersection.
DualGraph solve_self_intersections(const DualGraph& g);

int node_count(const DualGraph& g);  // vertices of valency >= 3

// Euler number of a tree of rational curves: #vertices + 1.
long long tree_euler_number(const DualGraph& g);

struct SurfaceInvariants {
  int q;
  long long e;             // c_2
  long long K2;            // c_1^2
  long long rho;           // Picard number
  long long components_c;  // irreducible components of the singular fiber
  long long mw_rank_r;     // Mordell-Weil rank
};

// Euler number via the fibration formula e = e(C) e(P^1) + (e(fiber) - e(C))
// + delta, then K^2 by Noether and rho = e - 2, cross-checked against
// rho = 2 + (c - 1) + r. swan_delta and mw_rank come from the local and rep
// modules. Throws CrossCheckFailure.
SurfaceInvariants surface_invariants(int q, long long swan_delta, long long mw_rank);

// DOT rendering, deterministic vertex order, labels "name [m=.., s=..]".
std::string to_dot(const DualGraph& g, const std::string& name);

}  // namespace graph
}  // namespace wqs
