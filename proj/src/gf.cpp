#include "wqs/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace wqs {
namespace gf {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over F_p, constant term first, no trailing-zero guarantee.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

int mod_inverse(int a, int p) {
  // p prime, a != 0 mod p
  int r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  const int inv_lead = mod_inverse(m.back(), p);
  trim(a);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int c = a.back() * inv_lead % p;
    int shift = static_cast<int>(a.size()) - 1 - dm;
    if (c != 0)
      for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    int inv = mod_inverse(a.back(), p);
    for (int& c : a) c = c * inv % p;
  }
  return a;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& m, int p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// f monic of degree M >= 2: irreducible iff gcd(f, x^{p^d} - x) = 1 for all
// d <= M/2 (every irreducible factor of degree d divides x^{p^d} - x).
bool is_irreducible(const Poly& f, int p) {
  const int M = static_cast<int>(f.size()) - 1;
  Poly xp{0, 1};  // running x^{p^d} mod f
  for (int d = 1; d <= M / 2; ++d) {
    xp = poly_powmod(std::move(xp), static_cast<uint64_t>(p), f, p);
    Poly g = xp;
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    if (poly_gcd(f, g, p).size() != 1) return false;
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree M over F_p, where
// candidates are ordered by the coefficient tuple (c_{M-1}, ..., c_0).
Poly smallest_irreducible(int p, int M) {
  std::vector<int> digits(M, 0);  // digits[0] = c_{M-1}, ..., digits[M-1] = c_0
  for (;;) {
    Poly f(M + 1, 0);
    f[M] = 1;
    for (int i = 0; i < M; ++i) f[M - 1 - i] = digits[i];
    if (M == 1 || is_irreducible(f, p)) return f;
    int i = M - 1;
    while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
    if (i < 0) throw Error("Internal", "no irreducible found");  // unreachable
    ++digits[i];
  }
}

struct SpecRegistry {
  std::mutex mu;
  std::map<std::pair<int, int>, std::unique_ptr<FieldSpec>> specs;
};

SpecRegistry& registry() {
  static SpecRegistry r;
  return r;
}

}  // namespace

uint32_t FieldElement::index() const {
  uint32_t k = 0;
  const int M = spec_->degree();
  const uint32_t p = static_cast<uint32_t>(spec_->p());
  for (int i = M - 1; i >= 0; --i) k = k * p + c_[static_cast<size_t>(i)];
  return k;
}

bool FieldElement::is_zero() const {
  for (int i = 0; i < spec_->degree(); ++i)
    if (c_[static_cast<size_t>(i)]) return false;
  return true;
}

const FieldSpec& FieldSpec::make(int p, int M) {
  if (!is_prime(p)) throw Error("NonPrime", "p = " + std::to_string(p) + " is not prime");
  if (M < 1 || M > kMaxDegree)
    throw Error("DegreeTooLarge", "extension degree " + std::to_string(M) + " outside [1, 24]");
  auto& reg = registry();
  std::lock_guard<std::mutex> lk(reg.mu);
  auto key = std::make_pair(p, M);
  auto it = reg.specs.find(key);
  if (it == reg.specs.end())
    it = reg.specs.emplace(key, std::unique_ptr<FieldSpec>(new FieldSpec(p, M))).first;
  return *it->second;
}

FieldSpec::FieldSpec(int p, int M) : p_(p), M_(M) {
  order_ = 1;
  for (int i = 0; i < M; ++i) order_ *= static_cast<uint64_t>(p);
  modulus_ = smallest_irreducible(p, M);
}

void FieldSpec::check(const FieldElement& a, const char* op) const {
  if (a.spec_ptr() != this)
    throw Error("SpecMismatch", std::string(op) + " across distinct field specs");
}

FieldElement FieldSpec::zero() const {
  std::array<uint8_t, kMaxDegree> c{};
  return FieldElement(this, c);
}

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(long long k) const {
  std::array<uint8_t, kMaxDegree> c{};
  c[0] = static_cast<uint8_t>(((k % p_) + p_) % p_);
  return FieldElement(this, c);
}

FieldElement FieldSpec::element(uint64_t index) const {
  std::array<uint8_t, kMaxDegree> c{};
  for (int i = 0; i < M_; ++i) {
    c[static_cast<size_t>(i)] = static_cast<uint8_t>(index % static_cast<uint64_t>(p_));
    index /= static_cast<uint64_t>(p_);
  }
  return FieldElement(this, c);
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  check(a, "add");
  check(b, "add");
  std::array<uint8_t, kMaxDegree> c{};
  for (int i = 0; i < M_; ++i) {
    int s = a.coeff(i) + b.coeff(i);
    c[static_cast<size_t>(i)] = static_cast<uint8_t>(s >= p_ ? s - p_ : s);
  }
  return FieldElement(this, c);
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
  check(a, "sub");
  check(b, "sub");
  std::array<uint8_t, kMaxDegree> c{};
  for (int i = 0; i < M_; ++i) {
    int s = a.coeff(i) - b.coeff(i);
    c[static_cast<size_t>(i)] = static_cast<uint8_t>(s < 0 ? s + p_ : s);
  }
  return FieldElement(this, c);
}

FieldElement FieldSpec::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  check(a, "mul");
  check(b, "mul");
  // Schoolbook product into a wide buffer, then reduce by the monic modulus.
  int buf[2 * kMaxDegree - 1] = {0};
  for (int i = 0; i < M_; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j < M_; ++j) buf[i + j] += a.coeff(i) * b.coeff(j);
  }
  for (int k = 2 * M_ - 2; k >= M_; --k) {
    int t = buf[k] % p_;
    if (t == 0) continue;
    for (int i = 0; i < M_; ++i) buf[k - M_ + i] -= t * modulus_[static_cast<size_t>(i)];
  }
  std::array<uint8_t, kMaxDegree> c{};
  for (int i = 0; i < M_; ++i) c[static_cast<size_t>(i)] = static_cast<uint8_t>(((buf[i] % p_) + p_) % p_);
  return FieldElement(this, c);
}

FieldElement FieldSpec::pow(const FieldElement& a, uint64_t e) const {
  check(a, "pow");
  if (a.is_zero()) return e == 0 ? one() : a;
  e %= order_ - 1;
  FieldElement r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
  check(a, "inv");
  if (a.is_zero()) throw Error("DivisionByZero", "inverse of zero");
  return pow(a, order_ - 2);
}

FieldElement FieldSpec::frobenius(const FieldElement& a, int e) const {
  FieldElement r = a;
  for (int i = 0; i < e; ++i) r = pow(r, static_cast<uint64_t>(p_));
  return r;
}

std::vector<std::vector<uint8_t>> linear_map_matrix(const FieldSpec& spec, const AdditiveMap& L) {
  const int M = spec.degree();
  std::vector<std::vector<uint8_t>> A(static_cast<size_t>(M), std::vector<uint8_t>(static_cast<size_t>(M), 0));
  for (int j = 0; j < M; ++j) {
    // basis element x^j has index p^j
    uint64_t idx = 1;
    for (int t = 0; t < j; ++t) idx *= static_cast<uint64_t>(spec.p());
    FieldElement bj = spec.element(idx);
    FieldElement img = spec.zero();
    for (const auto& term : L) img = spec.add(img, spec.mul(term.coeff, spec.frobenius(bj, term.frob_power)));
    for (int i = 0; i < M; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(j)] = img.coeff(i);
  }
  return A;
}

namespace {

struct Reduction {
  std::vector<std::vector<uint8_t>> E;  // row echelon of A
  std::vector<std::vector<uint8_t>> R;  // row ops: E = R * A
  std::vector<int> pivot_col;           // per pivot row
};

Reduction row_reduce(std::vector<std::vector<uint8_t>> A, int p) {
  const int M = static_cast<int>(A.size());
  std::vector<std::vector<uint8_t>> R(static_cast<size_t>(M), std::vector<uint8_t>(static_cast<size_t>(M), 0));
  for (int i = 0; i < M; ++i) R[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  auto addrow = [&](std::vector<uint8_t>& dst, const std::vector<uint8_t>& src, int f) {
    for (size_t j = 0; j < dst.size(); ++j) dst[j] = static_cast<uint8_t>((dst[j] + f * src[j]) % p);
  };
  int row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < M && row < M; ++col) {
    int pr = -1;
    for (int i = row; i < M; ++i)
      if (A[static_cast<size_t>(i)][static_cast<size_t>(col)]) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(A[static_cast<size_t>(pr)], A[static_cast<size_t>(row)]);
    std::swap(R[static_cast<size_t>(pr)], R[static_cast<size_t>(row)]);
    int inv = mod_inverse(A[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
    for (size_t j = 0; j < static_cast<size_t>(M); ++j) {
      A[static_cast<size_t>(row)][j] = static_cast<uint8_t>(A[static_cast<size_t>(row)][j] * inv % p);
      R[static_cast<size_t>(row)][j] = static_cast<uint8_t>(R[static_cast<size_t>(row)][j] * inv % p);
    }
    for (int i = 0; i < M; ++i) {
      if (i == row) continue;
      int f = A[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (f == 0) continue;
      addrow(A[static_cast<size_t>(i)], A[static_cast<size_t>(row)], p - f);
      addrow(R[static_cast<size_t>(i)], R[static_cast<size_t>(row)], p - f);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(A), std::move(R), std::move(pivots)};
}

}  // namespace

std::vector<FieldElement> solve_additive(const FieldSpec& spec, const AdditiveMap& L,
                                         const FieldElement& target) {
  const int M = spec.degree();
  const int p = spec.p();
  Reduction red = row_reduce(linear_map_matrix(spec, L), p);
  const int rank = static_cast<int>(red.pivot_col.size());

  // Transform target by the recorded row ops; consistency needs zeros past rank.
  std::vector<int> t(static_cast<size_t>(M), 0);
  for (int i = 0; i < M; ++i) {
    int s = 0;
    for (int j = 0; j < M; ++j) s += red.R[static_cast<size_t>(i)][static_cast<size_t>(j)] * target.coeff(j);
    t[static_cast<size_t>(i)] = s % p;
  }
  for (int i = rank; i < M; ++i)
    if (t[static_cast<size_t>(i)] != 0) return {};

  std::vector<int> part(static_cast<size_t>(M), 0);
  for (int i = 0; i < rank; ++i) part[static_cast<size_t>(red.pivot_col[static_cast<size_t>(i)])] = t[static_cast<size_t>(i)];

  // Kernel basis: one vector per free column.
  std::vector<int> is_pivot(static_cast<size_t>(M), 0);
  for (int c : red.pivot_col) is_pivot[static_cast<size_t>(c)] = 1;
  std::vector<std::vector<int>> kernel;
  for (int col = 0; col < M; ++col) {
    if (is_pivot[static_cast<size_t>(col)]) continue;
    std::vector<int> v(static_cast<size_t>(M), 0);
    v[static_cast<size_t>(col)] = 1;
    for (int i = 0; i < rank; ++i) {
      int coeff = red.E[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (coeff) v[static_cast<size_t>(red.pivot_col[static_cast<size_t>(i)])] = (p - coeff) % p;
    }
    kernel.push_back(std::move(v));
  }

  std::vector<FieldElement> out;
  const size_t k = kernel.size();
  std::vector<int> digits(k, 0);
  for (;;) {
    std::array<uint8_t, kMaxDegree> c{};
    for (int i = 0; i < M; ++i) {
      int s = part[static_cast<size_t>(i)];
      for (size_t d = 0; d < k; ++d) s += digits[d] * kernel[d][static_cast<size_t>(i)];
      c[static_cast<size_t>(i)] = static_cast<uint8_t>(s % p);
    }
    out.push_back(FieldElement(&spec, c));
    size_t d = 0;
    while (d < k && digits[d] == p - 1) digits[d++] = 0;
    if (d == k) break;
    ++digits[d];
  }
  std::sort(out.begin(), out.end(),
            [](const FieldElement& a, const FieldElement& b) { return a.index() < b.index(); });
  return out;
}

std::vector<std::vector<uint8_t>> image_check_matrix(const FieldSpec& spec, const AdditiveMap& L) {
  Reduction red = row_reduce(linear_map_matrix(spec, L), spec.p());
  std::vector<std::vector<uint8_t>> H;
  for (size_t i = red.pivot_col.size(); i < red.R.size(); ++i) H.push_back(red.R[i]);
  return H;
}

std::vector<FieldElement> FieldSpec::subfield_members(int d) const {
  if (d < 1 || M_ % d != 0)
    throw Error("NotASubfieldDegree", std::to_string(d) + " does not divide " + std::to_string(M_));
  // Kernel of a -> a^{p^d} - a.
  AdditiveMap L{{one(), d}, {neg(one()), 0}};
  return solve_additive(*this, L, zero());
}

}  // namespace gf
}  // namespace wqs
