#include "wqs/kernels.hpp"

#include <algorithm>
#include <thread>

#include "kernels_bitsliced.hpp"

namespace wqs {
namespace kern {

SolvableCountProblem make_count_problem(const gf::FieldSpec& spec, int q) {
  SolvableCountProblem prob;
  prob.spec = &spec;
  prob.q = q;
  int m = 0;
  for (uint64_t t = 1; t < static_cast<uint64_t>(q); t *= static_cast<uint64_t>(spec.p())) ++m;
  prob.m = m;
  if (spec.degree() % m != 0 || static_cast<uint64_t>(q) != [&] {
        uint64_t v = 1;
        for (int i = 0; i < m; ++i) v *= static_cast<uint64_t>(spec.p());
        return v;
      }())
    throw Error("SpecMismatch", "q is not a power of the field characteristic dividing the field");

  // t -> t^q + t; its image membership certificate.
  gf::AdditiveMap L{{spec.one(), m}, {spec.one(), 0}};
  prob.check_rows = gf::image_check_matrix(spec, L);

  if (spec.p() == 2) {
    prob.packed = true;
    prob.M = spec.degree();
    prob.mod_taps = 0;
    for (int i = 0; i < prob.M; ++i)
      if (spec.modulus()[static_cast<size_t>(i)]) prob.mod_taps |= uint32_t{1} << i;
    auto frob = gf::linear_map_matrix(spec, {{spec.one(), m}});
    for (int k = 0; k < prob.M; ++k) {
      uint32_t row = 0;
      for (int i = 0; i < prob.M; ++i)
        if (frob[static_cast<size_t>(k)][static_cast<size_t>(i)]) row |= uint32_t{1} << i;
      prob.frob_rows[static_cast<size_t>(k)] = row;
    }
    for (const auto& cr : prob.check_rows) {
      uint32_t mask = 0;
      for (int i = 0; i < prob.M; ++i)
        if (cr[static_cast<size_t>(i)]) mask |= uint32_t{1} << i;
      prob.check_masks.push_back(mask);
    }
  }
  return prob;
}

const char* kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Scalar: return "scalar";
    case Kernel::Swar64: return "swar64";
    case Kernel::Avx2: return "avx2";
    case Kernel::Neon: return "neon";
  }
  return "?";
}

namespace {

// ---- scalar reference: plain gf arithmetic, any p --------------------------

uint64_t count_scalar(const SolvableCountProblem& prob, uint64_t begin, uint64_t end) {
  const gf::FieldSpec& F = *prob.spec;
  const int p = F.p();
  uint64_t count = 0;
  for (uint64_t i = begin; i < end; ++i) {
    gf::FieldElement c = F.pow(F.element(i), static_cast<uint64_t>(prob.q) + 1);
    bool ok = true;
    for (const auto& row : prob.check_rows) {
      int s = 0;
      for (int j = 0; j < F.degree(); ++j) s += row[static_cast<size_t>(j)] * c.coeff(j);
      if (s % p != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

// ---- packed scalar helper (p = 2), used for block edges --------------------

uint64_t count_packed_edge(const SolvableCountProblem& prob, uint64_t begin, uint64_t end) {
  const int M = prob.M;
  uint64_t count = 0;
  for (uint64_t xi = begin; xi < end; ++xi) {
    const uint32_t x = static_cast<uint32_t>(xi);
    uint32_t y = 0;
    for (int k = 0; k < M; ++k)
      y |= static_cast<uint32_t>(__builtin_parity(prob.frob_rows[static_cast<size_t>(k)] & x)) << k;
    uint64_t acc = 0;
    for (int j = 0; j < M; ++j)
      if ((x >> j) & 1) acc ^= static_cast<uint64_t>(y) << j;
    for (int s = 2 * M - 2; s >= M; --s)
      if ((acc >> s) & 1) acc ^= (static_cast<uint64_t>(prob.mod_taps) << (s - M)) | (uint64_t{1} << s);
    bool ok = true;
    for (uint32_t mask : prob.check_masks)
      if (__builtin_parityll(acc & mask)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

// ---- 64-lane SWAR backend ---------------------------------------------------

struct Swar64Backend {
  using V = uint64_t;
  static constexpr uint64_t kLanes = 64;
  static V zero() { return 0; }
  static V ones() { return ~uint64_t{0}; }
  static V vxor(V a, V b) { return a ^ b; }
  static V vand(V a, V b) { return a & b; }
  static V vor(V a, V b) { return a | b; }
  static V lane_pattern(int bit) {
    static constexpr uint64_t pat[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                        0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                        0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    return pat[bit];
  }
  static uint64_t zero_lane_count(V bad) { return static_cast<uint64_t>(__builtin_popcountll(~bad)); }
};

uint64_t count_blocked(const SolvableCountProblem& prob, uint64_t begin, uint64_t end,
                       uint64_t lanes, uint64_t (*block_fn)(const SolvableCountProblem&, uint64_t, uint64_t)) {
  uint64_t head = std::min(end, (begin + lanes - 1) / lanes * lanes);
  uint64_t count = count_packed_edge(prob, begin, head);
  if (head >= end) return count;
  uint64_t nblocks = (end - head) / lanes;
  count += block_fn(prob, head, nblocks);
  count += count_packed_edge(prob, head + nblocks * lanes, end);
  return count;
}

uint64_t count_swar64(const SolvableCountProblem& prob, uint64_t begin, uint64_t end) {
  return count_blocked(prob, begin, end, Swar64Backend::kLanes, &count_blocks<Swar64Backend>);
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

#if defined(__x86_64__) || defined(__i386__)
// Defined in kernels_avx2.cpp, compiled with -mavx2.
uint64_t count_blocks_avx2(const SolvableCountProblem& prob, uint64_t base, uint64_t nblocks);
#endif
#if defined(__ARM_NEON)
uint64_t count_blocks_neon(const SolvableCountProblem& prob, uint64_t base, uint64_t nblocks);
#endif

std::vector<Kernel> available_kernels(const SolvableCountProblem& prob) {
  std::vector<Kernel> out{Kernel::Scalar};
  if (!prob.packed) return out;
  out.push_back(Kernel::Swar64);
#if defined(__x86_64__) || defined(__i386__)
  if (cpu_has_avx2()) out.push_back(Kernel::Avx2);
#endif
#if defined(__ARM_NEON)
  out.push_back(Kernel::Neon);
#endif
  return out;
}

Kernel best_kernel(const SolvableCountProblem& prob) {
  auto ks = available_kernels(prob);
  return ks.back();
}

uint64_t count_solvable(const SolvableCountProblem& prob, uint64_t begin, uint64_t end, Kernel k) {
  if (begin >= end) return 0;
  switch (k) {
    case Kernel::Scalar:
      return count_scalar(prob, begin, end);
    case Kernel::Swar64:
      if (!prob.packed) throw Error("SpecMismatch", "bitsliced kernel needs p = 2");
      return count_swar64(prob, begin, end);
    case Kernel::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      if (!prob.packed) throw Error("SpecMismatch", "bitsliced kernel needs p = 2");
      if (!cpu_has_avx2()) throw Error("KernelUnavailable", "avx2 not supported by this cpu");
      return count_blocked(prob, begin, end, 256, &count_blocks_avx2);
#else
      throw Error("KernelUnavailable", "avx2 kernel not built on this architecture");
#endif
    case Kernel::Neon:
#if defined(__ARM_NEON)
      if (!prob.packed) throw Error("SpecMismatch", "bitsliced kernel needs p = 2");
      return count_blocked(prob, begin, end, 128, &count_blocks_neon);
#else
      throw Error("KernelUnavailable", "neon kernel not built on this architecture");
#endif
  }
  throw Error("KernelUnavailable", "unknown kernel");
}

uint64_t count_solvable(const SolvableCountProblem& prob, uint64_t begin, uint64_t end) {
  return count_solvable(prob, begin, end, best_kernel(prob));
}

uint64_t count_solvable_threaded(const SolvableCountProblem& prob, int threads) {
  const uint64_t n = prob.spec->order();
  const Kernel k = best_kernel(prob);
  if (threads <= 1) return count_solvable(prob, 0, n, k);
  const uint64_t t = static_cast<uint64_t>(threads);
  std::vector<uint64_t> partial(t, 0);
  std::vector<std::thread> pool;
  for (uint64_t i = 0; i < t; ++i) {
    uint64_t lo = n * i / t, hi = n * (i + 1) / t;
    pool.emplace_back([&prob, &partial, i, lo, hi, k] { partial[i] = count_solvable(prob, lo, hi, k); });
  }
  for (auto& th : pool) th.join();
  uint64_t total = 0;
  for (uint64_t v : partial) total += v;
  return total;
}

}  // namespace kern
}  // namespace wqs
