// AVX2 bitsliced backend, 256 lanes per block. This translation unit is the
// only one compiled with -mavx2; callers gate on a runtime cpuid check.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "kernels_bitsliced.hpp"

namespace wqs {
namespace kern {

namespace {

struct Avx2Backend {
  using V = __m256i;
  static constexpr uint64_t kLanes = 256;
  static V zero() { return _mm256_setzero_si256(); }
  static V ones() { return _mm256_set1_epi64x(-1); }
  static V vxor(V a, V b) { return _mm256_xor_si256(a, b); }
  static V vand(V a, V b) { return _mm256_and_si256(a, b); }
  static V vor(V a, V b) { return _mm256_or_si256(a, b); }
  static V lane_pattern(int bit) {
    static const uint64_t p64[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                    0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                    0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    if (bit < 6) return _mm256_set1_epi64x(static_cast<long long>(p64[bit]));
    const uint64_t z = 0, o = ~uint64_t{0};
    // lane j (j in [0,256)) has value (j >> bit) & 1; words cover 64 lanes each
    if (bit == 6) return _mm256_set_epi64x(static_cast<long long>(o), static_cast<long long>(z),
                                           static_cast<long long>(o), static_cast<long long>(z));
    return _mm256_set_epi64x(static_cast<long long>(o), static_cast<long long>(o),
                             static_cast<long long>(z), static_cast<long long>(z));  // bit == 7
  }
  static uint64_t zero_lane_count(V bad) {
    alignas(32) uint64_t w[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(w), bad);
    return static_cast<uint64_t>(__builtin_popcountll(~w[0]) + __builtin_popcountll(~w[1]) +
                                 __builtin_popcountll(~w[2]) + __builtin_popcountll(~w[3]));
  }
};

}  // namespace

uint64_t count_blocks_avx2(const SolvableCountProblem& prob, uint64_t base, uint64_t nblocks) {
  return count_blocks<Avx2Backend>(prob, base, nblocks);
}

}  // namespace kern
}  // namespace wqs

#endif
