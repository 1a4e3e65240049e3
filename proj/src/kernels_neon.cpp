// NEON bitsliced backend, 128 lanes per block.

#if defined(__ARM_NEON)

#include <arm_neon.h>

#include "kernels_bitsliced.hpp"

namespace wqs {
namespace kern {

namespace {

struct NeonBackend {
  using V = uint64x2_t;
  static constexpr uint64_t kLanes = 128;
  static V zero() { return vdupq_n_u64(0); }
  static V ones() { return vdupq_n_u64(~uint64_t{0}); }
  static V vxor(V a, V b) { return veorq_u64(a, b); }
  static V vand(V a, V b) { return vandq_u64(a, b); }
  static V vor(V a, V b) { return vorrq_u64(a, b); }
  static V lane_pattern(int bit) {
    static const uint64_t p64[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                    0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                    0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    if (bit < 6) return vdupq_n_u64(p64[bit]);
    const uint64_t lanes[2] = {0, ~uint64_t{0}};  // bit == 6
    return vld1q_u64(lanes);
  }
  static uint64_t zero_lane_count(V bad) {
    return static_cast<uint64_t>(__builtin_popcountll(~vgetq_lane_u64(bad, 0)) +
                                 __builtin_popcountll(~vgetq_lane_u64(bad, 1)));
  }
};

}  // namespace

uint64_t count_blocks_neon(const SolvableCountProblem& prob, uint64_t base, uint64_t nblocks) {
  return count_blocks<NeonBackend>(prob, base, nblocks);
}

}  // namespace kern
}  // namespace wqs

#endif
