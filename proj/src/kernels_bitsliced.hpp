#pragma once

// Shared bitsliced implementation (p = 2), instantiated per backend. One x
// per bit lane; a block is one vector register worth of consecutive indices
// starting at a lane-aligned base.
//
// A backend B provides:
//   using V = ...;                          vector of B::kLanes bit lanes
//   static V zero(); static V ones();
//   static V vxor(V, V); static V vand(V, V); static V vor(V, V);
//   static V lane_pattern(int bit);          bit <bit> of the lane number
//   static uint64_t zero_lane_count(V);      lanes equal to 0 across the mask

#include <cstdint>

#include "wqs/kernels.hpp"

namespace wqs {
namespace kern {

template <class B>
uint64_t count_blocks(const SolvableCountProblem& prob, uint64_t base, uint64_t nblocks) {
  using V = typename B::V;
  const int M = prob.M;
  uint64_t total = 0;
  for (uint64_t blk = 0; blk < nblocks; ++blk) {
    const uint64_t start = base + blk * B::kLanes;

    // Slice the M input bits across lanes: low bits follow fixed periodic
    // patterns, bits >= log2(lanes) are constant within the block.
    V x[gf::kMaxDegree];
    for (int i = 0; i < M; ++i) {
      if ((uint64_t{1} << i) < B::kLanes)
        x[i] = B::lane_pattern(i);
      else
        x[i] = ((start >> i) & 1) ? B::ones() : B::zero();
    }

    // y = x^q through the precomputed F_2 matrix.
    V y[gf::kMaxDegree];
    for (int k = 0; k < M; ++k) {
      V acc = B::zero();
      uint32_t row = prob.frob_rows[static_cast<size_t>(k)];
      while (row) {
        int i = __builtin_ctz(row);
        row &= row - 1;
        acc = B::vxor(acc, x[i]);
      }
      y[k] = acc;
    }

    // z = y * x in GF(2)[T] / modulus, schoolbook then tap reduction.
    V z[2 * gf::kMaxDegree - 1];
    for (int s = 0; s < 2 * M - 1; ++s) z[s] = B::zero();
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) z[i + j] = B::vxor(z[i + j], B::vand(y[i], x[j]));
    for (int s = 2 * M - 2; s >= M; --s) {
      uint32_t taps = prob.mod_taps;
      while (taps) {
        int t = __builtin_ctz(taps);
        taps &= taps - 1;
        z[s - M + t] = B::vxor(z[s - M + t], z[s]);
      }
    }

    // Membership: all check functionals must vanish.
    V bad = B::zero();
    for (uint32_t mask : prob.check_masks) {
      V par = B::zero();
      uint32_t mm = mask;
      while (mm) {
        int t = __builtin_ctz(mm);
        mm &= mm - 1;
        par = B::vxor(par, z[t]);
      }
      bad = B::vor(bad, par);
    }
    total += B::zero_lane_count(bad);
  }
  return total;
}

}  // namespace kern
}  // namespace wqs
