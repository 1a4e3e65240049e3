#pragma once

// Inner loop of point counting: given GF(p^M) and q = p^m with m | M, count
// the x in an index range whose value x^{q+1} lies in the image of the
// additive map t -> t^q + t. Each such x carries q affine points of the
// Hermitian curve.
//
// One scalar reference kernel works for every p and goes through gf
// arithmetic unchanged. For p = 2 the whole computation is an XOR/AND
// network, so there are bitsliced variants (64-bit SWAR portably, AVX2 on
// x86, NEON on ARM) processing one x per bit lane; the best available one is
// selected at runtime and all variants are equivalence-tested against the
// scalar reference.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wqs/gf.hpp"

namespace wqs {
namespace kern {

struct SolvableCountProblem {
  const gf::FieldSpec* spec = nullptr;
  int q = 0;
  int m = 0;  // q = p^m
  // Membership functionals: c solvable iff check . c == 0 (mod p) for all rows.
  std::vector<std::vector<uint8_t>> check_rows;

  // Packed data, p = 2 only: field elements as M-bit integers (bit i = coeff i).
  bool packed = false;
  int M = 0;
  uint32_t mod_taps = 0;                   // modulus bits below x^M
  std::array<uint32_t, gf::kMaxDegree> frob_rows{};  // bit k of x^q = parity(frob_rows[k] & x)
  std::vector<uint32_t> check_masks;       // membership masks over product bits
};

SolvableCountProblem make_count_problem(const gf::FieldSpec& spec, int q);

enum class Kernel { Scalar, Swar64, Avx2, Neon };

const char* kernel_name(Kernel k);

// Kernels usable for this problem on this machine, Scalar always included.
std::vector<Kernel> available_kernels(const SolvableCountProblem& prob);
Kernel best_kernel(const SolvableCountProblem& prob);

// Number of solvable x with index in [begin, end).
uint64_t count_solvable(const SolvableCountProblem& prob, uint64_t begin, uint64_t end, Kernel k);
uint64_t count_solvable(const SolvableCountProblem& prob, uint64_t begin, uint64_t end);

// Whole field, partitioned across threads with an integer-sum reduction;
// the result is independent of the partition.
uint64_t count_solvable_threaded(const SolvableCountProblem& prob, int threads);

}  // namespace kern
}  // namespace wqs
