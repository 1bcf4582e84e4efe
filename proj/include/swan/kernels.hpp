#pragma once

// Inner loops of F_p[z]/(Phi_m) multiplication.
//
// Coefficients are uint32 residues; products are accumulated unreduced in
// uint64 lanes, so callers must keep (number of terms) * (p-1)^2 below 2^64.
// Every variant must produce bit-identical accumulators.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace swan::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// acc[i] += scale * src[i] for i < src.size(); acc must be at least as long.
using MulAccFn = void (*)(std::uint64_t* acc, std::uint64_t scale, const std::uint32_t* src,
                          std::size_t n);

void mul_acc_scalar(std::uint64_t* acc, std::uint64_t scale, const std::uint32_t* src,
                    std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
void mul_acc_avx2(std::uint64_t* acc, std::uint64_t scale, const std::uint32_t* src,
                  std::size_t n);
#endif

/// True when the running CPU can execute `isa`.
bool cpu_supports(Isa isa);

/// Best supported ISA, unless SWAN_KERNEL=scalar|avx2 overrides it.
Isa detect();

MulAccFn mul_acc_for(Isa isa);

/// Full product of a and b (each of length n) into acc[0, 2n-1), then
/// reduction modulo the monic polynomial whose low coefficients are `modulus`
/// (length n), leaving the residues in out[0, n).
void mulmod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
            std::span<const std::uint32_t> modulus, std::uint32_t p, std::span<std::uint32_t> out,
            std::span<std::uint64_t> scratch, MulAccFn mul_acc);

}  // namespace swan::kernels
