#include "swan/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace swan::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

void mul_acc_scalar(std::uint64_t* acc, std::uint64_t scale, const std::uint32_t* src,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += scale * src[i];
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detect() {
  if (const char* env = std::getenv("SWAN_KERNEL")) {
    const std::string want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2" && cpu_supports(Isa::kAvx2)) return Isa::kAvx2;
  }
  return cpu_supports(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

MulAccFn mul_acc_for(Isa isa) {
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::kAvx2 && cpu_supports(Isa::kAvx2)) return &mul_acc_avx2;
#endif
  (void)isa;
  return &mul_acc_scalar;
}

void mulmod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
            std::span<const std::uint32_t> modulus, std::uint32_t p, std::span<std::uint32_t> out,
            std::span<std::uint64_t> scratch, MulAccFn mul_acc) {
  const std::size_t n = modulus.size();
  std::uint64_t* acc = scratch.data();
  std::fill_n(acc, 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) mul_acc(acc + i, a[i], b.data(), n);
  }
  // Top-down: acc[k] is final once every higher slot has been folded.
  for (std::size_t k = 2 * n - 2; k >= n; --k) {
    const std::uint64_t c = acc[k] % p;
    if (c != 0) mul_acc(acc + (k - n), p - c, modulus.data(), n);
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
}

}  // namespace swan::kernels
