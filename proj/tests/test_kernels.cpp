#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "swan/cyclofield.hpp"
#include "swan/kernels.hpp"

namespace k = swan::kernels;

namespace {

bool have_avx2() { return k::cpu_supports(k::Isa::kAvx2); }

}  // namespace

TEST(Kernels, ScalarReference) {
  std::vector<std::uint64_t> acc{1, 2, 3};
  const std::vector<std::uint32_t> src{10, 20, 30};
  k::mul_acc_scalar(acc.data(), 7, src.data(), src.size());
  EXPECT_EQ(acc, (std::vector<std::uint64_t>{71, 142, 213}));
}

TEST(Kernels, Avx2MatchesScalarOnEveryLength) {
  if (!have_avx2()) GTEST_SKIP() << "CPU lacks AVX2";
  std::mt19937_64 rng(9);
  for (std::uint32_t p : {3u, 7u, 373u, 65521u, (1u << 24) - 3}) {
    for (std::size_t n = 0; n <= 70; ++n) {
      std::vector<std::uint32_t> src(n);
      for (auto& x : src) x = static_cast<std::uint32_t>(rng() % p);
      std::vector<std::uint64_t> a(n + 3), b;
      for (auto& x : a) x = rng() % (std::uint64_t{1} << 60);
      b = a;
      const std::uint64_t scale = rng() % p;
      k::mul_acc_scalar(a.data(), scale, src.data(), n);
      k::mul_acc_for(k::Isa::kAvx2)(b.data(), scale, src.data(), n);
      ASSERT_EQ(a, b) << "p=" << p << " n=" << n;
    }
  }
}

TEST(Kernels, FieldMultiplicationAgreesAcrossIsas) {
  if (!have_avx2()) GTEST_SKIP() << "CPU lacks AVX2";
  std::mt19937_64 rng(21);
  for (auto [m, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {3, 5}, {9, 5}, {37, 5}, {97, 5}, {13, 41}, {3, 16777199}}) {
    swan::FactorOptions fast;
    fast.time_budget = std::chrono::duration<double>(0.5);
    const auto S = swan::FieldSpec::make(m, p, fast, k::Isa::kScalar);
    const auto V = swan::FieldSpec::make(m, p, fast, k::Isa::kAvx2);
    EXPECT_EQ(S.isa(), k::Isa::kScalar);
    EXPECT_EQ(V.isa(), k::Isa::kAvx2);
    for (int i = 0; i < 300; ++i) {
      std::vector<std::uint32_t> a(S.degree()), b(S.degree());
      for (auto& x : a) x = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : b) x = static_cast<std::uint32_t>(rng() % p);
      // Extreme operands stress the accumulator bound.
      if (i == 0) std::fill(a.begin(), a.end(), static_cast<std::uint32_t>(p - 1));
      if (i == 0) std::fill(b.begin(), b.end(), static_cast<std::uint32_t>(p - 1));
      ASSERT_EQ(S.mul(S.from_coeffs(a), S.from_coeffs(b)).coeffs(),
                V.mul(V.from_coeffs(a), V.from_coeffs(b)).coeffs())
          << m << "," << p;
    }
  }
}

TEST(Kernels, EnvironmentOverride) {
  ::setenv("SWAN_KERNEL", "scalar", 1);
  EXPECT_EQ(k::detect(), k::Isa::kScalar);
  ::setenv("SWAN_KERNEL", "avx2", 1);
  EXPECT_EQ(k::detect(), have_avx2() ? k::Isa::kAvx2 : k::Isa::kScalar);
  ::unsetenv("SWAN_KERNEL");
  EXPECT_EQ(k::isa_name(k::Isa::kScalar), "scalar");
  EXPECT_EQ(k::isa_name(k::Isa::kAvx2), "avx2");
}
