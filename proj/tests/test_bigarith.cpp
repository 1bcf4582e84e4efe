#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "oracle.hpp"
#include "swan/bigarith.hpp"
#include "swan/errors.hpp"
#include "swan/factor_cache.hpp"

using swan::Factorization;
using swan::Natural;

namespace {

Natural N(const char* s) { return Natural::from_string(s); }

void expect_valid(const Factorization& f, const Natural& n) {
  EXPECT_EQ(f.value(), n);
  for (const auto& [q, e] : f.pairs()) {
    EXPECT_TRUE(swan::is_prime(q)) << q;
    EXPECT_GT(e, 0u);
  }
  for (std::size_t i = 1; i < f.pairs().size(); ++i) {
    EXPECT_LT(f.pairs()[i - 1].prime, f.pairs()[i].prime);
  }
}

}  // namespace

TEST(Natural, DecimalRoundTrip) {
  for (const char* s : {"0", "1", "18446744073709551615", "18446744073709551616",
                        "439510970573257846930592330460696"}) {
    EXPECT_EQ(N(s).to_string(), s);
  }
  EXPECT_THROW(N(""), swan::DomainError);
  EXPECT_THROW(N("-3"), swan::DomainError);
  EXPECT_THROW(N("12a"), swan::DomainError);
}

TEST(Natural, Arithmetic) {
  EXPECT_EQ(Natural(7) - Natural(7), Natural(0));
  EXPECT_THROW(Natural(1) - Natural(2), swan::DomainError);
  EXPECT_THROW(Natural(1) / Natural(0), swan::DivisionByZeroError);
  EXPECT_THROW(Natural(1) % Natural(0), swan::DivisionByZeroError);
  EXPECT_EQ(swan::pow(Natural(5), 22) - Natural(1), N("2384185791015624"));
  EXPECT_EQ(swan::lcm(Natural(4), Natural(6)), Natural(12));
  EXPECT_FALSE(N("18446744073709551616").fits_u64());
  EXPECT_THROW(N("18446744073709551616").to_u64(), swan::DomainError);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(swan::gcd(Natural(0), Natural(7)), Natural(7));
  EXPECT_EQ(swan::gcd(Natural(12), Natural(18)), Natural(6));
  EXPECT_EQ(swan::gcd(Natural(13575), Natural(3)), Natural(3));
  EXPECT_EQ(swan::gcd(Natural(0), Natural(0)), Natural(0));
}

TEST(Gcd, DividesBothAndIsGreatest) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t a = rng() % 100000, b = rng() % 100000;
    const Natural g = swan::gcd(Natural(a), Natural(b));
    EXPECT_EQ(g.to_u64(), std::gcd(a, b));
  }
}

TEST(ModPow, Examples) {
  EXPECT_EQ(swan::mod_pow(Natural(3), Natural(16), Natural(17)), Natural(1));
  EXPECT_EQ(swan::mod_pow(Natural(12345), Natural(0), Natural(97)), Natural(1));
  EXPECT_EQ(swan::mod_pow(Natural(2), Natural(12), Natural(13)), Natural(1));
  EXPECT_THROW(swan::mod_pow(Natural(2), Natural(3), Natural(1)), swan::DomainError);
}

TEST(IsPrime, Examples) {
  EXPECT_FALSE(swan::is_prime(Natural(0)));
  EXPECT_FALSE(swan::is_prime(Natural(1)));
  EXPECT_TRUE(swan::is_prime(Natural(2)));
  EXPECT_TRUE(swan::is_prime(Natural(373)));
  EXPECT_FALSE(swan::is_prime(Natural(341)));
  // Strong pseudoprime to bases 2..37 except the full witness set.
  EXPECT_FALSE(swan::is_prime(N("3825123056546413051")));
  EXPECT_TRUE(swan::is_prime(N("18446744073709551557")));       // largest prime < 2^64
  EXPECT_TRUE(swan::is_prime(N("170141183460469231731687303715884105727")));  // 2^127 - 1
  EXPECT_FALSE(swan::is_prime(N("170141183460469231731687303715884105729")));
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(swan::is_prime(Natural(n)), oracle::is_prime(n)) << n;
  }
}

TEST(Factor, Examples) {
  EXPECT_EQ(swan::factor(Natural(24)).to_string(), "2^3 * 3");
  EXPECT_TRUE(swan::factor(Natural(1)).empty());
  EXPECT_THROW(swan::factor(Natural(0)), swan::DomainError);

  const Natural n = N("205891132094648");  // 3^30 - 1
  expect_valid(swan::factor(n), n);

  const Natural n22 = swan::pow(Natural(5), 22) - Natural(1);
  const auto f22 = swan::factor(n22);
  expect_valid(f22, n22);
  EXPECT_TRUE(n22.divisible_by(Natural(1061481)));
}

TEST(Factor, ProductAndPrimalityOnRandomInputs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Natural n(rng() % 1'000'000'000'000ULL + 1);
    const auto f = swan::factor(n);
    expect_valid(f, n);
    if (n.to_u64() < 1'000'000) {
      std::map<std::uint64_t, unsigned> got;
      for (const auto& [q, e] : f.pairs()) got[q.to_u64()] = e;
      EXPECT_EQ(got, oracle::factor(n.to_u64()));
    }
  }
  // Products of two large primes exercise Pollard rho on both code paths.
  for (const char* s : {"1000000016000000063",  // 1000000007 * 1000000009
                        "340282366920938463463374607431768211457",  // 2^128 + 1
                        "12621774483536188886587657044524579674771302961744368076324462890624"}) {
    expect_valid(swan::factor(N(s)), N(s));
  }
}

TEST(Factor, PerfectPowers) {
  const Natural n = swan::pow(Natural(1000003), 5);
  EXPECT_EQ(swan::factor(n).to_string(), "1000003^5");
}

TEST(Factor, BudgetExhaustionKeepsCofactor) {
  // A 40-digit semiprime with 20-digit factors will not fall to rho in 1 ms.
  const Natural n = N("100000000000000000039") * N("100000000000000000129");
  swan::FactorOptions opts;
  opts.time_budget = std::chrono::duration<double>(0.001);
  try {
    swan::factor(n, opts);
    FAIL() << "expected budget exhaustion";
  } catch (const swan::FactorBudgetExceeded& e) {
    EXPECT_EQ(e.factored().value() * e.cofactor(), n);
    EXPECT_FALSE(e.cofactor().is_one());
  }
}

TEST(PkMinusOne, Examples) {
  EXPECT_EQ(swan::pk_minus_one_factor(Natural(3), 1).to_string(), "2");
  EXPECT_EQ(swan::pk_minus_one_factor(Natural(5), 2).to_string(), "2^3 * 3");
  EXPECT_EQ(swan::pk_minus_one_factor(Natural(3), 30), swan::factor(N("205891132094648")));
}

TEST(PkMinusOne, MatchesDirectFactoringBelow1e15) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 373}) {
    for (std::uint64_t k = 1; oracle::ipow(p, k) < 1'000'000'000'000'000ULL; ++k) {
      const Natural n = swan::pow(Natural(p), k) - Natural(1);
      EXPECT_EQ(swan::pk_minus_one_factor(Natural(p), k), swan::factor(n)) << p << "^" << k;
    }
  }
}

TEST(PkMinusOne, NamesTheFailedPiece) {
  swan::FactorOptions opts;
  opts.time_budget = std::chrono::duration<double>(0.0);
  try {
    swan::pk_minus_one_factor(Natural(7), 70, opts);
    FAIL() << "expected budget exhaustion";
  } catch (const swan::FactorBudgetExceeded& e) {
    ASSERT_FALSE(e.failed_pieces().empty());
    EXPECT_EQ(e.failed_pieces().front().rfind("Phi_", 0), 0u);
    EXPECT_EQ(e.factored().value() * e.cofactor(), swan::pow(Natural(7), 70) - Natural(1));
  }
}

TEST(EulerPhi, ExamplesAndMultiplicativity) {
  EXPECT_EQ(swan::euler_phi(Natural(1)), Natural(1));
  EXPECT_EQ(swan::euler_phi(Natural(45)), Natural(24));
  EXPECT_EQ(swan::euler_phi(Natural(115)), Natural(88));
  EXPECT_THROW(swan::euler_phi(Natural(0)), swan::DomainError);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    EXPECT_EQ(swan::euler_phi(Natural(n)).to_u64(), oracle::phi(n)) << n;
  }
  for (std::uint64_t a = 1; a < 40; ++a) {
    for (std::uint64_t b = 1; b < 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      EXPECT_EQ(swan::euler_phi(Natural(a * b)),
                swan::euler_phi(Natural(a)) * swan::euler_phi(Natural(b)));
    }
  }
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(swan::multiplicative_order(Natural(1), Natural(17), swan::factor(Natural(16))),
            Natural(1));
  EXPECT_EQ(swan::multiplicative_order(Natural(3), Natural(17), swan::factor(Natural(16))),
            Natural(16));
  EXPECT_EQ(swan::multiplicative_order(Natural(3), Natural(13), swan::factor(Natural(12))),
            Natural(3));
  EXPECT_THROW(swan::multiplicative_order(Natural(3), Natural(12), swan::factor(Natural(4))),
               swan::DomainError);
}

TEST(MultiplicativeOrder, CertificateAndOracle) {
  for (std::uint64_t n = 2; n < 200; ++n) {
    const auto fphi = swan::factor(swan::euler_phi(Natural(n)));
    for (std::uint64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const Natural o = swan::multiplicative_order(Natural(a), Natural(n), fphi);
      ASSERT_EQ(o.to_u64(), oracle::order_mod(a, n)) << a << " mod " << n;
      EXPECT_TRUE(swan::mod_pow(Natural(a), o, Natural(n)).is_one());
      const auto fo = swan::factor(o);
      for (const auto& [q, e] : fo.pairs()) {
        EXPECT_FALSE(swan::mod_pow(Natural(a), o / q, Natural(n)).is_one());
      }
    }
  }
}

TEST(Divisors, Small) {
  EXPECT_EQ(swan::divisors(45), (std::vector<std::uint64_t>{1, 3, 5, 9, 15, 45}));
  EXPECT_EQ(swan::divisors(1), (std::vector<std::uint64_t>{1}));
}

TEST(Factor, UsesCache) {
  swan::FactorCache cache;
  swan::FactorOptions opts;
  opts.cache = &cache;
  const Natural n = swan::pow(Natural(3), 30) - Natural(1);
  const auto f = swan::factor(n, opts);
  EXPECT_GE(cache.size(), 1u);
  ASSERT_TRUE(cache.lookup(n).has_value());
  EXPECT_EQ(*cache.lookup(n), f);
}

TEST(Factor, SeedDoesNotChangeResult) {
  const Natural n = N("1000000016000000063");
  swan::FactorOptions a, b;
  a.seed = 1;
  b.seed = 99;
  EXPECT_EQ(swan::factor(n, a), swan::factor(n, b));
}
