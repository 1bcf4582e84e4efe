#include "swan/bigarith.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "swan/cyclofield.hpp"
#include "swan/errors.hpp"
#include "swan/factor_cache.hpp"

namespace swan {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Clock = std::chrono::steady_clock;

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (u64 i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (u64 j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mulmod64(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 powmod64(u64 b, u64 e, u64 n) {
  u64 r = 1 % n;
  b %= n;
  while (e) {
    if (e & 1) r = mulmod64(r, b, n);
    b = mulmod64(b, b, n);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_round64(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod64(a % n, d, n);
  if (x == 1 || x == n - 1 || x == 0) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 w : kWitnesses) {
    if (!miller_rabin_round64(n, w, d, s)) return false;
  }
  return true;
}

bool is_prime_big(const mpz_class& n, u64 seed) {
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
  }
  const mpz_class nm1 = n - 1;
  mpz_class d = nm1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(mpz_class(std::to_string(seed)));
  const mpz_class range = n - 3;
  mpz_class x;
  for (int round = 0; round < 64; ++round) {
    const mpz_class a = rng.get_z_range(range) + 2;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

struct Deadline {
  std::optional<Clock::time_point> at;
  bool expired() const { return at && Clock::now() >= *at; }
};

// Brent's cycle-finding variant of Pollard rho for word-sized n.
std::optional<u64> rho64(u64 n, std::mt19937_64& rng, const Deadline& deadline) {
  if (n % 2 == 0) return 2;
  constexpr u64 kBatch = 128;
  while (!deadline.expired()) {
    const u64 c = rng() % (n - 1) + 1;
    const u64 y0 = rng() % n;
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    u64 y = y0, x = y0, ys = y0, q = 1, g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        if (deadline.expired()) return std::nullopt;
        ys = y;
        const u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // Batch overshot: step back one at a time from the saved point.
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

std::optional<mpz_class> rho_big(const mpz_class& n, std::mt19937_64& rng,
                                 const Deadline& deadline) {
  constexpr u64 kBatch = 128;
  mpz_class x, y, ys, q, g, diff, c;
  while (!deadline.expired()) {
    c = mpz_class(std::to_string(rng())) % (n - 1) + 1;
    y = mpz_class(std::to_string(rng())) % n;
    q = 1;
    g = 1;
    auto step = [&](mpz_class& v) {
      v *= v;
      v += c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) step(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        if (deadline.expired()) return std::nullopt;
        ys = y;
        const u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          step(y);
          diff = x - y;
          q *= abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      do {
        step(ys);
        diff = x - ys;
        diff = abs(diff);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

// Returns (root, k) with root^k = n for the largest such k, or k = 1.
std::pair<mpz_class, unsigned long> perfect_power(const mpz_class& n) {
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  mpz_class root;
  for (unsigned long k = bits; k >= 2; --k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return {root, k};
  }
  return {n, 1};
}

std::optional<Natural> split_composite(const Natural& c, std::mt19937_64& rng,
                                       const Deadline& deadline) {
  if (c.fits_u64()) {
    auto d = rho64(c.to_u64(), rng, deadline);
    if (!d) return std::nullopt;
    return Natural(*d);
  }
  auto d = rho_big(c.mpz(), rng, deadline);
  if (!d) return std::nullopt;
  return Natural::from_mpz(std::move(*d));
}

Deadline make_deadline(const FactorOptions& opts) {
  Deadline d;
  if (opts.time_budget) {
    d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(*opts.time_budget);
  }
  return d;
}

}  // namespace

FactorBudgetExceeded::FactorBudgetExceeded(Factorization factored, Natural cofactor,
                                           std::vector<std::string> failed_pieces)
    : std::runtime_error("factoring time budget exhausted; unfactored cofactor " +
                         cofactor.to_string()),
      factored_(std::move(factored)),
      cofactor_(std::move(cofactor)),
      pieces_(std::move(failed_pieces)) {}

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural::from_mpz(std::move(r));
}

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus) {
  if (modulus < Natural(2)) throw DomainError("mod_pow: modulus must be >= 2");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.mpz().get_mpz_t(), exp.mpz().get_mpz_t(),
           modulus.mpz().get_mpz_t());
  return Natural::from_mpz(std::move(r));
}

bool is_prime(const Natural& n, std::uint64_t seed) {
  if (n.fits_u64()) return is_prime64(n.to_u64());
  return is_prime_big(n.mpz(), seed);
}

Factorization factor(const Natural& n, const FactorOptions& opts) {
  if (n.is_zero()) throw DomainError("factor: 0 has no prime factorization");
  if (n.is_one()) return {};
  if (opts.cache) {
    if (auto hit = opts.cache->lookup(n)) return *hit;
  }
  const Deadline deadline = make_deadline(opts);

  Factorization out;
  mpz_class rest = n.mpz();
  for (std::uint32_t q : small_primes()) {
    if (mpz_cmp_ui(rest.get_mpz_t(), static_cast<unsigned long>(q) * q) < 0) break;
    std::uint32_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      ++e;
    }
    out.multiply(Natural(q), e);
  }

  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  Natural leftover(1);
  std::vector<std::pair<Natural, std::uint32_t>> work;
  if (rest > 1) work.emplace_back(Natural::from_mpz(rest), 1);
  while (!work.empty()) {
    auto [c, mult] = std::move(work.back());
    work.pop_back();
    if (is_prime(c, opts.seed)) {
      out.multiply(c, mult);
      continue;
    }
    auto [root, k] = perfect_power(c.mpz());
    if (k > 1) {
      work.emplace_back(Natural::from_mpz(root), mult * static_cast<std::uint32_t>(k));
      continue;
    }
    auto d = split_composite(c, rng, deadline);
    if (!d) {
      leftover *= pow(c, mult);
      continue;
    }
    work.emplace_back(*d, mult);
    work.emplace_back(c / *d, mult);
  }

  if (!leftover.is_one()) {
    throw FactorBudgetExceeded(std::move(out), std::move(leftover), {n.to_string()});
  }
  if (opts.cache) opts.cache->store(n, out);
  return out;
}

Factorization pk_minus_one_factor(const Natural& p, std::uint64_t k, const FactorOptions& opts) {
  if (k == 0) throw DomainError("pk_minus_one_factor: k must be positive");
  if (p < Natural(2)) throw DomainError("pk_minus_one_factor: p must be prime");
  const Natural value = pow(p, k) - Natural(1);
  if (opts.cache) {
    if (auto hit = opts.cache->lookup(value)) return *hit;
  }
  const Deadline deadline = make_deadline(opts);

  Factorization out;
  Natural cofactor(1);
  std::vector<std::string> failed;
  for (std::uint64_t d : divisors(k)) {
    const Natural piece = Natural::from_mpz(cyclotomic_poly(d).evaluate(p.mpz()));
    FactorOptions sub = opts;
    if (deadline.at) {
      sub.time_budget = std::max(Clock::duration::zero(), *deadline.at - Clock::now());
    }
    try {
      out.merge(factor(piece, sub));
    } catch (const FactorBudgetExceeded& e) {
      out.merge(e.factored());
      cofactor *= e.cofactor();
      failed.push_back("Phi_" + std::to_string(d) + "(" + p.to_string() + ")");
    }
  }
  if (!failed.empty()) {
    throw FactorBudgetExceeded(std::move(out), std::move(cofactor), std::move(failed));
  }
  if (opts.cache) opts.cache->store(value, out);
  return out;
}

Natural euler_phi(const Natural& n) {
  if (n.is_zero()) throw DomainError("euler_phi: n must be >= 1");
  Natural phi(1);
  const Factorization f = factor(n);
  for (const auto& [q, e] : f.pairs()) {
    phi *= pow(q, e - 1) * (q - Natural(1));
  }
  return phi;
}

Natural multiplicative_order(const Natural& a, const Natural& n, const Factorization& group_order) {
  if (n.is_zero()) throw DomainError("multiplicative_order: modulus must be positive");
  if (!gcd(a, n).is_one()) {
    throw DomainError("multiplicative_order: " + a.to_string() + " is not a unit mod " +
                      n.to_string());
  }
  if (n.is_one()) return Natural(1);
  Natural order = group_order.value();
  if (!mod_pow(a, order, n).is_one()) {
    throw DomainError("multiplicative_order: supplied group order is not a multiple of the order");
  }
  for (const auto& [q, e] : group_order.pairs()) {
    for (std::uint32_t i = 0; i < e; ++i) {
      const Natural candidate = order / q;
      if (!mod_pow(a, candidate, n).is_one()) break;
      order = candidate;
    }
  }
  return order;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

}  // namespace swan
