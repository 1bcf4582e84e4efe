#include "swan/cyclofield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "swan/errors.hpp"

namespace swan {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Exact division of `num` by the monic polynomial `den`.
std::vector<mpz_class> divide_exact_monic(std::vector<mpz_class> num,
                                          const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> q(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    const mpz_class c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
  }
  return q;
}

u64 inv_mod(u64 a, u64 p) {
  // p is prime: a^(p-2).
  u64 r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Polynomials over F_p as ascending vectors, trimmed of high zeros.
using FpPoly = std::vector<u32>;

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f = q*g + r with deg r < deg g; g nonzero and trimmed.
void divmod(const FpPoly& f, const FpPoly& g, u64 p, FpPoly& q, FpPoly& r) {
  r = f;
  trim(r);
  q.assign(r.size() >= g.size() ? r.size() - g.size() + 1 : 0, 0);
  const u64 lead_inv = inv_mod(g.back(), p);
  while (r.size() >= g.size()) {
    const std::size_t shift = r.size() - g.size();
    const u64 c = r.back() * lead_inv % p;
    q[shift] = static_cast<u32>(c);
    for (std::size_t t = 0; t < g.size(); ++t) {
      r[shift + t] = static_cast<u32>((r[shift + t] + (p - c) * g[t]) % p);
    }
    trim(r);
  }
}

FpPoly sub_mul(const FpPoly& a, const FpPoly& q, const FpPoly& b, u64 p) {
  // a - q*b
  FpPoly out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1), 0);
  std::copy(a.begin(), a.end(), out.begin());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<u32>((out[i + j] + (p - q[i]) * b[j] % p) % p);
    }
  }
  trim(out);
  return out;
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::uint32_t> IntPoly::reduce_mod(std::uint32_t p) const {
  std::vector<std::uint32_t> out;
  out.reserve(coeffs_.size());
  mpz_class r;
  for (const auto& c : coeffs_) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.push_back(static_cast<std::uint32_t>(r.get_ui()));
  }
  return out;
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) {
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

const IntPoly& cyclotomic_poly(std::uint64_t m) {
  if (m == 0) throw DomainError("cyclotomic_poly: m must be >= 1");
  static std::mutex mu;
  static std::map<u64, std::unique_ptr<IntPoly>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(m); it != memo.end()) return *it->second;
  }
  std::vector<mpz_class> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (u64 d : divisors(m)) {
    if (d == m) break;
    num = divide_exact_monic(std::move(num), cyclotomic_poly(d).coeffs());
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = memo.try_emplace(m, std::make_unique<IntPoly>(std::move(num)));
  return *it->second;
}

bool FieldElem::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElem::is_one() const noexcept {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

FieldSpec FieldSpec::make(std::uint64_t m, std::uint64_t p, const FactorOptions& opts,
                          std::optional<kernels::Isa> isa) {
  if (m == 0) throw DomainError("make_field: m must be >= 1");
  if (p < 3 || p > kMaxCharacteristic || !is_prime(Natural(p))) {
    throw DomainError("make_field: p = " + std::to_string(p) +
                      " must be an odd prime below 2^24");
  }
  if (m % p == 0) {
    throw DomainError("make_field: p = " + std::to_string(p) + " divides m = " +
                      std::to_string(m) + " (p ramifies)");
  }
  const u64 phi = euler_phi(Natural(m)).to_u64();
  const u64 f = multiplicative_order(Natural(p), Natural(m), factor(Natural(phi))).to_u64();
  if (f != phi) throw InertnessError(m, p, f, phi / f);

  FieldSpec spec;
  spec.m_ = m;
  spec.p_ = p;
  spec.modulus_ = cyclotomic_poly(m).reduce_mod(static_cast<u32>(p));
  spec.group_order_ = swan::pow(Natural(p), phi) - Natural(1);
  try {
    spec.factorization_ = pk_minus_one_factor(Natural(p), phi, opts);
  } catch (const FactorBudgetExceeded& e) {
    spec.factorization_ = e.factored();
    spec.unfactored_ = e.cofactor();
  }
  spec.isa_ = isa.value_or(kernels::detect());
  if (!kernels::cpu_supports(spec.isa_)) spec.isa_ = kernels::Isa::kScalar;
  spec.mul_acc_ = kernels::mul_acc_for(spec.isa_);
  return spec;
}

void FieldSpec::check(const FieldElem& x) const {
  if (x.m_ != m_ || x.p_ != p_ || x.coeffs_.size() != degree()) {
    throw DomainError("field element does not belong to F_" + std::to_string(p_) + "[z]/Phi_" +
                      std::to_string(m_));
  }
}

FieldElem FieldSpec::zero() const { return FieldElem(m_, p_, std::vector<u32>(degree(), 0)); }

FieldElem FieldSpec::one() const { return scalar(1); }

FieldElem FieldSpec::scalar(std::uint64_t a) const {
  std::vector<u32> c(degree(), 0);
  c[0] = static_cast<u32>(a % p_);
  return FieldElem(m_, p_, std::move(c));
}

FieldElem FieldSpec::generator() const {
  if (degree() == 1) {
    // Phi_m linear (m = 1, 2): z is the root -modulus[0].
    return scalar((p_ - modulus_[0]) % p_);
  }
  std::vector<u32> c(degree(), 0);
  c[1] = 1;
  return FieldElem(m_, p_, std::move(c));
}

FieldElem FieldSpec::z_pow(std::uint64_t k) const { return pow(generator(), Natural(k % m_)); }

FieldElem FieldSpec::from_coeffs(std::vector<std::uint32_t> coeffs) const {
  if (coeffs.size() != degree() ||
      std::any_of(coeffs.begin(), coeffs.end(), [&](u32 c) { return c >= p_; })) {
    throw DomainError("from_coeffs: expected " + std::to_string(degree()) +
                      " coefficients in [0, " + std::to_string(p_) + ")");
  }
  return FieldElem(m_, p_, std::move(coeffs));
}

FieldElem FieldSpec::add(const FieldElem& x, const FieldElem& y) const {
  check(x);
  check(y);
  std::vector<u32> c(degree());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const u64 s = u64{x.coeffs_[i]} + y.coeffs_[i];
    c[i] = static_cast<u32>(s >= p_ ? s - p_ : s);
  }
  return FieldElem(m_, p_, std::move(c));
}

FieldElem FieldSpec::neg(const FieldElem& x) const {
  check(x);
  std::vector<u32> c(degree());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = x.coeffs_[i] == 0 ? 0 : static_cast<u32>(p_ - x.coeffs_[i]);
  }
  return FieldElem(m_, p_, std::move(c));
}

FieldElem FieldSpec::sub(const FieldElem& x, const FieldElem& y) const { return add(x, neg(y)); }

FieldElem FieldSpec::mul(const FieldElem& x, const FieldElem& y) const {
  check(x);
  check(y);
  const std::size_t n = degree();
  thread_local std::vector<std::uint64_t> scratch;
  if (scratch.size() < 2 * n) scratch.resize(2 * n);
  std::vector<u32> out(n);
  kernels::mulmod(x.coeffs_, y.coeffs_, std::span(modulus_).first(n), static_cast<u32>(p_), out,
                  scratch, mul_acc_);
  return FieldElem(m_, p_, std::move(out));
}

FieldElem FieldSpec::inv(const FieldElem& x) const {
  check(x);
  if (x.is_zero()) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(p_) + "^" +
                                             std::to_string(degree()));
  FpPoly r0(modulus_.begin(), modulus_.end());
  FpPoly r1(x.coeffs_.begin(), x.coeffs_.end());
  trim(r1);
  FpPoly s0, s1{1};
  FpPoly q, r;
  while (!r1.empty()) {
    divmod(r0, r1, p_, q, r);
    FpPoly s2 = sub_mul(s0, q, s1, p_);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw DomainError("inv: modulus is not irreducible over F_p");
  const u64 c = inv_mod(r0[0], p_);
  std::vector<u32> out(degree(), 0);
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = static_cast<u32>(s0[i] * c % p_);
  return FieldElem(m_, p_, std::move(out));
}

FieldElem FieldSpec::pow(const FieldElem& x, const Natural& e) const {
  check(x);
  FieldElem acc = one();
  for (std::size_t i = e.bit_length(); i-- > 0;) {
    acc = mul(acc, acc);
    if (e.test_bit(i)) acc = mul(acc, x);
  }
  return acc;
}

Natural FieldSpec::order_within(const FieldElem& x, const Natural& start) const {
  Natural order = start;
  for (const auto& [q, e] : factorization_.pairs()) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (!order.divisible_by(q)) break;
      const Natural candidate = order / q;
      if (!pow(x, candidate).is_one()) break;
      order = candidate;
    }
  }
  return order;
}

Natural FieldSpec::element_order(const FieldElem& x) const {
  check(x);
  if (x.is_zero()) throw DomainError("element_order: zero has no multiplicative order");
  if (!factorization_complete()) {
    throw OrderUnavailableError("element_order: group order " + group_order_.to_string() +
                                " only partially factored (cofactor " + unfactored_.to_string() +
                                ")");
  }
  return order_within(x, group_order_);
}

Natural FieldSpec::element_order_lower_bound(const FieldElem& x) const {
  check(x);
  if (x.is_zero()) throw DomainError("element_order: zero has no multiplicative order");
  if (factorization_complete()) return order_within(x, group_order_);
  return order_within(pow(x, unfactored_), factorization_.value());
}

std::string FieldSpec::format(const FieldElem& x) const {
  check(x);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) os << (i ? ", " : "") << x.coeffs_[i];
  os << ']';
  return os.str();
}

InertnessError::InertnessError(std::uint64_t m, std::uint64_t p, std::uint64_t residue_degree,
                               std::uint64_t split_count)
    : DomainError("p = " + std::to_string(p) + " is not inert in Q(zeta_" + std::to_string(m) +
                  "): residue degree f = " + std::to_string(residue_degree) + ", splits into r = " +
                  std::to_string(split_count) + " primes"),
      m_(m),
      p_(p),
      f_(residue_degree),
      r_(split_count) {}

}  // namespace swan
