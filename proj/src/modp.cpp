#include "ratroot/modp.hpp"

#include <algorithm>
#include <random>

#include "ratroot/errors.hpp"

namespace ratroot {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p < 2^32
}

}  // namespace

ModPPoly::ModPPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  if (p < 3 || p >= (1ull << 32) || p % 2 == 0)
    throw InputError("modulus must be an odd prime below 2^32");
  for (auto& c : c_) c %= p_;
  trim();
}

ModPPoly ModPPoly::reduce(std::uint64_t p, const UniPoly& a) {
  ZPoly z;
  for (const auto& c : a.coeffs()) {
    if (!is_integer(c)) throw InputError("non-integral coefficient reduced mod p");
    z.push_back(c.get_num());
  }
  return reduce(p, z);
}

ModPPoly ModPPoly::reduce(std::uint64_t p, std::span<const Integer> a) {
  std::vector<std::uint64_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
  return ModPPoly(p, std::move(c));
}

ModPPoly ModPPoly::constant(std::uint64_t p, std::uint64_t c) {
  return ModPPoly(p, {c});
}

ModPPoly ModPPoly::x(std::uint64_t p) { return ModPPoly(p, {0, 1}); }

void ModPPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t ModPPoly::lc() const {
  if (c_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return c_.back();
}

ModPPoly ModPPoly::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t inv = mod_inverse(c_.back(), p_);
  std::vector<std::uint64_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mulmod(c_[i], inv, p_);
  return ModPPoly(p_, std::move(r));
}

ModPPoly ModPPoly::derivative() const {
  if (c_.size() <= 1) return ModPPoly(p_, {});
  std::vector<std::uint64_t> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], i % p_, p_);
  return ModPPoly(p_, std::move(r));
}

ModPPoly operator+(const ModPPoly& a, const ModPPoly& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
  return ModPPoly(a.p_, std::move(r));
}

ModPPoly operator-(const ModPPoly& a, const ModPPoly& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
  return ModPPoly(a.p_, std::move(r));
}

ModPPoly operator*(const ModPPoly& a, const ModPPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return ModPPoly(a.p_, {});
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  }
  return ModPPoly(a.p_, std::move(r));
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  if (new_r == 0) throw InternalError("inverse of zero mod p");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

ModPDivMod divmod(const ModPPoly& a, const ModPPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero mod p");
  const std::uint64_t p = a.prime();
  if (a.degree() < b.degree()) return {ModPPoly(p, {}), a};
  std::vector<std::uint64_t> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<std::uint64_t> quot(rem.size() - db);
  const std::uint64_t inv = mod_inverse(b.lc(), p);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (!rem[k]) continue;
    const std::uint64_t f = mulmod(rem[k], inv, p);
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k - db + j] = (rem[k - db + j] + p - mulmod(f, bc[j], p)) % p;
  }
  rem.resize(db);
  return {ModPPoly(p, std::move(quot)), ModPPoly(p, std::move(rem))};
}

ModPPoly gcd(const ModPPoly& a, const ModPPoly& b) {
  ModPPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModPXgcd xgcd(const ModPPoly& a, const ModPPoly& b) {
  const std::uint64_t p = a.prime();
  ModPPoly r0 = a, r1 = b;
  ModPPoly s0 = ModPPoly::constant(p, 1), s1(p, {});
  ModPPoly t0(p, {}), t1 = ModPPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    ModPPoly s2 = s0 - q * s1;
    s0 = std::exchange(s1, std::move(s2));
    ModPPoly t2 = t0 - q * t1;
    t0 = std::exchange(t1, std::move(t2));
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const ModPPoly inv = ModPPoly::constant(p, mod_inverse(r0.lc(), p));
  return {r0 * inv, s0 * inv, t0 * inv};
}

ModPPoly powmod(const ModPPoly& base, const Integer& e, const ModPPoly& modulus) {
  const std::uint64_t p = base.prime();
  ModPPoly result = divmod(ModPPoly::constant(p, 1), modulus).remainder;
  ModPPoly b = divmod(base, modulus).remainder;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).remainder;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, modulus).remainder;
  }
  return result;
}

bool is_squarefree(const ModPPoly& a) {
  if (a.degree() < 1) return true;
  return gcd(a, a.derivative()).degree() == 0;
}

bool canonical_less(const ModPPoly& a, const ModPPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

namespace {

// f is monic, squarefree, a product of irreducibles of degree d.
void equal_degree_split(const ModPPoly& f, int d, std::mt19937_64& rng,
                        std::vector<ModPPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.prime();
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  const ModPPoly one = ModPPoly::constant(p, 1);
  while (true) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()));
    for (auto& x : c) x = coeff(rng);
    ModPPoly a(p, std::move(c));
    if (a.degree() < 1) continue;
    ModPPoly g = gcd(a, f);
    if (g.degree() < 1) {
      g = gcd(powmod(a, exponent, f) - one, f);
    }
    if (g.degree() >= 1 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).quotient.monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPPoly> factor_mod_p(const ModPPoly& a, std::uint64_t seed) {
  if (a.degree() < 1) throw PreconditionError("factor_mod_p needs degree >= 1");
  if (!is_squarefree(a))
    throw PreconditionError("factor_mod_p input is not squarefree mod p");
  const std::uint64_t p = a.prime();
  std::mt19937_64 rng(seed);
  std::vector<ModPPoly> out;

  ModPPoly f = a.monic();
  const ModPPoly x = ModPPoly::x(p);
  const Integer pz(static_cast<unsigned long>(p));
  ModPPoly h = x;  // x^(p^d) mod f
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, pz, f);
    ModPPoly g = gcd(h - x, f);
    if (g.degree() >= 1) {
      equal_degree_split(g, d, rng, out);
      f = divmod(f, g).quotient.monic();
      h = divmod(h, f).remainder;
    }
  }
  if (f.degree() >= 1) out.push_back(f);
  std::sort(out.begin(), out.end(),
            [](const ModPPoly& l, const ModPPoly& r) { return canonical_less(l, r); });
  return out;
}

namespace {

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Nonnegative residues mod m.
ZPoly zp_mod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  zp_trim(a);
  return a;
}

ZPoly zp_symmetric(ZPoly a, const Integer& m) {
  a = zp_mod(std::move(a), m);
  const Integer half = m / 2;
  for (auto& c : a)
    if (c > half) c -= m;
  return a;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zp_trim(r);
  return r;
}

// a = q*b + r mod m with b monic mod m.
std::pair<ZPoly, ZPoly> zp_divmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  a = zp_mod(std::move(a), m);
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {ZPoly{}, a};
  ZPoly q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    mpz_fdiv_r(a[k].get_mpz_t(), a[k].get_mpz_t(), m.get_mpz_t());
    if (a[k] == 0) continue;
    const Integer f = a[k];
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
  }
  a.resize(db);
  return {zp_mod(std::move(q), m), zp_mod(std::move(a), m)};
}

ZPoly to_z(const ModPPoly& a) {
  ZPoly z;
  for (auto c : a.coeffs()) z.emplace_back(static_cast<unsigned long>(c));
  return z;
}

}  // namespace

HenselLift hensel_lift(const UniPoly& a, const ModPPoly& g, const ModPPoly& h,
                       unsigned k) {
  ZPoly z;
  for (const auto& c : a.coeffs()) {
    if (!is_integer(c)) throw InputError("Hensel lifting needs integer coefficients");
    z.push_back(c.get_num());
  }
  return hensel_lift(z, g, h, k);
}

HenselLift hensel_lift(const ZPoly& a, const ModPPoly& g, const ModPPoly& h,
                       unsigned k) {
  const std::uint64_t p = g.prime();
  if (h.prime() != p) throw PreconditionError("Hensel factors over different primes");
  if (k == 0) throw PreconditionError("Hensel target exponent must be >= 1");
  if (!h.is_zero() && h.lc() != 1) throw PreconditionError("Hensel cofactor h must be monic");
  if (!(g * h == ModPPoly::reduce(p, a)))
    throw PreconditionError("Hensel inputs do not multiply to a mod p");
  auto bez = xgcd(g, h);
  if (!bez.gcd.is_one()) throw PreconditionError("Hensel factors are not coprime mod p");

  Integer target;
  mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(p), k);

  ZPoly G = to_z(g), H = to_z(h), S = to_z(bez.s), T = to_z(bez.t);
  Integer m(static_cast<unsigned long>(p));
  while (m < target) {
    const Integer mm = m * m;
    const ZPoly e = zp_mod(zp_sub(a, zp_mul(G, H)), mm);
    auto [q, r] = zp_divmod_monic(zp_mul(S, e), H, mm);
    ZPoly G2 = zp_mod(zp_add(G, zp_add(zp_mul(T, e), zp_mul(q, G))), mm);
    ZPoly H2 = zp_mod(zp_add(H, r), mm);
    ZPoly b = zp_mod(zp_sub(zp_add(zp_mul(S, G2), zp_mul(T, H2)), ZPoly{Integer(1)}), mm);
    auto [c, d] = zp_divmod_monic(zp_mul(S, b), H2, mm);
    S = zp_mod(zp_sub(S, d), mm);
    T = zp_mod(zp_sub(T, zp_add(zp_mul(T, b), zp_mul(c, G2))), mm);
    G = std::move(G2);
    H = std::move(H2);
    m = mm;
  }
  return {zp_symmetric(G, target), zp_symmetric(H, target), target};
}

std::vector<ZPoly> hensel_lift_all(const ZPoly& a, const std::vector<ModPPoly>& factors,
                                   unsigned k) {
  RATROOT_ASSERT(!factors.empty(), "no factors to lift");
  const std::uint64_t p = factors.front().prime();
  if (factors.size() == 1) {
    Integer target;
    mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(p), k);
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), target.get_mpz_t()))
      throw PreconditionError("leading coefficient not invertible mod p^k");
    ZPoly m = a;
    for (auto& c : m) c *= inv;
    return {zp_symmetric(std::move(m), target)};
  }
  const std::size_t half = factors.size() / 2;
  ModPPoly left = ModPPoly::reduce(p, std::span<const Integer>(&a.back(), 1));
  for (std::size_t i = 0; i < half; ++i) left = left * factors[i];
  ModPPoly right = ModPPoly::constant(p, 1);
  for (std::size_t i = half; i < factors.size(); ++i) right = right * factors[i];

  const auto lifted = hensel_lift(a, left, right, k);
  std::vector<ModPPoly> lf(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ModPPoly> rf(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  auto out = hensel_lift_all(lifted.g, lf, k);
  auto rest = hensel_lift_all(lifted.h, rf, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace ratroot
