#include "ratroot/factor.hpp"

#include <algorithm>
#include <optional>

#include "ratroot/errors.hpp"

namespace ratroot {

UniPoly Factorization::expand() const {
  UniPoly r = UniPoly::constant(content);
  for (const auto& f : factors) r *= poly_pow(f.poly, f.multiplicity);
  return r;
}

bool Factorization::is_irreducible() const {
  return factors.size() == 1 && factors.front().multiplicity == 1;
}

std::vector<UniPoly> Factorization::factors_of_degree(int degree) const {
  std::vector<UniPoly> out;
  for (const auto& f : factors)
    if (f.poly.degree() == degree) out.push_back(f.poly);
  return out;
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decompose(const UniPoly& a) {
  if (a.is_zero()) throw InputError("squarefree decomposition of zero");
  std::vector<std::pair<UniPoly, unsigned>> out;
  const UniPoly f = a.monic();
  if (f.degree() < 1) return out;
  const UniPoly df = f.derivative();
  const UniPoly b = poly_gcd(f, df);
  UniPoly c = poly_exact_div(f, b);
  UniPoly d = poly_exact_div(df, b) - c.derivative();
  for (unsigned i = 1; c.degree() > 0; ++i) {
    UniPoly part = d.is_zero() ? c : poly_gcd(c, d);
    c = poly_exact_div(c, part);
    d = poly_exact_div(d, part) - c.derivative();
    if (part.degree() > 0) out.emplace_back(part, i);
  }
  return out;
}

ZPoly primitive_integer_part(const UniPoly& a) {
  if (a.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  Integer g = 0;
  for (const auto& c : a.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(std::move(v));
  }
  if (z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

UniPoly to_unipoly(const ZPoly& a) {
  std::vector<Rational> c;
  c.reserve(a.size());
  for (const auto& v : a) c.emplace_back(v);
  return UniPoly(std::move(c));
}

namespace {

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ZPoly zp_trimmed(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zp_trimmed(std::move(r));
}

ZPoly zp_symmetric_mod(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  return zp_trimmed(std::move(a));
}

ZPoly zp_primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Quotient a / b over Z when b divides a exactly.
std::optional<ZPoly> zp_exact_divide(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return std::nullopt;
  ZPoly q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    if (!mpz_divisible_p(a[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer f = a[k] / b.back();
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
    q[k - db] = std::move(f);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) return std::nullopt;
  return zp_trimmed(std::move(q));
}

}  // namespace

std::uint64_t select_prime(const ZPoly& squarefree) {
  for (std::uint64_t p = 3;; p += 2) {
    if (!is_small_prime(p)) continue;
    if (mpz_divisible_ui_p(squarefree.back().get_mpz_t(), static_cast<unsigned long>(p)))
      continue;
    if (is_squarefree(ModPPoly::reduce(p, squarefree))) return p;
  }
}

Integer mignotte_bound(const ZPoly& a) {
  Integer sumsq = 0;
  for (const auto& c : a) sumsq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), sumsq.get_mpz_t());
  if (norm * norm < sumsq) norm += 1;
  const auto d = static_cast<unsigned long>(a.size() - 1);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), d, d / 2);  // max_j C(d, j)
  return binom * norm;
}

std::vector<ZPoly> zassenhaus(const ZPoly& a, const FactorOptions& opts) {
  if (a.size() <= 2) return {a};
  const std::uint64_t p = select_prime(a);
  const auto local = factor_mod_p(ModPPoly::reduce(p, a), opts.seed);
  if (local.size() == 1) return {a};
  if (local.size() > opts.max_recombination)
    throw FactorBudgetError(local.size(), opts.max_recombination);

  const Integer lc_abs = abs(a.back());
  const Integer limit = 2 * lc_abs * mignotte_bound(a);
  unsigned k = 1;
  Integer modulus(static_cast<unsigned long>(p));
  while (modulus <= limit) {
    modulus *= static_cast<unsigned long>(p);
    ++k;
  }
  const auto lifted = hensel_lift_all(a, local, k);

  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly g = a;
  std::vector<ZPoly> found;

  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool split = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    const Integer lead = g.back();
    const Integer scaled_tail = lead * g.front();
    do {
      ZPoly cand{lead};
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (pick[i]) cand = zp_symmetric_mod(zp_mul(cand, lifted[remaining[i]]), modulus);
      // Constant-term test before full trial division.
      if (g.front() != 0 &&
          (cand.front() == 0 ||
           !mpz_divisible_p(scaled_tail.get_mpz_t(), cand.front().get_mpz_t())))
        continue;
      cand = zp_primitive(std::move(cand));
      auto quot = zp_exact_divide(g, cand);
      if (!quot) continue;
      found.push_back(std::move(cand));
      g = std::move(*quot);
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (!pick[i]) rest.push_back(remaining[i]);
      remaining = std::move(rest);
      split = true;
      break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!split) ++size;
  }
  found.push_back(zp_primitive(std::move(g)));
  return found;
}

Factorization factor_over_Q(const UniPoly& a, const FactorOptions& opts) {
  if (a.is_zero()) throw InputError("factorization of the zero polynomial");
  Factorization out;
  out.content = a.lc();
  for (const auto& [part, mult] : squarefree_decompose(a)) {
    for (const auto& z : zassenhaus(primitive_integer_part(part), opts))
      out.factors.push_back({to_unipoly(z).monic(), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& l, const Factor& r) { return canonical_less(l.poly, r.poly); });
  RATROOT_ASSERT(out.expand() == a, "factorization does not reproduce its input");
  return out;
}

bool is_irreducible_over_Q(const UniPoly& a, const FactorOptions& opts) {
  if (a.degree() < 1) return false;
  return factor_over_Q(a, opts).is_irreducible();
}

}  // namespace ratroot
