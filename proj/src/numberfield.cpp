#include "ratroot/numberfield.hpp"

#include <utility>

#include "ratroot/errors.hpp"
#include "ratroot/matrix.hpp"
#include "ratroot/resultant.hpp"

namespace ratroot {

NumberField::NumberField(UniPoly modulus)
    : modulus_(std::make_shared<const UniPoly>(std::move(modulus))) {}

NumberField NumberField::certified(const UniPoly& modulus, const FactorOptions& opts) {
  if (!modulus.is_monic() || modulus.degree() < 1)
    throw PreconditionError("number field modulus must be monic of degree >= 1");
  if (!is_irreducible_over_Q(modulus, opts))
    throw PreconditionError("number field modulus " + modulus.to_string() +
                            " is reducible over Q");
  return NumberField(modulus);
}

NumberField NumberField::trusted(const UniPoly& modulus) {
  if (!modulus.is_monic() || modulus.degree() < 1)
    throw PreconditionError("number field modulus must be monic of degree >= 1");
  return NumberField(modulus);
}

NFElement NumberField::element(const UniPoly& rep) const {
  return NFElement(*this, poly_divmod(rep, *modulus_).remainder);
}

NFElement NumberField::from_rational(const Rational& c) const {
  return NFElement(*this, UniPoly::constant(c));
}

NFElement NumberField::zero() const { return NFElement(*this, UniPoly{}); }
NFElement NumberField::one() const { return from_rational(Rational(1)); }
NFElement NumberField::generator() const { return element(UniPoly::x()); }

NFElement::NFElement(NumberField field, UniPoly rep)
    : field_(std::move(field)), rep_(std::move(rep)) {}

std::vector<Rational> NFElement::coordinates() const {
  std::vector<Rational> c(field_.degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = rep_.coeff(i);
  return c;
}

NFElement NFElement::operator-() const { return NFElement(field_, -rep_); }

NFElement operator+(const NFElement& a, const NFElement& b) {
  return NFElement(a.field_, a.rep_ + b.rep_);
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  return NFElement(a.field_, a.rep_ - b.rep_);
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  return a.field_.element(a.rep_ * b.rep_);
}

NFElement operator/(const NFElement& a, const NFElement& b) { return a * nf_inv(b); }

NFElement nf_inv(const NFElement& x) {
  if (x.is_zero()) throw InputError("inverse of zero in a number field");
  const auto bez = poly_xgcd(x.rep(), x.field().modulus());
  RATROOT_ASSERT(bez.gcd.degree() == 0, "number field modulus shares a factor with an element");
  return x.field().element(bez.s);
}

NFElement nf_eval(const UniPoly& p, const NFElement& x) {
  NFElement acc = x.field().zero();
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * x + x.field().from_rational(*it);
  return acc;
}

NFPoly::NFPoly(NumberField field, std::vector<NFElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

NFPoly NFPoly::embed(const NumberField& field, const UniPoly& p) {
  std::vector<NFElement> c;
  for (const auto& q : p.coeffs()) c.push_back(field.from_rational(q));
  return NFPoly(field, std::move(c));
}

void NFPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const NFElement& NFPoly::lc() const {
  if (coeffs_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

NFPoly NFPoly::monic() const {
  if (coeffs_.empty()) return *this;
  const NFElement inv = nf_inv(lc());
  std::vector<NFElement> c;
  for (const auto& x : coeffs_) c.push_back(x * inv);
  return NFPoly(field_, std::move(c));
}

NFPoly operator-(const NFPoly& a, const NFPoly& b) {
  std::vector<NFElement> c;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    NFElement x = i < a.coeffs_.size() ? a.coeffs_[i] : a.field_.zero();
    if (i < b.coeffs_.size()) x = x - b.coeffs_[i];
    c.push_back(std::move(x));
  }
  return NFPoly(a.field_, std::move(c));
}

NFPoly nf_poly_rem(const NFPoly& a, const NFPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<NFElement> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() <= db) return a;
  const NFElement inv_lc = nf_inv(b.lc());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const NFElement factor = rem[k] * inv_lc;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - factor * bc[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
  return NFPoly(a.field(), std::move(rem));
}

NFPoly nf_poly_gcd(const NFPoly& a, const NFPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd of two zero polynomials");
  NFPoly x = a, y = b;
  while (!y.is_zero()) {
    NFPoly r = nf_poly_rem(x, y);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<AdmissibleElement> admissible_from_factors(const NumberField& field,
                                                       const UniPoly& p,
                                                       const Factorization& composition) {
  if (p.degree() < 1) throw PreconditionError("p must be nonconstant");
  const int n = static_cast<int>(field.degree());
  const NFElement mu = field.generator();
  const NFPoly p_minus_mu =
      NFPoly::embed(field, p) - NFPoly(field, std::vector<NFElement>{mu});

  std::vector<AdmissibleElement> out;
  for (const auto& h : composition.factors_of_degree(n)) {
    const NFPoly g = nf_poly_gcd(NFPoly::embed(field, h), p_minus_mu);
    RATROOT_ASSERT(g.degree() == 1,
                   "degree-n factor " + h.to_string() + " gave a non-linear gcd with p(T) - mu");
    NFElement gamma = -g.coeffs()[0];
    RATROOT_ASSERT(nf_eval(p, gamma) == mu, "admissible element fails p(gamma) = mu");
    out.push_back({h, std::move(gamma)});
  }
  return out;
}

std::vector<NFElement> admissible_gammas(const UniPoly& f, const UniPoly& p,
                                         const FactorOptions& opts) {
  if (p.degree() < 1) throw PreconditionError("p must be nonconstant");
  const NumberField field = NumberField::certified(f, opts);
  const auto fact = factor_over_Q(poly_compose(f, p), opts);
  std::vector<NFElement> out;
  for (auto& a : admissible_from_factors(field, p, fact)) out.push_back(std::move(a.gamma));
  return out;
}

UniPoly char_poly_of_element(const NFElement& g) {
  const UniPoly res =
      resultant(lift_to_bipoly(g.field().modulus()), lambda_minus(g.rep()));
  return res.monic();
}

std::vector<Rational> elementary_from_power_sums(std::span<const Rational> s) {
  const std::size_t n = s.size();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rational term = e[k - i] * s[i - 1];
      if (i % 2 == 0) acc -= term; else acc += term;
    }
    e[k] = acc / static_cast<unsigned long>(k);
  }
  return e;
}

namespace {

std::vector<Rational> trace_power_sums(const RatMatrix& m, std::size_t count) {
  std::vector<Rational> s;
  RatMatrix power = m;
  for (std::size_t k = 1; k <= count; ++k) {
    s.push_back(power.trace());
    if (k < count) power = power * m;
  }
  return s;
}

UniPoly poly_from_elementary(const std::vector<Rational>& e) {
  const std::size_t n = e.size() - 1;
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c[n - j] = j % 2 ? Rational(-e[j]) : e[j];
  return UniPoly(std::move(c));
}

}  // namespace

std::vector<Rational> root_power_sums(const UniPoly& monic_poly, std::size_t count) {
  return trace_power_sums(companion_matrix(monic_poly), count);
}

UniPoly char_poly_via_newton(const NFElement& g) {
  const std::size_t n = g.field().degree();
  const RatMatrix m = eval_poly(g.rep(), companion_matrix(g.field().modulus()));
  const auto s = trace_power_sums(m, n);
  return poly_from_elementary(elementary_from_power_sums(s));
}

}  // namespace ratroot
