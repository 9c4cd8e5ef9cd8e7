#include "ratroot/resultant.hpp"

#include <utility>

#include "ratroot/errors.hpp"

namespace ratroot {

namespace {

// Exact-division ring operations needed by the subresultant PRS.
template <class R>
struct Ring;

template <>
struct Ring<Rational> {
  static Rational one() { return Rational(1); }
  static bool zero(const Rational& x) { return sgn(x) == 0; }
  static Rational div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct Ring<UniPoly> {
  static UniPoly one() { return UniPoly::constant(1); }
  static bool zero(const UniPoly& x) { return x.is_zero(); }
  static UniPoly div(const UniPoly& a, const UniPoly& b) {
    return poly_exact_div(a, b);
  }
};

template <class R>
using Dense = std::vector<R>;

template <class R>
void trim(Dense<R>& a) {
  while (!a.empty() && Ring<R>::zero(a.back())) a.pop_back();
}

template <class R>
int deg(const Dense<R>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class R>
R power(R base, int e) {
  R result = Ring<R>::one();
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class R>
Dense<R> pseudo_remainder(Dense<R> a, const Dense<R>& b) {
  const int db = deg(b);
  const R& lb = b.back();
  int e = deg(a) - db + 1;
  while (deg(a) >= db && !a.empty()) {
    const R la = a.back();
    const std::size_t shift = static_cast<std::size_t>(deg(a) - db);
    for (auto& c : a) c = c * lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - la * b[j];
    a.pop_back();
    trim(a);
    --e;
  }
  if (e > 0) {
    const R scale = power(lb, e);
    for (auto& c : a) c = c * scale;
  }
  return a;
}

template <class R>
R subresultant(Dense<R> a, Dense<R> b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) throw InputError("resultant of a zero polynomial");

  bool negate = false;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = true;
  }
  if (deg(b) == 0) return power(b.back(), deg(a));

  R g = Ring<R>::one();
  R h = Ring<R>::one();
  while (true) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) negate = !negate;
    Dense<R> r = pseudo_remainder(a, b);
    if (r.empty()) return R{};
    a = std::move(b);
    const R divisor = g * power(h, delta);
    for (auto& c : r) c = Ring<R>::div(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = Ring<R>::div(power(g, delta), power(h, delta - 1));
    }
    if (deg(b) == 0) break;
  }
  const int da = deg(a);
  R res = Ring<R>::div(power(b.back(), da), power(h, da - 1));
  if (negate) res = R{} - res;
  return res;
}

}  // namespace

BiPoly lift_to_bipoly(const UniPoly& in_t) {
  BiPoly out;
  for (const auto& c : in_t.coeffs()) out.push_back(UniPoly::constant(c));
  return out;
}

BiPoly lambda_minus(const UniPoly& g_of_t) {
  BiPoly out = lift_to_bipoly(-g_of_t);
  if (out.empty()) out.resize(1);
  out[0] += UniPoly::x();
  return out;
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  return subresultant(Dense<Rational>(a.coeffs().begin(), a.coeffs().end()),
                      Dense<Rational>(b.coeffs().begin(), b.coeffs().end()));
}

UniPoly resultant(const BiPoly& a, const BiPoly& b) { return subresultant(a, b); }

}  // namespace ratroot
