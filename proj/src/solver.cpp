#include "ratroot/solver.hpp"

#include <algorithm>

namespace ratroot {

std::string_view to_string(Decision d) {
  return d == Decision::Solvable ? "SOLVABLE" : "UNSOLVABLE";
}

CompanionMatrix CompanionMatrix::of(const UniPoly& monic_poly) {
  return {monic_poly, companion_matrix(monic_poly)};
}

namespace {

void require_nonconstant(const UniPoly& p) {
  if (p.degree() < 1) throw ConstantPolynomialError("p must be nonconstant");
}

NumberField certified_field(const UniPoly& f, const FactorOptions& opts) {
  if (!is_irreducible_over_Q(f, opts))
    throw ReducibleCharPolyError("characteristic polynomial " + f.to_string() +
                                 " is reducible; use the simple or nonderogatory solver");
  return NumberField::trusted(f);
}

}  // namespace

SolveReport decide(const RatMatrix& a, const UniPoly& p, const SolveOptions& opts) {
  SolveReport r;
  r.char_poly = char_poly(a);
  const NumberField field = certified_field(r.char_poly, opts.factor);
  r.composition = poly_compose(r.char_poly, p);
  if (p.degree() < 1) {
    // A = cI is impossible for irreducible f unless n = 1, where A = [c]
    // makes every X a solution.
    if (r.composition.is_zero())
      throw ConstantPolynomialError("p is the constant A: every X is a solution");
    r.factors = factor_over_Q(r.composition, opts.factor);
    return r;
  }
  r.factors = factor_over_Q(r.composition, opts.factor);
  for (auto& adm : admissible_from_factors(field, p, r.factors)) {
    r.admissible_factors.push_back(std::move(adm.factor));
    r.admissible.push_back(std::move(adm.gamma));
  }
  r.count = r.admissible.size();
  r.decision = r.count > 0 ? Decision::Solvable : Decision::Unsolvable;
  return r;
}

RatMatrix solve_from_factor(const RatMatrix& a, const UniPoly& p, const UniPoly& h,
                            const FactorOptions& opts) {
  require_nonconstant(p);
  const std::size_t n = a.dim();
  const UniPoly f = char_poly(a);
  if (!h.is_monic() || h.degree() != static_cast<int>(n))
    throw PreconditionError("h must be monic of degree n");
  if (!poly_divides(h, poly_compose(f, p)))
    throw PreconditionError("h = " + h.to_string() + " does not divide f(p(x))");
  certified_field(f, opts);

  const RatMatrix ch = companion_matrix(h);
  const RatMatrix b = eval_poly(p, ch);
  const RatVector e1 = unit_vector(n, 0);
  const RatMatrix kb = krylov_matrix(b, e1);
  RatMatrix ka_inv(n);
  try {
    ka_inv = mat_inverse(krylov_matrix(a, e1));
  } catch (const SingularMatrixError&) {
    throw InternalError("e1 is not cyclic for A despite irreducible f");
  }
  const RatMatrix s = kb * ka_inv;
  const RatMatrix x = mat_inverse(s) * ch * s;
  RATROOT_ASSERT(verify_solution(a, p, x), "companion construction failed p(X) = A");
  return x;
}

std::vector<NFElement> eigenvector_for_generator(const RatMatrix& a, const NumberField& field) {
  const std::size_t n = a.dim();
  RATROOT_ASSERT(field.degree() == n, "eigenvector field degree mismatch");
  const NFElement mu = field.generator();
  DenseRows<NFElement> m(n, std::vector<NFElement>(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = field.from_rational(a(i, j));
      if (i == j) m[i][j] = m[i][j] - mu;
    }
  auto kernel = nullspace(std::move(m), field.zero(), field.one());
  RATROOT_ASSERT(kernel.size() == 1, "eigenspace of a simple eigenvalue is not one-dimensional");
  return std::move(kernel.front());
}

DrazinConstruction drazin_construct(const RatMatrix& a, const NFElement& gamma,
                                    const std::vector<NFElement>& w) {
  const std::size_t n = a.dim();
  if (w.size() != n) throw InputError("eigenvector length mismatch");
  RatMatrix wm(n), cm(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto wc = w[i].coordinates();
    const auto cc = (gamma * w[i]).coordinates();
    for (std::size_t j = 0; j < n; ++j) {
      wm(i, j) = wc[j];
      cm(i, j) = cc[j];
    }
  }
  RatMatrix w_inv(n);
  try {
    w_inv = mat_inverse(wm);
  } catch (const SingularMatrixError&) {
    throw InternalError("eigenvector coordinate matrix W is singular");
  }
  return {w, wm, cm, cm * w_inv};
}

RatMatrix solve_drazin(const RatMatrix& a, const UniPoly& p, const NFElement& gamma) {
  require_nonconstant(p);
  const NumberField& field = gamma.field();
  if (field.degree() != a.dim() || !(char_poly(a) == field.modulus()))
    throw PreconditionError("gamma does not live in Q(mu) for the characteristic polynomial of A");
  if (!(nf_eval(p, gamma) == field.generator()))
    throw PreconditionError("gamma is not admissible: p(gamma) != mu");
  const auto w = eigenvector_for_generator(a, field);
  RatMatrix x = drazin_construct(a, gamma, w).solution;
  RATROOT_ASSERT(verify_solution(a, p, x), "eigenvector construction failed p(X) = A");
  return x;
}

SolveReport enumerate_solutions(const RatMatrix& a, const UniPoly& p, const SolveOptions& opts) {
  SolveReport r = decide(a, p, opts);
  for (std::size_t i = 0; i < r.admissible.size(); ++i) {
    const UniPoly& h = r.admissible_factors[i];
    RatMatrix x = solve_from_factor(a, p, h, opts.factor);
    RATROOT_ASSERT(char_poly(x) == h, "solution characteristic polynomial differs from its factor");
    if (opts.cross_check_drazin) {
      RATROOT_ASSERT(solve_drazin(a, p, r.admissible[i]) == x,
                     "companion and eigenvector routes disagree");
    }
    r.solutions.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < r.solutions.size(); ++i)
    for (std::size_t j = i + 1; j < r.solutions.size(); ++j)
      RATROOT_ASSERT(!(r.solutions[i] == r.solutions[j]), "duplicate solutions");
  r.count = r.solutions.size();
  return r;
}

bool verify_solution(const RatMatrix& a, const UniPoly& p, const RatMatrix& x) {
  if (a.dim() != x.dim()) throw InputError("candidate dimension differs from A");
  return eval_poly(p, x) == a;
}

}  // namespace ratroot
