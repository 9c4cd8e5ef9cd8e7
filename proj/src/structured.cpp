#include "ratroot/structured.hpp"

#include <algorithm>

#include "ratroot/errors.hpp"

namespace ratroot {

RatMatrix CompanionJordanForm::block_diagonal() const {
  std::vector<RatMatrix> mats;
  for (const auto& b : blocks) mats.push_back(b.matrix);
  return RatMatrix::direct_sum(mats);
}

RatMatrix CompanionJordanForm::reconstruct() const {
  return mat_inverse(t) * block_diagonal() * t;
}

bool is_simple(const RatMatrix& a) {
  const UniPoly f = char_poly(a);
  return poly_gcd(f, f.derivative()).degree() == 0;
}

CompanionJordanForm companion_jordan(const RatMatrix& a, const FactorOptions& opts) {
  const std::size_t n = a.dim();
  const UniPoly f = char_poly(a);
  const Factorization fact = factor_over_Q(f, opts);
  for (const auto& fi : fact.factors)
    if (fi.multiplicity != 1)
      throw PreconditionError("matrix is not simple: repeated factor " + fi.poly.to_string());

  CompanionJordanForm out{RatMatrix(n), {}};
  std::vector<RatVector> columns;
  for (const auto& fi : fact.factors) {
    const auto ni = static_cast<std::size_t>(fi.poly.degree());
    // Columns of (f / f_i)(A) lie in ker f_i(A).
    const RatMatrix proj = eval_poly(poly_exact_div(f, fi.poly), a);
    bool placed = false;
    for (std::size_t j = 0; j < n && !placed; ++j) {
      RatVector v = proj.column(j);
      if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
        continue;
      std::vector<RatVector> chain{v};
      for (std::size_t k = 1; k < ni; ++k) chain.push_back(a * chain.back());
      DenseRows<Rational> rows(chain.size(), RatVector(n));
      for (std::size_t k = 0; k < chain.size(); ++k) rows[k] = chain[k];
      if (rank(rows) != ni) continue;
      columns.insert(columns.end(), chain.begin(), chain.end());
      placed = true;
    }
    RATROOT_ASSERT(placed, "no cyclic vector in ker f_i(A)");
    out.blocks.push_back(CompanionMatrix::of(fi.poly));
  }
  out.t = mat_inverse(RatMatrix::from_columns(columns));
  RATROOT_ASSERT(out.reconstruct() == a, "companion-Jordan reconstruction failed");
  return out;
}

SimpleSolveReport solve_simple(const RatMatrix& a, const UniPoly& p, const SolveOptions& opts) {
  SimpleSolveReport r;
  r.form = companion_jordan(a, opts.factor);
  r.char_poly = char_poly(a);
  r.composition = poly_compose(r.char_poly, p);
  r.factors = factor_over_Q(r.composition, opts.factor);

  bool all_solvable = true;
  for (const auto& block : r.form.blocks) {
    r.blocks.push_back(enumerate_solutions(block.matrix, p, opts));
    if (r.blocks.back().count == 0) all_solvable = false;
  }
  r.decision = all_solvable ? Decision::Solvable : Decision::Unsolvable;
  if (!all_solvable) return r;

  const RatMatrix t_inv = mat_inverse(r.form.t);
  std::vector<std::size_t> pick(r.blocks.size(), 0);
  while (true) {
    std::vector<RatMatrix> parts;
    for (std::size_t i = 0; i < pick.size(); ++i) parts.push_back(r.blocks[i].solutions[pick[i]]);
    RatMatrix x = t_inv * RatMatrix::direct_sum(parts) * r.form.t;
    RATROOT_ASSERT(verify_solution(a, p, x), "blockwise solution fails p(X) = A");
    r.solutions.push_back(std::move(x));

    bool advanced = false;
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (++pick[i] < r.blocks[i].solutions.size()) {
        advanced = true;
        break;
      }
      pick[i] = 0;
    }
    if (!advanced) break;
  }
  for (std::size_t i = 0; i < r.solutions.size(); ++i)
    for (std::size_t j = i + 1; j < r.solutions.size(); ++j)
      RATROOT_ASSERT(!(r.solutions[i] == r.solutions[j]), "duplicate blockwise solutions");
  r.count = r.solutions.size();
  return r;
}

bool is_nonderogatory(const RatMatrix& a) { return min_poly(a) == char_poly(a); }

BiPoly divided_difference(const UniPoly& p) {
  const int l = p.degree();
  if (l < 1) return {};
  BiPoly d(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) {
    std::vector<Rational> c(static_cast<std::size_t>(l - j));
    for (int m = j + 1; m <= l; ++m) c[static_cast<std::size_t>(m - 1 - j)] = p.coeff(static_cast<std::size_t>(m));
    d[static_cast<std::size_t>(j)] = UniPoly(std::move(c));
  }
  return d;
}

bool condition13_holds(const UniPoly& h, const UniPoly& p) {
  if (!h.is_monic() || h.degree() < 1) throw PreconditionError("h must be monic of degree >= 1");
  if (p.degree() < 1) throw ConstantPolynomialError("p must be nonconstant");
  const UniPoly inner = resultant(lift_to_bipoly(h), divided_difference(p));
  if (inner.is_zero()) return false;
  return resultant(h, inner) != 0;
}

std::string_view to_string(NonderoVerdict v) {
  switch (v) {
    case NonderoVerdict::Sufficient: return "SUFFICIENT";
    case NonderoVerdict::NoSolution: return "NO_SOLUTION";
    case NonderoVerdict::NotEstablished: return "NOT_ESTABLISHED";
  }
  return "NOT_ESTABLISHED";
}

NonderoReport nondero_report(const RatMatrix& a, const UniPoly& p, const FactorOptions& opts) {
  if (!is_nonderogatory(a)) throw PreconditionError("derogatory input unsupported");
  if (p.degree() < 1) throw ConstantPolynomialError("p must be nonconstant");
  NonderoReport r;
  r.char_poly = char_poly(a);
  bool any_missing = false;
  bool all_sufficient = true;
  for (const auto& fj : factor_over_Q(r.char_poly, opts).factors) {
    NonderoFactor nf;
    nf.factor = fj.poly;
    nf.multiplicity = fj.multiplicity;
    const NumberField field = NumberField::trusted(fj.poly);
    const auto comp = factor_over_Q(poly_compose(fj.poly, p), opts);
    for (auto& adm : admissible_from_factors(field, p, comp)) {
      const bool ok = condition13_holds(adm.factor, p);
      nf.condition13_per_gamma.push_back(ok);
      nf.condition13 = nf.condition13 || ok;
      nf.admissible.push_back(std::move(adm.gamma));
      nf.admissible_factors.push_back(std::move(adm.factor));
    }
    if (nf.admissible.empty()) any_missing = true;
    if (nf.multiplicity > 1 && !nf.condition13) all_sufficient = false;
    r.factors.push_back(std::move(nf));
  }
  if (any_missing)
    r.verdict = NonderoVerdict::NoSolution;
  else if (all_sufficient)
    r.verdict = NonderoVerdict::Sufficient;
  else
    r.verdict = NonderoVerdict::NotEstablished;
  return r;
}

}  // namespace ratroot
