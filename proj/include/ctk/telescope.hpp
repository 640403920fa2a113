#ifndef CTK_TELESCOPE_HPP
#define CTK_TELESCOPE_HPP

#include <variant>

#include <ctk/bounds.hpp>

namespace ctk {

struct IncompatibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderCapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A (sigma_x, sigma_y)-hypergeometric term given by its shift quotients.
struct TermSpec {
  CaseTag tag = CaseTag::Shift;
  RatFunc fx;  // sigma_x(T)/T
  RatFunc fy;  // sigma_y(T)/T
};

inline TermSpec validateTerm(const RatFunc& fx, const RatFunc& fy,
                             CaseTag tag) {
  if (fx.isZero() || fy.isZero())
    throw IncompatibleError("validate_term: zero quotient");
  RatFunc residual = applyShiftX(fy, 1, tag) * fx - applyShiftY(fx, 1, tag) * fy;
  if (!residual.isZero())
    throw IncompatibleError("validate_term: mixed shifts do not commute, "
                            "residual " + residual.str());
  return TermSpec{tag, fx, fy};
}

// Shell of sigma_x^i(T) for the fixed kernel K = rnf.K:
// S~_0 = S, S~_{i+1} = sigma_x(S~_i) * N with N = fx * S / sigma_x(S).
inline RatFunc shellSequence(const TermSpec& term, const Rnf& rnf, int i) {
  RatFunc N = term.fx * rnf.S / applyShiftX(rnf.S, 1, term.tag);
  RatFunc s = rnf.S;
  for (int k = 0; k < i; ++k) s = applyShiftX(s, 1, term.tag) * N;
  return s;
}

struct Telescoper {
  std::vector<MPoly> coeffs;  // ell_0..ell_rho in F, ell_rho nonzero
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct Certificate {
  RatFunc g;  // G = g*H with H = T/S
};

struct Found {
  Telescoper telescoper;
  Certificate certificate;
  std::vector<Remainder> remainders;
  BoundReport bounds;
  Rnf rnf;  // the standardized RNF used by the search, for verification
};

struct NoTelescoper {
  MPoly evidence;  // a non-integer-linear factor of the base denominator
};

using TelescopeResult = std::variant<Found, NoTelescoper>;

namespace detail {

// Incremental echelon form over F with dependency tracking.  addRow returns
// the dependency coefficients (in terms of all rows added so far) as soon as
// the new row is linearly dependent on the previous ones.
struct DependencySolver {
  std::vector<std::vector<RatFunc>> rows;    // reduced, one pivot each
  std::vector<std::vector<RatFunc>> combos;  // rows[j] = sum combos[j][i]*orig_i
  std::vector<size_t> pivots;
  size_t added = 0;

  std::optional<std::vector<RatFunc>> addRow(std::vector<RatFunc> v) {
    std::vector<RatFunc> combo(added + 1);
    combo[added] = RatFunc(Rat(1));
    ++added;
    for (size_t j = 0; j < rows.size(); ++j) {
      size_t p = pivots[j];
      if (p >= v.size() || v[p].isZero()) continue;
      RatFunc f = v[p] / rows[j][p];
      if (rows[j].size() > v.size()) v.resize(rows[j].size());
      for (size_t c = 0; c < rows[j].size(); ++c) v[c] -= f * rows[j][c];
      if (combos[j].size() > combo.size()) combo.resize(combos[j].size());
      for (size_t c = 0; c < combos[j].size(); ++c)
        combo[c] -= f * combos[j][c];
    }
    for (size_t c = 0; c < v.size(); ++c) {
      if (v[c].isZero()) continue;
      pivots.push_back(c);
      rows.push_back(std::move(v));
      combos.push_back(std::move(combo));
      return std::nullopt;
    }
    combo.resize(added);
    return combo;
  }
};

// Clear denominators, remove the joint content, and flip the sign so the
// leading coefficient is unit-normal; the common rescaling factor is
// returned so the certificate can be scaled consistently.
inline std::pair<std::vector<MPoly>, RatFunc> normalizeCoefficients(
    const std::vector<RatFunc>& c) {
  MPoly den(Int(1));
  for (auto& ci : c)
    if (!ci.isZero()) den = den * ci.den().divExact(mpolyGcd(den, ci.den()));
  Int numGcd(0), denLcm(1);
  std::vector<RatFunc> cleared;
  for (auto& ci : c) {
    RatFunc p = ci * RatFunc(den);
    if (!p.isPolynomial())
      throw std::logic_error("normalize: denominator lcm failed");
    if (!p.isZero()) {
      Rat s = p.scalar();
      mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(),
              s.get_num().get_mpz_t());
      mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(),
              s.get_den().get_mpz_t());
    }
    cleared.push_back(p);
  }
  Rat t(denLcm, numGcd);
  t.canonicalize();
  std::vector<MPoly> polys;
  MPoly content;
  for (auto& p : cleared) {
    Rat s = p.scalar() * t;
    if (s.get_den() != 1)
      throw std::logic_error("normalize: rational content failed");
    MPoly pi = p.num() * Int(s.get_num());
    if (!pi.isZero())
      content = content.isZero() ? pi : mpolyGcd(content, pi);
    polys.push_back(pi);
  }
  int sign = 1;
  for (auto& pi : polys)
    if (!pi.isZero()) pi = pi.divExact(content);
  if (polys.back().leadingSign() < 0) {
    sign = -1;
    for (auto& pi : polys) pi = -pi;
  }
  // total factor applied to each c_i
  RatFunc factor = RatFunc(den) * RatFunc(Rat(sign) * t) / RatFunc(content);
  return {polys, factor};
}

}  // namespace detail

inline TelescopeResult findTelescoper(
    const TermSpec& term, std::optional<int> maxOrder = std::nullopt) {
  CaseTag tag = term.tag;
  Rnf rnf = standardizeKernel(computeRnf(term.fy, tag));
  ComplementBasis cb(rnf.K, tag);
  RatFunc N = term.fx * rnf.S / applyShiftX(rnf.S, 1, tag);

  ReductionResult base = reduceShell(rnf.S, cb);
  if (base.remainder.isZero()) {
    // T itself is sigma_y-summable: L = 1.
    BoundReport rep;
    rep.dimComplement = cb.dimComputed();
    rep.lower = 0;
    rep.upper = cb.dimComputed();
    Found f;
    f.telescoper.coeffs = {MPoly(Int(1))};
    f.certificate.g = base.witness;
    f.remainders = {base.remainder};
    f.bounds = rep;
    f.rnf = rnf;
    return f;
  }

  MPoly d0 = base.remainder.significantDenominator();
  auto dec = ilDecompose(d0, tag);
  if (!dec) {
    // report a witness factor that is not integer-linear
    auto fl = factorIrreducible(d0);
    MPoly evidence = d0;
    for (auto& [f, m] : fl.factors)
      if (f.degree(VY) > 0 && !univariateRepresentation(f, tag)) {
        evidence = f;
        break;
      }
    return NoTelescoper{evidence};
  }

  auto [D, D0] = commonMultipleD(*dec, rnf.K, tag);
  BoundReport rep;
  rep.upper = upperBound(cb, *dec, tag);
  rep.lower = lowerBound(dec, false);
  rep.dimComplement = cb.dimComputed();
  rep.degD0 = rep.upper - rep.dimComplement;
  int cap = maxOrder ? *maxOrder : rep.upper;

  RatFunc Dv = RatFunc(D) * RatFunc(cb.kernel().den());
  detail::DependencySolver solver;
  std::vector<Remainder> remainders;
  std::vector<RatFunc> witnesses;
  RatFunc shell = rnf.S;
  for (int i = 0;; ++i) {
    ReductionResult red = i == 0 ? base : reduceShell(shell, cb);
    ReductionResult adj = adjustRemainder(red.remainder, D, cb);
    remainders.push_back(adj.remainder);
    witnesses.push_back(red.witness + adj.witness);
    YPoly coord;
    try {
      coord = yp_f::fromRatFunc(adj.remainder.value() * Dv);
    } catch (const std::logic_error&) {
      throw std::logic_error("telescope: adjusted denominator does not "
                             "divide D");
    }
    if (auto dep = solver.addRow(coord)) {
      auto [coeffs, factor] = detail::normalizeCoefficients(*dep);
      RatFunc g;
      for (size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].isZero())
          g += RatFunc(coeffs[k]) * witnesses[k];
      (void)factor;
      Found f;
      f.telescoper.coeffs = std::move(coeffs);
      f.certificate.g = g;
      f.remainders = std::move(remainders);
      f.bounds = rep;
      f.rnf = rnf;
      return f;
    }
    if (i >= cap) {
      if (maxOrder)
        throw OrderCapExceededError("no telescoper up to order " +
                                    std::to_string(cap));
      throw std::logic_error("telescope: upper bound exceeded");
    }
    shell = applyShiftX(shell, 1, tag) * N;
  }
}

// Checks sum_i ell_i * S~_i = K*sigma_y(g) - g identically.
inline bool verifyCertificate(const TermSpec& term, const Telescoper& L,
                              const Certificate& cert, const Rnf& rnf) {
  if (L.coeffs.empty() || L.coeffs.back().isZero()) return false;
  RatFunc N = term.fx * rnf.S / applyShiftX(rnf.S, 1, term.tag);
  RatFunc shell = rnf.S, lhs;
  for (size_t i = 0; i < L.coeffs.size(); ++i) {
    if (!L.coeffs[i].isZero()) lhs += RatFunc(L.coeffs[i]) * shell;
    shell = applyShiftX(shell, 1, term.tag) * N;
  }
  return lhs == deltaK(cert.g, rnf.K, term.tag);
}

}  // namespace ctk

#endif  // CTK_TELESCOPE_HPP
