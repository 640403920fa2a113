#ifndef CTK_SHIFTCASE_HPP
#define CTK_SHIFTCASE_HPP

#include <ctk/factor.hpp>
#include <ctk/ratfunc.hpp>

#include <optional>
#include <set>

namespace ctk {

enum class CaseTag { Shift, QShift };

// Composition of the two generators: sigma_x^a sigma_y^b.
struct ShiftOp {
  int a = 0;
  int b = 0;
};

struct NotApplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputNotNormalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sigma_x^a sigma_y^b on a polynomial.  In the q-case negative exponents
// would leave the polynomial ring; the result is normalized by the smallest
// q-power making it polynomial again (a unit of F[y], harmless everywhere
// this is used).
inline MPoly shiftPoly(const MPoly& p, int a, int b, CaseTag tag) {
  if (p.isZero()) return p;
  if (tag == CaseTag::Shift) {
    MPoly r = p;
    if (a != 0) r = r.subst(VX, MPoly::var(VX, 1) + MPoly(Int(a)));
    if (b != 0) r = r.subst(VY, MPoly::var(VY, 1) + MPoly(Int(b)));
    return r;
  }
  // q-case: re-exponentiate q by a*deg_x + b*deg_y per term.
  long minq = 0;
  bool first = true;
  for (auto& [e, c] : p.terms()) {
    long eq = e[VQ] + static_cast<long>(a) * e[VX] + static_cast<long>(b) * e[VY];
    if (first || eq < minq) minq = eq;
    first = false;
  }
  long off = minq < 0 ? -minq : 0;
  MPoly r;
  for (auto& [e, c] : p.terms()) {
    Expt m = e;
    m[VQ] = static_cast<int>(e[VQ] + static_cast<long>(a) * e[VX] +
                             static_cast<long>(b) * e[VY] + off);
    r += MPoly::monomial(c, m);
  }
  return r;
}

inline MPoly shiftPolyY(const MPoly& p, int b, CaseTag tag) {
  return shiftPoly(p, 0, b, tag);
}

inline RatFunc applyShift(const ShiftOp& op, const RatFunc& f, CaseTag tag) {
  RatFunc r = f;
  if (tag == CaseTag::Shift) {
    if (op.a != 0)
      r = r.subst(VX, RatFunc(MPoly::var(VX, 1) + MPoly(Int(op.a))));
    if (op.b != 0)
      r = r.subst(VY, RatFunc(MPoly::var(VY, 1) + MPoly(Int(op.b))));
  } else {
    auto qpow = [](int k) {
      return k >= 0 ? RatFunc(MPoly::var(VQ, k))
                    : RatFunc(MPoly(Int(1)), MPoly::var(VQ, -k), Rat(1));
    };
    if (op.a != 0) r = r.subst(VX, qpow(op.a) * RatFunc(MPoly::var(VX, 1)));
    if (op.b != 0) r = r.subst(VY, qpow(op.b) * RatFunc(MPoly::var(VY, 1)));
  }
  return r;
}

inline RatFunc applyShiftX(const RatFunc& f, int a, CaseTag tag) {
  return applyShift(ShiftOp{a, 0}, f, tag);
}
inline RatFunc applyShiftY(const RatFunc& f, int b, CaseTag tag) {
  return applyShift(ShiftOp{0, b}, f, tag);
}

// Normalize a polynomial to a canonical associate in F[y]: strip integer
// content and sign, and in the q-case the q-power content.
inline MPoly unitNormalize(const MPoly& p, CaseTag tag) {
  if (p.isZero()) return p;
  MPoly r = p;
  if (tag == CaseTag::QShift) {
    int k = r.lowestDegree(VQ);
    if (k > 0) r = r.divExact(MPoly::var(VQ, k));
  }
  return r.primitivePart();
}

// The unique ell with a associate (over F) to sigma_y^ell(b), for sigma_y-
// normal inputs; nullopt when none exists.  y-free inputs give ell = 0 when
// they are associates.
inline std::optional<int> sigmaYEquivalent(const MPoly& a, const MPoly& b,
                                           CaseTag tag) {
  if (a.isZero() || b.isZero()) return std::nullopt;
  MPoly A = unitNormalize(a, tag), B = unitNormalize(b, tag);
  int d = A.degree(VY);
  if (d != B.degree(VY)) return std::nullopt;
  if (d <= 0) return A == B ? std::optional<int>(0) : std::nullopt;
  auto verify = [&](long ell) -> std::optional<int> {
    if (ell < INT32_MIN || ell > INT32_MAX) return std::nullopt;
    if (A == unitNormalize(shiftPolyY(B, static_cast<int>(ell), tag), tag))
      return static_cast<int>(ell);
    return std::nullopt;
  };
  if (tag == CaseTag::Shift) {
    // Leading y-coefficient is shift-invariant; the next coefficient moves
    // by ell*d*lc.
    MPoly lcA = A.leadCoeffIn(VY), lcB = B.leadCoeffIn(VY);
    if (lcA != lcB) return std::nullopt;
    MPoly diff = A.coeffOf(VY, d - 1) - B.coeffOf(VY, d - 1);
    if (diff.isZero()) return verify(0);
    MPoly target = lcA * MPoly(Int(d));
    MPoly quot;
    if (!diff.divExact(target, quot) || !quot.isConstant()) return std::nullopt;
    Int e = quot.constantValue();
    if (!e.fits_slong_p()) return std::nullopt;
    return verify(e.get_si());
  }
  // q-case: coefficient ratios are fixed q-powers; use two support exponents.
  int kLow = A.lowestDegree(VY);
  if (B.lowestDegree(VY) != kLow) return std::nullopt;
  int k2 = -1;
  for (auto& [e, c] : A.terms())
    if (e[VY] != kLow && (k2 < 0 || e[VY] < k2)) k2 = e[VY];
  if (k2 < 0) return std::nullopt;  // single y-exponent: sigma_y-special
  MPoly r1 = A.coeffOf(VY, k2) * B.coeffOf(VY, kLow);
  MPoly r2 = A.coeffOf(VY, kLow) * B.coeffOf(VY, k2);
  if (r1.isZero() || r2.isZero()) return std::nullopt;
  long m = r1.lowestDegree(VQ) - r2.lowestDegree(VQ);
  if (unitNormalize(r1, tag) != unitNormalize(r2, tag)) return std::nullopt;
  long delta = k2 - kLow;
  if (m % delta != 0) return std::nullopt;
  return verify(m / delta);
}

// All integers ell with gcd(p, sigma_y^ell(w)) of positive y-degree.  In the
// q-case a shared factor y makes every ell qualify; that is reported through
// allShifts instead of an infinite set.
struct DispersionResult {
  std::set<int> shifts;
  bool allShifts = false;
};

inline DispersionResult dispersionPair(const MPoly& p, const MPoly& w,
                                       CaseTag tag) {
  DispersionResult out;
  if (p.isZero() || w.isZero()) return out;
  if (tag == CaseTag::QShift && p.lowestDegree(VY) > 0 &&
      w.lowestDegree(VY) > 0) {
    out.allShifts = true;
    return out;
  }
  auto fp = factorIrreducible(p), fw = factorIrreducible(w);
  for (auto& [pi, mp] : fp.factors) {
    if (pi.degree(VY) <= 0) continue;
    for (auto& [wj, mw] : fw.factors) {
      if (wj.degree(VY) <= 0) continue;
      if (auto ell = sigmaYEquivalent(pi, wj, tag)) out.shifts.insert(*ell);
    }
  }
  return out;
}

// Nonzero ell with gcd(p, sigma_y^ell(p)) nontrivial in F[y].
inline std::set<int> dispersionSet(const MPoly& p, CaseTag tag) {
  if (p.isZero()) throw std::logic_error("dispersionSet: zero input");
  if (tag == CaseTag::QShift && p.lowestDegree(VY) > 0)
    throw NotApplicableError("dispersion undefined: sigma_y-special factor y");
  DispersionResult r = dispersionPair(p, p, tag);
  r.shifts.erase(0);
  return r.shifts;
}

enum class SigmaYClass { Normal, Special, Both, Neither };

inline SigmaYClass classifySigmaY(const MPoly& p, CaseTag tag) {
  if (p.isZero()) throw std::logic_error("classifySigmaY: zero input");
  if (p.degree(VY) <= 0) return SigmaYClass::Both;
  if (tag == CaseTag::QShift) {
    int k = p.lowestDegree(VY);
    if (k > 0) {
      MPoly rest = p.divExact(MPoly::var(VY, k));
      if (rest.degree(VY) <= 0) return SigmaYClass::Special;
      return SigmaYClass::Neither;  // special factor y times y-dependent rest
    }
  }
  return dispersionSet(p, tag).empty() ? SigmaYClass::Normal
                                       : SigmaYClass::Neither;
}

// f = f_s * f_n with f_s a ratio of sigma_y-special polynomials, every
// irreducible factor of f_n sigma_y-normal, and f_n sigma_y-monic.
inline std::pair<RatFunc, RatFunc> splittingFactorization(const RatFunc& f,
                                                          CaseTag tag) {
  if (f.isZero()) throw std::logic_error("splittingFactorization: zero input");
  RatFunc fs;
  if (tag == CaseTag::Shift) {
    // Special polynomials are the elements of F; f_n is f made monic in y.
    MPoly lcn = f.num().leadCoeffIn(VY);
    MPoly lcd = f.den().leadCoeffIn(VY);
    fs = RatFunc(lcn, lcd, f.scalar());
  } else {
    MPoly n = f.num(), d = f.den();
    int a = n.lowestDegree(VY), b = d.lowestDegree(VY);
    MPoly n1 = n.divExact(MPoly::var(VY, a));
    MPoly d1 = d.divExact(MPoly::var(VY, b));
    // value at y = 0 of the y-power-free parts
    MPoly n0 = n1.coeffOf(VY, 0), d0 = d1.coeffOf(VY, 0);
    fs = RatFunc(MPoly::var(VY, a) * n0, MPoly::var(VY, b) * d0, f.scalar());
  }
  return {fs, f / fs};
}

// gcd(u, sigma_y^ell(p)) = gcd(v, sigma_y^{-ell}(p)) = 1 for all ell >= 0,
// where K = u/v.
inline bool isStronglyCoprime(const MPoly& p, const RatFunc& K, CaseTag tag) {
  if (p.isZero() || K.isZero())
    throw std::logic_error("isStronglyCoprime: zero input");
  DispersionResult du = dispersionPair(K.num(), p, tag);
  if (du.allShifts) return false;
  for (int ell : du.shifts)
    if (ell >= 0) return false;
  DispersionResult dv = dispersionPair(K.den(), p, tag);
  if (dv.allShifts) return false;
  for (int ell : dv.shifts)
    if (ell <= 0) return false;
  return true;
}

inline bool sigmaYRelated(const MPoly& a, const MPoly& b, CaseTag tag) {
  auto check = [&](const MPoly& p) {
    SigmaYClass c = classifySigmaY(p, tag);
    if (c != SigmaYClass::Normal && c != SigmaYClass::Both)
      throw InputNotNormalError("sigmaYRelated: input not sigma_y-normal");
  };
  check(a);
  check(b);
  auto fa = factorIrreducible(a), fb = factorIrreducible(b);
  std::vector<std::pair<MPoly, int>> la, lb;
  for (auto& [p, m] : fa.factors)
    if (p.degree(VY) > 0) la.emplace_back(p, m);
  for (auto& [p, m] : fb.factors)
    if (p.degree(VY) > 0) lb.emplace_back(p, m);
  if (la.size() != lb.size()) return false;
  std::vector<bool> used(lb.size(), false);
  for (auto& [p, m] : la) {
    bool matched = false;
    for (size_t j = 0; j < lb.size(); ++j) {
      if (used[j] || lb[j].second != m) continue;
      if (sigmaYEquivalent(p, lb[j].first, tag)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace ctk

#endif  // CTK_SHIFTCASE_HPP
