#ifndef CTK_RNF_HPP
#define CTK_RNF_HPP

#include <ctk/shiftcase.hpp>

namespace ctk {

struct ZeroInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WrongCaseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAFactorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational normal form f = K * sigma_y(S)/S with K sigma_y-reduced.
struct Rnf {
  RatFunc K;
  RatFunc S;
  CaseTag tag = CaseTag::Shift;
};

inline bool isSigmaYReduced(const RatFunc& K, CaseTag tag) {
  DispersionResult d = dispersionPair(K.num(), K.den(), tag);
  return !d.allShifts && d.shifts.empty();
}

// Is K sigma_y-standard: reduced, and in the q-case K(y=0) is not a positive
// power of q.  Returns the offending exponent m > 0 through badPower.
inline bool isSigmaYStandard(const RatFunc& K, CaseTag tag,
                             int* badPower = nullptr) {
  if (!isSigmaYReduced(K, tag)) return false;
  if (tag == CaseTag::Shift) return true;
  MPoly u0 = K.num().coeffOf(VY, 0), v0 = K.den().coeffOf(VY, 0);
  if (K.num().lowestDegree(VY) > 0) u0 = MPoly();
  if (K.den().lowestDegree(VY) > 0) v0 = MPoly();
  if (u0.isZero() || v0.isZero()) return true;
  RatFunc k0 = RatFunc(u0, v0, K.scalar());
  // violation iff k0 == q^m with m > 0
  if (k0.scalar() != 1) return true;
  if (!k0.den().isOne()) return true;
  const MPoly& n = k0.num();
  if (n.terms().size() != 1) return true;
  const Expt& e = n.terms().begin()->first;
  if (n.terms().begin()->second != 1) return true;
  if (e[VX] != 0 || e[VY] != 0 || e[VZ] != 0) return true;
  if (e[VQ] <= 0) return true;
  if (badPower) *badPower = e[VQ];
  return false;
}

// Abramov-Petkovsek style kernel/shell computation: absorb every common
// shift between numerator and denominator into the shell.
inline Rnf computeRnf(const RatFunc& f, CaseTag tag) {
  if (f.isZero()) throw ZeroInputError("computeRnf: zero input");
  // Factor both sides once and strip shift-equivalent pairs on the factor
  // lists; each strip multiplies K by sigma_y^-ell(a)/a through S.
  FactorList fn = factorIrreducible(f.num());
  FactorList fd = factorIrreducible(f.den());
  RatFunc S(1);
  RatFunc units(1);  // accumulated y-free associates sigma_y^-ell(a)/b
  while (true) {
    // largest magnitude first keeps the iteration monotone
    int ell = 0;
    for (auto& [a, ma] : fn.factors) {
      if (ma == 0 || a.degree(VY) <= 0) continue;
      for (auto& [b, mb] : fd.factors) {
        if (mb == 0 || b.degree(VY) <= 0) continue;
        auto s = sigmaYEquivalent(a, b, tag);
        if (!s || *s == 0) continue;
        if (std::abs(*s) > std::abs(ell) ||
            (std::abs(*s) == std::abs(ell) && *s > ell))
          ell = *s;
      }
    }
    if (ell == 0) break;
    for (auto& [a, ma] : fn.factors) {
      if (ma == 0 || a.degree(VY) <= 0) continue;
      for (auto& [b, mb] : fd.factors) {
        if (mb == 0 || b.degree(VY) <= 0) continue;
        if (sigmaYEquivalent(a, b, tag) != std::optional<int>(ell)) continue;
        int t = std::min(ma, mb);
        RatFunc block(1), ar(a);
        if (ell > 0) {
          for (int i = -ell; i <= -1; ++i) block *= applyShiftY(ar, i, tag);
        } else {
          for (int i = 0; i <= -ell - 1; ++i) block /= applyShiftY(ar, i, tag);
        }
        S *= block.pow(t);
        units *= (RatFunc(shiftPolyY(a, -ell, tag)) / RatFunc(b)).pow(t);
        ma -= t;
        mb -= t;
        if (ma == 0) break;
      }
    }
  }
  // K = f * S / sigma_y(S) assembled from what is left of the factor lists;
  // this avoids recancelling the stripped factors with large gcds.
  MPoly numRem(Int(1)), denRem(Int(1));
  for (auto& [a, ma] : fn.factors)
    if (ma > 0) numRem = numRem * a.pow(ma);
  for (auto& [b, mb] : fd.factors)
    if (mb > 0) denRem = denRem * b.pow(mb);
  RatFunc K =
      RatFunc(numRem, denRem, f.scalar() * fn.unit / fd.unit) * units;
  return Rnf{K, S, tag};
}

// Upgrade a sigma_y-reduced kernel to a sigma_y-standard one.  Identity in
// the shift case; in the q-case applies (K, S) -> (q^-m K, y^m S).
inline Rnf standardizeKernel(const Rnf& r) {
  if (r.tag == CaseTag::Shift) return r;
  int m = 0;
  if (isSigmaYStandard(r.K, r.tag, &m)) return r;
  RatFunc qm(MPoly::var(VQ, m));
  return Rnf{r.K / qm, r.S * RatFunc(MPoly::var(VY, m)), r.tag};
}

// Lemma-level RNF transformation: (K, S) -> (q^-m K, y^m S), q-case only.
inline Rnf transformSpecial(const Rnf& r, int m) {
  if (r.tag != CaseTag::QShift)
    throw WrongCaseError("transformSpecial: q-shift case only");
  if (m < 0) throw std::logic_error("transformSpecial: m must be >= 0");
  if (m == 0) return r;
  RatFunc qm(MPoly::var(VQ, m));
  return Rnf{r.K / qm, r.S * RatFunc(MPoly::var(VY, m)), r.tag};
}

enum class KernelSide { Numerator, Denominator };

// Move a sigma_y-normal irreducible factor of the kernel across to the
// shell: Denominator (u/v, S) -> (u/(v' sigma_y(a)), aS) with v' = v/a;
// Numerator (u/v, S) -> (u' sigma_y^-1(a)/v, sigma_y^-1(a) S) with u' = u/a.
inline Rnf transformNormalFactor(const Rnf& r, const MPoly& a,
                                 KernelSide side) {
  RatFunc af(a);
  const MPoly& target = side == KernelSide::Denominator ? r.K.den() : r.K.num();
  RatFunc quot = RatFunc(target) / af;
  if (quot.den().degree(VY) > 0)
    throw NotAFactorError("transformNormalFactor: not a factor of that side");
  RatFunc K2, S2;
  if (side == KernelSide::Denominator) {
    K2 = r.K * af / applyShiftY(af, 1, r.tag);
    S2 = af * r.S;
  } else {
    RatFunc am = applyShiftY(af, -1, r.tag);
    K2 = r.K * am / af;
    S2 = am * r.S;
  }
  return Rnf{K2, S2, r.tag};
}

// Reconstruct the function represented by an RNF.
inline RatFunc rnfValue(const Rnf& r) {
  return r.K * applyShiftY(r.S, 1, r.tag) / r.S;
}

}  // namespace ctk

#endif  // CTK_RNF_HPP
