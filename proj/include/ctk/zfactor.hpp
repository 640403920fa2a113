#ifndef CTK_ZFACTOR_HPP
#define CTK_ZFACTOR_HPP

#include <ctk/mpoly.hpp>

#include <algorithm>
#include <random>

namespace ctk {

// Dense univariate polynomial over Z: coeff[i] is the coefficient of w^i.
using ZPoly = std::vector<Int>;

namespace zp {

inline void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
inline bool isZero(const ZPoly& f) { return f.empty(); }

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}
inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}
inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (isZero(a) || isZero(b)) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline bool divExact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (isZero(b)) throw std::logic_error("ZPoly: division by zero");
  ZPoly r = a;
  trim(r);
  q.assign(r.size(), 0);
  while (!isZero(r) && deg(r) >= deg(b)) {
    Int c = r.back() / b.back();
    if (c * b.back() != r.back()) return false;
    int d = deg(r) - deg(b);
    q[d] = c;
    for (size_t i = 0; i < b.size(); ++i) r[d + i] -= c * b[i];
    trim(r);
  }
  trim(q);
  return isZero(r);
}

inline Int content(const ZPoly& f) {
  Int g = 0;
  for (auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}
inline ZPoly primitivePart(ZPoly f) {
  trim(f);
  if (isZero(f)) return f;
  Int g = content(f);
  if (f.back() < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}
inline ZPoly derivative(const ZPoly& f) {
  ZPoly r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * Int(i));
  trim(r);
  return r;
}
inline Int maxAbsCoeff(const ZPoly& f) {
  Int m = 0;
  for (auto& c : f) m = std::max(m, Int(abs(c)));
  return m;
}

inline MPoly toMPoly(const ZPoly& f) {
  MPoly p;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) {
      Expt e{};
      e[VZ] = static_cast<int>(i);
      p += MPoly::monomial(f[i], e);
    }
  }
  return p;
}
inline ZPoly fromMPoly(const MPoly& p) {
  ZPoly f(p.degree(VZ) + 1, 0);
  for (auto& [e, c] : p.terms()) f[e[VZ]] = c;
  trim(f);
  return f;
}
inline ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  return fromMPoly(mpolyGcd(toMPoly(a), toMPoly(b)));
}

// ---- arithmetic modulo a prime p ----

inline Int mod(const Int& a, const Int& p) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}
inline ZPoly pNorm(ZPoly f, const Int& p) {
  for (auto& c : f) c = mod(c, p);
  trim(f);
  return f;
}
inline ZPoly pMul(const ZPoly& a, const ZPoly& b, const Int& p) {
  return pNorm(mul(a, b), p);
}
inline Int invMod(const Int& a, const Int& p) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
    throw std::logic_error("invMod: not invertible");
  return r;
}
// Division with remainder mod p; b's leading coefficient must be a unit.
inline void pDivRem(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& q,
                    ZPoly& r) {
  r = pNorm(a, p);
  q.assign(r.size(), 0);
  Int binv = invMod(b.back(), p);
  while (!isZero(r) && deg(r) >= deg(b)) {
    Int c = mod(r.back() * binv, p);
    int d = deg(r) - deg(b);
    q[d] = c;
    for (size_t i = 0; i < b.size(); ++i) r[d + i] = mod(r[d + i] - c * b[i], p);
    trim(r);
  }
  trim(q);
}
inline ZPoly pRem(const ZPoly& a, const ZPoly& b, const Int& p) {
  ZPoly q, r;
  pDivRem(a, b, p, q, r);
  return r;
}
inline ZPoly pMonic(ZPoly f, const Int& p) {
  f = pNorm(f, p);
  if (isZero(f)) return f;
  Int inv = invMod(f.back(), p);
  for (auto& c : f) c = mod(c * inv, p);
  return f;
}
inline ZPoly pGcd(ZPoly a, ZPoly b, const Int& p) {
  a = pNorm(a, p);
  b = pNorm(b, p);
  while (!isZero(b)) {
    ZPoly r = pRem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pMonic(a, p);
}
// s*a + t*b = g (monic gcd) mod p.
inline void pXgcd(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& g,
                  ZPoly& s, ZPoly& t) {
  ZPoly r0 = pNorm(a, p), r1 = pNorm(b, p);
  ZPoly s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
  while (!isZero(r1)) {
    ZPoly q, r;
    pDivRem(r0, r1, p, q, r);
    ZPoly s2 = pNorm(sub(s0, mul(q, s1)), p);
    ZPoly t2 = pNorm(sub(t0, mul(q, t1)), p);
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  Int inv = invMod(r0.back(), p);
  auto scale = [&](ZPoly f) {
    for (auto& c : f) c = mod(c * inv, p);
    return f;
  };
  g = scale(r0);
  s = scale(s0);
  t = scale(t0);
}
// b^e mod (f, p) with an arbitrary-precision exponent.
inline ZPoly pPowMod(const ZPoly& b, const Int& e, const ZPoly& f,
                     const Int& p) {
  ZPoly r{Int(1)};
  ZPoly base = pRem(b, f, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = pRem(mul(r, r), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = pRem(mul(r, base), f, p);
  }
  return r;
}

// ---- factorization over F_p (f monic squarefree, p odd) ----

inline void equalDegreeSplit(const ZPoly& f, int d, const Int& p,
                             std::mt19937_64& rng, std::vector<ZPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Int exponent;
  mpz_pow_ui(exponent.get_mpz_t(), p.get_mpz_t(), d);
  exponent = (exponent - 1) / 2;
  while (true) {
    ZPoly a(deg(f), 0);
    for (auto& c : a) c = mod(Int(static_cast<long>(rng() >> 1)), p);
    trim(a);
    if (deg(a) < 1) continue;
    ZPoly g = pGcd(a, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equalDegreeSplit(g, d, p, rng, out);
      ZPoly q, r;
      pDivRem(f, g, p, q, r);
      equalDegreeSplit(q, d, p, rng, out);
      return;
    }
    ZPoly b = pPowMod(a, exponent, f, p);
    b = pNorm(sub(b, ZPoly{Int(1)}), p);
    g = pGcd(b, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equalDegreeSplit(g, d, p, rng, out);
      ZPoly q, r;
      pDivRem(f, g, p, q, r);
      equalDegreeSplit(q, d, p, rng, out);
      return;
    }
  }
}

inline std::vector<ZPoly> factorModP(const ZPoly& fIn, const Int& p) {
  std::mt19937_64 rng(0x5eed);
  ZPoly f = pMonic(fIn, p);
  std::vector<ZPoly> out;
  ZPoly h{Int(0), Int(1)};  // w
  const ZPoly w = h;
  int d = 0;
  while (deg(f) > 0) {
    ++d;
    if (2 * d > deg(f)) {
      out.push_back(f);
      break;
    }
    h = pPowMod(h, p, f, p);
    ZPoly g = pGcd(pNorm(sub(h, w), p), f, p);
    if (deg(g) > 0) {
      equalDegreeSplit(g, d, p, rng, out);
      ZPoly q, r;
      pDivRem(f, g, p, q, r);
      f = q;
      h = pRem(h, f, p);
    }
  }
  return out;
}

// ---- Hensel lifting (all polynomials monic) ----

// Lift f = g*h from mod m (a power of p) given Bezout s*g + t*h = 1 mod p.
// Returns factors mod target modulus M (successively squared from m).
inline void henselPair(const ZPoly& f, ZPoly g, ZPoly h, const ZPoly& s0,
                       const ZPoly& t0, const Int& p, const Int& M, ZPoly& gOut,
                       ZPoly& hOut) {
  Int m = p;
  ZPoly s = s0, t = t0;
  while (m < M) {
    Int m2 = m * m;
    // e = f - g*h mod m2; correction via Bezout.
    ZPoly e = pNorm(sub(f, mul(g, h)), m2);
    ZPoly q, r;
    pDivRem(mul(s, e), h, m2, q, r);
    g = pNorm(add(add(g, mul(t, e)), mul(q, g)), m2);
    h = pNorm(add(h, r), m2);
    // lift the Bezout relation: s*g + t*h = 1 mod m2
    ZPoly b = pNorm(sub(add(mul(s, g), mul(t, h)), ZPoly{Int(1)}), m2);
    ZPoly c, dpoly;
    pDivRem(mul(s, b), h, m2, c, dpoly);
    s = pNorm(sub(s, dpoly), m2);
    t = pNorm(sub(sub(t, mul(t, b)), mul(c, g)), m2);
    m = m2;
  }
  gOut = pNorm(g, M);
  hOut = pNorm(h, M);
}

// Multi-factor tree lift: f monic, factors monic pairwise-coprime mod p.
inline void henselTree(const ZPoly& f, const std::vector<ZPoly>& factors,
                       size_t lo, size_t hi, const Int& p, const Int& M,
                       std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out[lo] = pNorm(f, M);
    return;
  }
  size_t mid = (lo + hi) / 2;
  ZPoly g{Int(1)}, h{Int(1)};
  for (size_t i = lo; i < mid; ++i) g = pMul(g, factors[i], p);
  for (size_t i = mid; i < hi; ++i) h = pMul(h, factors[i], p);
  ZPoly gg, s, t;
  pXgcd(g, h, p, gg, s, t);
  if (deg(gg) != 0) throw std::logic_error("hensel: factors not coprime");
  ZPoly gL, hL;
  henselPair(pNorm(f, M), g, h, s, t, p, M, gL, hL);
  henselTree(gL, factors, lo, mid, p, M, out);
  henselTree(hL, factors, mid, hi, p, M, out);
}

inline ZPoly symmetric(ZPoly f, const Int& m) {
  Int half = m / 2;
  for (auto& c : f) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(f);
  return f;
}

// ---- Zassenhaus driver ----

// Input: primitive squarefree with positive leading coefficient, deg >= 1.
// Output: irreducible primitive factors over Z.
inline std::vector<ZPoly> factorSquarefree(const ZPoly& f) {
  int n = deg(f);
  if (n <= 0) throw std::logic_error("factorSquarefree: constant input");
  if (n == 1) return {f};
  Int lc = f.back();
  // Number of irreducible factors mod p by distinct-degree splitting only.
  auto ddfCount = [](const ZPoly& f0, const Int& p) {
    ZPoly f = pMonic(f0, p);
    ZPoly h{Int(0), Int(1)};
    const ZPoly w = h;
    int d = 0, count = 0;
    while (deg(f) > 0) {
      ++d;
      if (2 * d > deg(f)) {
        ++count;
        break;
      }
      h = pPowMod(h, p, f, p);
      ZPoly g = pGcd(pNorm(sub(h, w), p), f, p);
      if (deg(g) > 0) {
        count += deg(g) / d;
        ZPoly q, r;
        pDivRem(f, g, p, q, r);
        f = q;
        h = pRem(h, f, p);
      }
    }
    return count;
  };
  // Probe odd primes keeping fm squarefree; keep the one with the fewest
  // modular factors, since recombination is exponential in their number.
  Int p = 0;
  int best = n + 1, probed = 0;
  for (long cand = 3; probed == 0 || (probed < 3 && best > 4); cand += 2) {
    bool prime = true;
    for (long d = 3; d * d <= cand; d += 2)
      if (cand % d == 0) { prime = false; break; }
    if (!prime) continue;
    Int pc(cand);
    if (mod(lc, pc) == 0) continue;
    ZPoly fp = pNorm(f, pc);
    if (deg(fp) != n) continue;
    if (deg(pGcd(fp, derivative(fp), pc)) != 0) continue;
    ++probed;
    int count = ddfCount(f, pc);
    if (count < best) {
      best = count;
      p = pc;
    }
  }
  std::vector<ZPoly> modFactors = factorModP(f, p);
  if (modFactors.size() == 1) return {f};
  // Landau-Mignotte style bound; candidates carry an extra factor lc.
  Int bound = maxAbsCoeff(f) * abs(lc);
  Int two31; mpz_ui_pow_ui(two31.get_mpz_t(), 2, n + 2);
  bound *= two31 * Int(n + 1);
  Int M = p;
  while (M <= 2 * bound) M *= M;
  // Lift the monic factorization of f/lc; lc is a unit mod M = p^(2^k).
  ZPoly fMonic = pNorm(f, M);
  {
    Int lcInv = invMod(lc, M);
    for (auto& c : fMonic) c = mod(c * lcInv, M);
  }
  std::vector<ZPoly> lifted(modFactors.size());
  henselTree(fMonic, modFactors, 0, modFactors.size(), p, M, lifted);

  // Subset recombination: a true factor g appears as lc(rem)/lc(g) * g.
  std::vector<ZPoly> found;
  std::vector<size_t> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = i;
  ZPoly rem = f;
  size_t card = 1;
  while (2 * card <= live.size()) {
    // enumerate cardinality-card index subsets of live
    std::vector<size_t> idx(card);
    for (size_t i = 0; i < card; ++i) idx[i] = i;
    bool foundOne = false;
    while (true) {
      Int lcRem = rem.back();
      // cheap prune: a true candidate's constant divides rem[0]*lc(rem)
      bool plausible = true;
      if (rem[0] != 0) {
        Int c0 = lcRem;
        for (size_t i : idx) c0 = mod(c0 * lifted[live[i]][0], M);
        c0 = mod(c0, M);
        if (c0 > M / 2) c0 -= M;
        Int probe = rem[0] * lcRem;
        plausible = c0 != 0 && mpz_divisible_p(probe.get_mpz_t(),
                                               c0.get_mpz_t());
      }
      ZPoly quot;
      ZPoly candidate;
      if (plausible) {
        candidate = ZPoly{lcRem};
        for (size_t i : idx) candidate = pMul(candidate, lifted[live[i]], M);
        candidate = primitivePart(symmetric(candidate, M));
      }
      if (plausible && divExact(rem, candidate, quot)) {
        found.push_back(candidate);
        rem = quot;
        std::vector<size_t> nl;
        for (size_t i = 0, j = 0; i < live.size(); ++i) {
          if (j < idx.size() && idx[j] == i) { ++j; continue; }
          nl.push_back(live[i]);
        }
        live = nl;
        foundOne = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(card) - 1;
      while (pos >= 0 && idx[pos] == live.size() - card + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!foundOne) ++card;
  }
  if (deg(rem) > 0) found.push_back(primitivePart(rem));
  return found;
}

}  // namespace zp

}  // namespace ctk

#endif  // CTK_ZFACTOR_HPP
