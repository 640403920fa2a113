#ifndef CTK_FACTOR_HPP
#define CTK_FACTOR_HPP

#include <ctk/zfactor.hpp>

#include <algorithm>

namespace ctk {

struct FactorList {
  Rat unit = 1;  // rational content and sign
  std::vector<std::pair<MPoly, int>> factors;  // primitive irreducible, mult
};

namespace detail {

inline std::vector<Var> varsOf(const MPoly& p) {
  std::vector<Var> vs;
  for (int v = 0; v < kNumVars; ++v)
    if (p.dependsOn(static_cast<Var>(v))) vs.push_back(static_cast<Var>(v));
  return vs;
}

// Kronecker encoding: substitute var[i] -> w^(radix_i) with radices chosen
// from per-variable degree bounds of the target polynomial.
struct Kronecker {
  std::vector<Var> vars;
  std::vector<long> radix;

  explicit Kronecker(const MPoly& p) {
    vars = varsOf(p);
    long r = 1;
    for (Var v : vars) {
      radix.push_back(r);
      r *= p.degree(v) + 1;
    }
  }

  ZPoly encode(const MPoly& p) const {
    ZPoly f;
    for (auto& [e, c] : p.terms()) {
      long pos = 0;
      for (size_t i = 0; i < vars.size(); ++i) pos += radix[i] * e[vars[i]];
      if (static_cast<long>(f.size()) <= pos) f.resize(pos + 1, 0);
      f[pos] += c;
    }
    zp::trim(f);
    return f;
  }

  MPoly decode(const ZPoly& f) const {
    MPoly p;
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0) continue;
      Expt e{};
      long pos = static_cast<long>(i);
      for (size_t j = vars.size(); j-- > 0;) {
        e[vars[j]] = static_cast<int>(pos / radix[j]);
        pos %= radix[j];
      }
      p += MPoly::monomial(f[i], e);
    }
    return p;
  }
};

// Factor a primitive squarefree multivariate polynomial into irreducibles.
inline std::vector<MPoly> factorSquarefreePrim(const MPoly& p) {
  if (p.isConstant()) return {};
  Kronecker enc(p);
  ZPoly f = enc.encode(p);
  // The encoding of a squarefree polynomial need not be squarefree.
  std::vector<ZPoly> pieces;
  ZPoly rest = zp::primitivePart(f);
  while (zp::deg(rest) > 0) {
    ZPoly g = zp::gcd(rest, zp::derivative(rest));
    ZPoly sf;
    if (!zp::divExact(rest, g, sf)) throw std::logic_error("squarefree split");
    for (auto& irr : zp::factorSquarefree(zp::primitivePart(sf)))
      if (std::find(pieces.begin(), pieces.end(), irr) == pieces.end())
        pieces.push_back(irr);
    rest = g;
  }
  // Recombine univariate pieces into genuine factors of p.
  std::vector<MPoly> out;
  MPoly rem = p;
  // A multivariate factor corresponds to a sub-multiset of pieces; track how
  // many copies of each piece remain available.
  std::vector<int> avail(pieces.size(), 0);
  {
    ZPoly r = zp::primitivePart(f);
    for (size_t i = 0; i < pieces.size(); ++i) {
      ZPoly q;
      while (zp::divExact(r, pieces[i], q)) {
        ++avail[i];
        r = q;
      }
    }
  }
  // Flatten to an index list with repetition.
  std::vector<size_t> slots;
  for (size_t i = 0; i < pieces.size(); ++i)
    for (int k = 0; k < avail[i]; ++k) slots.push_back(i);

  size_t card = 1;
  while (!slots.empty() && 2 * card <= slots.size() && !rem.isConstant()) {
    std::vector<size_t> idx(card);
    for (size_t i = 0; i < card; ++i) idx[i] = i;
    bool foundOne = false;
    while (true) {
      ZPoly candidate{Int(1)};
      for (size_t i : idx) candidate = zp::mul(candidate, pieces[slots[i]]);
      MPoly cand = enc.decode(zp::primitivePart(candidate)).primitivePart();
      MPoly quot;
      if (!cand.isConstant() && rem.divExact(cand, quot)) {
        out.push_back(cand);
        rem = quot;
        std::vector<size_t> ns;
        for (size_t i = 0, j = 0; i < slots.size(); ++i) {
          if (j < idx.size() && idx[j] == i) { ++j; continue; }
          ns.push_back(slots[i]);
        }
        slots = ns;
        foundOne = true;
        break;
      }
      int pos = static_cast<int>(card) - 1;
      while (pos >= 0 && idx[pos] == slots.size() - card + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!foundOne) ++card;
  }
  if (!rem.isConstant()) out.push_back(rem.primitivePart());
  return out;
}

}  // namespace detail

// Yun squarefree decomposition in the given main variable; parts[i] holds the
// product of factors with multiplicity i+1. Content w.r.t. the main variable
// is returned separately.
inline void squarefreeDecompose(const MPoly& p, Var v, MPoly& content,
                                std::vector<MPoly>& parts) {
  parts.clear();
  content = p.contentIn(v);
  MPoly f = p.divExact(content);
  if (f.degree(v) <= 0) {
    content = p;
    return;
  }
  MPoly fp = f.derivative(v);
  MPoly a = mpolyGcd(f, fp);
  MPoly b = f.divExact(a);
  MPoly c = fp.divExact(a);
  MPoly d = c - b.derivative(v);
  while (!(b.degree(v) <= 0)) {
    MPoly g = mpolyGcd(b, d);
    parts.push_back(g);
    b = b.divExact(g);
    c = d.divExact(g);
    d = c - b.derivative(v);
  }
  // fold any leftover unit of b into the content
  content = content * b;
}

// Full irreducible factorization over Q: p = unit * prod factors[i]^mult[i]
// with each factor primitive, irreducible over Z, positive leading sign.
inline FactorList factorIrreducible(const MPoly& p) {
  FactorList out;
  if (p.isZero()) {
    out.unit = 0;
    return out;
  }
  Int cont = p.content();
  if (p.leadingSign() < 0) cont = -cont;
  out.unit = Rat(cont);
  MPoly f = p.divCoeffs(cont);

  auto addFactor = [&](const MPoly& g, int mult) {
    for (auto& [h, m] : out.factors)
      if (h == g) {
        m += mult;
        return;
      }
    out.factors.emplace_back(g, mult);
  };

  // peel off monomial factors first
  for (int v = 0; v < kNumVars; ++v) {
    int k = f.lowestDegree(static_cast<Var>(v));
    if (k > 0) {
      addFactor(MPoly::var(static_cast<Var>(v), 1), k);
      f = f.divExact(MPoly::var(static_cast<Var>(v), k));
    }
  }
  // recursive worklist: (poly, multiplicity)
  std::vector<std::pair<MPoly, int>> work{{f, 1}};
  while (!work.empty()) {
    auto [g, mult] = work.back();
    work.pop_back();
    if (g.isConstant()) continue;
    auto vs = detail::varsOf(g);
    Var main = vs.back();
    MPoly cont2;
    std::vector<MPoly> parts;
    squarefreeDecompose(g, main, cont2, parts);
    if (!cont2.isConstant()) work.emplace_back(cont2, mult);
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].isConstant()) continue;
      for (auto& irr : detail::factorSquarefreePrim(parts[i].primitivePart()))
        addFactor(irr, mult * static_cast<int>(i + 1));
    }
  }
  return out;
}

}  // namespace ctk

#endif  // CTK_FACTOR_HPP
