#ifndef CTK_INTLIN_HPP
#define CTK_INTLIN_HPP

#include <ctk/reduce.hpp>

#include <optional>

namespace ctk {

class NotIrreducibleError : public std::runtime_error {
 public:
  explicit NotIrreducibleError(const std::string& m)
      : std::runtime_error(m) {}
};

// p = P(lambda*x + mu*y) in the shift case, or x^alpha y^beta P(x^lambda
// y^mu) in the q-case; P lives in z (and q).
struct UnivariateRep {
  MPoly P;
  int lambda = 0;
  int mu = 0;
  int alpha = 0, beta = 0;

  MPoly reconstruct(CaseTag tag) const {
    if (tag == CaseTag::Shift) {
      MPoly arg = MPoly::var(VX) * MPoly(Int(lambda)) +
                  MPoly::var(VY) * MPoly(Int(mu));
      return P.subst(VZ, arg);
    }
    MPoly r;
    for (int k = 0; k <= P.degree(VZ); ++k) {
      MPoly c = P.coeffOf(VZ, k);
      if (c.isZero()) continue;
      int ex = alpha + k * lambda, ey = beta + k * mu;
      if (ex < 0 || ey < 0)
        throw std::logic_error("UnivariateRep: negative exponent");
      r = r + c * MPoly::var(VX, ex) * MPoly::var(VY, ey);
    }
    return r;
  }
};

namespace detail {

// throw if P has a nontrivial factorization in z
inline void witnessIrreducible(const MPoly& P, const MPoly& p) {
  if (P.degree(VZ) < 2) return;
  auto fl = factorIrreducible(P);
  int pieces = 0;
  for (auto& [f, m] : fl.factors)
    if (f.degree(VZ) > 0) pieces += m;
  if (pieces > 1)
    throw NotIrreducibleError("reducibility witness for " + p.str());
}

}  // namespace detail

inline std::optional<UnivariateRep> univariateRepresentation(const MPoly& p,
                                                             CaseTag tag) {
  if (p.isZero() || p.isConstant())
    throw NotIrreducibleError("constant input");
  UnivariateRep rep;
  if (tag == CaseTag::Shift) {
    MPoly px = p.derivative(VX), py = p.derivative(VY);
    if (py.isZero()) {
      rep.lambda = 1;
      rep.mu = 0;
      rep.P = p.subst(VX, MPoly::var(VZ));
    } else if (px.isZero()) {
      rep.lambda = 0;
      rep.mu = 1;
      rep.P = p.subst(VY, MPoly::var(VZ));
    } else {
      RatFunc ratio = RatFunc(px) / RatFunc(py);
      if (!ratio.isConstant()) return std::nullopt;
      Rat c = ratio.constantValue();
      rep.lambda = static_cast<int>(c.get_num().get_si());
      rep.mu = static_cast<int>(c.get_den().get_si());
      // s*lambda + t*mu = 1
      long s = 0, t = 0;
      for (s = 0; s < rep.mu; ++s)
        if ((1 - s * rep.lambda) % rep.mu == 0) break;
      t = (1 - s * rep.lambda) / rep.mu;
      MPoly z = MPoly::var(VZ);
      rep.P = p.subst(VX, z * MPoly(Int(s))).subst(VY, z * MPoly(Int(t)));
    }
    rep.P = rep.P.primitivePart();
    if (rep.P.leadingSign() < 0) rep.P = rep.P * MPoly(Int(-1));
    if (unitNormalize(rep.reconstruct(tag), tag) != unitNormalize(p, tag))
      return std::nullopt;
    detail::witnessIrreducible(rep.P, p);
    return rep;
  }
  // q-case: support collinearity
  std::map<std::pair<int, int>, MPoly> support;
  for (auto& [e, c] : p.terms()) {
    Expt qe{};
    qe[VQ] = e[VQ];
    support[{e[VX], e[VY]}] =
        support[{e[VX], e[VY]}] + MPoly::monomial(c, qe);
  }
  if (support.size() == 1) {
    auto& [pt, c] = *support.begin();
    if (pt.first + pt.second != 1)
      throw NotIrreducibleError("reducible monomial " + p.str());
    rep.lambda = pt.first > 0 ? 1 : 0;
    rep.mu = pt.second > 0 ? 1 : 0;
    rep.alpha = pt.first;
    rep.beta = pt.second;
    rep.P = unitNormalize(c, tag);
    return rep;
  }
  auto it = support.begin();
  std::pair<int, int> p0 = it->first;
  int dx = 0, dy = 0;
  for (++it; it != support.end(); ++it) {
    int ex = it->first.first - p0.first, ey = it->first.second - p0.second;
    if (dx == 0 && dy == 0) {
      Int g = gcd(Int(std::abs(ex)), Int(std::abs(ey)));
      dx = ex / static_cast<int>(g.get_si());
      dy = ey / static_cast<int>(g.get_si());
    } else if (ex * dy != ey * dx) {
      return std::nullopt;  // support not collinear
    }
  }
  if (dy < 0 || (dy == 0 && dx < 0)) {
    dx = -dx;
    dy = -dy;
  }
  rep.lambda = dx;
  rep.mu = dy;
  // index every point along the direction and anchor at the minimum
  int kmin = 0, kmax = 0;
  for (auto& [pt, c] : support) {
    int k = dx != 0 ? (pt.first - p0.first) / dx : (pt.second - p0.second) / dy;
    if ((pt.first - p0.first) != k * dx || (pt.second - p0.second) != k * dy)
      return std::nullopt;
    kmin = std::min(kmin, k);
    kmax = std::max(kmax, k);
  }
  rep.alpha = p0.first + kmin * dx;
  rep.beta = p0.second + kmin * dy;
  for (auto& [pt, c] : support) {
    int k = dx != 0 ? (pt.first - rep.alpha) / dx : (pt.second - rep.beta) / dy;
    rep.P = rep.P + c * MPoly::var(VZ, k);
  }
  rep.P = unitNormalize(rep.P, tag);
  // sigma_z-monic convention: P(0) positive (P(0) = 1 up to unit)
  if (rep.P.coeffOf(VZ, rep.P.lowestDegree(VZ)).leadingSign() < 0)
    rep.P = rep.P * MPoly(Int(-1));
  detail::witnessIrreducible(rep.P, p);
  return rep;
}

// (s, t) with s*lambda + t*mu = 1 under the paper's constraints.
inline std::pair<int, int> deltaExponents(int lambda, int mu) {
  if (mu == 0) return {1, 0};
  if (lambda == 0) return {0, 1};
  for (int s = 0; s < mu; ++s)
    if ((1 - static_cast<long>(s) * lambda) % mu == 0)
      return {s, static_cast<int>((1 - static_cast<long>(s) * lambda) / mu)};
  throw std::logic_error("deltaExponents: gcd(lambda, mu) != 1");
}

inline MPoly deltaShift(const UnivariateRep& rep, int l, CaseTag tag) {
  auto [s, t] = deltaExponents(rep.lambda, rep.mu);
  return unitNormalize(shiftPoly(rep.reconstruct(tag), s * l, t * l, tag),
                       tag);
}

struct ILClass {
  UnivariateRep rep;       // anchored at the minimal delta-exponent present
  MPoly poly;              // unit-normalized representative p_j
  std::map<int, int> alpha;  // delta-exponent (>= 0, 0 present) -> multiplicity
};

struct ILDecomposition {
  RatFunc unit;  // c in F
  std::vector<ILClass> classes;
};

namespace detail {

// offset j with B = delta^j(A) inside one (sigma_x, sigma_y)-class
inline std::optional<int> deltaOffset(const UnivariateRep& A,
                                      const UnivariateRep& B, CaseTag tag) {
  if (A.lambda != B.lambda || A.mu != B.mu) return std::nullopt;
  if (tag == CaseTag::QShift && (A.alpha != B.alpha || A.beta != B.beta))
    return std::nullopt;
  int n = A.P.degree(VZ);
  if (n != B.P.degree(VZ)) return std::nullopt;
  if (tag == CaseTag::Shift) {
    // B.P(z) = A.P(z + j)
    if (n == 0) return A.P == B.P ? std::optional<int>(0) : std::nullopt;
    MPoly lc = A.P.coeffOf(VZ, n);
    if (lc != B.P.coeffOf(VZ, n)) return std::nullopt;
    MPoly diff = B.P.coeffOf(VZ, n - 1) - A.P.coeffOf(VZ, n - 1);
    RatFunc j = RatFunc(diff) / RatFunc(lc * MPoly(Int(n)));
    if (!j.isConstant()) return std::nullopt;
    Rat jr = j.constantValue();
    if (jr.get_den() != 1) return std::nullopt;
    int off = static_cast<int>(jr.get_num().get_si());
    MPoly shifted = A.P.subst(VZ, MPoly::var(VZ) + MPoly(Int(off)));
    return shifted == B.P ? std::optional<int>(off) : std::nullopt;
  }
  // q-case: B.P(z) proportional to A.P(q^j z)
  int k1 = A.P.lowestDegree(VZ);
  if (k1 != B.P.lowestDegree(VZ)) return std::nullopt;
  if (n == k1) {
    return unitNormalize(A.P, tag) == unitNormalize(B.P, tag)
               ? std::optional<int>(0)
               : std::nullopt;
  }
  int k2 = n;
  MPoly r1 = B.P.coeffOf(VZ, k2) * A.P.coeffOf(VZ, k1);
  MPoly r2 = B.P.coeffOf(VZ, k1) * A.P.coeffOf(VZ, k2);
  if (r1.isZero() || r2.isZero()) return std::nullopt;
  int m = r1.lowestDegree(VQ) - r2.lowestDegree(VQ);
  if (unitNormalize(r1, tag) != unitNormalize(r2, tag)) return std::nullopt;
  if (m % (k2 - k1) != 0) return std::nullopt;
  int off = m / (k2 - k1);
  // verify: A.P with z-coefficient k multiplied by q^{off*k}, raised by a
  // global q-power to keep exponents non-negative
  int base = std::min(off * k1, off * n);
  MPoly scaled;
  for (int k = k1; k <= n; ++k) {
    MPoly c = A.P.coeffOf(VZ, k);
    if (c.isZero()) continue;
    scaled = scaled + c * MPoly::var(VQ, off * k - base) * MPoly::var(VZ, k);
  }
  return unitNormalize(scaled, tag) == unitNormalize(B.P, tag)
             ? std::optional<int>(off)
             : std::nullopt;
}

}  // namespace detail

inline std::optional<ILDecomposition> ilDecompose(const MPoly& d,
                                                  CaseTag tag) {
  ILDecomposition dec;
  dec.unit = RatFunc(1);
  if (d.isZero()) throw InputNotNormalError("il_decompose: zero input");
  if (d.degree(VY) <= 0) {
    dec.unit = RatFunc(d);
    return dec;
  }
  {
    SigmaYClass cls = classifySigmaY(d, tag);
    if (cls != SigmaYClass::Normal && cls != SigmaYClass::Both)
      throw InputNotNormalError("il_decompose: input not sigma_y-normal");
  }
  auto fl = factorIrreducible(d);
  struct Member {
    UnivariateRep rep;
    MPoly poly;
    int mult;
    int offset = 0;  // relative to its class's first member
    int cls = -1;
  };
  std::vector<Member> members;
  for (auto& [b, m] : fl.factors) {
    if (b.degree(VY) <= 0) continue;
    auto rep = univariateRepresentation(b, tag);
    if (!rep) return std::nullopt;
    members.push_back({*rep, b, m});
  }
  // group into (sigma_x, sigma_y)-equivalence classes
  int nclasses = 0;
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j < i && members[i].cls < 0; ++j) {
      auto off = detail::deltaOffset(members[j].rep, members[i].rep, tag);
      if (off) {
        members[i].cls = members[j].cls;
        members[i].offset = members[j].offset + *off;
      }
    }
    if (members[i].cls < 0) members[i].cls = nclasses++;
  }
  for (int c = 0; c < nclasses; ++c) {
    int minOff = 0;
    bool first = true;
    const Member* anchor = nullptr;
    for (auto& mb : members)
      if (mb.cls == c && (first || mb.offset < minOff)) {
        minOff = mb.offset;
        anchor = &mb;
        first = false;
      }
    ILClass cl;
    cl.rep = anchor->rep;
    cl.poly = unitNormalize(anchor->poly, tag);
    for (auto& mb : members)
      if (mb.cls == c) cl.alpha[mb.offset - minOff] = mb.mult;
    dec.classes.push_back(cl);
  }
  // c = d / product of class shifts (an F-unit)
  RatFunc prod(1);
  for (auto& cl : dec.classes)
    for (auto& [off, k] : cl.alpha)
      prod *= RatFunc(deltaShift(cl.rep, off, tag).pow(k));
  dec.unit = RatFunc(d) / prod;
  if (dec.unit.dependsOn(VY))
    throw std::logic_error("il_decompose: reconstruction unit not in F");
  return dec;
}

// D0 and the a priori common multiple D of Prop. commonden.
inline std::pair<MPoly, MPoly> commonMultipleD(const ILDecomposition& dec,
                                               const RatFunc& K,
                                               CaseTag tag) {
  MPoly D(Int(1)), D0(Int(1));
  for (auto& cl : dec.classes) {
    int mu = cl.rep.mu;
    if (mu <= 0) throw std::logic_error("common_multiple_D: mu = 0 class");
    int k = 0;
    for (auto& [off, m] : cl.alpha) k = std::max(k, m);
    std::set<int> occupied;  // residues mod mu present in Lambda
    for (int i = 0; i < mu; ++i)
      D0 = D0 * deltaShift(cl.rep, i, tag).pow(k);
    for (auto& [off, m] : cl.alpha) {
      occupied.insert(((off % mu) + mu) % mu);
      D = D * deltaShift(cl.rep, off, tag).pow(k);
    }
    for (int j = 0; j < mu; ++j) {
      if (occupied.count(j)) continue;
      // complete with a strongly coprime representative of residue j
      MPoly q0 = deltaShift(cl.rep, j, tag);
      int l = 0;
      DispersionResult du = dispersionPair(K.num(), q0, tag);
      DispersionResult dv = dispersionPair(K.den(), q0, tag);
      if (!du.shifts.empty())
        l = *du.shifts.rbegin() + 1;
      else if (!dv.shifts.empty())
        l = *dv.shifts.begin() - 1;
      MPoly cand = unitNormalize(shiftPolyY(q0, l, tag), tag);
      if (!isStronglyCoprime(cand, K, tag))
        throw std::logic_error("common_multiple_D: completion failed");
      D = D * cand.pow(k);
    }
  }
  return {unitNormalize(D, tag), unitNormalize(D0, tag)};
}

}  // namespace ctk

#endif  // CTK_INTLIN_HPP
