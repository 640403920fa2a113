#ifndef CTK_REDUCE_HPP
#define CTK_REDUCE_HPP

#include <ctk/rnf.hpp>

#include <map>

namespace ctk {

// Dense polynomial in y with coefficients in F = K(x) (y-free RatFuncs).
using YPoly = std::vector<RatFunc>;

namespace yp_f {

inline void trim(YPoly& f) {
  while (!f.empty() && f.back().isZero()) f.pop_back();
}
inline int deg(const YPoly& f) { return static_cast<int>(f.size()) - 1; }
inline bool isZero(const YPoly& f) { return f.empty(); }

inline YPoly add(const YPoly& a, const YPoly& b) {
  YPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}
inline YPoly sub(const YPoly& a, const YPoly& b) {
  YPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}
inline YPoly mul(const YPoly& a, const YPoly& b) {
  if (isZero(a) || isZero(b)) return {};
  YPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].isZero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}
inline YPoly scale(YPoly f, const RatFunc& c) {
  for (auto& e : f) e *= c;
  trim(f);
  return f;
}

inline YPoly fromMPoly(const MPoly& p) {
  YPoly f(p.degree(VY) + 1);
  for (int k = 0; k <= p.degree(VY); ++k) {
    MPoly c = p.coeffOf(VY, k);
    if (!c.isZero()) f[k] = RatFunc(c);
  }
  trim(f);
  return f;
}
inline RatFunc toRatFunc(const YPoly& f) {
  RatFunc r;
  for (size_t i = 0; i < f.size(); ++i)
    if (!f[i].isZero()) r += f[i] * RatFunc(MPoly::var(VY, static_cast<int>(i)));
  return r;
}
inline YPoly fromRatFunc(const RatFunc& f) {
  if (f.den().degree(VY) > 0)
    throw std::logic_error("YPoly: denominator depends on y");
  YPoly r(f.num().degree(VY) + 1);
  RatFunc inv = RatFunc(f.den()).inverse() * RatFunc(f.scalar());
  for (int k = 0; k < static_cast<int>(r.size()); ++k) {
    MPoly c = f.num().coeffOf(VY, k);
    if (!c.isZero()) r[k] = RatFunc(c) * inv;
  }
  trim(r);
  return r;
}

inline RatFunc qpow(int k) {
  return k >= 0 ? RatFunc(MPoly::var(VQ, k))
                : RatFunc(MPoly(Int(1)), MPoly::var(VQ, -k), Rat(1));
}

// sigma_y^k on a YPoly.
inline YPoly shiftY(const YPoly& f, int k, CaseTag tag) {
  if (k == 0 || isZero(f)) return f;
  if (tag == CaseTag::QShift) {
    YPoly r = f;
    for (size_t i = 0; i < r.size(); ++i)
      if (!r[i].isZero()) r[i] *= qpow(k * static_cast<int>(i));
    return r;
  }
  // y -> y + k via Horner
  YPoly r;
  for (size_t i = f.size(); i-- > 0;) {
    // r = r*(y+k) + f[i]
    YPoly next(r.size() + 1);
    RatFunc kk(static_cast<long>(k));
    for (size_t j = 0; j < r.size(); ++j) {
      next[j + 1] += r[j];
      next[j] += r[j] * kk;
    }
    if (next.empty()) next.resize(1);
    next[0] += f[i];
    trim(next);
    r = next;
  }
  return r;
}

inline void divRem(const YPoly& a, const YPoly& b, YPoly& quo, YPoly& rem) {
  if (isZero(b)) throw std::logic_error("YPoly: division by zero");
  rem = a;
  trim(rem);
  quo.assign(rem.size(), RatFunc());
  RatFunc lead = b.back().inverse();
  while (!isZero(rem) && deg(rem) >= deg(b)) {
    RatFunc c = rem.back() * lead;
    int d = deg(rem) - deg(b);
    quo[d] += c;
    for (size_t i = 0; i < b.size(); ++i) rem[d + i] -= c * b[i];
    trim(rem);
  }
  trim(quo);
}

// monic g = gcd(a,b) with s*a + t*b = g
inline void xgcd(const YPoly& a, const YPoly& b, YPoly& g, YPoly& s,
                 YPoly& t) {
  YPoly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  YPoly s0{RatFunc(1)}, s1{}, t0{}, t1{RatFunc(1)};
  while (!isZero(r1)) {
    YPoly q, r;
    divRem(r0, r1, q, r);
    YPoly s2 = sub(s0, mul(q, s1));
    YPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (isZero(r0)) {
    g = s = t = {};
    return;
  }
  RatFunc inv = r0.back().inverse();
  g = scale(r0, inv);
  s = scale(s0, inv);
  t = scale(t0, inv);
}

}  // namespace yp_f

// Echelon model of im(phi_K) together with its standard complement.
// Pivot rows are discovered lazily by feeding phi_K(y^t) for t = 0, 1, ...
class ComplementBasis {
 public:
  ComplementBasis(const RatFunc& K, CaseTag tag) : K_(K), tag_(tag) {
    u_ = yp_f::scale(yp_f::fromMPoly(K.num()), RatFunc(K.scalar()));
    v_ = yp_f::fromMPoly(K.den());
    int du = yp_f::deg(u_), dv = yp_f::deg(v_);
    M_ = std::max(du, dv);
    if (tag == CaseTag::Shift) {
      YPoly diff = yp_f::sub(u_, v_);
      int e = yp_f::deg(diff);
      dimExpected_ = M_ - ((0 <= e && e <= du - 1) ? 1 : 0);
    } else {
      dimExpected_ = M_ + (kernelIsNonpositiveQPower() ? 1 : 0);
    }
    exceptionalT_ = computeExceptionalT();
  }

  const RatFunc& kernel() const { return K_; }
  CaseTag tag() const { return tag_; }
  int dimExpected() const { return dimExpected_; }

  YPoly phi(const YPoly& p) const {
    return yp_f::sub(yp_f::mul(u_, yp_f::shiftY(p, 1, tag_)),
                     yp_f::mul(v_, p));
  }

  // n = phi(g) + p with p supported on complement exponents only.
  std::pair<YPoly, YPoly> reduceNumerator(const YPoly& n) {
    YPoly r = n, g, p;
    yp_f::trim(r);
    while (!yp_f::isZero(r)) {
      int d = yp_f::deg(r);
      ensure(d);
      auto it = pivots_.find(d);
      if (it != pivots_.end()) {
        RatFunc c = r.back() / it->second.second.back();
        r = yp_f::sub(r, yp_f::scale(it->second.second, c));
        g = yp_f::add(g, yp_f::scale(it->second.first, c));
      } else {
        if (static_cast<int>(p.size()) <= d) p.resize(d + 1);
        p[d] = r.back();
        r.pop_back();
        yp_f::trim(r);
      }
    }
    yp_f::trim(p);
    return {g, p};
  }

  // Exponents missed by the image degrees: the standard complement.
  std::set<int> complementExponents() {
    int target = 2 * M_ + dimExpected_ + exceptionalT_ + 6;
    while (processedT_ < target) processNext();
    int top = pivots_.empty() ? -1 : pivots_.rbegin()->first;
    std::set<int> out;
    for (int d = 0; d <= top; ++d)
      if (!pivots_.count(d)) out.insert(d);
    return out;
  }
  int dimComputed() { return static_cast<int>(complementExponents().size()); }

  bool inComplement(int d) {
    ensure(d);
    return !pivots_.count(d);
  }

 private:
  bool kernelIsNonpositiveQPower() const {
    if (K_.scalar() != 1) return false;
    if (!K_.num().isOne()) return false;
    const MPoly& d = K_.den();
    if (d.isOne()) return true;  // K = 1 = q^0
    if (d.terms().size() != 1) return false;
    const Expt& e = d.terms().begin()->first;
    return d.terms().begin()->second == 1 && e[VX] == 0 && e[VY] == 0 &&
           e[VZ] == 0 && e[VQ] > 0;
  }

  // The at-most-one t at which the top coefficient of phi(y^t) degenerates.
  int computeExceptionalT() const {
    int du = yp_f::deg(u_), dv = yp_f::deg(v_);
    if (du != dv) return 0;
    if (tag_ == CaseTag::Shift) {
      if (u_.back() != v_.back()) return 0;
      YPoly diff = yp_f::sub(u_, v_);
      if (yp_f::isZero(diff) || yp_f::deg(diff) != M_ - 1) return 0;
      // t*lc(u) + coeff(u-v, M-1) = 0
      RatFunc ratio = -diff.back() / u_.back();
      if (!ratio.isConstant()) return 0;
      Rat c = ratio.constantValue();
      if (c.get_den() != 1 || !c.get_num().fits_sint_p()) return 0;
      int t = static_cast<int>(c.get_num().get_si());
      return t > 0 ? t : 0;
    }
    // q-case: q^t lc(u) = lc(v)
    RatFunc ratio = v_.back() / u_.back();
    if (ratio.scalar() != 1 || !ratio.den().isOne()) return 0;
    const MPoly& n = ratio.num();
    if (n.terms().size() != 1) return 0;
    const Expt& e = n.terms().begin()->first;
    if (n.terms().begin()->second != 1 || e[VX] != 0 || e[VY] != 0 ||
        e[VZ] != 0)
      return 0;
    return e[VQ];
  }

  void ensure(int d) {
    int target = d - M_ + dimExpected_ + 4;
    target = std::max(target, exceptionalT_ + 2);
    while (!pivots_.count(d) && processedT_ < target) processNext();
  }

  void processNext() {
    int t = ++processedT_;
    YPoly g(t + 1);
    g[t] = RatFunc(1);
    YPoly img = phi(g);
    while (!yp_f::isZero(img)) {
      auto it = pivots_.find(yp_f::deg(img));
      if (it == pivots_.end()) break;
      RatFunc c = img.back() / it->second.second.back();
      img = yp_f::sub(img, yp_f::scale(it->second.second, c));
      g = yp_f::sub(g, yp_f::scale(it->second.first, c));
    }
    if (!yp_f::isZero(img)) pivots_[yp_f::deg(img)] = {g, img};
  }

  RatFunc K_;
  CaseTag tag_;
  YPoly u_, v_;
  int M_ = 0;
  int dimExpected_ = 0;
  int exceptionalT_ = 0;
  int processedT_ = -1;
  std::map<int, std::pair<YPoly, YPoly>> pivots_;  // image degree -> (g, img)
};

inline RatFunc phiK(const RatFunc& p, const RatFunc& K, CaseTag tag) {
  return K.num().isZero()
             ? RatFunc()
             : RatFunc(K.num(), MPoly(Int(1)), K.scalar()) *
                       applyShiftY(p, 1, tag) -
                   RatFunc(K.den()) * p;
}

// Delta_K(g) = K*sigma_y(g) - g.
inline RatFunc deltaK(const RatFunc& g, const RatFunc& K, CaseTag tag) {
  return K * applyShiftY(g, 1, tag) - g;
}

// a = Delta_K(g) + p/v, i.e. a*v = phi_K(g) + p.
inline std::pair<RatFunc, RatFunc> reducePolynomial(const YPoly& a,
                                                    ComplementBasis& cb) {
  YPoly n = yp_f::mul(a, yp_f::fromMPoly(cb.kernel().den()));
  auto [g, p] = cb.reduceNumerator(n);
  return {yp_f::toRatFunc(g), yp_f::toRatFunc(p)};
}

// sigma_y-remainder r = h + p/v.
struct Remainder {
  RatFunc h;  // proper part; its denominator is the significant denominator
  RatFunc p;  // complement part, a y-polynomial over F
  RatFunc K;
  CaseTag tag = CaseTag::Shift;

  RatFunc value() const { return h + p / RatFunc(K.den()); }
  MPoly significantDenominator() const { return h.den(); }
  bool isZero() const { return h.isZero() && p.isZero(); }
};

struct ReductionResult {
  RatFunc witness;  // g with S = Delta_K(g) + value(remainder)
  Remainder remainder;
};

namespace detail {

struct ShellReducer {
  ComplementBasis& cb;
  CaseTag tag;
  RatFunc u, v;  // kernel numerator (with scalar) and denominator, as values
  MPoly vPoly;
  const std::vector<std::pair<MPoly, int>>* align = nullptr;

  RatFunc witness;
  YPoly polyBucket;               // polynomial part of the stream
  YPoly numOverV;                 // numerator over v
  struct Final {
    MPoly base;
    int power;
    YPoly num;
  };
  std::vector<Final> finals;

  struct Frac {
    YPoly num;
    MPoly base;
    int power;
  };
  std::vector<Frac> work;
  int steps = 0;

  ShellReducer(ComplementBasis& basis, const std::vector<std::pair<MPoly, int>>* alignFactors)
      : cb(basis), tag(basis.tag()) {
    const RatFunc& K = cb.kernel();
    u = RatFunc(K.num(), MPoly(Int(1)), K.scalar());
    v = RatFunc(K.den());
    vPoly = K.den();
    align = alignFactors;
  }

  void bump() {
    if (++steps > 20000)
      throw std::logic_error("reduce_shell: iteration cap exceeded");
  }

  bool isYMonomial(const MPoly& b) const {
    if (b.terms().size() != 1) return false;
    const Expt& e = b.terms().begin()->first;
    return e[VY] > 0 && e[VX] == 0 && e[VQ] == 0 && e[VZ] == 0;
  }

  // decompose a rational function into the buckets / worklist
  void push(const RatFunc& f) {
    if (f.isZero()) return;
    MPoly den = f.den();
    auto fl = factorIrreducible(den);
    RatFunc unit(MPoly(Int(1)), MPoly(Int(1)), fl.unit);
    std::vector<std::pair<MPoly, int>> primes;
    for (auto& [b, m] : fl.factors) {
      if (b.degree(VY) <= 0) {
        unit = unit * RatFunc(b.pow(m));
        continue;
      }
      primes.emplace_back(b, m);
    }
    YPoly n = yp_f::scale(yp_f::fromMPoly(f.num()),
                          RatFunc(f.scalar()) / unit);
    if (primes.empty()) {
      polyBucket = yp_f::add(polyBucket, n);
      return;
    }
    // full denominator as YPoly; peel off primes one at a time
    partialFractions(n, primes, 0);
  }

  void partialFractions(YPoly n, const std::vector<std::pair<MPoly, int>>& primes,
                        size_t from) {
    bump();
    if (from == primes.size()) {
      polyBucket = yp_f::add(polyBucket, n);
      return;
    }
    YPoly b1 = yp_f::fromMPoly(primes[from].first.pow(primes[from].second));
    if (from + 1 == primes.size()) {
      YPoly quo, rem;
      yp_f::divRem(n, b1, quo, rem);
      polyBucket = yp_f::add(polyBucket, quo);
      if (!yp_f::isZero(rem))
        work.push_back({rem, primes[from].first, primes[from].second});
      return;
    }
    YPoly rest{RatFunc(1)};
    for (size_t i = from + 1; i < primes.size(); ++i)
      rest = yp_f::mul(rest, yp_f::fromMPoly(primes[i].first.pow(primes[i].second)));
    YPoly g, s, t;
    yp_f::xgcd(b1, rest, g, s, t);
    if (yp_f::deg(g) != 0)
      throw std::logic_error("partialFractions: prime powers not coprime");
    // n/(b1*rest) = n*t/b1 + n*s/rest
    YPoly quo, a1;
    yp_f::divRem(yp_f::mul(n, t), b1, quo, a1);
    if (!yp_f::isZero(a1))
      work.push_back({a1, primes[from].first, primes[from].second});
    YPoly n2 = yp_f::add(yp_f::mul(n, s), yp_f::mul(quo, rest));
    partialFractions(n2, primes, from + 1);
  }

  // does base^power divide v (in F[y])?
  bool divideIntoV(const MPoly& base, int power, YPoly& cofactor) const {
    YPoly b = yp_f::fromMPoly(base.pow(power));
    YPoly quo, rem;
    yp_f::divRem(yp_f::fromMPoly(vPoly), b, quo, rem);
    if (!yp_f::isZero(rem)) return false;
    cofactor = quo;
    return true;
  }

  std::vector<MPoly> chosenReps;

  MPoly chooseRep(const MPoly& b) {
    if (align) {
      for (auto& [f, m] : *align)
        if (f.degree(VY) > 0 && sigmaYEquivalent(f, b, tag))
          return unitNormalize(f, tag);
    }
    // one representative per sigma_y-equivalence class
    for (auto& r : chosenReps)
      if (sigmaYEquivalent(b, r, tag)) return r;
    MPoly rep;
    DispersionResult du = dispersionPair(cb.kernel().num(), b, tag);
    DispersionResult dv = dispersionPair(cb.kernel().den(), b, tag);
    if (!du.shifts.empty()) {
      rep = unitNormalize(shiftPolyY(b, *du.shifts.rbegin() + 1, tag), tag);
    } else if (!dv.shifts.empty()) {
      rep = unitNormalize(shiftPolyY(b, *dv.shifts.begin() - 1, tag), tag);
    } else {
      rep = unitNormalize(b, tag);
    }
    chosenReps.push_back(rep);
    return rep;
  }

  void addFinal(const MPoly& rep, int power, const YPoly& num) {
    // keep the proper overflow in the polynomial stream
    YPoly b = yp_f::fromMPoly(rep.pow(power));
    YPoly quo, rem;
    yp_f::divRem(num, b, quo, rem);
    polyBucket = yp_f::add(polyBucket, quo);
    if (yp_f::isZero(rem)) return;
    for (auto& f : finals) {
      if (f.power == power && f.base == rep) {
        f.num = yp_f::add(f.num, rem);
        return;
      }
    }
    finals.push_back({rep, power, rem});
  }

  void processFrac(const Frac& fr) {
    bump();
    if (yp_f::isZero(fr.num)) return;
    if (tag == CaseTag::QShift && isYMonomial(fr.base)) {
      peelY(yp_f::toRatFunc(fr.num) /
            RatFunc(fr.base.pow(fr.power)));
      return;
    }
    YPoly cof;
    if (divideIntoV(fr.base, fr.power, cof)) {
      numOverV = yp_f::add(numOverV, yp_f::mul(fr.num, cof));
      return;
    }
    MPoly rep = chooseRep(fr.base);
    auto off = sigmaYEquivalent(fr.base, rep, tag);
    if (!off) throw std::logic_error("processFrac: lost equivalence class");
    int c = *off;  // base = sigma_y^c(rep) up to an F-unit
    RatFunc tPow(rep.pow(fr.power));
    if (c == 0) {
      // fold the F-unit between base^power and rep^power into the numerator
      RatFunc rho = RatFunc(fr.base.pow(fr.power)) / tPow;
      addFinal(rep, fr.power, yp_f::scale(fr.num, rho.inverse()));
      return;
    }
    RatFunc a = yp_f::toRatFunc(fr.num);
    RatFunc bPow(fr.base.pow(fr.power));
    if (c > 0) {
      // move down: a/sigma(t') == sigma^{-1}(a v / u)/t' with t' one step down
      RatFunc tDown = RatFunc(unitNormalize(shiftPolyY(fr.base, -1, tag), tag)
                                  .pow(fr.power));
      // a/base^power = a' / sigma_y(tDown) with a' absorbing the unit
      RatFunc aPrime = a * applyShiftY(tDown, 1, tag) / bPow;
      RatFunc g = applyShiftY(aPrime * v / u, -1, tag) / tDown;
      witness += g;
      push(g);
    } else {
      // move up: a/t == u sigma(a)/(v sigma(t)), witness -a/t
      RatFunc g = -(a / bPow);
      witness += g;
      push(u * applyShiftY(a, 1, tag) / (v * applyShiftY(bPow, 1, tag)));
    }
  }

  // q-case poles at y = 0, removed via standardness of the kernel
  void peelY(RatFunc R) {
    while (!R.isZero()) {
      bump();
      int k = R.den().lowestDegree(VY);
      int kn = R.num().lowestDegree(VY);
      int pole = k - kn;
      if (pole <= 0) {
        push(R);
        return;
      }
      int j = vPoly.lowestDegree(VY);
      MPoly v0 = vPoly.divExact(MPoly::var(VY, j));
      // candidate g = alpha*y^{j-pole}: Delta_K(g) = alpha*N/(y^pole v0)
      // with N = q^{j-pole} u - v; N(y=0) != 0 by standardness of K
      RatFunc N = yp_f::qpow(j - pole) * u - v;
      RatFunc N0 = N.subst(VY, RatFunc(Rat(0)));
      if (N0.isZero()) throw std::logic_error("peelY: kernel not standard");
      // leading Laurent coefficient of R at y = 0
      MPoly d0 = R.den().divExact(MPoly::var(VY, k));
      MPoly n0 = R.num().divExact(MPoly::var(VY, kn));
      RatFunc c =
          RatFunc(n0.coeffOf(VY, 0), d0.coeffOf(VY, 0), R.scalar());
      RatFunc v00(v0.coeffOf(VY, 0));
      RatFunc alpha = c * v00 / N0;
      int e = j - pole;
      RatFunc g = alpha * (e >= 0 ? RatFunc(MPoly::var(VY, e))
                                  : RatFunc(MPoly(Int(1)),
                                            MPoly::var(VY, -e), Rat(1)));
      witness += g;
      R -= deltaK(g, cb.kernel(), tag);
      if (!R.isZero() &&
          R.den().lowestDegree(VY) - R.num().lowestDegree(VY) >= pole)
        throw std::logic_error("peelY: pole did not drop");
    }
  }

  ReductionResult run(const RatFunc& S) {
    push(S);
    while (!work.empty()) {
      Frac fr = work.back();
      work.pop_back();
      processFrac(fr);
    }
    // assemble h from the final fractions
    RatFunc h;
    for (auto& f : finals)
      h += yp_f::toRatFunc(f.num) / RatFunc(f.base.pow(f.power));
    // polynomial stream: polyBucket + numOverV/v
    YPoly total = yp_f::add(
        yp_f::mul(polyBucket, yp_f::fromMPoly(vPoly)), numOverV);
    auto [g, p] = cb.reduceNumerator(total);
    witness += yp_f::toRatFunc(g);
    Remainder r{h, yp_f::toRatFunc(p), cb.kernel(), tag};
    return {witness, r};
  }
};

}  // namespace detail

// S = Delta_K(g) + value(r); K must be sigma_y-standard.
inline ReductionResult reduceShell(const RatFunc& S, ComplementBasis& cb,
                                   const MPoly* alignTo = nullptr) {
  std::vector<std::pair<MPoly, int>> alignFactors;
  if (alignTo && !alignTo->isConstant()) {
    auto fl = factorIrreducible(*alignTo);
    alignFactors = fl.factors;
  }
  detail::ShellReducer red(cb, alignTo ? &alignFactors : nullptr);
  return red.run(S);
}

// value(t) - value(r) in im(Delta_K); t's significant denominator divides a
// product of shifts aligned with d's factors.
inline ReductionResult adjustRemainder(const Remainder& r, const MPoly& d,
                                       ComplementBasis& cb) {
  return reduceShell(r.value(), cb, &d);
}

// T with sigma_y(T)/T = fy is sigma_y-summable iff the remainder of its
// shell vanishes.
inline bool isSummable(const RatFunc& fy, CaseTag tag) {
  Rnf rn = standardizeKernel(computeRnf(fy, tag));
  ComplementBasis cb(rn.K, tag);
  return reduceShell(rn.S, cb).remainder.isZero();
}

}  // namespace ctk

#endif  // CTK_REDUCE_HPP
