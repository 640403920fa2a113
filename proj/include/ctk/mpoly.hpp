#ifndef CTK_MPOLY_HPP
#define CTK_MPOLY_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctk {

using Int = mpz_class;
using Rat = mpq_class;

// Variables of the polynomial ring Z[q, x, y, z].  z is reserved for
// univariate representations of integer-linear polynomials.
enum Var : int { VQ = 0, VX = 1, VY = 2, VZ = 3 };
constexpr int kNumVars = 4;

using Expt = std::array<int, kNumVars>;

// Monomial order: lexicographic with y > x > q (z above all of them, but z
// never mixes with x, y in practice).  Comparing from the highest slot down
// gives a deterministic canonical order for unit normalization.
struct ExptLess {
  bool operator()(const Expt& a, const Expt& b) const {
    for (int i = kNumVars - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

inline Expt exptAdd(const Expt& a, const Expt& b) {
  Expt r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

// Sparse multivariate polynomial over Z.
class MPoly {
 public:
  using TermMap = std::map<Expt, Int, ExptLess>;

  MPoly() = default;
  explicit MPoly(const Int& c) {
    if (c != 0) terms_[Expt{}] = c;
  }
  explicit MPoly(long c) : MPoly(Int(c)) {}

  static MPoly var(Var v, int e = 1) {
    MPoly p;
    Expt m{};
    m[v] = e;
    p.terms_[m] = 1;
    return p;
  }
  static MPoly monomial(const Int& c, const Expt& e) {
    MPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Expt{});
  }
  Int constantValue() const {
    if (terms_.empty()) return 0;
    auto it = terms_.find(Expt{});
    if (it == terms_.end() || terms_.size() != 1)
      throw std::logic_error("MPoly: not a constant");
    return it->second;
  }
  bool isOne() const { return isConstant() && !isZero() && constantValue() == 1; }

  int degree(Var v) const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;  // -1 for the zero polynomial
  }
  int lowestDegree(Var v) const {
    if (terms_.empty()) return 0;
    int d = INT32_MAX;
    for (auto& [e, c] : terms_)
      d = std::min(d, e[v]);
    return d;
  }
  bool dependsOn(Var v) const { return degree(v) > 0; }

  const Expt& leadingExpt() const {
    if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
    return terms_.rbegin()->first;
  }
  const Int& leadingCoeff() const {
    if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
    return terms_.rbegin()->second;
  }
  int leadingSign() const { return isZero() ? 0 : sgn(leadingCoeff()); }

  // Coefficient of v^k, a polynomial in the remaining variables.
  MPoly coeffOf(Var v, int k) const {
    MPoly r;
    for (auto& [e, c] : terms_) {
      if (e[v] == k) {
        Expt m = e;
        m[v] = 0;
        r.terms_[m] = c;
      }
    }
    return r;
  }
  // Leading coefficient with respect to one variable.
  MPoly leadCoeffIn(Var v) const { return coeffOf(v, degree(v)); }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    for (auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, -c);
      } else {
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.isZero() || b.isZero()) return r;
    for (auto& [ea, ca] : a.terms_) {
      for (auto& [eb, cb] : b.terms_) {
        Expt e = exptAdd(ea, eb);
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          r.terms_.emplace(e, ca * cb);
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
  }
  friend MPoly operator*(MPoly a, const Int& c) { return a *= c; }

  MPoly mulVarPow(Var v, int k) const {
    MPoly r;
    for (auto& [e, c] : terms_) {
      Expt m = e;
      m[v] += k;
      if (m[v] < 0) throw std::logic_error("MPoly: negative exponent");
      r.terms_[m] = c;
    }
    return r;
  }

  MPoly pow(int n) const {
    if (n < 0) throw std::logic_error("MPoly: negative power");
    MPoly r(1);
    MPoly b = *this;
    while (n > 0) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Exact division in Z[q,x,y,z].  Returns false if o does not divide *this.
  bool divExact(const MPoly& o, MPoly& quot) const {
    if (o.isZero()) throw std::logic_error("MPoly: division by zero");
    MPoly rem = *this;
    MPoly q;
    const Expt& lb = o.leadingExpt();
    const Int& cb = o.leadingCoeff();
    while (!rem.isZero()) {
      const Expt& la = rem.leadingExpt();
      Expt d;
      for (int i = 0; i < kNumVars; ++i) {
        d[i] = la[i] - lb[i];
        if (d[i] < 0) return false;
      }
      Int c = rem.leadingCoeff() / cb;
      if (c * cb != rem.leadingCoeff()) return false;
      MPoly t = MPoly::monomial(c, d);
      q += t;
      rem -= t * o;
    }
    quot = std::move(q);
    return true;
  }
  MPoly divExact(const MPoly& o) const {
    MPoly q;
    if (!divExact(o, q)) throw std::logic_error("MPoly: inexact division");
    return q;
  }
  bool divides(const MPoly& o) const {  // *this | o
    MPoly q;
    return o.divExact(*this, q);
  }

  // Integer content (gcd of all coefficients), non-negative.
  Int content() const {
    Int g = 0;
    for (auto& [e, c] : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }
  MPoly primitivePart() const {
    if (isZero()) return MPoly();
    Int g = content();
    if (leadingSign() < 0) g = -g;
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c /= g;
    return r;
  }

  // Content with respect to one variable: gcd of the coefficient polynomials.
  MPoly contentIn(Var v) const;
  MPoly primitivePartIn(Var v) const {
    if (isZero()) return MPoly();
    return divExact(contentIn(v));
  }

  // Divide every coefficient by c (must be exact).
  MPoly divCoeffs(const Int& c) const {
    MPoly r = *this;
    for (auto& [e, v] : r.terms_) {
      Int t = v / c;
      if (t * c != v) throw std::logic_error("MPoly: inexact coeff division");
      v = t;
    }
    return r;
  }

  MPoly derivative(Var v) const {
    MPoly r;
    for (auto& [e, c] : terms_) {
      if (e[v] > 0) {
        Expt m = e;
        m[v] -= 1;
        r.terms_[m] = c * e[v];
      }
    }
    return r;
  }

  // Substitute an arbitrary polynomial for a variable (Horner by powers).
  MPoly subst(Var v, const MPoly& value) const {
    int d = degree(v);
    if (d <= 0 && lowestDegree(v) == 0) return *this;
    MPoly r;
    for (int k = d; k >= 0; --k) {
      r = r * value + coeffOf(v, k);
    }
    return r;
  }

  // Substitute integers for all variables (for factorization specializations).
  Int evalInt(const std::array<Int, kNumVars>& pt) const {
    Int r = 0;
    for (auto& [e, c] : terms_) {
      Int t = c;
      for (int i = 0; i < kNumVars; ++i) {
        for (int j = 0; j < e[i]; ++j) t *= pt[i];
      }
      r += t;
    }
    return r;
  }

  std::string str() const;

 private:
  TermMap terms_;
};

// gcd in Z[q,x,y,z] via primitive subresultant PRS, recursing on contents.
MPoly mpolyGcd(const MPoly& a, const MPoly& b);

namespace detail {

// Pseudo-remainder of a by b with respect to variable v:
// lc(b)^(deg a - deg b + 1) * a = q*b + r.  Requires deg a >= deg b >= 0 in v.
inline MPoly prem(const MPoly& a, const MPoly& b, Var v) {
  int db = b.degree(v);
  MPoly lb = b.leadCoeffIn(v);
  MPoly r = a;
  int e = a.degree(v) - db + 1;
  while (!r.isZero() && r.degree(v) >= db) {
    int dr = r.degree(v);
    MPoly lr = r.leadCoeffIn(v);
    r = r * lb - (lr * b).mulVarPow(v, dr - db);
    --e;
  }
  // Normalize so the full premultiplication factor is applied.
  for (; e > 0; --e) r *= lb;
  return r;
}

// Specialize all variables but v at a random point modulo a word-size prime
// and return the degree of the univariate gcd there, or -1 if the point is
// unlucky (a leading coefficient vanishes). The result bounds the true gcd
// degree in v from above, so 0 proves coprimality of the primitive parts.
inline int gcdDegreeProbe(const MPoly& a, const MPoly& b, Var v) {
  constexpr long p = 2147483629L;  // prime below 2^31
  static thread_local std::mt19937_64 rng(0xc0ffee);
  auto eval = [&](const MPoly& f, const std::array<long, kNumVars>& pt) {
    std::vector<long> c(f.degree(v) + 1, 0);
    for (auto& [e, coef] : f.terms()) {
      long t = static_cast<long>(mpz_fdiv_ui(coef.get_mpz_t(), p));
      for (int i = 0; i < kNumVars; ++i) {
        if (i == static_cast<int>(v)) continue;
        for (int j = 0; j < e[i]; ++j)
          t = static_cast<long>(static_cast<unsigned long long>(t) * pt[i] % p);
      }
      c[e[v]] = (c[e[v]] + t) % p;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
  };
  auto powMod = [&](long base, long e) {
    long r = 1;
    while (e > 0) {
      if (e & 1) r = static_cast<long>(static_cast<unsigned long long>(r) * base % p);
      base = static_cast<long>(static_cast<unsigned long long>(base) * base % p);
      e >>= 1;
    }
    return r;
  };
  std::array<long, kNumVars> pt{};
  for (auto& x : pt) x = static_cast<long>(rng() % (p - 1)) + 1;
  std::vector<long> fa = eval(a, pt), fb = eval(b, pt);
  if (static_cast<int>(fa.size()) != a.degree(v) + 1 ||
      static_cast<int>(fb.size()) != b.degree(v) + 1)
    return -1;  // leading coefficient vanished at the point
  while (!fb.empty()) {
    // fa mod fb over F_p
    long inv = powMod(fb.back(), p - 2);
    while (static_cast<int>(fa.size()) >= static_cast<int>(fb.size()) &&
           !fa.empty()) {
      long c = static_cast<long>(static_cast<unsigned long long>(fa.back()) * inv % p);
      size_t off = fa.size() - fb.size();
      for (size_t i = 0; i < fb.size(); ++i) {
        long t = static_cast<long>(static_cast<unsigned long long>(c) * fb[i] % p);
        fa[off + i] = (fa[off + i] - t % p + p) % p;
      }
      while (!fa.empty() && fa.back() == 0) fa.pop_back();
    }
    std::swap(fa, fb);
  }
  return static_cast<int>(fa.size()) - 1;
}

// Dense modular gcd (Brown): evaluate the interpolation variables over a
// word-size prime, take univariate gcds, Newton-interpolate the images
// scaled to leading coefficient gamma = gcd(lc_v a, lc_v b), and CRT-lift.
// The candidate is only returned after exact trial division, so unlucky
// primes or points can never produce a wrong answer.  Inputs must be
// primitive with respect to v.
inline std::optional<MPoly> gcdModular(const MPoly& A, const MPoly& B, Var v) {
  std::vector<Var> ivars;
  for (int i = 0; i < kNumVars; ++i) {
    Var u = static_cast<Var>(i);
    if (u != v && (A.degree(u) > 0 || B.degree(u) > 0)) ivars.push_back(u);
  }
  if (ivars.empty()) return std::nullopt;
  int d = -1;
  for (int k = 0; k < 4 && d < 0; ++k) d = gcdDegreeProbe(A, B, v);
  if (d <= 0) return std::nullopt;

  MPoly gamma = mpolyGcd(A.leadCoeffIn(v), B.leadCoeffIn(v));
  std::array<long, kNumVars> bound{};
  long gridSize = 1;
  for (Var u : ivars) {
    bound[u] = gamma.degree(u) + std::min(A.degree(u), B.degree(u));
    gridSize *= bound[u] + 1;
    if (gridSize > 200000) return std::nullopt;
  }

  using ModPoly = std::map<Expt, long, ExptLess>;
  struct Ctx {
    long p;
    const MPoly *A, *B;
    const MPoly* gamma;
    const std::vector<Var>* ivars;
    const std::array<long, kNumVars>* bound;
    Var v;
    int d;                 // expected gcd degree in v
    bool shrink = false;   // saw an image of smaller degree: d was too big
    std::mt19937_64 rng{0x5eed5eed};

    long mul(long a, long b) const {
      return static_cast<long>(static_cast<unsigned long long>(a) * b % p);
    }
    long inv(long a) const {
      long r = 1, e = p - 2;
      while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
      }
      return r;
    }
    // univariate image of f in v at the point pt (all ivars assigned)
    std::vector<long> image(const MPoly& f,
                            const std::array<long, kNumVars>& pt) const {
      std::vector<long> c(f.degree(v) + 1, 0);
      for (auto& [e, coef] : f.terms()) {
        long t = static_cast<long>(mpz_fdiv_ui(coef.get_mpz_t(), p));
        for (int i = 0; i < kNumVars; ++i) {
          if (i == static_cast<int>(v)) continue;
          for (int j = 0; j < e[i]; ++j) t = mul(t, pt[i]);
        }
        c[e[v]] = (c[e[v]] + t) % p;
      }
      while (!c.empty() && c.back() == 0) c.pop_back();
      return c;
    }
    static ModPoly evalVar(const ModPoly& f, Var u, long t, const Ctx& cx) {
      ModPoly r;
      for (auto& [e, c] : f) {
        long s = c;
        Expt m = e;
        for (int j = 0; j < e[u]; ++j) s = cx.mul(s, t);
        m[u] = 0;
        long& slot = r[m];
        slot = (slot + s) % cx.p;
      }
      for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
      return r;
    }
    // interpolated gcd image over vars {v} and ivars[level..]
    std::optional<ModPoly> build(size_t level, std::array<long, kNumVars>& pt) {
      if (level == ivars->size()) {
        std::vector<long> fa = image(*A, pt), fb = image(*B, pt);
        if (static_cast<int>(fa.size()) != A->degree(v) + 1 ||
            static_cast<int>(fb.size()) != B->degree(v) + 1)
          return std::nullopt;  // leading coefficient vanished
        while (!fb.empty()) {
          long iv = inv(fb.back());
          while (fa.size() >= fb.size() && !fa.empty()) {
            long c = mul(fa.back(), iv);
            size_t off = fa.size() - fb.size();
            for (size_t i = 0; i < fb.size(); ++i)
              fa[off + i] = (fa[off + i] - mul(c, fb[i]) % p + p) % p;
            while (!fa.empty() && fa.back() == 0) fa.pop_back();
          }
          std::swap(fa, fb);
        }
        int dg = static_cast<int>(fa.size()) - 1;
        if (dg < d) {
          d = dg;
          shrink = true;
          return std::nullopt;
        }
        if (dg > d) return std::nullopt;  // unlucky point
        // monic, then scale to leading coefficient gamma(pt)
        long g0 = 0;
        for (auto& [e, coef] : gamma->terms()) {
          long t = static_cast<long>(mpz_fdiv_ui(coef.get_mpz_t(), p));
          for (int i = 0; i < kNumVars; ++i)
            for (int j = 0; j < e[i]; ++j) t = mul(t, pt[i]);
          g0 = (g0 + t) % p;
        }
        if (g0 == 0) return std::nullopt;
        long s = mul(g0, inv(fa.back()));
        ModPoly r;
        for (size_t i = 0; i < fa.size(); ++i) {
          if (fa[i] == 0) continue;
          Expt m{};
          m[v] = static_cast<int>(i);
          r[m] = mul(fa[i], s);
        }
        return r;
      }
      Var u = (*ivars)[level];
      long n = (*bound)[u] + 1;
      long offset = static_cast<long>(rng() % (p - n));
      ModPoly R, N{{Expt{}, 1L}};
      for (long j = 0; j < n; ++j) {
        long t = offset + j;
        pt[u] = t;
        auto img = build(level + 1, pt);
        if (!img) return std::nullopt;
        // Newton step: R += (img - R(u=t)) / N(u=t) * N
        long nt = 0;
        for (auto& [e, c] : N) {
          long s = c;
          for (int k = 0; k < e[u]; ++k) s = mul(s, t);
          nt = (nt + s) % p;
        }
        long ni = inv(nt);
        ModPoly diff = *img;
        for (auto& [e, c] : evalVar(R, u, t, *this)) {
          long& slot = diff[e];
          slot = ((slot - c) % p + p) % p;
        }
        for (auto& [e, c] : diff) {
          if (c == 0) continue;
          long s = mul(c, ni);
          for (auto& [en, cn] : N) {
            Expt m = exptAdd(e, en);
            long& slot = R[m];
            slot = (slot + mul(s, cn)) % p;
          }
        }
        for (auto it = R.begin(); it != R.end();)
          it = it->second == 0 ? R.erase(it) : std::next(it);
        // N *= (x_u - t)
        ModPoly N2;
        for (auto& [e, c] : N) {
          Expt m = e;
          m[u] += 1;
          long& hi = N2[m];
          hi = (hi + c) % p;
          long& lo = N2[e];
          lo = ((lo - mul(c, t)) % p + p) % p;
        }
        for (auto it = N2.begin(); it != N2.end();)
          it = it->second == 0 ? N2.erase(it) : std::next(it);
        N = std::move(N2);
      }
      return R;
    }
  };

  static const long kPrimes[] = {2147483629L, 2147483587L, 2147483579L,
                                 2147483563L};
  MPoly crt;
  Int modulus(1);
  for (long p : kPrimes) {
    Ctx cx;
    cx.p = p;
    cx.A = &A;
    cx.B = &B;
    cx.gamma = &gamma;
    cx.ivars = &ivars;
    cx.bound = &bound;
    cx.v = v;
    cx.d = d;
    std::optional<ModPoly> hp;
    for (int attempt = 0; attempt < 4 && !hp; ++attempt) {
      std::array<long, kNumVars> pt{};
      cx.shrink = false;
      hp = cx.build(0, pt);
      if (cx.shrink) {
        // the true degree is smaller than the probe suggested; restart
        d = cx.d;
        crt = MPoly();
        modulus = 1;
        hp.reset();
      }
    }
    if (!hp) continue;
    // CRT-combine into symmetric range
    MPoly next;
    std::set<Expt, ExptLess> monos;
    for (auto& [e, c] : crt.terms()) monos.insert(e);
    for (auto& [e, c] : *hp) monos.insert(e);
    long minv = 0;
    {
      long mp = static_cast<long>(mpz_fdiv_ui(modulus.get_mpz_t(), p));
      minv = cx.inv(mp);
    }
    for (auto& e : monos) {
      Int old(0);
      auto it = crt.terms().find(e);
      if (it != crt.terms().end()) old = it->second;
      long hv = 0;
      auto jt = hp->find(e);
      if (jt != hp->end()) hv = jt->second;
      long op = static_cast<long>(mpz_fdiv_ui(old.get_mpz_t(), p));
      long t = cx.mul(((hv - op) % p + p) % p, minv);
      Int val = old + modulus * t;
      Int M = modulus * p;
      if (val * 2 > M) val -= M;
      if (!(val == 0)) next += MPoly::monomial(val, e);
    }
    crt = std::move(next);
    modulus *= p;
    if (crt.isZero()) continue;
    MPoly cand = crt.primitivePartIn(v).primitivePart();
    MPoly q;
    if (A.divExact(cand, q) && B.divExact(cand, q)) return cand;
  }
  return std::nullopt;
}

inline Var mainVarOf(const MPoly& a, const MPoly& b) {
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (a.degree(static_cast<Var>(i)) > 0 || b.degree(static_cast<Var>(i)) > 0)
      return static_cast<Var>(i);
  }
  return VQ;  // both constant
}

}  // namespace detail

inline MPoly MPoly::contentIn(Var v) const {
  MPoly g;
  for (int k = 0; k <= degree(v); ++k) {
    MPoly c = coeffOf(v, k);
    if (!c.isZero())
      g = g.isZero() ? (c.leadingSign() < 0 ? c * MPoly(Int(-1)) : c)
                     : mpolyGcd(g, c);
    if (g.isOne()) break;
  }
  return g;
}

inline MPoly mpolyGcd(const MPoly& a, const MPoly& b) {
  if (a.isZero()) return b.leadingSign() < 0 ? b * MPoly(Int(-1)) : b;
  if (b.isZero()) return a.leadingSign() < 0 ? a * MPoly(Int(-1)) : a;
  if (a.isConstant() || b.isConstant()) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return MPoly(g);
  }
  Var v = detail::mainVarOf(a, b);
  if (a.degree(v) == 0 || b.degree(v) == 0) {
    // One operand is free of the main variable: gcd divides the content.
    const MPoly& free = a.degree(v) == 0 ? a : b;
    const MPoly& other = a.degree(v) == 0 ? b : a;
    return mpolyGcd(free, other.contentIn(v));
  }
  MPoly ca = a.contentIn(v), cb = b.contentIn(v);
  MPoly c = mpolyGcd(ca, cb);
  MPoly A = a.divExact(ca), B = b.divExact(cb);
  if (A.degree(v) < B.degree(v)) std::swap(A, B);
  // cheap modular check first: coprime primitive parts are the common case
  for (int tries = 0; tries < 2; ++tries) {
    int d = detail::gcdDegreeProbe(A, B, v);
    if (d == 0) return c;
    if (d > 0) break;
  }
  if (auto m = detail::gcdModular(A, B, v)) return c * *m;
  // Subresultant PRS.
  MPoly g(1), h(1);
  while (true) {
    int d = A.degree(v) - B.degree(v);
    MPoly r = detail::prem(A, B, v);
    if (r.isZero()) break;
    if (r.degree(v) == 0) {
      B = MPoly(1);
      break;
    }
    A = B;
    MPoly divisor = g * h.pow(d);
    B = r.divExact(divisor);
    g = A.leadCoeffIn(v);
    // h = g^d * h^(1-d)
    if (d == 0) {
      // h unchanged
    } else if (d == 1) {
      h = g;
    } else {
      h = g.pow(d).divExact(h.pow(d - 1));
    }
  }
  return c * B.primitivePartIn(v).primitivePart();
}

inline std::string MPoly::str() const {
  static const char* names[kNumVars] = {"q", "x", "y", "z"};
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print from the leading term down.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Int ac = abs(c);
    bool isUnitCoeff = (ac == 1);
    bool anyVar = false;
    for (int i = 0; i < kNumVars; ++i) anyVar = anyVar || it->first[i] > 0;
    if (!isUnitCoeff || !anyVar) os << ac.get_str();
    bool needStar = !isUnitCoeff || !anyVar;
    for (int i = 0; i < kNumVars; ++i) {
      int e = it->first[i];
      if (e == 0) continue;
      if (needStar) os << "*";
      needStar = true;
      os << names[i];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace ctk

#endif  // CTK_MPOLY_HPP
