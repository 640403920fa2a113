#ifndef CTK_RATFUNC_HPP
#define CTK_RATFUNC_HPP

#include <ctk/mpoly.hpp>

namespace ctk {

// Canonical element of Q(q, x, y): an exact rational scalar times a reduced
// fraction of primitive integer polynomials with positive leading
// coefficients.  The zero element is stored as scalar 0, num 0, den 1.
class RatFunc {
 public:
  RatFunc() : scalar_(0), num_(), den_(1) {}
  RatFunc(const Rat& s) : scalar_(s), num_(1), den_(1) { normalizeZero(); }
  RatFunc(long s) : RatFunc(Rat(s)) {}
  explicit RatFunc(const MPoly& p) : scalar_(1), num_(p), den_(1) {
    canonicalize();
  }
  RatFunc(const MPoly& n, const MPoly& d, const Rat& s = 1)
      : scalar_(s), num_(n), den_(d) {
    canonicalize();
  }

  static RatFunc var(Var v) { return RatFunc(MPoly::var(v)); }

  const Rat& scalar() const { return scalar_; }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool isZero() const { return scalar_ == 0; }
  bool isConstant() const {  // element of Q
    return isZero() || (num_.isConstant() && den_.isConstant());
  }
  bool isPolynomial() const { return den_.isOne(); }
  bool dependsOn(Var v) const {
    return num_.dependsOn(v) || den_.dependsOn(v);
  }
  // Element of the ground field K = Q resp. Q(q) viewed inside F(y).
  bool freeOf(Var v) const { return !dependsOn(v); }

  Rat constantValue() const {
    if (isZero()) return 0;
    if (!isConstant()) throw std::logic_error("RatFunc: not a constant");
    return scalar_ * Rat(num_.constantValue()) / Rat(den_.constantValue());
  }

  // Numerator including the scalar's numerator, as a polynomial with rational
  // content removed; pairs with denPoly().  numPoly()/denPoly() == *this up
  // to a positive rational unit is NOT guaranteed -- use scalar() for exact
  // reconstruction.  These are the canonical primitive parts.
  const MPoly& numPrim() const { return num_; }
  const MPoly& denPrim() const { return den_; }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.scalar_ = -r.scalar_;
    return r;
  }
  RatFunc inverse() const {
    if (isZero()) throw std::logic_error("RatFunc: division by zero");
    RatFunc r;
    r.scalar_ = 1 / scalar_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
  }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.isZero() || b.isZero()) return RatFunc();
    RatFunc r;
    MPoly g1 = mpolyGcd(a.num_, b.den_);
    MPoly g2 = mpolyGcd(b.num_, a.den_);
    r.scalar_ = a.scalar_ * b.scalar_;
    r.num_ = a.num_.divExact(g1) * b.num_.divExact(g2);
    r.den_ = a.den_.divExact(g2) * b.den_.divExact(g1);
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    // a = sa*na/da, b = sb*nb/db.  Common denominator da*db/g.
    MPoly g = mpolyGcd(a.den_, b.den_);
    MPoly da = a.den_.divExact(g), db = b.den_.divExact(g);
    // value = (sa*na*db + sb*nb*da) / (da*db*g); clear rational scalars.
    Rat sa = a.scalar_, sb = b.scalar_;
    Int u = sa.get_num() * sb.get_den();
    Int v = sb.get_num() * sa.get_den();
    MPoly n = a.num_ * db * u + b.num_ * da * v;
    Rat s(1, sa.get_den() * sb.get_den());
    RatFunc r;
    r.scalar_ = s;
    r.num_ = n;
    r.den_ = da * db * g;
    r.canonicalize();
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc r(Rat(1));
    RatFunc b = *this;
    while (n > 0) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  bool operator==(const RatFunc& o) const {
    return scalar_ == o.scalar_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Substitute a rational function for a variable.
  RatFunc subst(Var v, const RatFunc& value) const {
    if (isZero() || !dependsOn(v)) return *this;
    RatFunc n = substPoly(num_, v, value);
    RatFunc d = substPoly(den_, v, value);
    RatFunc r = n / d;
    r.scalar_ *= scalar_;
    r.normalizeZero();
    return r;
  }

  // Degree of the numerator / denominator in a variable.
  int degNum(Var v) const { return num_.degree(v); }
  int degDen(Var v) const { return den_.degree(v); }

  std::string str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool haveScalar = scalar_ != 1;
    bool haveNum = !num_.isOne();
    if (haveScalar || !haveNum) os << scalar_.get_str();
    if (haveNum) {
      if (haveScalar) os << "*";
      bool paren = num_.terms().size() > 1;
      os << (paren ? "(" : "") << num_.str() << (paren ? ")" : "");
    }
    if (!den_.isOne()) {
      bool paren = den_.terms().size() > 1;
      os << "/" << (paren ? "(" : "") << den_.str() << (paren ? ")" : "");
    }
    return os.str();
  }

 private:
  static RatFunc substPoly(const MPoly& p, Var v, const RatFunc& value) {
    int d = p.degree(v);
    RatFunc r;
    for (int k = d; k >= 0; --k) {
      r = r * value + RatFunc(p.coeffOf(v, k));
    }
    return r;
  }

  void normalizeZero() {
    if (scalar_ == 0 || num_.isZero()) {
      scalar_ = 0;
      num_ = MPoly();
      den_ = MPoly(1);
    }
  }

  void canonicalize() {
    if (den_.isZero()) throw std::logic_error("RatFunc: zero denominator");
    if (num_.isZero() || scalar_ == 0) {
      normalizeZero();
      return;
    }
    MPoly g = mpolyGcd(num_, den_);
    if (!g.isOne()) {
      num_ = num_.divExact(g);
      den_ = den_.divExact(g);
    }
    Int cn = num_.content();
    Int cd = den_.content();
    if (num_.leadingSign() < 0) cn = -cn;
    if (den_.leadingSign() < 0) cd = -cd;
    num_ = num_.divCoeffs(cn);
    den_ = den_.divCoeffs(cd);
    scalar_ *= Rat(cn) / Rat(cd);
  }

  Rat scalar_;
  MPoly num_;
  MPoly den_;
};

}  // namespace ctk

#endif  // CTK_RATFUNC_HPP
