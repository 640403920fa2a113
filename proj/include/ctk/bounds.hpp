#ifndef CTK_BOUNDS_HPP
#define CTK_BOUNDS_HPP

#include <ctk/intlin.hpp>

namespace ctk {

struct BoundReport {
  int dimComplement = 0;
  int degD0 = 0;
  int upper = 0;
  int lower = 0;
  std::optional<int> bAz;
};

// dim(im phi_K)^T + deg_y(D0), closed formulas checked against the
// constructed objects.
inline int upperBound(ComplementBasis& cb, const ILDecomposition& dec,
                      CaseTag tag) {
  int degClosed = 0;
  for (auto& cl : dec.classes) {
    int k = 0;
    for (auto& [off, m] : cl.alpha) k = std::max(k, m);
    int degP = cl.rep.P.degree(VZ);
    degClosed += tag == CaseTag::Shift ? k * cl.rep.mu * degP
                                       : k * cl.rep.mu * cl.rep.mu * degP;
  }
  auto [D, D0] = commonMultipleD(dec, cb.kernel(), tag);
  int degBuilt = std::max(D0.degree(VY), 0);
  if (degBuilt != degClosed)
    throw std::logic_error("upper_bound: deg_y(D0) mismatch");
  int dim = cb.dimComputed();
  if (dim != cb.dimExpected())
    throw std::logic_error("upper_bound: complement dimension mismatch");
  return dim + degClosed;
}

// Thm bounds (iii): minimal rho >= 1 with j == l + lambda*rho (mod mu) for
// some l in Lambda with k_{ij} <= k_{il}; 0 for zero remainder, 1 for a
// trivial significant denominator.
inline int lowerBound(const std::optional<ILDecomposition>& dec,
                      bool baseRemainderZero) {
  if (baseRemainderZero) return 0;
  if (!dec || dec->classes.empty()) return 1;
  int best = 1;
  for (auto& cl : dec->classes) {
    int mu = cl.rep.mu, lambda = cl.rep.lambda;
    for (auto& [j, kj] : cl.alpha) {
      int minRho = 0;
      for (int rho = 1; rho <= mu && minRho == 0; ++rho) {
        for (auto& [l, kl] : cl.alpha) {
          if (kj > kl) continue;
          if ((((j - l - lambda * rho) % mu) + mu) % mu == 0) {
            minRho = rho;
            break;
          }
        }
      }
      if (minRho == 0)
        throw std::logic_error("lower_bound: no admissible rho");
      best = std::max(best, minRho);
    }
  }
  return best;
}

// (q;q)_{a n + b k + c} symbol; b carries the sign (negative for the
// beta/nu kinds).
struct QProperQuad {
  int a = 0, b = 0, c = 0;
};

// T = p * xi^k * q^{gamma k(k-1)/2} * prod (q;q)_alpha (q;q)_beta /
// ((q;q)_mu (q;q)_nu) with x = q^n, y = q^k.
struct QProperDescriptor {
  RatFunc p = RatFunc(1);  // Laurent polynomial in x, y over K(q)
  Rat xi = 1;
  int gamma = 0;
  std::vector<QProperQuad> alphas, betas, mus, nus;
};

inline void validateDescriptor(const QProperDescriptor& d) {
  if (d.xi == 0) throw std::logic_error("qproper: xi must be nonzero");
  if (d.p.isZero()) throw std::logic_error("qproper: p must be nonzero");
  auto slopes = [](const std::vector<QProperQuad>& v, int sign) {
    for (auto& q : v)
      if (q.a < 0 || sign * q.b < 0)
        throw std::logic_error("qproper: negative slope entry");
  };
  slopes(d.alphas, 1);
  slopes(d.mus, 1);
  slopes(d.betas, -1);
  slopes(d.nus, -1);
  auto cancels = [](const std::vector<QProperQuad>& num,
                    const std::vector<QProperQuad>& den) {
    for (auto& a : num)
      for (auto& m : den)
        if (a.a == m.a && a.b == m.b && a.c - m.c >= 0) return true;
    return false;
  };
  if (cancels(d.alphas, d.mus) || cancels(d.betas, d.nus))
    throw std::logic_error("qproper: cancellation condition violated");
}

inline int azBound(const QProperDescriptor& d) {
  validateDescriptor(d);
  auto sq = [](const std::vector<QProperQuad>& v) {
    int s = 0;
    for (auto& q : v) s += q.b * q.b;
    return s;
  };
  return std::max(d.gamma + sq(d.alphas), sq(d.mus)) +
         std::max(-d.gamma + sq(d.nus), sq(d.betas));
}

namespace detail {

inline RatFunc xyqMonomial(int ex, int ey, int eq) {
  MPoly num(Int(1)), den(Int(1));
  auto place = [&](Var v, int e) {
    if (e >= 0)
      num = num * MPoly::var(v, e);
    else
      den = den * MPoly::var(v, -e);
  };
  place(VX, ex);
  place(VY, ey);
  place(VQ, eq);
  return RatFunc(num, den, Rat(1));
}

// (q;q)_{m + delta} / (q;q)_m with q^m = x^a y^b q^c
inline RatFunc pochRatio(const QProperQuad& quad, int dn, int dk) {
  int delta = quad.a * dn + quad.b * dk;
  RatFunc r(1);
  for (int i = 1; i <= delta; ++i)
    r *= RatFunc(1) - xyqMonomial(quad.a, quad.b, quad.c + i);
  for (int i = 0; i < -delta; ++i)
    r /= RatFunc(1) - xyqMonomial(quad.a, quad.b, quad.c - i);
  return r;
}

}  // namespace detail

// shift quotients (f_x, f_y) of the described term, x = q^n and y = q^k
inline std::pair<RatFunc, RatFunc> compileQProper(const QProperDescriptor& d) {
  validateDescriptor(d);
  auto quotient = [&](int dn, int dk) {
    RatFunc f = d.p.isConstant()
                    ? RatFunc(1)
                    : applyShift(ShiftOp{dn, dk}, d.p, CaseTag::QShift) / d.p;
    if (dk != 0) {
      f *= RatFunc(d.xi);
      // q^{gamma k(k-1)/2} steps by q^{gamma k} = y^gamma
      f *= detail::xyqMonomial(0, d.gamma, 0);
    }
    for (auto& q : d.alphas) f *= detail::pochRatio(q, dn, dk);
    for (auto& q : d.betas) f *= detail::pochRatio(q, dn, dk);
    for (auto& q : d.mus) f /= detail::pochRatio(q, dn, dk);
    for (auto& q : d.nus) f /= detail::pochRatio(q, dn, dk);
    return f;
  };
  RatFunc fx = quotient(1, 0), fy = quotient(0, 1);
  // compatibility: sigma_x(f_y) f_x = sigma_y(f_x) f_y
  if (applyShiftX(fy, 1, CaseTag::QShift) * fx !=
      applyShiftY(fx, 1, CaseTag::QShift) * fy)
    throw std::logic_error("compile_qproper: incompatible quotients");
  return {fx, fy};
}

}  // namespace ctk

#endif  // CTK_BOUNDS_HPP
