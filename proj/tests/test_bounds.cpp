#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ctk/bounds.hpp>

#include <random>

using namespace ctk;

static MPoly X() { return MPoly::var(VX, 1); }
static MPoly Y() { return MPoly::var(VY, 1); }
static MPoly Q() { return MPoly::var(VQ, 1); }
static MPoly C(long v) { return MPoly(Int(v)); }

static RatFunc kernel413() {
  MPoly u = (X() + C(2) * Y() + C(1)) * (X() + C(2) * Y() + C(2));
  MPoly v = (Y() + C(1)) * (X() + Y() + C(1));
  return RatFunc(u, v, Rat(1));
}
static RatFunc kernel414() {
  return RatFunc(X() - Y(), Y() * (Q() * Y() - C(1)), Rat(1));
}

static QProperDescriptor gaussianBinomial() {
  QProperDescriptor d;
  d.alphas = {{1, 0, 0}};
  d.mus = {{0, 1, 0}};
  d.nus = {{1, -1, 0}};
  return d;
}

TEST_CASE("upper_bound on known inputs") {
  // Ex 4.13: trivial significant denominator, dim 2
  {
    ComplementBasis cb(kernel413(), CaseTag::Shift);
    auto dec = ilDecompose(C(1), CaseTag::Shift);
    REQUIRE(dec.has_value());
    CHECK(dec->classes.empty());
    CHECK(upperBound(cb, *dec, CaseTag::Shift) == 2);
  }
  {
    ComplementBasis cb(kernel414(), CaseTag::QShift);
    auto dec = ilDecompose(C(1), CaseTag::QShift);
    REQUIRE(dec.has_value());
    CHECK(upperBound(cb, *dec, CaseTag::QShift) == 2);
  }
  // T = 1/(x+2y): K = 1, d = x+2y, deg_y(D0) = 2
  {
    ComplementBasis cb(RatFunc(1), CaseTag::Shift);
    auto dec = ilDecompose(X() + C(2) * Y(), CaseTag::Shift);
    REQUIRE(dec.has_value());
    CHECK(upperBound(cb, *dec, CaseTag::Shift) == 2);
  }
  // q-case mu = 2 class with multiplicity 2: deg = 2 * 4 * 1 = 8
  {
    MPoly p1 = C(1) - Q() * X() * Y() * Y();
    ComplementBasis cb(RatFunc(1), CaseTag::QShift);
    auto dec = ilDecompose(p1 * p1, CaseTag::QShift);
    REQUIRE(dec.has_value());
    CHECK(upperBound(cb, *dec, CaseTag::QShift) == 1 + 8);
  }
}

TEST_CASE("lower_bound conventions and examples") {
  CHECK(lowerBound(std::nullopt, true) == 0);
  CHECK(lowerBound(std::nullopt, false) == 1);
  ILDecomposition empty;
  CHECK(lowerBound(empty, false) == 1);

  // d = y+1: mu = 1 forces rho = 1
  auto d1 = ilDecompose(Y() + C(1), CaseTag::Shift);
  REQUIRE(d1.has_value());
  CHECK(lowerBound(d1, false) == 1);

  // d = x+2y: single residue in a mu = 2 class, rho = 2
  auto d2 = ilDecompose(X() + C(2) * Y(), CaseTag::Shift);
  REQUIRE(d2.has_value());
  CHECK(lowerBound(d2, false) == 2);

  // both residues occupied with equal multiplicity: rho = 1
  auto d3 = ilDecompose((X() + C(2) * Y()) * (X() + C(2) * Y() + C(1)),
                        CaseTag::Shift);
  REQUIRE(d3.has_value());
  CHECK(lowerBound(d3, false) == 1);

  // unequal multiplicities: the heavy residue only reaches itself, rho = 2
  auto d4 = ilDecompose(
      (X() + C(2) * Y()) * (X() + C(2) * Y()) * (X() + C(2) * Y() + C(1)),
      CaseTag::Shift);
  REQUIRE(d4.has_value());
  CHECK(lowerBound(d4, false) == 2);

  // x+3y with residues {0,1} of equal weight, lambda = 1: 1 = 0 + rho needs
  // rho = 1 or jump 0 = 1 + rho (mod 3) needs rho = 2
  auto d5 = ilDecompose((X() + C(3) * Y()) * (X() + C(3) * Y() + C(1)),
                        CaseTag::Shift);
  REQUIRE(d5.has_value());
  CHECK(lowerBound(d5, false) == 2);
}

TEST_CASE("az_bound") {
  CHECK(azBound(gaussianBinomial()) == 2);

  // all-empty descriptor
  QProperDescriptor zero;
  CHECK(azBound(zero) == 0);

  // final example of the q-section, alpha = 2, beta = 1: 4 + 1 + 1 = 6
  QProperDescriptor fin;
  fin.xi = 2;
  fin.alphas = {{1, 2, -1}, {1, 1, -1}, {0, 1, -1}};
  fin.mus = {{1, 2, 2}, {1, 1, 0}, {0, 1, 0}};
  CHECK(azBound(fin) == 6);

  // a balanced constant quad in both numerator and denominator is inert
  QProperDescriptor g2 = gaussianBinomial();
  g2.alphas.push_back({0, 0, 3});
  g2.mus.push_back({0, 0, 5});
  CHECK(azBound(g2) == azBound(gaussianBinomial()));

  CHECK(azBound(QProperDescriptor{RatFunc(1), 1, 3, {}, {}, {}, {}}) == 3);
}

TEST_CASE("descriptor validation") {
  QProperDescriptor bad = gaussianBinomial();
  bad.xi = 0;
  CHECK_THROWS_AS(azBound(bad), std::logic_error);

  QProperDescriptor neg;
  neg.alphas = {{1, -1, 0}};  // alpha' must be nonnegative
  CHECK_THROWS_AS(azBound(neg), std::logic_error);

  QProperDescriptor cancel;
  cancel.alphas = {{1, 0, 0}};
  cancel.mus = {{1, 0, -1}};  // (q;q)_n / (q;q)_{n-1} cancels
  CHECK_THROWS_AS(azBound(cancel), std::logic_error);
}

TEST_CASE("compile_qproper on the Gaussian binomial") {
  auto [fx, fy] = compileQProper(gaussianBinomial());
  CHECK(fy == RatFunc(X() - Y(), Y() * (Q() * Y() - C(1)), Rat(1)));
  CHECK(fx == RatFunc(Y() * (C(1) - Q() * X()), Y() - Q() * X(), Rat(1)));

  // inert balanced quads do not change the quotients
  QProperDescriptor g2 = gaussianBinomial();
  g2.alphas.push_back({0, 0, 3});
  g2.mus.push_back({0, 0, 5});
  auto [fx2, fy2] = compileQProper(g2);
  CHECK(fx2 == fx);
  CHECK(fy2 == fy);

  // the kernel of the compiled term reproduces Ex 4.14
  Rnf r = standardizeKernel(computeRnf(fy, CaseTag::QShift));
  CHECK(r.K == kernel414());
  CHECK(r.S == RatFunc(1));
}

TEST_CASE("bounds of the closing q-example, alpha = 2, beta = 1") {
  // T = p 2^k (q;q)_{n+2k-1} (q;q)_{n+k-1} (q;q)_{k-1} /
  //       ((q;q)_{n+2k+2} (q;q)_{n+k} (q;q)_k)
  MPoly xy2 = X() * Y() * Y(), xy = X() * Y();
  MPoly p = C(2) * (C(1) - xy2) * (C(1) - Q() * xy2) * (C(1) - xy) *
                (C(1) - Y()) -
            (C(1) - Q() * xy2) * (C(1) - Q() * Q() * xy2) * (C(1) - xy) *
                (C(1) - Y()) +
            (C(1) - xy2) * (C(1) - Q() * xy2) * (C(1) - Q() * Q() * xy2);
  QProperDescriptor fin;
  fin.p = RatFunc(p);
  fin.xi = 2;
  fin.alphas = {{1, 2, -1}, {1, 1, -1}, {0, 1, -1}};
  fin.mus = {{1, 2, 2}, {1, 1, 0}, {0, 1, 0}};
  CHECK(azBound(fin) == 6);

  auto [fx, fy] = compileQProper(fin);
  Rnf r = standardizeKernel(computeRnf(fy, CaseTag::QShift));
  ComplementBasis cb(r.K, CaseTag::QShift);
  ReductionResult red = reduceShell(r.S, cb);
  CHECK_FALSE(red.remainder.isZero());
  auto dec =
      ilDecompose(red.remainder.significantDenominator(), CaseTag::QShift);
  REQUIRE(dec.has_value());
  // the paper's sharper bound beta^2 + 1 = 2, the exact minimal order
  CHECK(upperBound(cb, *dec, CaseTag::QShift) == 2);
  CHECK(lowerBound(dec, false) == 1);
}

static MPoly randLinear(std::mt19937_64& rng, CaseTag tag) {
  std::uniform_int_distribution<int> lam(-1, 1), mu(1, 2), cst(0, 2);
  int l = lam(rng), m = mu(rng);
  int g = std::gcd(std::abs(l), m);
  l /= g;
  m /= g;
  if (tag == CaseTag::Shift) return C(l) * X() + C(m) * Y() + C(cst(rng));
  MPoly mono = MPoly::var(VY, m) * (l >= 0 ? MPoly::var(VX, l) : C(1));
  MPoly lhs = l < 0 ? MPoly::var(VX, -l) : C(1);
  return lhs - MPoly::var(VQ, cst(rng)) * mono;
}

TEST_CASE("randomized: closed formula agrees with constructed objects") {
  std::mt19937_64 rng(91);
  for (CaseTag tag : {CaseTag::Shift, CaseTag::QShift}) {
    int done = 0;
    while (done < 30) {
      std::uniform_int_distribution<int> nf(1, 2), pw(1, 2);
      MPoly d = C(1);
      for (int i = 0, n = nf(rng); i < n; ++i)
        d = d * randLinear(rng, tag).pow(pw(rng));
      if (classifySigmaY(d, tag) != SigmaYClass::Normal &&
          classifySigmaY(d, tag) != SigmaYClass::Both)
        continue;
      auto dec = ilDecompose(d, tag);
      if (!dec) continue;
      ComplementBasis cb(RatFunc(1), tag);
      // upperBound asserts dim and deg_y(D0) agreement internally
      int up = upperBound(cb, *dec, tag);
      auto [D, D0] = commonMultipleD(*dec, RatFunc(1), tag);
      CHECK(up == cb.dimExpected() + std::max(D0.degree(VY), 0));
      int low = lowerBound(dec, false);
      CHECK(low >= 1);
      CHECK(low <= up);
      ++done;
    }
  }
}
