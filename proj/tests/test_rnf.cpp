#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ctk/rnf.hpp>

#include <random>

using namespace ctk;

static MPoly X() { return MPoly::var(VX, 1); }
static MPoly Y() { return MPoly::var(VY, 1); }
static MPoly Q() { return MPoly::var(VQ, 1); }
static MPoly C(long v) { return MPoly(Int(v)); }

TEST_CASE("compute_rnf on paper kernels") {
  MPoly u = (X() + C(2) * Y() + C(1)) * (X() + C(2) * Y() + C(2));
  MPoly v = (Y() + C(1)) * (X() + Y() + C(1));
  RatFunc f(u, v, Rat(1));
  Rnf r = computeRnf(f, CaseTag::Shift);
  CHECK(r.K == f);
  CHECK(r.S == RatFunc(1));
  CHECK(isSigmaYReduced(r.K, CaseTag::Shift));
}

TEST_CASE("compute_rnf absorbs shifts into the shell") {
  RatFunc f(Y() + C(2), Y(), Rat(1));
  Rnf r = computeRnf(f, CaseTag::Shift);
  CHECK(r.K == RatFunc(1));
  CHECK(r.S == RatFunc(Y() * (Y() + C(1))));
  CHECK(rnfValue(r) == f);

  Rnf r2 = computeRnf(RatFunc(1), CaseTag::Shift);
  CHECK(r2.K == RatFunc(1));
  CHECK(r2.S == RatFunc(1));

  CHECK_THROWS_AS(computeRnf(RatFunc(0), CaseTag::Shift), ZeroInputError);
}

TEST_CASE("compute_rnf reconstruction (randomized)") {
  std::mt19937_64 rng(23);
  auto randPoly = [&](CaseTag tag) {
    MPoly p = C(1 + static_cast<long>(rng() % 3));
    for (int i = 0; i < 2; ++i) {
      long k = static_cast<long>(rng() % 4);
      if (tag == CaseTag::Shift)
        p = p * (Y() + C(k) * X() + C(static_cast<long>(rng() % 4)));
      else
        p = p * (C(1) + Q().pow(static_cast<int>(rng() % 3)) * X().pow(static_cast<int>(k % 2)) * Y());
    }
    return p;
  };
  for (CaseTag tag : {CaseTag::Shift, CaseTag::QShift}) {
    int done = 0;
    for (int t = 0; t < 200 && done < 100; ++t) {
      MPoly n = randPoly(tag), d = randPoly(tag);
      if (n.isZero() || d.isZero()) continue;
      RatFunc f(n, d, Rat(1));
      if (f.isZero() || f.isConstant()) continue;
      Rnf r = computeRnf(f, tag);
      CHECK(rnfValue(r) == f);
      CHECK(isSigmaYReduced(r.K, tag));
      ++done;
    }
    CHECK(done == 100);
  }
}

TEST_CASE("standardize_kernel") {
  // shift case: identity
  RatFunc f(Y() + C(2), Y() + C(5), Rat(1));
  Rnf r = computeRnf(f, CaseTag::Shift);
  Rnf s = standardizeKernel(r);
  CHECK(s.K == r.K);
  CHECK(s.S == r.S);

  // K = q violates standardness; becomes K = 1, S = y
  Rnf rq{RatFunc(Q()), RatFunc(1), CaseTag::QShift};
  Rnf sq = standardizeKernel(rq);
  CHECK(sq.K == RatFunc(1));
  CHECK(sq.S == RatFunc(Y()));
  CHECK(rnfValue(sq) == RatFunc(Q()));
  CHECK(isSigmaYStandard(sq.K, CaseTag::QShift));

  // Example 4.14 kernel is already standard
  RatFunc Kq(X() - Y(), Y() * (Q() * Y() - C(1)), Rat(1));
  Rnf rk{Kq, RatFunc(1), CaseTag::QShift};
  Rnf sk = standardizeKernel(rk);
  CHECK(sk.K == Kq);
  CHECK(isSigmaYStandard(Kq, CaseTag::QShift));
}

TEST_CASE("transform_special") {
  Rnf r{RatFunc(X() - Y(), Y() * (Q() * Y() - C(1)), Rat(1)), RatFunc(1),
        CaseTag::QShift};
  Rnf t0 = transformSpecial(r, 0);
  CHECK(t0.K == r.K);
  Rnf t1 = transformSpecial(r, 1);
  CHECK(rnfValue(t1) == rnfValue(r));
  CHECK(t1.S == RatFunc(Y()));
  Rnf t2 = transformSpecial(r, 2);
  CHECK(rnfValue(t2) == rnfValue(r));

  Rnf rs{RatFunc(1), RatFunc(1), CaseTag::Shift};
  CHECK_THROWS_AS(transformSpecial(rs, 1), WrongCaseError);
}

TEST_CASE("transform_normal_factor") {
  MPoly u = (X() + C(2) * Y() + C(1)) * (X() + C(2) * Y() + C(2));
  MPoly v = (Y() + C(1)) * (X() + Y() + C(1));
  Rnf r{RatFunc(u, v, Rat(1)), RatFunc(1), CaseTag::Shift};

  Rnf d = transformNormalFactor(r, Y() + C(1), KernelSide::Denominator);
  MPoly v2 = (X() + Y() + C(1)) * (Y() + C(2));
  CHECK(d.K == RatFunc(u, v2, Rat(1)));
  CHECK(d.S == RatFunc(Y() + C(1)));
  CHECK(rnfValue(d) == rnfValue(r));

  Rnf n = transformNormalFactor(r, X() + C(2) * Y() + C(1),
                                KernelSide::Numerator);
  MPoly u2 = (X() + C(2) * Y() + C(2)) * (X() + C(2) * Y() - C(1));
  CHECK(n.K == RatFunc(u2, v, Rat(1)));
  CHECK(n.S == RatFunc(X() + C(2) * Y() - C(1)));
  CHECK(rnfValue(n) == rnfValue(r));

  CHECK_THROWS_AS(transformNormalFactor(r, Y() + C(7), KernelSide::Denominator),
                  NotAFactorError);

  // round trip: move a denominator factor down, then its shift back up
  Rnf back = transformNormalFactor(d, X() + C(2) * Y() + C(1),
                                   KernelSide::Numerator);
  CHECK(rnfValue(back) == rnfValue(r));
}
