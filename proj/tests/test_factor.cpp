#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ctk/factor.hpp>

#include <random>

using namespace ctk;

static MPoly X() { return MPoly::var(VX, 1); }
static MPoly Y() { return MPoly::var(VY, 1); }
static MPoly Q() { return MPoly::var(VQ, 1); }
static MPoly C(long v) { return MPoly(Int(v)); }

static MPoly rebuild(const FactorList& fl) {
  Rat u = fl.unit;
  MPoly p(Int(u.get_num()));
  for (auto& [f, m] : fl.factors) p = p * f.pow(m);
  if (u.get_den() != 1) p = p.divCoeffs(Int(u.get_den()));
  return p;
}

TEST_CASE("univariate factorization over Z") {
  // (w-1)(w+2)
  ZPoly f{Int(-2), Int(1), Int(1)};
  auto fs = zp::factorSquarefree(f);
  REQUIRE(fs.size() == 2);

  // w^4 + 1 is irreducible over Z
  ZPoly g{Int(1), Int(0), Int(0), Int(0), Int(1)};
  CHECK(zp::factorSquarefree(g).size() == 1);

  // cyclotomic-style split: w^4 - 1 = (w-1)(w+1)(w^2+1)
  ZPoly h{Int(-1), Int(0), Int(0), Int(0), Int(1)};
  CHECK(zp::factorSquarefree(h).size() == 3);

  // non-monic: (2w+1)(3w-5)
  ZPoly k{Int(-5), Int(-7), Int(6)};
  auto ks = zp::factorSquarefree(k);
  REQUIRE(ks.size() == 2);
  CHECK(zp::mul(ks[0], ks[1]) == k);
}

TEST_CASE("multivariate irreducible factorization") {
  MPoly p = (X() + Y() * C(2) + C(1)) * (Y() + C(1)) * (Y() + C(1));
  auto fl = factorIrreducible(p);
  CHECK(fl.unit == Rat(1));
  REQUIRE(fl.factors.size() == 2);
  CHECK(rebuild(fl) == p);
  int maxMult = 0;
  for (auto& [f, m] : fl.factors) maxMult = std::max(maxMult, m);
  CHECK(maxMult == 2);
}

TEST_CASE("factorization separates monomials and content") {
  MPoly p = C(-12) * X() * Y() * Y() * (X() - Y());
  auto fl = factorIrreducible(p);
  CHECK((fl.unit == Rat(12) || fl.unit == Rat(-12)));
  CHECK(rebuild(fl) == p);
}

TEST_CASE("difference of powers") {
  // x^2 - y^2 = (x-y)(x+y)
  auto fl = factorIrreducible(X() * X() - Y() * Y());
  REQUIRE(fl.factors.size() == 2);
  // x^3 - y^3 = (x-y)(x^2+xy+y^2)
  auto fl2 = factorIrreducible(X().pow(3) - Y().pow(3));
  REQUIRE(fl2.factors.size() == 2);
  CHECK(rebuild(fl2) == X().pow(3) - Y().pow(3));
}

TEST_CASE("q-polynomials factor with q coefficients") {
  // (1 - q x y)(1 - x y) stays split; (1-q^2) is handled as a factor too
  MPoly a = C(1) - Q() * X() * Y();
  MPoly b = C(1) - X() * Y();
  auto fl = factorIrreducible(a * b);
  REQUIRE(fl.factors.size() == 2);
  CHECK(rebuild(fl) == a * b);
}

TEST_CASE("squarefree decomposition") {
  MPoly p = (Y() + C(1)).pow(3) * (Y() - X()).pow(2) * (Y() + X() + C(2));
  MPoly cont;
  std::vector<MPoly> parts;
  squarefreeDecompose(p, VY, cont, parts);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].primitivePart() == (Y() + X() + C(2)));
  CHECK(parts[1].primitivePart() == (Y() - X()).primitivePart());
  CHECK(parts[2].primitivePart() == (Y() + C(1)));
}

TEST_CASE("factor round trip (randomized)") {
  std::mt19937_64 rng(7);
  auto randPoly = [&](int deg, int nterms) {
    MPoly p;
    for (int i = 0; i < nterms; ++i) {
      Expt e{};
      e[VX] = static_cast<int>(rng() % (deg + 1));
      e[VY] = static_cast<int>(rng() % (deg + 1));
      long c = static_cast<long>(rng() % 9) - 4;
      if (c != 0) p += MPoly::monomial(Int(c), e);
    }
    return p;
  };
  int done = 0;
  for (int trial = 0; trial < 400 && done < 120; ++trial) {
    MPoly a = randPoly(2, 3), b = randPoly(2, 3);
    if (a.isZero() || b.isZero()) continue;
    MPoly p = a * b;
    auto fl = factorIrreducible(p);
    CHECK(rebuild(fl) == p);
    for (auto& [f, m] : fl.factors) {
      MPoly q;
      CHECK(p.divExact(f.pow(m), q));
    }
    ++done;
  }
  CHECK(done == 120);
}
