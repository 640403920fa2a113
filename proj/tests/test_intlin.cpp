#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ctk/intlin.hpp>

using namespace ctk;

static MPoly X() { return MPoly::var(VX, 1); }
static MPoly Y() { return MPoly::var(VY, 1); }
static MPoly Z() { return MPoly::var(VZ, 1); }
static MPoly Q() { return MPoly::var(VQ, 1); }
static MPoly C(long v) { return MPoly(Int(v)); }

TEST_CASE("univariate_representation, shift case") {
  auto r = univariateRepresentation(X() + C(2) * Y() + C(1), CaseTag::Shift);
  REQUIRE(r.has_value());
  CHECK(r->P == Z() + C(1));
  CHECK(r->lambda == 1);
  CHECK(r->mu == 2);
  CHECK(r->reconstruct(CaseTag::Shift) == X() + C(2) * Y() + C(1));

  CHECK_FALSE(
      univariateRepresentation(Y() * Y() - X(), CaseTag::Shift).has_value());

  auto ry = univariateRepresentation(Y() + C(3), CaseTag::Shift);
  REQUIRE(ry.has_value());
  CHECK(ry->lambda == 0);
  CHECK(ry->mu == 1);

  auto rx = univariateRepresentation(X() + C(5), CaseTag::Shift);
  REQUIRE(rx.has_value());
  CHECK(rx->lambda == 1);
  CHECK(rx->mu == 0);

  // y - x: lambda = -1
  auto rn = univariateRepresentation(Y() - X(), CaseTag::Shift);
  REQUIRE(rn.has_value());
  CHECK(rn->mu == 1);
  CHECK(rn->lambda == -1);
  CHECK(unitNormalize(rn->reconstruct(CaseTag::Shift), CaseTag::Shift) ==
        unitNormalize(Y() - X(), CaseTag::Shift));
}

TEST_CASE("univariate_representation, q-case") {
  // x - y = x(1 - x^{-1}y): P = 1 - z, lambda = -1, mu = 1, alpha = 1
  auto r = univariateRepresentation(X() - Y(), CaseTag::QShift);
  REQUIRE(r.has_value());
  CHECK(r->P == C(1) - Z());
  CHECK(r->lambda == -1);
  CHECK(r->mu == 1);
  CHECK(r->alpha == 1);
  CHECK(r->beta == 0);
  CHECK(r->reconstruct(CaseTag::QShift) == X() - Y());

  auto r2 = univariateRepresentation(C(1) - Q() * X() * Y(), CaseTag::QShift);
  REQUIRE(r2.has_value());
  CHECK(r2->lambda == 1);
  CHECK(r2->mu == 1);
  CHECK(r2->alpha == 0);
  CHECK(r2->beta == 0);
  CHECK(unitNormalize(r2->reconstruct(CaseTag::QShift), CaseTag::QShift) ==
        unitNormalize(C(1) - Q() * X() * Y(), CaseTag::QShift));

  // non-collinear support
  CHECK_FALSE(univariateRepresentation(C(1) + X() + Y() + X() * Y() * Y(),
                                       CaseTag::QShift)
                  .has_value());
}

TEST_CASE("delta_shift") {
  UnivariateRep rep{Z(), 1, 2, 0, 0};  // x + 2y
  CHECK(deltaExponents(1, 2) == std::pair<int, int>{1, 0});
  CHECK(deltaShift(rep, 1, CaseTag::Shift) == X() + C(2) * Y() + C(1));
  CHECK(deltaShift(rep, 0, CaseTag::Shift) == X() + C(2) * Y());
  CHECK(deltaShift(rep, -1, CaseTag::Shift) == X() + C(2) * Y() - C(1));

  UnivariateRep repY{Z() + C(1), 0, 1, 0, 0};  // y + 1
  CHECK(deltaShift(repY, 3, CaseTag::Shift) == Y() + C(4));

  // delta^lambda(p) associate to sigma_x(p), delta^mu(p) to sigma_y(p)
  CHECK(deltaShift(rep, 2, CaseTag::Shift) ==
        unitNormalize(shiftPoly(X() + C(2) * Y(), 0, 1, CaseTag::Shift),
                      CaseTag::Shift));

  // q-case: p = 1 - qxy, delta = sigma_y
  UnivariateRep repQ{C(1) - Q() * Z(), 1, 1, 0, 0};
  CHECK(deltaShift(repQ, 1, CaseTag::QShift) ==
        unitNormalize(C(1) - Q() * Q() * X() * Y(), CaseTag::QShift));
}

TEST_CASE("shiftfinite: delta residues mod mu") {
  UnivariateRep rep{Z(), 1, 2, 0, 0};
  MPoly d0 = deltaShift(rep, 0, CaseTag::Shift);
  MPoly d1 = deltaShift(rep, 1, CaseTag::Shift);
  CHECK_FALSE(sigmaYEquivalent(d0, d1, CaseTag::Shift).has_value());
  for (int l = -10; l <= 10; ++l) {
    MPoly dl = deltaShift(rep, l, CaseTag::Shift);
    MPoly dm = deltaShift(rep, ((l % 2) + 2) % 2, CaseTag::Shift);
    CHECK(sigmaYEquivalent(dl, dm, CaseTag::Shift).has_value());
  }
}

TEST_CASE("il_decompose") {
  // two inequivalent classes
  auto dec = ilDecompose((Y() + C(1)) * (X() + Y() + C(1)), CaseTag::Shift);
  REQUIRE(dec.has_value());
  CHECK(dec->classes.size() == 2);
  for (auto& cl : dec->classes) {
    CHECK(cl.alpha == std::map<int, int>{{0, 1}});
    CHECK(cl.rep.P == Z() + C(1));
  }

  // one class, two delta-shifts
  auto dec2 = ilDecompose((X() + C(2) * Y()) * (X() + C(2) * Y() + C(1)),
                          CaseTag::Shift);
  REQUIRE(dec2.has_value());
  REQUIRE(dec2->classes.size() == 1);
  CHECK(dec2->classes[0].rep.lambda == 1);
  CHECK(dec2->classes[0].rep.mu == 2);
  CHECK(dec2->classes[0].poly == X() + C(2) * Y());
  CHECK(dec2->classes[0].alpha == std::map<int, int>{{0, 1}, {1, 1}});

  CHECK_FALSE(ilDecompose(Y() * Y() - X(), CaseTag::Shift).has_value());

  CHECK_THROWS_AS(ilDecompose(Y() * (Y() + C(1)), CaseTag::Shift),
                  InputNotNormalError);

  // q-case, one class with multiplicities: mu = 2, delta = sigma_x
  MPoly p1 = C(1) - Q() * X() * Y() * Y();
  MPoly p2 = C(1) - Q() * Q() * X() * Y() * Y();
  auto dq = ilDecompose(p1 * p1 * p2, CaseTag::QShift);
  REQUIRE(dq.has_value());
  REQUIRE(dq->classes.size() == 1);
  CHECK(dq->classes[0].rep.mu == 2);
  CHECK(dq->classes[0].alpha == std::map<int, int>{{0, 2}, {1, 1}});
}

TEST_CASE("common_multiple_D") {
  RatFunc K1(1);
  // d = x + 2y: D0 = (x+2y)(x+2y+1)
  auto dec = ilDecompose(X() + C(2) * Y(), CaseTag::Shift);
  REQUIRE(dec.has_value());
  auto [D, D0] = commonMultipleD(*dec, K1, CaseTag::Shift);
  MPoly expect = (X() + C(2) * Y()) * (X() + C(2) * Y() + C(1));
  CHECK(D0 == unitNormalize(expect, CaseTag::Shift));
  CHECK(sigmaYRelated(D, D0, CaseTag::Shift));
  CHECK((D.divides(expect) || expect.divides(D)));

  // d = y + 1: single-element class
  auto decY = ilDecompose(Y() + C(1), CaseTag::Shift);
  auto [DY, DY0] = commonMultipleD(*decY, K1, CaseTag::Shift);
  CHECK(DY == Y() + C(1));
  CHECK(DY0 == Y() + C(1));

  // both residues occupied
  auto dec2 = ilDecompose((X() + C(2) * Y()) * (X() + C(2) * Y() + C(1)),
                          CaseTag::Shift);
  auto [D2, D20] = commonMultipleD(*dec2, K1, CaseTag::Shift);
  CHECK(D2 == unitNormalize(expect, CaseTag::Shift));
  CHECK(D20 == D2);

  // degree formula: deg_y D0 = sum k_j mu_j deg P_j (shift)
  CHECK(D0.degree(VY) == 1 * 2 * 1);

  // against a nontrivial kernel: D strongly coprime and normal
  MPoly u = (X() + C(2) * Y() + C(1)) * (X() + C(2) * Y() + C(2));
  MPoly v = (Y() + C(1)) * (X() + Y() + C(1));
  RatFunc K13(u, v, Rat(1));
  auto dec3 = ilDecompose(X() + C(2) * Y() + C(5), CaseTag::Shift);
  REQUIRE(dec3.has_value());
  auto [D3, D30] = commonMultipleD(*dec3, K13, CaseTag::Shift);
  CHECK(isStronglyCoprime(D3, K13, CaseTag::Shift));
  SigmaYClass cls = classifySigmaY(D3, CaseTag::Shift);
  CHECK((cls == SigmaYClass::Normal || cls == SigmaYClass::Both));
  CHECK(sigmaYRelated(D3, D30, CaseTag::Shift));
  CHECK(RatFunc(D3).den().isOne());

  // q-case degree formula: deg_y D0 = sum k_j mu_j^2 deg P_j
  MPoly p1 = C(1) - Q() * X() * Y();
  auto dq = ilDecompose(p1 * p1, CaseTag::QShift);
  auto [Dq, Dq0] = commonMultipleD(*dq, RatFunc(1), CaseTag::QShift);
  CHECK(Dq0.degree(VY) == 2 * 1 * 1);
  CHECK(sigmaYRelated(Dq, Dq0, CaseTag::QShift));
}
