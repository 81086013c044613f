#include <doctest.h>

#include "virmod/action.hpp"
#include "virmod/rng.hpp"

using namespace virmod;

namespace {

ModuleInstance gamma_inst(Rat a1, Rat l1, Rat l2, Rat alpha) {
  return {CoeffDescriptor(GammaDesc{a1, l1, l2}), alpha};
}

}  // namespace

TEST_CASE("d_0 scales by the weight") {
  ModuleInstance inst = gamma_inst(rat_of(1, 2), Rat(1), Rat(2), rat_of(1, 3));
  SampleRng rng(5);
  for (int k = 0; k < 10; ++k) {
    long n = rng.int_in(-4, 4);
    WeightVector w = WeightVector::single(Family::Gamma, n,
                                          rng.nonzero_avector(inst.coeff, 3));
    CHECK(d_act(inst, 0, w) == w * (inst.alpha + Rat(n)));
  }
}

TEST_CASE("gamma action worked example") {
  // lambda1 = 0, lambda2 = 6 at alpha = 0: d_1 (1 @ 0) = (x + 1) @ 1
  ModuleInstance inst = gamma_inst(Rat(0), Rat(0), Rat(6), Rat(0));
  WeightVector w = WeightVector::single(
      Family::Gamma, 0, AVector::gamma(UniPoly::constant(Rat(1))));
  WeightVector expect = WeightVector::single(
      Family::Gamma, 1,
      AVector::gamma(UniPoly::x() + UniPoly::constant(Rat(1))));
  CHECK(d_act(inst, 1, w) == expect);
}

TEST_CASE("intermediate series specialization") {
  // d_3 (v @ 1) = (alpha + n + b m) v @ 4 = 15/2 v @ 4
  ModuleInstance inst{CoeffDescriptor(OneDimDesc{Rat(2)}), rat_of(1, 2)};
  WeightVector w =
      WeightVector::single(Family::OneDim, 1, AVector::onedim(Rat(1)));
  CHECK(d_act(inst, 3, w) ==
        WeightVector::single(Family::OneDim, 4, AVector::onedim(rat_of(15, 2))));
}

TEST_CASE("center and t-shift") {
  ModuleInstance inst = gamma_inst(Rat(0), Rat(1), Rat(1), Rat(0));
  SampleRng rng(9);
  WeightVector w = rng.weight_vector(inst.coeff, 3, 3);
  CHECK(c_act(w).is_zero());
  CHECK(t_act(0, w) == w);
  CHECK(t_act(3, t_act(-5, w)) == t_act(-2, w));
  WeightVector v =
      WeightVector::single(Family::Gamma, -1, AVector::gamma(UniPoly::x()));
  CHECK(t_act(3, v).components().begin()->first == 2);
}

TEST_CASE("grading of d_act") {
  ModuleInstance inst = gamma_inst(rat_of(1, 2), rat_of(1, 3), Rat(2), rat_of(1, 4));
  SampleRng rng(13);
  for (long m = -4; m <= 4; ++m) {
    WeightVector w = rng.nonzero_weight_vector(inst.coeff, 3, 3);
    WeightVector img = d_act(inst, m, w);
    for (const auto& [n, v] : img.components()) {
      CHECK(w.components().count(n - m) == 1);
    }
  }
}

TEST_CASE("virasoro bracket holds on random vectors") {
  std::vector<ModuleInstance> insts = {
      gamma_inst(rat_of(1, 2), rat_of(1, 3), Rat(2), rat_of(1, 4)),
      {CoeffDescriptor(OneDimDesc{rat_of(-3, 2)}), rat_of(2, 7)},
  };
  SampleRng rng(17);
  for (const auto& inst : insts) {
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        WeightVector w = rng.weight_vector(inst.coeff, 3, 3);
        WeightVector lhs =
            d_act(inst, a, d_act(inst, b, w)) - d_act(inst, b, d_act(inst, a, w));
        CHECK(lhs == d_act(inst, a + b, w) * Rat(b - a));
      }
  }
}

TEST_CASE("twisted action examples") {
  CoeffDescriptor od(OneDimDesc{rat_of(5, 3)});
  // constant twist equals the plain action at alpha = c
  TwistedInstance tw{od, LaurentPoly::constant(rat_of(2, 5))};
  ModuleInstance pl{od, rat_of(2, 5)};
  SampleRng rng(21);
  for (long n = -3; n <= 3; ++n) {
    WeightVector w = rng.weight_vector(od, 3, 0);
    CHECK(twisted_d_act(tw, n, w) == d_act(pl, n, w));
  }

  // beta = t, onedim(b), n = 1 on v @ 0: b v @ 1 + v @ 2
  TwistedInstance tw2{od, LaurentPoly::term(Rat(1), 1)};
  WeightVector v = WeightVector::single(Family::OneDim, 0, AVector::onedim(Rat(1)));
  WeightVector got = twisted_d_act(tw2, 1, v);
  WeightVector expect(Family::OneDim);
  expect.add(1, AVector::onedim(rat_of(5, 3)));
  expect.add(2, AVector::onedim(Rat(1)));
  CHECK(got == expect);

  // beta = 0 is the plain action at alpha = 0
  TwistedInstance tw3{od, LaurentPoly()};
  ModuleInstance pl0{od, Rat(0)};
  WeightVector w = rng.weight_vector(od, 3, 0);
  CHECK(twisted_d_act(tw3, -2, w) == d_act(pl0, -2, w));
}

TEST_CASE("twisted bracket with a genuine twist") {
  CoeffDescriptor g(GammaDesc{Rat(0), Rat(0), Rat(1)});
  LaurentPoly beta;
  beta.add_term(0, Rat(1));
  beta.add_term(1, Rat(2));
  beta.add_term(-3, Rat(-1));
  TwistedInstance tw{g, beta};
  SampleRng rng(25);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      WeightVector w = rng.weight_vector(g, 2, 2);
      WeightVector lhs = twisted_d_act(tw, a, twisted_d_act(tw, b, w)) -
                         twisted_d_act(tw, b, twisted_d_act(tw, a, w));
      CHECK(lhs == twisted_d_act(tw, a + b, w) * Rat(b - a));
    }
}

TEST_CASE("omega on the rank-0 module") {
  // s = 2 gives the constant 2b(1-b); s = 3 annihilates
  Rat b(2);
  ModuleInstance inst{CoeffDescriptor(OneDimDesc{b}), rat_of(1, 3)};
  auto act = plain_action(inst);
  SampleRng rng(29);
  for (int k = 0; k < 15; ++k) {
    long l = rng.int_in(-4, 4), m = rng.int_in(-4, 4), n = rng.int_in(-4, 4);
    WeightVector w =
        WeightVector::single(Family::OneDim, n, AVector::onedim(Rat(1)));
    WeightVector s2 = omega_apply({l, m, 2}, w, act);
    WeightVector expect = WeightVector::single(
        Family::OneDim, n + l, AVector::onedim(Rat(2) * b * (1 - b)));
    CHECK(s2 == expect);
    CHECK(omega_apply({l, m, 3}, w, act).is_zero());
  }
}

TEST_CASE("omega s=0 is the plain composition") {
  ModuleInstance inst = gamma_inst(Rat(0), Rat(1), Rat(1), Rat(0));
  auto act = plain_action(inst);
  SampleRng rng(33);
  WeightVector w = rng.weight_vector(inst.coeff, 2, 2);
  long l = 3, m = -2;
  CHECK(omega_apply({l, m, 0}, w, act) == d_act(inst, l - m, d_act(inst, m, w)));
}

TEST_CASE("dr_squared_shift") {
  // gamma with lambda2 = 5: e_2^2 f = 25 f(x - 4)
  ModuleInstance inst = gamma_inst(Rat(0), Rat(1), Rat(5), Rat(0));
  UniPoly f = poly_parse("x^3 - x + 2");
  WeightVector w = WeightVector::single(Family::Gamma, 0, AVector::gamma(f));
  WeightVector got = dr_squared_shift(inst, 2, w);
  WeightVector expect = WeightVector::single(
      Family::Gamma, 2, AVector::gamma(Rat(25) * poly_shift(f, Rat(4))));
  CHECK(got == expect);

  ModuleInstance od{CoeffDescriptor(OneDimDesc{rat_of(2, 3)}), Rat(0)};
  WeightVector v =
      WeightVector::single(Family::OneDim, 1, AVector::onedim(Rat(1)));
  CHECK(dr_squared_shift(od, 4, v) ==
        WeightVector::single(Family::OneDim, 5, AVector::onedim(rat_of(4, 9))));

  CHECK(dr_squared_shift(inst, 3, WeightVector(Family::Gamma)).is_zero());
}

TEST_CASE("family mismatch is rejected") {
  ModuleInstance inst{CoeffDescriptor(OneDimDesc{Rat(1)}), Rat(0)};
  WeightVector w =
      WeightVector::single(Family::Gamma, 0, AVector::gamma(UniPoly::x()));
  CHECK_THROWS_AS(d_act(inst, 1, w), std::invalid_argument);
}
