#include <doctest.h>

#include "virmod/suites.hpp"

using namespace virmod;

TEST_CASE("reachability: rank-2 module fills a small slice") {
  ModuleInstance inst{
      CoeffDescriptor(GammaDesc{rat_of(1, 2), rat_of(1, 3), Rat(2)}),
      rat_of(1, 4)};
  WeightVector seed = WeightVector::single(
      Family::Gamma, 0, AVector::gamma(UniPoly::constant(Rat(1))));
  ProbeResult res = reachability_probe(inst, seed, 2, -1, 1, 4, 3);
  CHECK(res.slice_dim == 9);  // degrees 0..2 at grades -1..1
  CHECK(res.full);
  CHECK(res.slice_rank == 9);
  CHECK(res.report.passed());
}

TEST_CASE("reachability: trivial module shows the deficit") {
  // b = 0, alpha = 0: d_m kills the grade-0 component entirely
  ModuleInstance inst{CoeffDescriptor(OneDimDesc{Rat(0)}), Rat(0)};
  WeightVector seed =
      WeightVector::single(Family::OneDim, 0, AVector::onedim(Rat(1)));
  ProbeResult res = reachability_probe(inst, seed, 0, -2, 2, 4, 3);
  CHECK(res.slice_dim == 5);
  CHECK(res.slice_rank == 1);
  CHECK(!res.full);
  CHECK(res.span_rank == 1);
}

TEST_CASE("reachability: span grows monotonically with word length") {
  ModuleInstance inst{CoeffDescriptor(GammaDesc{Rat(0), Rat(1), Rat(1)}),
                     rat_of(1, 3)};
  WeightVector seed =
      WeightVector::single(Family::Gamma, 0, AVector::gamma(UniPoly::x()));
  long prev = 0;
  for (int len = 0; len <= 3; ++len) {
    ProbeResult res = reachability_probe(inst, seed, 2, -1, 1, 3, len);
    CHECK(res.slice_rank >= prev);
    prev = res.slice_rank;
  }
  CHECK(prev > 1);
}

TEST_CASE("reachability: dimension cap is a configuration error") {
  ModuleInstance inst{CoeffDescriptor(GammaDesc{Rat(0), Rat(1), Rat(1)}),
                     Rat(0)};
  WeightVector seed =
      WeightVector::single(Family::Gamma, 0, AVector::gamma(UniPoly::x()));
  CHECK_THROWS_AS(reachability_probe(inst, seed, 10, -5, 5, 3, 2, 10),
                  ConfigError);
}
