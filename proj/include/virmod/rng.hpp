#ifndef VIRMOD_RNG_HPP
#define VIRMOD_RNG_HPP

#include <cstdint>
#include <random>

#include "virmod/action.hpp"
#include "virmod/coeff.hpp"

namespace virmod {

/// Deterministic sample source for the verification suites. mt19937_64 is
/// fully specified by the standard and draws go through explicit modular
/// reduction, so a given seed produces the same samples on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  long int_in(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // small rational with numerator in [-9, 9] and denominator in [1, 4]
  Rat rat();
  Rat nonzero_rat();

  UniPoly unipoly(int max_deg);

  AVector avector(const CoeffDescriptor& desc, int max_deg);
  AVector nonzero_avector(const CoeffDescriptor& desc, int max_deg);

  // up to max_comps components with grades in [-grade_window, grade_window]
  WeightVector weight_vector(const CoeffDescriptor& desc, int grade_window,
                             int max_deg, int max_comps = 3);
  WeightVector nonzero_weight_vector(const CoeffDescriptor& desc,
                                     int grade_window, int max_deg,
                                     int max_comps = 3);

 private:
  std::mt19937_64 eng_;
};

}  // namespace virmod

#endif
