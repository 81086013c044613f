#ifndef VIRMOD_RUNNER_HPP
#define VIRMOD_RUNNER_HPP

#include <set>

#include "virmod/descriptor_io.hpp"
#include "virmod/suites.hpp"

namespace virmod {

struct RunOptions {
  int window = 5;
  int samples = 20;
  int degree_cap = 4;
  std::uint64_t seed = 1;
  // overrides for the instance-independent oracles; defaults are drawn
  // from the seed
  std::optional<MWOracleConfig> mw;
  std::optional<Rat> ab_b;
  SampleSpec sample_spec() const { return {window, samples, degree_cap, seed}; }
};

// Valid selectors: bracket, hv, lemma3, constant, reach, intertwiner,
// tensor, eh, ab, mw, all. Unknown selectors are configuration errors, as
// are suites whose preconditions the instance cannot meet when selected
// explicitly; under "all" such suites are skipped with a note instead.
ReportDocument run_suites(const InstanceSpec& inst,
                          const std::set<std::string>& selectors,
                          const RunOptions& opts);

}  // namespace virmod

#endif
