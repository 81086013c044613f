#ifndef VIRMOD_DESCRIPTOR_IO_HPP
#define VIRMOD_DESCRIPTOR_IO_HPP

#include <variant>

#include "virmod/action.hpp"
#include "virmod/report.hpp"

namespace virmod {

/// Parsed descriptor file: a coefficient module plus the mode it is to be
/// instantiated in (plain weight offset alpha, or twist polynomial beta).
struct InstanceSpec {
  CoeffDescriptor desc;
  std::variant<Rat, LaurentPoly> mode;  // Rat = plain alpha, LaurentPoly = beta

  bool twisted() const { return std::holds_alternative<LaurentPoly>(mode); }
  ModuleInstance plain() const;       // ConfigError when twisted
  TwistedInstance twisted_inst() const;
  // The plain instance at alpha = 0 on the same coefficient module, used by
  // suites that are only defined there.
  ModuleInstance at_zero() const { return {desc, Rat(0)}; }
};

// Throws ParseError on malformed input and ConfigError when the descriptor
// violates its family conditions (the violations are listed in the message).
InstanceSpec parse_instance_spec(const std::string& text);
InstanceSpec load_instance_spec(const std::string& path);

// Canonical serialization; parse(canonical_json(x)) == x.
Json canonical_json(const InstanceSpec& spec);

std::string describe(const InstanceSpec& spec);

// Operator literals: "d(3)", "t(-2)", "c", "omega(l,m,s)".
struct OperatorSpec {
  enum class Kind { D, T, C, Omega } kind;
  long a = 0;
  long b = 0;
  unsigned s = 0;
};

OperatorSpec parse_operator(const std::string& text);

WeightVector apply_operator(const InstanceSpec& inst, const OperatorSpec& op,
                            const WeightVector& w);

// Vector literals: semicolon-separated "component @ grade" pairs, where a
// component is a rational (onedim), a polynomial in x (gamma), or a sum of
// coefficient*[monomial] terms (qlambda), e.g. "2*[0,1] + 1/3*[] @ -1".
WeightVector parse_weight_vector(const CoeffDescriptor& desc,
                                 const std::string& text);

}  // namespace virmod

#endif
