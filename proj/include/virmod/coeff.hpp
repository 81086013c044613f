#ifndef VIRMOD_COEFF_HPP
#define VIRMOD_COEFF_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "virmod/rat.hpp"
#include "virmod/unipoly.hpp"

namespace virmod {

// The coefficient modules feeding the Virasoro construction: simple modules
// over the truncated algebra with generators e_0..e_r and bracket
// [e_i, e_j] = (j - i) e_{i+j}, truncated to zero above r.

enum class Family { OneDim, Gamma, QLambda };

std::string family_name(Family f);

/// One-dimensional module at rank 0: the generator acts by the scalar b.
struct OneDimDesc {
  Rat b;
};

/// Module on Q[x]: e_0 f = (x + alpha1) f, e_i f = lambda_i f(x - i) for
/// i = 1, 2. When lambda2 = 0 the module is treated at rank 1 so that the
/// top generator stays injective whenever lambda1 != 0.
struct GammaDesc {
  Rat alpha1;
  Rat lambda1;
  Rat lambda2;
  int effective_rank() const { return lambda2 != 0 ? 2 : 1; }
};

/// Cyclic quotient module: the enveloping algebra modulo the left ideal
/// generated by e_i - lambda_i for i in S.
struct QLambdaDesc {
  int r = 3;
  std::set<int> S;
  std::map<int, Rat> lambda;  // defined on S; absent entries read as 0
  Rat lambda_of(int i) const;
};

class CoeffDescriptor {
 public:
  CoeffDescriptor(OneDimDesc d) : v_(std::move(d)) {}
  CoeffDescriptor(GammaDesc d) : v_(std::move(d)) {}
  CoeffDescriptor(QLambdaDesc d) : v_(std::move(d)) {}

  Family family() const;
  int rank() const;

  const OneDimDesc& onedim() const { return std::get<OneDimDesc>(v_); }
  const GammaDesc& gamma() const { return std::get<GammaDesc>(v_); }
  const QLambdaDesc& qlambda() const { return std::get<QLambdaDesc>(v_); }

 private:
  std::variant<OneDimDesc, GammaDesc, QLambdaDesc> v_;
};

// Structure constants of the truncated algebra: [e_i, e_j] as
// (coefficient, index), absent when i + j > r or the coefficient vanishes.
std::optional<std::pair<Rat, int>> ar_bracket(int i, int j, int r);

/// Ordered monomial in the surviving generators {0..r} \ S, indices
/// non-decreasing left to right. Empty monomial is the cyclic vector.
using Monomial = std::vector<int>;

/// Element of a coefficient module, tagged by family.
class AVector {
 public:
  static AVector zero(Family f);
  static AVector onedim(Rat a);
  static AVector gamma(UniPoly f);
  static AVector qlambda(std::map<Monomial, Rat> terms);
  // the cyclic vector of a QLambda module
  static AVector vac();

  Family family() const { return fam_; }
  bool is_zero() const;

  const Rat& scalar() const;
  const UniPoly& poly() const;
  const std::map<Monomial, Rat>& terms() const;

  AVector operator+(const AVector& o) const;
  AVector operator-(const AVector& o) const;
  AVector operator*(const Rat& s) const;
  bool operator==(const AVector& o) const;

  std::string str() const;

 private:
  explicit AVector(Family f) : fam_(f) {}
  Family fam_;
  Rat scalar_{0};
  UniPoly poly_;
  std::map<Monomial, Rat> terms_;
};

inline AVector operator*(const Rat& s, const AVector& v) { return v * s; }

// Action of the generator e_i on v. Throws std::out_of_range for an index
// outside 0..rank and std::invalid_argument on a family mismatch.
AVector a_act(const CoeffDescriptor& desc, int i, const AVector& v);

// Image of a generator word applied to the cyclic vector, in the canonical
// ordered-monomial basis. word[0] acts last.
AVector q_lambda_straighten(const QLambdaDesc& desc,
                            const std::vector<int>& word);

// Empty iff the descriptor satisfies all of its defining conditions; each
// entry names one violated condition.
std::vector<std::string> validate_descriptor(const CoeffDescriptor& desc);

}  // namespace virmod

#endif
