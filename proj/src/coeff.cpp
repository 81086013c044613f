#include "virmod/coeff.hpp"

#include <sstream>

namespace virmod {

std::string family_name(Family f) {
  switch (f) {
    case Family::OneDim: return "onedim";
    case Family::Gamma: return "gamma";
    case Family::QLambda: return "qlambda";
  }
  return "?";
}

Rat QLambdaDesc::lambda_of(int i) const {
  auto it = lambda.find(i);
  return it == lambda.end() ? Rat(0) : it->second;
}

Family CoeffDescriptor::family() const {
  if (std::holds_alternative<OneDimDesc>(v_)) return Family::OneDim;
  if (std::holds_alternative<GammaDesc>(v_)) return Family::Gamma;
  return Family::QLambda;
}

int CoeffDescriptor::rank() const {
  switch (family()) {
    case Family::OneDim: return 0;
    case Family::Gamma: return gamma().effective_rank();
    case Family::QLambda: return qlambda().r;
  }
  return 0;
}

std::optional<std::pair<Rat, int>> ar_bracket(int i, int j, int r) {
  if (i < 0 || j < 0 || i > r || j > r)
    throw std::out_of_range("ar_bracket index out of range");
  if (i + j > r || i == j) return std::nullopt;
  return std::make_pair(Rat(j - i), i + j);
}

AVector AVector::zero(Family f) { return AVector(f); }

AVector AVector::onedim(Rat a) {
  AVector v(Family::OneDim);
  v.scalar_ = std::move(a);
  return v;
}

AVector AVector::gamma(UniPoly f) {
  AVector v(Family::Gamma);
  v.poly_ = std::move(f);
  return v;
}

AVector AVector::qlambda(std::map<Monomial, Rat> terms) {
  AVector v(Family::QLambda);
  for (auto& [m, c] : terms)
    if (c != 0) v.terms_.emplace(m, std::move(c));
  return v;
}

AVector AVector::vac() { return qlambda({{Monomial{}, Rat(1)}}); }

bool AVector::is_zero() const {
  switch (fam_) {
    case Family::OneDim: return scalar_ == 0;
    case Family::Gamma: return poly_.is_zero();
    case Family::QLambda: return terms_.empty();
  }
  return true;
}

const Rat& AVector::scalar() const {
  if (fam_ != Family::OneDim) throw std::invalid_argument("not a onedim vector");
  return scalar_;
}

const UniPoly& AVector::poly() const {
  if (fam_ != Family::Gamma) throw std::invalid_argument("not a gamma vector");
  return poly_;
}

const std::map<Monomial, Rat>& AVector::terms() const {
  if (fam_ != Family::QLambda)
    throw std::invalid_argument("not a qlambda vector");
  return terms_;
}

AVector AVector::operator+(const AVector& o) const {
  if (fam_ != o.fam_) throw std::invalid_argument("family mismatch in +");
  AVector r(fam_);
  switch (fam_) {
    case Family::OneDim: r.scalar_ = scalar_ + o.scalar_; break;
    case Family::Gamma: r.poly_ = poly_ + o.poly_; break;
    case Family::QLambda: {
      r.terms_ = terms_;
      for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
          r.terms_.emplace(m, c);
        } else {
          it->second += c;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
      break;
    }
  }
  return r;
}

AVector AVector::operator-(const AVector& o) const { return *this + o * Rat(-1); }

AVector AVector::operator*(const Rat& s) const {
  AVector r(fam_);
  if (s == 0) return r;
  switch (fam_) {
    case Family::OneDim: r.scalar_ = scalar_ * s; break;
    case Family::Gamma: r.poly_ = poly_ * s; break;
    case Family::QLambda:
      for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
      break;
  }
  return r;
}

bool AVector::operator==(const AVector& o) const {
  if (fam_ != o.fam_) return false;
  switch (fam_) {
    case Family::OneDim: return scalar_ == o.scalar_;
    case Family::Gamma: return poly_ == o.poly_;
    case Family::QLambda: return terms_ == o.terms_;
  }
  return false;
}

std::string AVector::str() const {
  switch (fam_) {
    case Family::OneDim: return rat_str(scalar_);
    case Family::Gamma: return poly_.str();
    case Family::QLambda: {
      if (terms_.empty()) return "0";
      std::ostringstream os;
      bool first = true;
      for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c) << "*[";
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (i) os << ",";
          os << m[i];
        }
        os << "]";
      }
      return os.str();
    }
  }
  return "?";
}

namespace {

// Insert generator i on the left of the normal monomial m (applied to the
// cyclic vector) and renormalize. m is sorted with all letters outside S.
// Rewrite rules: e_i e_j = e_j e_i + (j-i) e_{i+j} (zero above rank r), and
// a generator with index in S acting directly on the cyclic vector is the
// scalar lambda_i. The bracket term is strictly shorter and every swap
// lands on the direct-prepend case, so the recursion terminates.
void apply_gen_mono(const QLambdaDesc& d, int i, const Monomial& m,
                    const Rat& coef, std::map<Monomial, Rat>& out);

void accumulate(std::map<Monomial, Rat>& out, Monomial m, const Rat& c) {
  if (c == 0) return;
  auto it = out.find(m);
  if (it == out.end()) {
    out.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

void apply_gen_mono(const QLambdaDesc& d, int i, const Monomial& m,
                    const Rat& coef, std::map<Monomial, Rat>& out) {
  const bool in_S = d.S.count(i) != 0;
  if (!in_S && (m.empty() || i <= m.front())) {
    Monomial nm;
    nm.reserve(m.size() + 1);
    nm.push_back(i);
    nm.insert(nm.end(), m.begin(), m.end());
    accumulate(out, std::move(nm), coef);
    return;
  }
  if (in_S && m.empty()) {
    accumulate(out, Monomial{}, coef * d.lambda_of(i));
    return;
  }
  // commute past the leading letter j
  const int j = m.front();
  Monomial rest(m.begin() + 1, m.end());
  std::map<Monomial, Rat> inner;
  apply_gen_mono(d, i, rest, Rat(1), inner);
  for (const auto& [mm, cc] : inner) apply_gen_mono(d, j, mm, coef * cc, out);
  if (i + j <= d.r) {
    std::map<Monomial, Rat> br;
    apply_gen_mono(d, i + j, rest, Rat(1), br);
    for (const auto& [mm, cc] : br)
      accumulate(out, mm, coef * cc * Rat(j - i));
  }
}

AVector q_apply_gen(const QLambdaDesc& d, int i, const AVector& v) {
  std::map<Monomial, Rat> out;
  for (const auto& [m, c] : v.terms()) apply_gen_mono(d, i, m, c, out);
  return AVector::qlambda(std::move(out));
}

}  // namespace

AVector a_act(const CoeffDescriptor& desc, int i, const AVector& v) {
  if (desc.family() != v.family())
    throw std::invalid_argument("a_act: family mismatch");
  switch (desc.family()) {
    case Family::OneDim: {
      if (i != 0) throw std::out_of_range("a_act: onedim index must be 0");
      return AVector::onedim(desc.onedim().b * v.scalar());
    }
    case Family::Gamma: {
      const auto& g = desc.gamma();
      if (i < 0 || i > 2) throw std::out_of_range("a_act: gamma index");
      if (i == 0)
        return AVector::gamma((UniPoly::x() + UniPoly::constant(g.alpha1)) *
                              v.poly());
      const Rat& lam = (i == 1) ? g.lambda1 : g.lambda2;
      if (lam == 0) return AVector::zero(Family::Gamma);
      return AVector::gamma(lam * poly_shift(v.poly(), Rat(i)));
    }
    case Family::QLambda: {
      const auto& q = desc.qlambda();
      if (i < 0 || i > q.r) throw std::out_of_range("a_act: qlambda index");
      return q_apply_gen(q, i, v);
    }
  }
  throw std::logic_error("unreachable");
}

AVector q_lambda_straighten(const QLambdaDesc& desc,
                            const std::vector<int>& word) {
  for (int i : word)
    if (i < 0 || i > desc.r)
      throw std::out_of_range("straighten: index out of range");
  AVector v = AVector::vac();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = q_apply_gen(desc, *it, v);
  return v;
}

std::vector<std::string> validate_descriptor(const CoeffDescriptor& desc) {
  std::vector<std::string> bad;
  switch (desc.family()) {
    case Family::OneDim:
      break;
    case Family::Gamma: {
      const auto& g = desc.gamma();
      if (g.lambda1 == 0 && g.lambda2 == 0)
        bad.push_back("gamma: lambda1 and lambda2 are both zero");
      break;
    }
    case Family::QLambda: {
      const auto& q = desc.qlambda();
      if (q.r < 3) bad.push_back("qlambda: r must be at least 3");
      for (int i : q.S)
        if (i < 1 || i > q.r)
          bad.push_back("qlambda: S contains index " + std::to_string(i) +
                        " outside 1.." + std::to_string(q.r));
      for (const auto& [i, c] : q.lambda)
        if (!q.S.count(i))
          bad.push_back("qlambda: lambda defined at " + std::to_string(i) +
                        " which is not in S");
      if (!q.S.count(q.r) || q.lambda_of(q.r) == 0)
        bad.push_back("condition (I): r in S with lambda_r nonzero");
      for (int i : q.S)
        for (int j : q.S)
          if (i < j && q.S.count(i + j) && q.lambda_of(i + j) != 0)
            bad.push_back("condition (II): lambda_" + std::to_string(i + j) +
                          " must vanish since " + std::to_string(i) + "+" +
                          std::to_string(j) + " lies in S");
      for (int j = 1; j <= q.r; ++j)
        if (!q.S.count(j) && !q.S.count(q.r - j))
          bad.push_back("condition (III): " + std::to_string(q.r) + "-" +
                        std::to_string(j) + " must lie in S");
      break;
    }
  }
  return bad;
}

}  // namespace virmod
