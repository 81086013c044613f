#include "virmod/rng.hpp"

#include <algorithm>

namespace virmod {

Rat SampleRng::rat() {
  long num = int_in(-9, 9);
  long den = int_in(1, 4);
  return rat_of(num, den);
}

Rat SampleRng::nonzero_rat() {
  for (;;) {
    Rat q = rat();
    if (q != 0) return q;
  }
}

UniPoly SampleRng::unipoly(int max_deg) {
  std::vector<Rat> c(static_cast<std::size_t>(int_in(0, max_deg)) + 1);
  for (auto& a : c) a = rat();
  return UniPoly(std::move(c));
}

AVector SampleRng::avector(const CoeffDescriptor& desc, int max_deg) {
  switch (desc.family()) {
    case Family::OneDim:
      return AVector::onedim(rat());
    case Family::Gamma:
      return AVector::gamma(unipoly(max_deg));
    case Family::QLambda: {
      const auto& q = desc.qlambda();
      std::vector<int> free_gens;
      for (int i = 0; i <= q.r; ++i)
        if (!q.S.count(i)) free_gens.push_back(i);
      std::map<Monomial, Rat> terms;
      long nterms = int_in(1, 3);
      for (long t = 0; t < nterms; ++t) {
        Monomial m;
        long len = int_in(0, 2);
        for (long k = 0; k < len; ++k)
          m.push_back(free_gens[static_cast<std::size_t>(
              int_in(0, static_cast<long>(free_gens.size()) - 1))]);
        std::sort(m.begin(), m.end());
        auto it = terms.find(m);
        if (it == terms.end())
          terms.emplace(std::move(m), rat());
        else
          it->second += rat();
      }
      return AVector::qlambda(std::move(terms));
    }
  }
  throw std::logic_error("unreachable");
}

AVector SampleRng::nonzero_avector(const CoeffDescriptor& desc, int max_deg) {
  for (;;) {
    AVector v = avector(desc, max_deg);
    if (!v.is_zero()) return v;
  }
}

WeightVector SampleRng::weight_vector(const CoeffDescriptor& desc,
                                      int grade_window, int max_deg,
                                      int max_comps) {
  WeightVector w(desc.family());
  long n = int_in(1, max_comps);
  for (long k = 0; k < n; ++k)
    w.add(int_in(-grade_window, grade_window), avector(desc, max_deg));
  return w;
}

WeightVector SampleRng::nonzero_weight_vector(const CoeffDescriptor& desc,
                                              int grade_window, int max_deg,
                                              int max_comps) {
  for (;;) {
    WeightVector w = weight_vector(desc, grade_window, max_deg, max_comps);
    if (!w.is_zero()) return w;
  }
}

}  // namespace virmod
