#include "indexsum/charsum.hpp"

#include <algorithm>
#include <utility>

namespace indexsum {

CyclotomicValue char_sum_full(const FiniteField& F, const SparsePoly& g) {
  TraceHistogram hist(F.p());
  const auto tr = F.abs_trace_table();
  if (!tr.empty()) {
    for_each_value(F, g, [&](FieldElement, FieldElement v) { hist.add(tr[v.code]); });
  } else {
    for_each_value(F, g, [&](FieldElement, FieldElement v) { hist.add(F.abs_trace(v)); });
  }
  return std::move(hist).value();
}

CyclotomicValue char_sum_nonzero(const FiniteField& F, const SparsePoly& g) {
  return cv_sub(char_sum_full(F, g), cv_char(F, eval_poly(F, g, F.zero())));
}

CyclotomicValue char_sum_via_cosets(const FiniteField& F, const CyclotomicMapping& map, FieldElement b) {
  validate_mapping(F, map);
  const std::uint64_t d = map.d;
  const std::uint64_t coset_size = F.order() / d;
  const std::uint32_t p = F.p(), tb = F.abs_trace(b);
  TraceHistogram hist(p);
  hist.add(tb);  // x = 0 maps to b
  for (std::uint64_t i = 0; i < d; ++i) {
    // C_i = {gamma^{i + d t}}; the branch is a_i R_i there.
    const Branch& br = map.branches[i];
    for_each_on_progression(
        F, br.R, i, d, coset_size,
        [&](FieldElement, FieldElement v) {
          const std::uint32_t t = F.abs_trace(v) + tb;
          hist.add(t >= p ? t - p : t);
        },
        br.a);
  }
  return std::move(hist).value();
}

CyclotomicValue char_sum_range(const FiniteField& F, const SparsePoly& g, std::uint64_t begin, std::uint64_t end) {
  TraceHistogram hist(F.p());
  end = std::min<std::uint64_t>(end, F.q());
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const FieldElement x = idx == 0 ? F.zero() : F.gamma_pow(static_cast<std::int64_t>(idx - 1));
    hist.add(F.abs_trace(eval_poly(F, g, x)));
  }
  return std::move(hist).value();
}

}  // namespace indexsum
