#include "junior/series.hpp"

#include <string>

#include "junior/error.hpp"

namespace junior {

TruncatedSeries::TruncatedSeries(std::int64_t limit, std::size_t term_cap)
    : limit_(limit), term_cap_(term_cap) {
  terms_[{0, 0}] = 1;
}

void TruncatedSeries::multiply(const std::vector<Term>& factor) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> out;
  for (const auto& [key, c] : terms_) {
    for (const auto& t : factor) {
      const std::int64_t q = key.first + t.q;
      if (q > limit_) continue;
      auto& slot = out[{q, key.second + t.z}];
      slot += c * t.coeff;
      if (out.size() > term_cap_) {
        throw Error(ErrorKind::TruncationOverflow,
                    "series exceeded " + std::to_string(term_cap_) + " terms");
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
}

void TruncatedSeries::multiply_geometric(std::int64_t step) {
  if (step <= 0) throw Error(ErrorKind::InvalidInput, "geometric step must be positive");
  std::vector<Term> factor;
  for (std::int64_t e = 0; e <= limit_; e += step) factor.push_back({e, 0, 1});
  multiply(factor);
}

std::int64_t TruncatedSeries::coefficient(std::int64_t q, std::int64_t z) const {
  auto it = terms_.find({q, z});
  return it == terms_.end() ? 0 : it->second;
}

}  // namespace junior
