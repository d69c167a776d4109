#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace junior {

/// A bivariate series sum c_{e,k} q^e z^k with integer q-exponents in
/// [0, limit] (callers choose the unit) and integer z-exponents. Terms with
/// q-exponent above the limit are dropped on every multiplication.
class TruncatedSeries {
 public:
  struct Term {
    std::int64_t q = 0;
    std::int64_t z = 0;
    std::int64_t coeff = 1;
  };

  TruncatedSeries(std::int64_t limit, std::size_t term_cap);

  /// Multiplies by a finite polynomial.
  void multiply(const std::vector<Term>& factor);
  /// Multiplies by 1 / (1 - q^step), expanded up to the limit.
  void multiply_geometric(std::int64_t step);

  std::int64_t coefficient(std::int64_t q, std::int64_t z) const;
  std::size_t term_count() const { return terms_.size(); }
  std::int64_t limit() const { return limit_; }

 private:
  std::int64_t limit_;
  std::size_t term_cap_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> terms_;
};

}  // namespace junior
