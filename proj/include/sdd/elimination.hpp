#pragma once

// Exact maximization of a sum of weighted conjunctions over binary variables by variable
// elimination (max-sum dynamic programming over an elimination order).
//
// Work is linear in the number of terms when every intermediate table stays within the
// scope cap; the structures produced by sigma_6 pruning have small width.

#include <cstdint>
#include <utility>
#include <vector>

namespace sdd {

struct Literal {
  std::int32_t var;
  std::uint8_t value;
};

class MaxSumProblem {
 public:
  explicit MaxSumProblem(std::size_t variables) : variables_(variables) {}

  std::size_t variable_count() const { return variables_; }

  /// Adds `weight` whenever every literal holds. Contradictory literal sets are dropped;
  /// a term without literals is a constant.
  void add_term(const std::vector<Literal>& literals, std::int64_t weight);

  struct Result {
    std::int64_t value = 0;
    std::vector<std::uint8_t> assignment;
    std::size_t max_scope = 0;  // widest intermediate table, in variables
  };

  /// Ties prefer 0. Throws ResourceLimitError if a table would exceed `scope_cap` variables.
  Result solve(std::size_t scope_cap = 20) const;

 private:
  struct Term {
    std::vector<Literal> literals;  // sorted by variable, one per variable
    std::int64_t weight;
  };

  std::size_t variables_;
  std::vector<Term> terms_;
  std::int64_t constant_ = 0;
};

}  // namespace sdd
