#include "sdd/elimination.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "sdd/error.hpp"

namespace sdd {

void MaxSumProblem::add_term(const std::vector<Literal>& literals, std::int64_t weight) {
  Term t{literals, weight};
  std::sort(t.literals.begin(), t.literals.end(), [](Literal a, Literal b) { return a.var < b.var; });
  for (std::size_t i = 0; i < t.literals.size(); ++i) {
    if (t.literals[i].var < 0 || static_cast<std::size_t>(t.literals[i].var) >= variables_)
      throw InvariantViolation("literal variable out of range");
    if (i > 0 && t.literals[i].var == t.literals[i - 1].var) {
      if (t.literals[i].value != t.literals[i - 1].value) return;  // never satisfied
    }
  }
  t.literals.erase(std::unique(t.literals.begin(), t.literals.end(),
                               [](Literal a, Literal b) { return a.var == b.var; }),
                   t.literals.end());
  if (t.literals.empty()) {
    constant_ += weight;
    return;
  }
  terms_.push_back(std::move(t));
}

namespace {

struct Factor {
  std::vector<std::int32_t> scope;  // sorted; bit b of a table index is scope[b]
  std::vector<std::int64_t> table;
  bool alive = true;
};

struct Step {
  std::int32_t var;
  std::vector<std::int32_t> scope;
  std::vector<std::uint8_t> argmax;
};

std::vector<std::int32_t> merged(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
  std::vector<std::int32_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

MaxSumProblem::Result MaxSumProblem::solve(std::size_t scope_cap) const {
  const std::size_t n = variables_;
  std::vector<Factor> factors;
  std::map<std::vector<std::int32_t>, std::size_t> by_scope;
  for (const auto& t : terms_) {
    std::vector<std::int32_t> scope;
    std::size_t index = 0;
    for (std::size_t b = 0; b < t.literals.size(); ++b) {
      scope.push_back(t.literals[b].var);
      index |= static_cast<std::size_t>(t.literals[b].value) << b;
    }
    auto [it, inserted] = by_scope.emplace(scope, factors.size());
    if (inserted) factors.push_back(Factor{scope, std::vector<std::int64_t>(std::size_t{1} << scope.size(), 0), true});
    factors[it->second].table[index] += t.weight;
  }

  std::vector<std::vector<std::size_t>> var_factors(n);
  std::vector<std::vector<std::int32_t>> neighbors(n);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    for (auto v : factors[f].scope) {
      var_factors[static_cast<std::size_t>(v)].push_back(f);
      neighbors[static_cast<std::size_t>(v)] = merged(neighbors[static_cast<std::size_t>(v)], factors[f].scope);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = neighbors[v];
    nb.erase(std::remove(nb.begin(), nb.end(), static_cast<std::int32_t>(v)), nb.end());
  }

  using Entry = std::pair<std::size_t, std::int32_t>;  // (degree, variable)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::size_t v = 0; v < n; ++v) queue.emplace(neighbors[v].size(), static_cast<std::int32_t>(v));
  std::vector<std::uint8_t> eliminated(n, 0);

  Result result;
  result.value = constant_;
  std::vector<Step> steps;
  steps.reserve(n);

  while (!queue.empty()) {
    const auto [degree, x] = queue.top();
    queue.pop();
    const auto xs = static_cast<std::size_t>(x);
    if (eliminated[xs] || degree != neighbors[xs].size()) continue;
    eliminated[xs] = 1;

    std::vector<std::size_t> involved;
    for (auto f : var_factors[xs])
      if (factors[f].alive) involved.push_back(f);
    std::vector<std::int32_t> scope = neighbors[xs];
    if (scope.size() > scope_cap)
      throw ResourceLimitError("elimination table over " + std::to_string(scope.size()) +
                               " variables exceeds the cap of " + std::to_string(scope_cap));
    result.max_scope = std::max(result.max_scope, scope.size() + 1);

    // For each involved factor, where each of its variables sits in the new scope (-1 for x).
    std::vector<std::vector<int>> positions(involved.size());
    for (std::size_t k = 0; k < involved.size(); ++k) {
      for (auto v : factors[involved[k]].scope) {
        if (v == x) {
          positions[k].push_back(-1);
        } else {
          const auto it = std::lower_bound(scope.begin(), scope.end(), v);
          positions[k].push_back(static_cast<int>(it - scope.begin()));
        }
      }
    }

    const std::size_t size = std::size_t{1} << scope.size();
    Factor reduced{scope, std::vector<std::int64_t>(size, 0), true};
    Step step{x, scope, std::vector<std::uint8_t>(size, 0)};
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::int64_t best[2] = {0, 0};
      for (int xv = 0; xv < 2; ++xv) {
        for (std::size_t k = 0; k < involved.size(); ++k) {
          std::size_t fidx = 0;
          const auto& pos = positions[k];
          for (std::size_t b = 0; b < pos.size(); ++b) {
            const std::size_t bit = pos[b] < 0 ? static_cast<std::size_t>(xv) : (idx >> pos[b]) & 1;
            fidx |= bit << b;
          }
          best[xv] += factors[involved[k]].table[fidx];
        }
      }
      step.argmax[idx] = best[1] > best[0] ? 1 : 0;
      reduced.table[idx] = std::max(best[0], best[1]);
    }
    for (auto f : involved) {
      factors[f].alive = false;
      factors[f].table.clear();
      factors[f].table.shrink_to_fit();
    }
    steps.push_back(std::move(step));

    if (scope.empty()) {
      result.value += reduced.table[0];
    } else {
      const std::size_t id = factors.size();
      for (auto v : scope) var_factors[static_cast<std::size_t>(v)].push_back(id);
      factors.push_back(std::move(reduced));
      for (auto v : scope) {
        auto& nb = neighbors[static_cast<std::size_t>(v)];
        nb = merged(nb, scope);
        nb.erase(std::remove_if(nb.begin(), nb.end(), [&](std::int32_t y) { return y == v || y == x; }), nb.end());
        queue.emplace(nb.size(), v);
      }
    }
    neighbors[xs].clear();
  }

  result.assignment.assign(n, 0);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::size_t idx = 0;
    for (std::size_t b = 0; b < it->scope.size(); ++b)
      idx |= static_cast<std::size_t>(result.assignment[static_cast<std::size_t>(it->scope[b])]) << b;
    result.assignment[static_cast<std::size_t>(it->var)] = it->argmax[idx];
  }
  return result;
}

}  // namespace sdd
