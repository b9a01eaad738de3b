#pragma once

#include <string>
#include <vector>

namespace dimshift::verify {

struct Check {
  std::string name;
  bool pass;
  std::string detail;  // empty on success, first failure otherwise
};

// Oracle-equivalence and invariant suite over all contexts with q <= q_max,
// m <= m_max. Matrix-backed checks skip instances above the dense budget.
std::vector<Check> run(long long q_max, int m_max, long long dense_budget);

}  // namespace dimshift::verify
