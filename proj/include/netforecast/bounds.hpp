#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "netforecast/optimizer.hpp"

namespace netforecast {

using BigInt = boost::multiprecision::cpp_int;

// Cardinality bounds on the F1 solution space (nonempty feasible binary
// assignments over the candidate-edge variables).
//
// Upper bound: summing the degree constraints caps the number of selected
// edges at c3 = floor(sum_i b_i / 2), so the count is at most
// sum_{k=1..c3} C(m, k) with m the number of candidate edges.
//
// Lower bound: walk the bounds in decreasing order b_(1) >= b_(2) >= ...;
// with eta_j = #{i : b_i = j-1}, the j-th vertex contributes
// g_j = sum_{r=1..b_(j)-j+1} C(n-j-eta_j, r) independent edge groups and
// C1 = g_1 g_2 ... g_k for the largest prefix k where
// eta_k + k + b_(k) <= n and b_(1)+...+b_(k) <= sum_i b_i / 2 hold. The sum
// truncates early once b_(j)-j+1 drops below 1. Degenerate bound vectors use
// the closed forms: all-zero gives 1, all-one gives the perfect-matching
// count C(n,2)C(n-2,2).../floor(n/2)!.
struct BoundsReport {
  long long c3 = 0;
  long long m_ones = 0;  // candidate edge count (ones in B)
  BigInt upper;          // C2
  int k_star = 0;        // largest prefix k satisfying both inequalities
  std::vector<long long> eta;  // eta_1..eta_{#g}
  std::vector<BigInt> g;       // factors actually multiplied
  BigInt lower;                // C1
  enum class SpecialCase { general, all_zero, all_one, truncated } special_case =
      SpecialCase::general;
};

std::string to_string(BoundsReport::SpecialCase c);

BoundsReport bounds_report(const ProblemInstance& p);
BigInt count_upper_bound(const ProblemInstance& p);
BigInt count_lower_bound(const ProblemInstance& p);

// Exact count of feasible nonempty assignments under the per-node bounds,
// by exhaustive enumeration; requires at most 22 variables. The nonempty
// convention matches C2's sum starting at C(m, 1).
std::uint64_t enumerate_solutions(const ProblemInstance& p);

// Exact binomial coefficient; 0 when r < 0, r > n, or n < 0.
BigInt binomial(long long n, long long r);

}  // namespace netforecast
