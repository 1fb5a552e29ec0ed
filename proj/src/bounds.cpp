#include "netforecast/bounds.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netforecast {

namespace {

void require_f1(const ProblemInstance& p) {
  if (p.formulation != Formulation::F1) {
    throw std::invalid_argument("solution-space bounds cover F1 only");
  }
  if (static_cast<int>(p.degree_bound.size()) != p.n) {
    throw std::invalid_argument("degree_bound must have one entry per node");
  }
  for (const auto& [i, j] : p.variables) {
    if (i < 1 || i >= j || j > p.n) {
      throw std::invalid_argument("variable endpoints outside 1..n");
    }
  }
}

long long eta_count(const std::vector<long long>& bounds, long long j) {
  // Number of vertices whose bound equals j-1.
  long long c = 0;
  for (long long b : bounds) {
    if (b == j - 1) ++c;
  }
  return c;
}

BigInt all_ones_lower(int n) {
  // Perfect matchings of K_n: C(n,2) C(n-2,2) ... C(q,2) / floor(n/2)! with
  // q = 2 for even n, q = 3 for odd n.
  BigInt num = 1;
  for (long long r = n; r >= (n % 2 == 0 ? 2 : 3); r -= 2) {
    num *= binomial(r, 2);
  }
  BigInt fact = 1;
  for (long long i = 2; i <= n / 2; ++i) fact *= i;
  return num / fact;
}

}  // namespace

std::string to_string(BoundsReport::SpecialCase c) {
  switch (c) {
    case BoundsReport::SpecialCase::general: return "general";
    case BoundsReport::SpecialCase::all_zero: return "all_zero";
    case BoundsReport::SpecialCase::all_one: return "all_one";
    case BoundsReport::SpecialCase::truncated: return "truncated";
  }
  throw std::logic_error("unknown special case");
}

BigInt binomial(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (long long i = 1; i <= r; ++i) {
    result *= (n - r + i);
    result /= i;  // exact at every step: result is C(n-r+i, i)
  }
  return result;
}

BoundsReport bounds_report(const ProblemInstance& p) {
  require_f1(p);
  BoundsReport rep;

  long long bound_sum = std::accumulate(p.degree_bound.begin(),
                                        p.degree_bound.end(), 0LL);
  rep.c3 = bound_sum / 2;
  rep.m_ones = static_cast<long long>(p.variables.size());

  // Upper bound C2.
  if (rep.c3 >= rep.m_ones) {
    rep.upper = (BigInt(1) << rep.m_ones) - 1;
  } else {
    BigInt term = 1;  // C(m, 0)
    for (long long k = 1; k <= rep.c3; ++k) {
      term *= (rep.m_ones - k + 1);
      term /= k;
      rep.upper += term;
    }
  }

  // Lower bound C1.
  const int n = p.n;
  const bool all_zero =
      std::all_of(p.degree_bound.begin(), p.degree_bound.end(),
                  [](long long b) { return b == 0; });
  const bool all_one =
      std::all_of(p.degree_bound.begin(), p.degree_bound.end(),
                  [](long long b) { return b == 1; });
  if (all_zero || n == 0) {
    rep.lower = 1;  // only the edgeless graph
    rep.special_case = BoundsReport::SpecialCase::all_zero;
    return rep;
  }
  if (all_one) {
    rep.lower = all_ones_lower(n);
    rep.special_case = BoundsReport::SpecialCase::all_one;
    return rep;
  }

  std::vector<long long> desc = p.degree_bound;
  std::sort(desc.begin(), desc.end(), std::greater<>());

  // Largest prefix k for which both inequalities hold; the construction
  // consumes vertices in this order, so a failure stops the walk.
  rep.k_star = 0;
  long long prefix_sum = 0;
  for (int k = 1; k <= n; ++k) {
    const long long bk = desc[static_cast<std::size_t>(k) - 1];
    prefix_sum += bk;
    const bool assump1 = eta_count(p.degree_bound, k) + k + bk <= n;
    const bool assump2 = 2 * prefix_sum <= bound_sum;
    if (!(assump1 && assump2)) break;
    rep.k_star = k;
  }

  if (rep.k_star == 0) {
    const long long b1 = desc[0];
    if (eta_count(p.degree_bound, 1) + 1 + b1 <= n) {
      // Only the total-edge inequality failed at k = 1: fall back to g_1.
      const long long avail = n - 1 - eta_count(p.degree_bound, 1);
      BigInt g1 = 0;
      for (long long r = 1; r <= b1; ++r) g1 += binomial(avail, r);
      rep.eta.push_back(eta_count(p.degree_bound, 1));
      rep.g.push_back(g1);
      rep.lower = g1;
    } else {
      // Too few usable vertices for even the first constraint; the edgeless
      // graph is still available.
      rep.lower = 1;
    }
    rep.special_case = BoundsReport::SpecialCase::truncated;
    return rep;
  }

  rep.lower = 1;
  bool truncated = false;
  for (int j = 1; j <= rep.k_star; ++j) {
    const long long bj = desc[static_cast<std::size_t>(j) - 1];
    const long long top = bj - j + 1;
    if (top <= 0) {
      // Later factors would be empty sums; stop early.
      truncated = true;
      break;
    }
    const long long etaj = eta_count(p.degree_bound, j);
    const long long avail = n - j - etaj;
    BigInt gj = 0;
    for (long long r = 1; r <= top; ++r) gj += binomial(avail, r);
    rep.eta.push_back(etaj);
    rep.g.push_back(gj);
    rep.lower *= gj;
  }
  rep.special_case = truncated ? BoundsReport::SpecialCase::truncated
                               : BoundsReport::SpecialCase::general;
  return rep;
}

BigInt count_upper_bound(const ProblemInstance& p) {
  return bounds_report(p).upper;
}

BigInt count_lower_bound(const ProblemInstance& p) {
  return bounds_report(p).lower;
}

std::uint64_t enumerate_solutions(const ProblemInstance& p) {
  require_f1(p);
  const std::size_t m = p.variables.size();
  if (m > 22) {
    throw std::invalid_argument(
        "enumeration oracle limited to 22 variables; instance has " +
        std::to_string(m));
  }
  std::vector<long long> used(static_cast<std::size_t>(p.n), 0);
  std::uint64_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::fill(used.begin(), used.end(), 0);
    bool ok = true;
    std::uint64_t bits = mask;
    while (bits) {
      const int idx = std::countr_zero(bits);
      bits &= bits - 1;
      const auto& [a, b] = p.variables[static_cast<std::size_t>(idx)];
      if (++used[static_cast<std::size_t>(a) - 1] >
              p.degree_bound[static_cast<std::size_t>(a) - 1] ||
          ++used[static_cast<std::size_t>(b) - 1] >
              p.degree_bound[static_cast<std::size_t>(b) - 1]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace netforecast
