#pragma once

#include <vector>

#include <json.hpp>

#include "dimshift/context.hpp"
#include "dimshift/subshift.hpp"

namespace dimshift {

// Nontrivial factor of the characteristic polynomial of the cutoff matrix:
//   g(x) = x^m - coeffs[0] x^{m-1} - ... - coeffs[m-1]
// For 0 < i < q^m the coefficients are the base-q digits of q^m minus the
// minimal prefix of i; for i = 0 they are (q, 0, ..., 0). The full
// polynomial is g(x) * x^trailing, except when q^m - i < m, where the spare
// power of x sits inside g (its low coefficients vanish) and trailing is 0.
struct CharPoly {
  Context ctx;
  long long i;
  std::vector<long long> coeffs;
  long long trailing;
};

// Closed form via the minimal prefix; O(m) arithmetic.
CharPoly charpoly_fast(long long i, const Context& ctx);

// Evaluation of g at x = q, i.e. q^m - sum coeffs[j] q^{m-1-j}. Equals the
// minimal prefix of i.
long long eval_g_at_q(const CharPoly& p);

// Coefficient sequence (a_1, ..., a_N) of the full polynomial
// x^N - a_1 x^{N-1} - ... - a_N with N = q^m - i. Divides out the spare
// power of x in the q^m - i < m regime, asserting exact divisibility.
std::vector<long long> full_coeffs(const CharPoly& p);

// Brute-force oracle: full coefficient sequence from exact traces of matrix
// powers via the Newton recurrence
//   a_j = (trace A^j - a_1 trace A^{j-1} - ... - a_{j-1} trace A) / j,
// every division checked to be exact. The sign convention is validated on a
// 2x2 all-ones fixture (x^2 - 2x) before first use.
std::vector<BigInt> charpoly_newton(long long i, const Context& ctx,
                                    long long max_dim = kDenseBudgetDefault);

// Second oracle: principal-minors sums. Only permutation submatrices have
// nonzero minors, so a_j is accumulated over families of vertex-disjoint
// cycles with total length j, a family of r cycles contributing (-1)^{r+1}.
// Guarded to dimensions q^m - i <= 20; validated on the same 2x2 fixture.
std::vector<long long> charpoly_minors(long long i, const Context& ctx);

nlohmann::json to_json(const CharPoly& p);

}  // namespace dimshift
