#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dimshift/base_arith.hpp"
#include "dimshift/context.hpp"

namespace dimshift {

using BigInt = boost::multiprecision::cpp_int;

// Default cap on the dimension of a materialized matrix. The CLI lets the
// environment override it (DIMSHIFT_DENSE_BUDGET).
inline constexpr long long kDenseBudgetDefault = 4096;

// The word-overlap transition matrix A_m with the first `cutoff` rows and
// columns removed. Matrix indices are 1-based, matching the usual statement
// of the entry rule; all arithmetic happens on the 0-based values r-1, c-1.
// The full matrix has entry (r, c) = 1 iff res(r-1, m-1) = part(c-1, 1),
// i.e. the (m-1)-suffix of the row word equals the (m-1)-prefix of the
// column word. Rows and columns of the full matrix each hold exactly q ones.
struct TransitionMatrix {
  Context ctx;
  long long cutoff;

  explicit TransitionMatrix(const Context& ctx_, long long cutoff_ = 0)
      : ctx(ctx_), cutoff(cutoff_) {
    if (cutoff < 0 || cutoff > ctx.size())
      throw std::out_of_range("TransitionMatrix: cutoff outside [0, q^m]");
  }

  long long dim() const { return ctx.size() - cutoff; }
  long long lo() const { return cutoff + 1; }  // first valid 1-based index
  long long hi() const { return ctx.size(); }  // last valid 1-based index
};

// Entry of the submatrix; r and c must lie in [cutoff+1, q^m].
int entry(long long r, long long c, const TransitionMatrix& tm);

// Entry of the k-th power of the full matrix (cutoff must be 0), for
// 1 <= k <= m: equals 1 iff res(r-1, m-k) = part(c-1, k). At k = m this is
// identically 1.
int power_entry(long long r, long long c, int k, const TransitionMatrix& tm);

// Materialized 0/1 matrix, row-major. Entries are exact.
struct DenseMatrix {
  long long n = 0;
  std::vector<std::uint8_t> a;
  std::uint8_t at(long long r, long long c) const {
    return a[static_cast<std::size_t>(r * n + c)];
  }
};

// Materializes the submatrix; throws if dim() exceeds max_dim.
DenseMatrix dense(const TransitionMatrix& tm, long long max_dim = kDenseBudgetDefault);

// Plain-text dump: one row per line, '0'/'1' without separators.
void dump_grid(const DenseMatrix& dm, std::ostream& os);

// Trace of the k-th power (k >= 1), exact. Uses the power-entry predicate
// when cutoff = 0 and k <= m; otherwise materializes and multiplies with
// unbounded integers.
BigInt trace_power(const TransitionMatrix& tm, int k,
                   long long max_dim = kDenseBudgetDefault);

// True iff the principal submatrix on P (1-based indices within range) has
// exactly one 1 in every row and every column.
bool is_permutation_submatrix(const std::vector<long long>& P,
                              const TransitionMatrix& tm);

// A k-cycle: 1-based indices with a transition from each element to the
// next and from the last back to the first. Cycles are stored with their
// smallest element first.
struct Cycle {
  Context ctx;
  std::vector<long long> elements;
  int k() const { return static_cast<int>(elements.size()); }
};

// Validates the cycle property against the full matrix at the cycle's own
// word length, with all elements above `cutoff`.
bool is_cycle(const Cycle& P, long long cutoff = 0);

// The unique l(i-1)-cycle whose smallest element is i. Requires i-1 to be
// minimal. Element n (2-based) has value q^{n-1} res(i-1, m-n+1) +
// part(i-1, m-n+1).
Cycle unique_cycle(long long i, const TransitionMatrix& tm);

// Elementwise truncation of a cycle at word length M down to length m:
// each element e maps to part(e-1, M-m) + 1. Throws if the image is not a
// cycle (the preconditions of the truncation lemma were violated).
Cycle cycle_down(const Cycle& P, int m);

// Iterated one-step lift from the cycle's word length up to M: a single
// lift maps value v_j to q v_j + res(v_{j+1}, 1) (indices cyclic).
// Inverse of cycle_down on its image.
Cycle cycle_up(const Cycle& P, int M);

// Number of k-cycles (as sets) lying entirely inside the allowed index
// range, for 1 <= k <= m. Counts by walking the unique cycle of each
// minimal element of prefix length k; for k <= m that enumeration is exact.
long long count_cycles(const TransitionMatrix& tm, int k);

// Exhaustive simple-cycle search by DFS, independent of the minimal-prefix
// machinery. Returns every cycle of length <= max_len inside the submatrix,
// smallest element first. Intended for cross-checks and the principal-
// minors oracle; cost grows quickly with dim().
std::vector<Cycle> enumerate_cycles(const TransitionMatrix& tm, int max_len);

}  // namespace dimshift
