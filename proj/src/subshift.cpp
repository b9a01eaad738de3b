#include "dimshift/subshift.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "dimshift/prefix.hpp"

namespace dimshift {

namespace {

void check_index(long long v, const TransitionMatrix& tm, const char* who) {
  if (v < tm.lo() || v > tm.hi())
    throw std::out_of_range(std::string(who) + ": index outside submatrix range");
}

// 0-based successor values of a 0-based value v in the full matrix:
// q*res(v, m-1) + d for d = 0..q-1.
long long successor_base(long long v, const Context& ctx) {
  return ctx.q * res(v, ctx.m - 1, ctx);
}

}  // namespace

int entry(long long r, long long c, const TransitionMatrix& tm) {
  check_index(r, tm, "entry");
  check_index(c, tm, "entry");
  const Context& ctx = tm.ctx;
  return res(r - 1, ctx.m - 1, ctx) == part(c - 1, 1, ctx) ? 1 : 0;
}

int power_entry(long long r, long long c, int k, const TransitionMatrix& tm) {
  if (tm.cutoff != 0)
    throw std::domain_error("power_entry: defined on the full matrix only");
  if (k < 1 || k > tm.ctx.m)
    throw std::out_of_range("power_entry: k outside [1, m]");
  check_index(r, tm, "power_entry");
  check_index(c, tm, "power_entry");
  const Context& ctx = tm.ctx;
  return res(r - 1, ctx.m - k, ctx) == part(c - 1, k, ctx) ? 1 : 0;
}

DenseMatrix dense(const TransitionMatrix& tm, long long max_dim) {
  const long long n = tm.dim();
  if (n > max_dim)
    throw std::length_error("dense: dimension exceeds the configured budget");
  DenseMatrix dm;
  dm.n = n;
  dm.a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  const Context& ctx = tm.ctx;
  for (long long r = 0; r < n; ++r) {
    const long long base = successor_base(tm.cutoff + r, ctx);
    for (long long d = 0; d < ctx.q; ++d) {
      const long long c = base + d - tm.cutoff;
      if (c >= 0 && c < n) dm.a[static_cast<std::size_t>(r * n + c)] = 1;
    }
  }
  return dm;
}

void dump_grid(const DenseMatrix& dm, std::ostream& os) {
  for (long long r = 0; r < dm.n; ++r) {
    for (long long c = 0; c < dm.n; ++c) os << (dm.at(r, c) ? '1' : '0');
    os << '\n';
  }
}

BigInt trace_power(const TransitionMatrix& tm, int k, long long max_dim) {
  if (k < 1) throw std::out_of_range("trace_power: k must be >= 1");
  const Context& ctx = tm.ctx;
  if (tm.cutoff == 0 && k <= ctx.m) {
    // Diagonal of the k-th power straight from the predicate.
    long long t = 0;
    for (long long v = 0; v < ctx.size(); ++v)
      if (res(v, ctx.m - k, ctx) == part(v, k, ctx)) ++t;
    return BigInt(t);
  }
  const long long n = tm.dim();
  if (n > max_dim)
    throw std::length_error("trace_power: dimension exceeds the configured budget");
  if (n == 0) return BigInt(0);
  // P := A^k by repeated multiplication with the (sparse) successor lists.
  std::vector<std::vector<long long>> succ(static_cast<std::size_t>(n));
  for (long long r = 0; r < n; ++r) {
    const long long base = successor_base(tm.cutoff + r, ctx);
    for (long long d = 0; d < ctx.q; ++d) {
      const long long c = base + d - tm.cutoff;
      if (c >= 0 && c < n) succ[static_cast<std::size_t>(r)].push_back(c);
    }
  }
  std::vector<BigInt> P(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (long long r = 0; r < n; ++r)
    for (long long c : succ[static_cast<std::size_t>(r)])
      P[static_cast<std::size_t>(r * n + c)] = 1;
  std::vector<BigInt> next(P.size());
  for (int step = 1; step < k; ++step) {
    std::fill(next.begin(), next.end(), BigInt(0));
    for (long long r = 0; r < n; ++r)
      for (long long mid = 0; mid < n; ++mid) {
        const BigInt& x = P[static_cast<std::size_t>(r * n + mid)];
        if (x == 0) continue;
        for (long long c : succ[static_cast<std::size_t>(mid)])
          next[static_cast<std::size_t>(r * n + c)] += x;
      }
    P.swap(next);
  }
  BigInt t = 0;
  for (long long r = 0; r < n; ++r) t += P[static_cast<std::size_t>(r * n + r)];
  return t;
}

bool is_permutation_submatrix(const std::vector<long long>& P,
                              const TransitionMatrix& tm) {
  for (long long v : P) check_index(v, tm, "is_permutation_submatrix");
  const std::size_t n = P.size();
  std::vector<int> row_ones(n, 0), col_ones(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (entry(P[r], P[c], tm)) {
        ++row_ones[r];
        ++col_ones[c];
      }
  for (std::size_t j = 0; j < n; ++j)
    if (row_ones[j] != 1 || col_ones[j] != 1) return false;
  return true;
}

bool is_cycle(const Cycle& P, long long cutoff) {
  if (P.elements.empty()) return false;
  const TransitionMatrix full(P.ctx, 0);
  std::set<long long> seen;
  for (long long e : P.elements) {
    if (e <= cutoff || e > P.ctx.size()) return false;
    if (!seen.insert(e).second) return false;  // repeated element
  }
  const int k = P.k();
  for (int j = 0; j < k; ++j)
    if (!entry(P.elements[static_cast<std::size_t>(j)],
               P.elements[static_cast<std::size_t>((j + 1) % k)], full))
      return false;
  return true;
}

Cycle unique_cycle(long long i, const TransitionMatrix& tm) {
  check_index(i, tm, "unique_cycle");
  const Context& ctx = tm.ctx;
  const long long v = i - 1;
  if (!is_minimal(v, ctx))
    throw std::domain_error("unique_cycle: i-1 is not minimal");
  const int k = prefix_info(v, ctx).l;
  Cycle P{ctx, {i}};
  // Element n keeps the last m-n+1 digits of v up front and wraps the walk
  // with digits m-k+1 .. m-k+n-1 of v. The wrap term res(part(v, k-n+1),
  // n-1) reduces to part(v, m-n+1) only when k = m.
  for (int n = 2; n <= k; ++n) {
    const long long e = ctx.qpow(n - 1) * res(v, ctx.m - n + 1, ctx) +
                        res(part(v, k - n + 1, ctx), n - 1, ctx);
    P.elements.push_back(e + 1);
  }
  if (!is_cycle(P, tm.cutoff))
    throw std::logic_error("unique_cycle: constructed tuple is not a cycle");
  for (std::size_t j = 1; j < P.elements.size(); ++j)
    if (P.elements[j] <= i)
      throw std::logic_error("unique_cycle: smallest element is not first");
  return P;
}

Cycle cycle_down(const Cycle& P, int m) {
  if (m > P.ctx.m) throw std::out_of_range("cycle_down: target length above source");
  if (!is_cycle(P)) throw std::domain_error("cycle_down: input is not a cycle");
  const int drop = P.ctx.m - m;
  Cycle Q{Context(P.ctx.q, m), {}};
  Q.elements.reserve(P.elements.size());
  for (long long e : P.elements)
    Q.elements.push_back(part(e - 1, drop, P.ctx) + 1);
  if (!is_cycle(Q))
    throw std::domain_error("cycle_down: image is not a cycle");
  return Q;
}

Cycle cycle_up(const Cycle& P, int M) {
  if (M < P.ctx.m) throw std::out_of_range("cycle_up: target length below source");
  if (!is_cycle(P)) throw std::domain_error("cycle_up: input is not a cycle");
  Cycle Q = P;
  for (int mm = P.ctx.m; mm < M; ++mm) {
    const Context up(Q.ctx.q, mm + 1);
    const int k = Q.k();
    std::vector<long long> lifted(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      const long long vj = Q.elements[static_cast<std::size_t>(j)] - 1;
      const long long vn = Q.elements[static_cast<std::size_t>((j + 1) % k)] - 1;
      lifted[static_cast<std::size_t>(j)] = Q.ctx.q * vj + res(vn, 1, Q.ctx) + 1;
    }
    Q = Cycle{up, std::move(lifted)};
    if (!is_cycle(Q)) throw std::logic_error("cycle_up: lift broke the cycle");
  }
  return Q;
}

long long count_cycles(const TransitionMatrix& tm, int k) {
  if (k < 1 || k > tm.ctx.m)
    throw std::domain_error("count_cycles: k outside [1, m]");
  long long count = 0;
  for (long long i = tm.lo(); i <= tm.hi(); ++i) {
    const PrefixInfo pi = prefix_info(i - 1, tm.ctx);
    if (pi.l != k || !is_minimal(i - 1, tm.ctx)) continue;
    unique_cycle(i, tm);  // walks and validates the successor structure
    ++count;
  }
  return count;
}

std::vector<Cycle> enumerate_cycles(const TransitionMatrix& tm, int max_len) {
  if (max_len < 1) return {};
  const Context& ctx = tm.ctx;
  std::vector<Cycle> out;
  std::vector<long long> path;
  std::vector<char> on_path(static_cast<std::size_t>(tm.dim()), 0);

  // DFS from each start; only vertices above the start are entered, so each
  // cycle is produced exactly once, smallest element first.
  auto dfs = [&](auto&& self, long long start, long long v) -> void {
    const long long base = successor_base(v - 1, ctx) + 1;  // 1-based
    for (long long d = 0; d < ctx.q; ++d) {
      const long long w = base + d;
      if (w == start) {
        Cycle c{ctx, path};
        out.push_back(std::move(c));
        continue;
      }
      if (w <= start || w > tm.hi()) continue;
      if (on_path[static_cast<std::size_t>(w - tm.lo())]) continue;
      if (static_cast<int>(path.size()) >= max_len) continue;
      path.push_back(w);
      on_path[static_cast<std::size_t>(w - tm.lo())] = 1;
      self(self, start, w);
      on_path[static_cast<std::size_t>(w - tm.lo())] = 0;
      path.pop_back();
    }
  };

  for (long long s = tm.lo(); s <= tm.hi(); ++s) {
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s - tm.lo())] = 1;
    dfs(dfs, s, s);
    on_path[static_cast<std::size_t>(s - tm.lo())] = 0;
  }
  return out;
}

}  // namespace dimshift
