#include "dimshift/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "dimshift/prefix.hpp"

namespace dimshift {

namespace {

// Trace sequence p[j] = trace A^j for j = 1..count, by repeated sparse
// multiplication against the successor lists. Exact.
std::vector<BigInt> trace_sequence(const TransitionMatrix& tm, long long count,
                                   long long max_dim) {
  const long long n = tm.dim();
  if (n > max_dim)
    throw std::length_error("charpoly_newton: dimension exceeds the configured budget");
  const Context& ctx = tm.ctx;
  std::vector<std::vector<long long>> succ(static_cast<std::size_t>(n));
  for (long long r = 0; r < n; ++r) {
    const long long base = ctx.q * res(tm.cutoff + r, ctx.m - 1, ctx);
    for (long long d = 0; d < ctx.q; ++d) {
      const long long c = base + d - tm.cutoff;
      if (c >= 0 && c < n) succ[static_cast<std::size_t>(r)].push_back(c);
    }
  }
  std::vector<BigInt> P(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (long long r = 0; r < n; ++r)
    for (long long c : succ[static_cast<std::size_t>(r)])
      P[static_cast<std::size_t>(r * n + c)] = 1;
  std::vector<BigInt> traces;
  traces.reserve(static_cast<std::size_t>(count));
  std::vector<BigInt> next(P.size());
  for (long long j = 1; j <= count; ++j) {
    BigInt t = 0;
    for (long long r = 0; r < n; ++r) t += P[static_cast<std::size_t>(r * n + r)];
    traces.push_back(t);
    if (j == count) break;
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
  return traces;
}

std::vector<BigInt> newton_from_traces(const std::vector<BigInt>& p) {
  const std::size_t n = p.size();
  std::vector<BigInt> a(n);
  for (std::size_t j = 1; j <= n; ++j) {
    BigInt num = p[j - 1];
    for (std::size_t t = 1; t < j; ++t) num -= a[t - 1] * p[j - t - 1];
    if (num % static_cast<long long>(j) != 0)
      throw std::logic_error("charpoly_newton: non-exact division in the recurrence");
    a[j - 1] = num / static_cast<long long>(j);
  }
  return a;
}

// The recurrence is printed with both sign conventions in the literature;
// pin the one that reproduces det(xI - A) on a 2x2 all-ones matrix.
void newton_self_test() {
  static const bool ok = [] {
    const std::vector<BigInt> p = {2, 4};  // traces of the all-ones 2x2
    const std::vector<BigInt> a = newton_from_traces(p);
    return a.size() == 2 && a[0] == 2 && a[1] == 0;  // x^2 - 2x
  }();
  if (!ok) throw std::logic_error("charpoly_newton: sign self-test failed");
}

}  // namespace

CharPoly charpoly_fast(long long i, const Context& ctx) {
  if (i < 0 || i >= ctx.size())
    throw std::out_of_range("charpoly_fast: i outside [0, q^m)");
  std::vector<long long> coeffs;
  if (i == 0) {
    coeffs.assign(static_cast<std::size_t>(ctx.m), 0);
    coeffs[0] = ctx.q;  // g = x^m - q x^{m-1}, Perron root q
  } else {
    const PrefixInfo pi = prefix_info(i, ctx);
    coeffs = to_digits(ctx.size() - pi.nbar, ctx).digits;
    for (long long d : coeffs)
      if (d < 0 || d >= ctx.q)
        throw std::logic_error("charpoly_fast: digit out of range for i > 0");
  }
  const long long trailing = std::max<long long>(0, ctx.size() - ctx.m - i);
  return CharPoly{ctx, i, std::move(coeffs), trailing};
}

long long eval_g_at_q(const CharPoly& p) {
  long long v = 1;
  for (long long a : p.coeffs) v = v * p.ctx.q - a;
  return v;
}

std::vector<long long> full_coeffs(const CharPoly& p) {
  const long long deg = p.ctx.size() - p.i;
  std::vector<long long> out;
  if (deg >= p.ctx.m) {
    out = p.coeffs;
    out.resize(static_cast<std::size_t>(deg), 0);
  } else {
    // Spare factor of x inside g: the tail coefficients must vanish.
    for (std::size_t j = static_cast<std::size_t>(deg); j < p.coeffs.size(); ++j)
      if (p.coeffs[j] != 0)
        throw std::logic_error("full_coeffs: non-exact division by the spare power of x");
    out.assign(p.coeffs.begin(), p.coeffs.begin() + static_cast<std::ptrdiff_t>(deg));
  }
  return out;
}

std::vector<BigInt> charpoly_newton(long long i, const Context& ctx, long long max_dim) {
  newton_self_test();
  if (i < 0 || i >= ctx.size())
    throw std::out_of_range("charpoly_newton: i outside [0, q^m)");
  const TransitionMatrix tm(ctx, i);
  return newton_from_traces(trace_sequence(tm, tm.dim(), max_dim));
}

namespace {

std::vector<long long> minors_impl(long long i, const Context& ctx) {
  const long long n = ctx.size() - i;
  const TransitionMatrix tm(ctx, i);
  const std::vector<Cycle> cycles = enumerate_cycles(tm, static_cast<int>(n));

  struct MaskedCycle {
    std::uint32_t mask;
    int len;
  };
  std::vector<MaskedCycle> cs;
  cs.reserve(cycles.size());
  for (const Cycle& c : cycles) {
    std::uint32_t mask = 0;
    for (long long e : c.elements)
      mask |= 1u << static_cast<unsigned>(e - tm.lo());
    cs.push_back({mask, c.k()});
  }

  std::vector<long long> a(static_cast<std::size_t>(n), 0);
  // Families of vertex-disjoint cycles; a family of r cycles contributes
  // (-1)^{r+1} to the coefficient indexed by its total length.
  auto rec = [&](auto&& self, std::size_t from, std::uint32_t used, int len,
                 int r) -> void {
    for (std::size_t idx = from; idx < cs.size(); ++idx) {
      if (cs[idx].mask & used) continue;
      const int total = len + cs[idx].len;
      if (total > n) continue;
      a[static_cast<std::size_t>(total - 1)] += (r % 2 == 0) ? 1 : -1;
      self(self, idx + 1, used | cs[idx].mask, total, r + 1);
    }
  };
  rec(rec, 0, 0u, 0, 0);
  return a;
}

// Same fixture as the Newton oracle: the sign rule must reproduce
// det(xI - A) = x^2 - 2x on the all-ones 2x2 matrix.
void minors_self_test() {
  static const bool ok = [] {
    const std::vector<long long> a = minors_impl(0, Context(2, 1));
    return a.size() == 2 && a[0] == 2 && a[1] == 0;
  }();
  if (!ok) throw std::logic_error("charpoly_minors: sign self-test failed");
}

}  // namespace

std::vector<long long> charpoly_minors(long long i, const Context& ctx) {
  minors_self_test();
  if (i < 0 || i >= ctx.size())
    throw std::out_of_range("charpoly_minors: i outside [0, q^m)");
  if (ctx.size() - i > 20)
    throw std::length_error("charpoly_minors: dimension exceeds the enumeration guard");
  return minors_impl(i, ctx);
}

nlohmann::json to_json(const CharPoly& p) {
  return nlohmann::json{{"q", p.ctx.q},
                        {"m", p.ctx.m},
                        {"i", p.i},
                        {"a", p.coeffs},
                        {"trailing", p.trailing}};
}

}  // namespace dimshift
