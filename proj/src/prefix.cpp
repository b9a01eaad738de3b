#include "dimshift/prefix.hpp"

#include <stdexcept>

namespace dimshift {

PrefixInfo prefix_info(long long n, const Context& ctx) {
  if (n < 0 || n >= ctx.size())
    throw std::out_of_range("prefix_info: n outside [0, q^m)");
  // Linear scan; terminates at j = m because part(n, m) = 0 = res(n, 0).
  int l = ctx.m;
  for (int j = 1; j <= ctx.m; ++j) {
    if (part(n, j, ctx) >= res(n, ctx.m - j, ctx)) {
      l = j;
      break;
    }
  }
  return PrefixInfo{n, l, n - res(n, ctx.m - l, ctx)};
}

bool is_minimal(long long n, const Context& ctx) {
  const PrefixInfo pi = prefix_info(n, ctx);
  return res(n, ctx.m - pi.l, ctx) == part(n, pi.l, ctx);
}

long long down_prefix(long long i, int M, const Context& ctx) {
  if (M < ctx.m) throw std::out_of_range("down_prefix: M smaller than target length");
  if (i < 0 || part(i, M, ctx) != 0)
    throw std::out_of_range("down_prefix: i outside [0, q^M)");
  return part(i, M - ctx.m, ctx);
}

}  // namespace dimshift
