#pragma once

#include "dimshift/base_arith.hpp"
#include "dimshift/context.hpp"

namespace dimshift {

// Prefix data of an integer 0 <= n < q^m:
//   l    = min{ j in [1, m] : part(n, j) >= res(n, m-j) }
//   nbar = n - res(n, m-l) = q^{m-l} * part(n, m-l)
// nbar is n with everything after its length-l prefix zeroed out; it is
// what the characteristic polynomial of the cutoff matrix depends on.
struct PrefixInfo {
  long long n;
  int l;
  long long nbar;
};

PrefixInfo prefix_info(long long n, const Context& ctx);

// n is minimal when res(n, m-l) = part(n, l), i.e. the diagonal entry of
// the l-th matrix power at index n+1 is 1. Minimal integers are exactly the
// (min - 1)-values of cycles.
bool is_minimal(long long n, const Context& ctx);

// Truncation from word length M down to ctx.m: drops the last M - m digits
// of i, i.e. part(i, M - m). When l_M(i) = m < M the image again has prefix
// length m and carries the whole minimal prefix of i.
long long down_prefix(long long i, int M, const Context& ctx);

}  // namespace dimshift
