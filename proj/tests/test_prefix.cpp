#include <doctest.h>

#include "dimshift/prefix.hpp"
#include "dimshift/subshift.hpp"

using namespace dimshift;

TEST_CASE("prefix_info on worked values") {
  const Context ctx(3, 3);
  auto pi = prefix_info(11, ctx);
  CHECK(pi.l == 1);
  CHECK(pi.nbar == 9);
  pi = prefix_info(7, ctx);
  CHECK(pi.l == 3);
  CHECK(pi.nbar == 7);
  pi = prefix_info(0, ctx);
  CHECK(pi.l == 1);
  CHECK(pi.nbar == 0);
  pi = prefix_info(14, ctx);
  CHECK(pi.l == 3);
  CHECK(pi.nbar == 14);

  CHECK_THROWS_AS(prefix_info(27, ctx), std::out_of_range);  // n = q^m rejected
  CHECK_THROWS_AS(prefix_info(-1, ctx), std::out_of_range);
}

TEST_CASE("minimality on worked values and via matrix diagonals") {
  const Context ctx(3, 3);
  CHECK(is_minimal(4, ctx));
  CHECK(is_minimal(0, ctx));
  CHECK(is_minimal(13, ctx));
  CHECK_FALSE(is_minimal(9, ctx));
  // n minimal iff the l(n)-th power has a diagonal one at index n+1
  const TransitionMatrix full(ctx, 0);
  for (long long n = 0; n < ctx.size(); ++n) {
    const int l = prefix_info(n, ctx).l;
    CHECK(is_minimal(n, ctx) == (power_entry(n + 1, n + 1, l, full) == 1));
  }
}

TEST_CASE("down_prefix on worked values") {
  CHECK(down_prefix(42, 4, Context(3, 3)) == 14);  // digits 1120 -> 112
  CHECK(down_prefix(7, 3, Context(3, 3)) == 7);    // M = m identity
  CHECK(down_prefix(4, 2, Context(3, 1)) == 1);
  CHECK(prefix_info(14, Context(3, 3)).l == 3);  // image keeps full prefix length
  CHECK_THROWS_AS(down_prefix(9, 2, Context(3, 2)), std::out_of_range);
  CHECK_THROWS_AS(down_prefix(5, 1, Context(3, 2)), std::out_of_range);
}

TEST_CASE("prefix structure lemmas hold exhaustively for q <= 4, m <= 4") {
  for (long long q = 2; q <= 4; ++q)
    for (int m = 1; m <= 4; ++m) {
      const Context ctx(q, m);
      const Context up(q, m + 1);
      long long prev = 0;
      for (long long n = 0; n < ctx.size(); ++n) {
        const PrefixInfo pi = prefix_info(n, ctx);
        // structural invariants of the pair (l, nbar)
        CHECK(pi.nbar == ctx.qpow(m - pi.l) * part(n, m - pi.l, ctx));
        CHECK(pi.nbar % ctx.qpow(m - pi.l) == 0);
        CHECK(pi.nbar <= n);
        CHECK(pi.nbar >= prev);  // nondecreasing step structure
        prev = pi.nbar;
        // scaling: q nbar_m(n) = nbar_{m+1}(q n), same prefix length
        const PrefixInfo lifted = prefix_info(q * n, up);
        CHECK(lifted.nbar == q * pi.nbar);
        CHECK(lifted.l == pi.l);
        // decrement: a full-length predecessor forces a unit step
        if (n >= 1) {
          const PrefixInfo prev_pi = prefix_info(n - 1, ctx);
          if (prev_pi.l == m) CHECK(pi.nbar == prev_pi.nbar + 1);
        }
      }
      // recursion: l_M(i) = m < M pins nbar_M through the truncation
      for (int M = m + 1; M <= 4; ++M) {
        const Context cM(q, M);
        for (long long i = 0; i < cM.size(); ++i) {
          if (prefix_info(i, cM).l != m) continue;
          const long long d = down_prefix(i, M, ctx);
          CHECK(prefix_info(d, ctx).l == m);
          CHECK(prefix_info(i, cM).nbar == cM.qpow(M - m) * prefix_info(d, ctx).nbar);
        }
      }
    }
}
