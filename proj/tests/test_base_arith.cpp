#include <doctest.h>

#include <random>

#include "dimshift/base_arith.hpp"
#include "dimshift/context.hpp"

using namespace dimshift;

TEST_CASE("context validation") {
  CHECK_THROWS_AS(Context(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(Context(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Context(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Context(10, 19), std::invalid_argument);  // 10^19 overflows
  CHECK(Context(10, 18).size() == 1000000000000000000LL);
  CHECK(Context(3, 3).qpow(2) == 9);
  CHECK_THROWS_AS(Context(3, 3).qpow(4), std::out_of_range);
}

TEST_CASE("part and res on worked values") {
  const Context ctx(3, 3);
  CHECK(part(11, 1, ctx) == 3);
  CHECK(part(7, 2, ctx) == 0);
  CHECK(res(11, 2, ctx) == 2);
  CHECK(res(7, 1, ctx) == 1);
  for (long long n : {0LL, 5LL, 11LL, 26LL, 12345LL}) {
    CHECK(part(n, 0, ctx) == n);
    CHECK(res(n, 0, ctx) == 0);
  }
  // total beyond k = m
  CHECK(part(7, 5, ctx) == 0);
  CHECK(res(7, 5, ctx) == 7);
  CHECK_THROWS_AS(part(-1, 0, ctx), std::out_of_range);
  CHECK_THROWS_AS(res(3, -1, ctx), std::out_of_range);
}

TEST_CASE("digit words") {
  const Context c33(3, 3);
  CHECK(to_digits(23, c33).digits == std::vector<long long>{2, 1, 2});
  CHECK(to_digits(0, c33).digits == std::vector<long long>{0, 0, 0});
  const Context c24(2, 4);
  CHECK(to_digits(13, c24).digits == std::vector<long long>{1, 1, 0, 1});
  CHECK_THROWS_AS(to_digits(28, c33), std::out_of_range);
  CHECK_THROWS_AS(to_digits(-1, c33), std::out_of_range);

  CHECK(from_digits(DigitWord{{2, 1, 2}, 3}, c33) == 23);
  CHECK(from_digits(DigitWord{{0, 0, 0}, 3}, c33) == 0);
  // the sanctioned word for q^m
  const Context c31(3, 1);
  CHECK(from_digits(DigitWord{{3}, 3}, c31) == 3);
  CHECK(to_digits(27, c33).digits == std::vector<long long>{3, 0, 0});
  CHECK(from_digits(DigitWord{{3, 0, 0}, 3}, c33) == 27);
  CHECK_THROWS_AS(from_digits(DigitWord{{3, 1, 0}, 3}, c33), std::invalid_argument);
  CHECK_THROWS_AS(from_digits(DigitWord{{0, 4, 0}, 3}, c33), std::invalid_argument);
  CHECK_THROWS_AS(from_digits(DigitWord{{1, 2}, 3}, c33), std::invalid_argument);
  CHECK_THROWS_AS(from_digits(DigitWord{{1, 2, 0}, 4}, c33), std::invalid_argument);
}

TEST_CASE("reconstruction holds exhaustively on small ranges and randomly beyond") {
  std::mt19937_64 rng(42);
  for (long long q : {2LL, 3LL, 4LL, 5LL}) {
    const int m = 6;
    const Context ctx(q, m);
    auto probe = [&](long long n) {
      for (int k = 0; k <= m; ++k) {
        const long long p = part(n, k, ctx), r = res(n, k, ctx);
        CHECK(n == ctx.qpow(k) * p + r);
        CHECK(r >= 0);
        CHECK(r < ctx.qpow(k));
        CHECK(from_digits(to_digits(res(n, m, ctx), ctx), ctx) == res(n, m, ctx));
      }
    };
    for (long long n = 0; n < ctx.size(); ++n) probe(n);
    for (int t = 0; t < 500; ++t)
      probe(static_cast<long long>(rng() % (1ull << 50)));
  }
}

TEST_CASE("nested and commuting part/res identities") {
  for (long long q : {2LL, 3LL, 4LL}) {
    const Context ctx(q, 4);
    for (long long n = 0; n < ctx.size(); ++n)
      for (int j = 0; j <= 5; ++j)
        for (int k = 0; k <= 5; ++k) {
          CHECK(res(res(n, j, ctx), k, ctx) == res(n, std::min(j, k), ctx));
          CHECK(part(part(n, k, ctx), j, ctx) == part(n, k + j, ctx));
          if (j > k)
            CHECK(part(res(n, j, ctx), k, ctx) == res(part(n, k, ctx), j - k, ctx));
        }
  }
}

TEST_CASE("order transport: equal parts and ordered residues stay ordered") {
  const Context ctx(3, 4);
  for (long long a = 0; a < ctx.size(); ++a)
    for (long long b = a + 1; b < ctx.size(); ++b)
      for (int k = 0; k <= ctx.m; ++k) {
        if (!(res(a, k, ctx) < res(b, k, ctx) &&
              part(a, k, ctx) == part(b, k, ctx)))
          continue;
        for (int j = 0; j <= ctx.m - k; ++j)
          CHECK(res(a, k + j, ctx) < res(b, k + j, ctx));
      }
}
