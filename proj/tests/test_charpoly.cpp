#include <doctest.h>

#include <random>

#include "dimshift/charpoly.hpp"
#include "dimshift/prefix.hpp"

using namespace dimshift;

namespace {

bool equal_coeffs(const std::vector<long long>& fast,
                  const std::vector<BigInt>& slow) {
  if (fast.size() != slow.size()) return false;
  for (std::size_t j = 0; j < fast.size(); ++j)
    if (BigInt(fast[j]) != slow[j]) return false;
  return true;
}

}  // namespace

TEST_CASE("closed form on worked values (q = 3, m = 3)") {
  const Context ctx(3, 3);
  CHECK(charpoly_fast(1, ctx).coeffs == std::vector<long long>{2, 2, 2});
  CHECK(charpoly_fast(4, ctx).coeffs == std::vector<long long>{2, 1, 2});
  CHECK(charpoly_fast(14, ctx).coeffs == std::vector<long long>{1, 1, 1});
  CHECK(charpoly_fast(0, ctx).coeffs == std::vector<long long>{3, 0, 0});
  CHECK(charpoly_fast(4, ctx).trailing == 20);
  CHECK(charpoly_fast(0, ctx).trailing == 24);
  CHECK(charpoly_fast(26, ctx).trailing == 0);
  CHECK_THROWS_AS(charpoly_fast(27, ctx), std::out_of_range);
  CHECK_THROWS_AS(charpoly_fast(-1, ctx), std::out_of_range);
}

TEST_CASE("evaluation identity g(q) = minimal prefix") {
  for (long long q = 2; q <= 5; ++q)
    for (int m = 1; m <= 4; ++m) {
      const Context ctx(q, m);
      for (long long i = 0; i < ctx.size(); ++i)
        CHECK(eval_g_at_q(charpoly_fast(i, ctx)) == prefix_info(i, ctx).nbar);
    }
}

TEST_CASE("trace oracle on worked values") {
  CHECK(charpoly_newton(1, Context(3, 1)) == std::vector<BigInt>{2, 0});
  CHECK(charpoly_newton(0, Context(2, 2)) == std::vector<BigInt>{2, 0, 0, 0});
  const std::vector<BigInt> deg23 = charpoly_newton(4, Context(3, 3));
  REQUIRE(deg23.size() == 23);
  CHECK(deg23[0] == 2);
  CHECK(deg23[1] == 1);
  CHECK(deg23[2] == 2);
  for (std::size_t j = 3; j < deg23.size(); ++j) CHECK(deg23[j] == 0);
  CHECK_THROWS_AS(charpoly_newton(0, Context(3, 3), 8), std::length_error);
}

TEST_CASE("closed form equals the trace oracle, including the short regimes") {
  for (long long q = 2; q <= 3; ++q)
    for (int m = 1; m <= 3; ++m) {
      const Context ctx(q, m);
      if (ctx.size() > 27) continue;
      for (long long i = 0; i < ctx.size(); ++i)
        CHECK(equal_coeffs(full_coeffs(charpoly_fast(i, ctx)),
                           charpoly_newton(i, ctx)));
    }
  // the a-digits at the erratic last column follow the minimal prefix
  const Context c33(3, 3);
  CHECK(prefix_info(26, c33).nbar == 18);
  CHECK(charpoly_fast(26, c33).coeffs == std::vector<long long>{1, 0, 0});
  CHECK(equal_coeffs(full_coeffs(charpoly_fast(26, c33)),
                     charpoly_newton(26, c33)));
  CHECK(full_coeffs(charpoly_fast(26, c33)) == std::vector<long long>{1});
  CHECK(full_coeffs(charpoly_fast(25, c33)) == std::vector<long long>{1, 0});
}

TEST_CASE("principal-minors oracle") {
  CHECK(charpoly_minors(2, Context(3, 1)) == std::vector<long long>{1});
  CHECK(charpoly_minors(0, Context(2, 1)) == std::vector<long long>{2, 0});
  const Context c22(2, 2);
  for (long long i = 0; i < 4; ++i)
    CHECK(equal_coeffs(charpoly_minors(i, c22), charpoly_newton(i, c22)));
  const Context c33(3, 3);
  CHECK(equal_coeffs(charpoly_minors(24, c33), charpoly_newton(24, c33)));
  CHECK(charpoly_minors(24, c33) == std::vector<long long>{1, 0, 0});
  const Context c23(2, 3);
  for (long long i = 0; i < 8; ++i)
    CHECK(equal_coeffs(charpoly_minors(i, c23), charpoly_newton(i, c23)));
  CHECK_THROWS_AS(charpoly_minors(0, Context(5, 2)), std::length_error);
}

TEST_CASE("coefficient blocks repeat across word lengths") {
  for (long long q = 2; q <= 3; ++q)
    for (int m = 1; m <= 2; ++m)
      for (int M = m + 1; M <= 4; ++M) {
        const Context cm(q, m), cM(q, M);
        for (long long i = 0; i < cm.size(); ++i) {
          const std::vector<long long> lo = charpoly_fast(i, cm).coeffs;
          const std::vector<long long> hi =
              charpoly_fast(cM.qpow(M - m) * i, cM).coeffs;
          for (std::size_t j = 0; j < hi.size(); ++j)
            CHECK(hi[j] == (j < lo.size() ? lo[j] : 0));
        }
      }
}

TEST_CASE("large radix stays exact near the 64-bit boundary") {
  std::mt19937_64 rng(11);
  const Context big(1000000, 3);  // q^m = 10^18
  CHECK(big.size() == 1000000000000000000LL);
  for (int t = 0; t < 200; ++t) {
    const long long i = static_cast<long long>(rng() % static_cast<unsigned long long>(big.size()));
    const CharPoly p = charpoly_fast(i, big);
    CHECK(eval_g_at_q(p) == prefix_info(i, big).nbar);
    for (long long d : p.coeffs) {
      CHECK(d >= 0);
      CHECK(d <= (i == 0 ? big.q : big.q - 1));
    }
  }
  // the scaling lemma at a radix where digits are large
  const Context c1(50, 2), c2(50, 3);
  for (long long n = 0; n < c1.size(); ++n) {
    const PrefixInfo lo = prefix_info(n, c1);
    const PrefixInfo hi = prefix_info(50 * n, c2);
    CHECK(hi.nbar == 50 * lo.nbar);
    CHECK(hi.l == lo.l);
  }
}

TEST_CASE("JSON serialization") {
  const nlohmann::json j = to_json(charpoly_fast(4, Context(3, 3)));
  CHECK(j["q"] == 3);
  CHECK(j["m"] == 3);
  CHECK(j["i"] == 4);
  CHECK(j["a"] == nlohmann::json::array({2, 1, 2}));
  CHECK(j["trailing"] == 20);
}
