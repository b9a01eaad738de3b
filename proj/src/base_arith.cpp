#include "dimshift/base_arith.hpp"

#include <stdexcept>

namespace dimshift {

long long part(long long n, int k, const Context& ctx) {
  if (n < 0) throw std::out_of_range("part: n must be nonnegative");
  if (k < 0) throw std::out_of_range("part: k must be nonnegative");
  long long v = n;
  for (int j = 0; j < k && v != 0; ++j) v /= ctx.q;
  return v;
}

long long res(long long n, int k, const Context& ctx) {
  if (n < 0) throw std::out_of_range("res: n must be nonnegative");
  if (k < 0) throw std::out_of_range("res: k must be nonnegative");
  long long p = part(n, k, ctx);
  if (p == 0) return n;  // q^k > n
  long long pw = 1;
  for (int j = 0; j < k; ++j) pw *= ctx.q;  // q^k <= n here, cannot overflow
  return n - pw * p;
}

DigitWord to_digits(long long n, const Context& ctx) {
  if (n < 0 || n > ctx.size())
    throw std::out_of_range("to_digits: n outside [0, q^m]");
  DigitWord w;
  w.radix = ctx.q;
  w.digits.assign(static_cast<std::size_t>(ctx.m), 0);
  if (n == ctx.size()) {
    w.digits[0] = ctx.q;  // the sanctioned word (q, 0, ..., 0)
    return w;
  }
  long long v = n;
  for (int j = ctx.m - 1; j >= 0; --j) {
    w.digits[static_cast<std::size_t>(j)] = v % ctx.q;
    v /= ctx.q;
  }
  return w;
}

long long from_digits(const DigitWord& w, const Context& ctx) {
  if (w.radix != ctx.q)
    throw std::invalid_argument("from_digits: radix mismatch");
  if (static_cast<long long>(w.digits.size()) != ctx.m)
    throw std::invalid_argument("from_digits: word length mismatch");
  const bool exception_word = w.digits[0] == ctx.q;
  for (std::size_t j = 0; j < w.digits.size(); ++j) {
    const long long d = w.digits[j];
    if (exception_word) {
      if (j > 0 && d != 0)
        throw std::invalid_argument("from_digits: digit out of range");
    } else if (d < 0 || d >= ctx.q) {
      throw std::invalid_argument("from_digits: digit out of range");
    }
  }
  long long v = 0;
  for (long long d : w.digits) v = v * ctx.q + d;  // at most q^m, fits
  return v;
}

}  // namespace dimshift
