#pragma once

#include <vector>

#include "dimshift/context.hpp"

namespace dimshift {

// Quotient of n by q^k. Total for every k >= 0: once q^k exceeds n the
// result is 0, so boundary identities like part(n, m) = 0 for n < q^m hold
// without special cases.
long long part(long long n, int k, const Context& ctx);

// Remainder of n mod q^k, the k-digit tail of n. res(n, 0) = 0, and for
// q^k > n the whole of n is returned.
long long res(long long n, int k, const Context& ctx);

// Base-q word of fixed length m, most significant digit first. Digits lie
// in [0, q-1] with a single sanctioned exception: the word (q, 0, ..., 0)
// encodes the value q^m itself, which the characteristic polynomial at
// cutoff 0 needs.
struct DigitWord {
  std::vector<long long> digits;
  long long radix;
};

// Word of n, left-padded with zeros. Accepts 0 <= n <= q^m; the upper
// endpoint produces the exception word.
DigitWord to_digits(long long n, const Context& ctx);

// Inverse of to_digits. Validates digit ranges (allowing the exception
// word) and rejects length or radix mismatches.
long long from_digits(const DigitWord& w, const Context& ctx);

}  // namespace dimshift
