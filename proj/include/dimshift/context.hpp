#pragma once

#include <limits>
#include <stdexcept>

namespace dimshift {

// Radix q >= 2 together with a word length m >= 1. Every operation in the
// library is relative to one of these. Construction fails loudly unless q^m
// fits in a signed 64-bit integer; nothing downstream may wrap silently.
struct Context {
  long long q;
  int m;

  Context(long long q_, int m_) : q(q_), m(m_) {
    if (q < 2) throw std::invalid_argument("Context: radix q must be >= 2");
    if (m < 1) throw std::invalid_argument("Context: word length m must be >= 1");
    long long p = 1;
    for (int j = 0; j < m; ++j) {
      if (p > std::numeric_limits<long long>::max() / q)
        throw std::invalid_argument("Context: q^m does not fit in 64 bits");
      p *= q;
    }
    size_ = p;
  }

  // q^m, the number of words.
  long long size() const { return size_; }

  // q^k for 0 <= k <= m.
  long long qpow(int k) const {
    if (k < 0 || k > m) throw std::out_of_range("Context::qpow: k outside [0, m]");
    long long p = 1;
    for (int j = 0; j < k; ++j) p *= q;
    return p;
  }

 private:
  long long size_;
};

}  // namespace dimshift
