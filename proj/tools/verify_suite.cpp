#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dimshift/base_arith.hpp"
#include "dimshift/charpoly.hpp"
#include "dimshift/prefix.hpp"
#include "dimshift/spectrum.hpp"
#include "dimshift/subshift.hpp"

namespace dimshift::verify {

namespace {

struct Recorder {
  std::vector<Check>& out;
  void add(const std::string& name, bool pass, const std::string& detail) {
    out.push_back({name, pass, pass ? std::string() : detail});
  }
};

template <typename... Args>
std::string describe(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

// Signed determinant of a small 0/1 matrix, fraction-free elimination.
long long det_small(std::vector<long long> a, std::size_t n) {
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = k + 1; c < n; ++c)
        a[r * n + c] =
            (a[r * n + c] * a[k * n + k] - a[r * n + k] * a[k * n + c]) / prev;
    prev = a[k * n + k];
  }
  return n == 0 ? 1 : sign * a[(n - 1) * n + (n - 1)];
}

std::vector<std::int64_t> matmul(const std::vector<std::int64_t>& x,
                                 const std::vector<std::int64_t>& y,
                                 long long n) {
  std::vector<std::int64_t> z(static_cast<std::size_t>(n) * n, 0);
  for (long long r = 0; r < n; ++r)
    for (long long k = 0; k < n; ++k) {
      const std::int64_t v = x[static_cast<std::size_t>(r * n + k)];
      if (v == 0) continue;
      for (long long c = 0; c < n; ++c)
        z[static_cast<std::size_t>(r * n + c)] +=
            v * y[static_cast<std::size_t>(k * n + c)];
    }
  return z;
}

void check_base_arith(Recorder& rec, long long q_max, int m_max) {
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(12345);
  for (long long q = 2; q <= q_max && pass; ++q)
    for (int m = 1; m <= m_max && pass; ++m) {
      const Context ctx(q, m);
      const long long top = std::min<long long>(ctx.size(), 2000);
      std::vector<long long> ns;
      for (long long n = 0; n < top; ++n) ns.push_back(n);
      for (int t = 0; t < 200; ++t)
        ns.push_back(static_cast<long long>(rng() % (1ull << 40)));
      for (long long n : ns) {
        for (int k = 0; k <= m + 2 && pass; ++k) {
          const long long p = part(n, k, ctx), r = res(n, k, ctx);
          // reconstruction; r < q^k checked as part(r, k) == 0
          long long pw = 1;
          bool fits = true;
          for (int j = 0; j < k; ++j) {
            if (pw > (std::int64_t{1} << 62) / q) { fits = false; break; }
            pw *= q;
          }
          if ((fits && n != pw * p + r) || part(r, k, ctx) != 0 || r < 0) {
            pass = false;
            detail = describe("reconstruction failed at q=", q, " m=", m, " n=", n,
                              " k=", k);
          }
          for (int j = 0; j <= m && pass; ++j) {
            if (res(res(n, j, ctx), k, ctx) != res(n, std::min(j, k), ctx) ||
                part(part(n, k, ctx), j, ctx) != part(n, k + j, ctx)) {
              pass = false;
              detail = describe("nested identity failed at q=", q, " n=", n);
            }
            if (j > k && part(res(n, j, ctx), k, ctx) !=
                             res(part(n, k, ctx), j - k, ctx)) {
              pass = false;
              detail = describe("commutation failed at q=", q, " n=", n,
                                " j=", j, " k=", k);
            }
          }
        }
      }
      // order transport on small exhaustive pairs
      const long long cap = std::min<long long>(ctx.size(), 200);
      for (long long a = 0; a < cap && pass; ++a)
        for (long long b = 0; b < cap && pass; ++b)
          for (int k = 0; k <= m && pass; ++k) {
            if (!(res(a, k, ctx) < res(b, k, ctx) &&
                  part(a, k, ctx) == part(b, k, ctx)))
              continue;
            for (int j = 0; j <= m - k; ++j)
              if (!(res(a, k + j, ctx) < res(b, k + j, ctx))) {
                pass = false;
                detail = describe("order transport failed at q=", q, " a=", a,
                                  " b=", b, " k=", k, " j=", j);
              }
          }
    }
  rec.add("part/res identities", pass, detail);
}

void check_prefix(Recorder& rec, long long q_max, int m_max) {
  bool pass = true;
  std::string detail;
  for (long long q = 2; q <= std::min<long long>(q_max, 4) && pass; ++q)
    for (int m = 1; m <= std::min(m_max, 4) && pass; ++m) {
      const Context ctx(q, m);
      const Context up(q, m + 1);
      long long prev_nbar = 0;
      for (long long n = 0; n < ctx.size() && pass; ++n) {
        const PrefixInfo pi = prefix_info(n, ctx);
        if (pi.nbar > n || pi.nbar < prev_nbar) {
          pass = false;
          detail = describe("monotone step structure failed at q=", q, " m=", m,
                            " n=", n);
        }
        prev_nbar = pi.nbar;
        const PrefixInfo lifted = prefix_info(q * n, up);
        if (lifted.nbar != q * pi.nbar || lifted.l != pi.l) {
          pass = false;
          detail = describe("scaling lemma failed at q=", q, " m=", m, " n=", n);
        }
        if (n >= 1 && prefix_info(n - 1, ctx).l == m) {
          if (pi.nbar != prefix_info(n - 1, ctx).nbar + 1) {
            pass = false;
            detail = describe("decrement lemma failed at q=", q, " m=", m,
                              " i=", n);
          }
        }
      }
      // recursion across lengths: l_M(i) = m < M forces the scaled prefix
      for (int M = m + 1; M <= std::min(m_max, 4) && pass; ++M) {
        const Context cM(q, M);
        for (long long i = 0; i < cM.size() && pass; ++i) {
          const PrefixInfo pi = prefix_info(i, cM);
          if (pi.l != m) continue;
          const long long down = part(i, M - m, cM);
          if (pi.nbar != cM.qpow(M - m) * prefix_info(down, ctx).nbar ||
              down != down_prefix(i, M, ctx)) {
            pass = false;
            detail = describe("prefix recursion failed at q=", q, " M=", M,
                              " i=", i);
          }
        }
      }
    }
  rec.add("prefix lemmas (scaling/decrement/monotone/recursion)", pass, detail);
}

void check_matrix_structure(Recorder& rec, long long q_max, int m_max,
                            long long budget) {
  bool pass = true;
  std::string detail;
  for (long long q = 2; q <= q_max && pass; ++q)
    for (int m = 1; m <= m_max && pass; ++m) {
      const Context ctx(q, m);
      if (ctx.size() > std::min<long long>(budget, 256)) continue;
      const TransitionMatrix full(ctx, 0);
      const DenseMatrix dm = dense(full, budget);
      for (long long r = 0; r < dm.n && pass; ++r) {
        long long rs = 0, cs = 0;
        for (long long c = 0; c < dm.n; ++c) {
          rs += dm.at(r, c);
          cs += dm.at(c, r);
          if (dm.at(r, c) != entry(r + 1, c + 1, full)) {
            pass = false;
            detail = describe("dense/entry mismatch at q=", q, " m=", m);
          }
        }
        if (rs != q || cs != q) {
          pass = false;
          detail = describe("row/column sum != q at q=", q, " m=", m, " r=", r);
        }
      }
      // powers against the predicate
      std::vector<std::int64_t> P(dm.a.begin(), dm.a.end());
      std::vector<std::int64_t> A(dm.a.begin(), dm.a.end());
      for (int k = 1; k <= m && pass; ++k) {
        if (k > 1) P = matmul(P, A, dm.n);
        for (long long r = 0; r < dm.n && pass; ++r)
          for (long long c = 0; c < dm.n; ++c)
            if (P[static_cast<std::size_t>(r * dm.n + c)] !=
                power_entry(r + 1, c + 1, k, full)) {
              pass = false;
              detail = describe("power lemma failed at q=", q, " m=", m,
                                " k=", k, " r=", r + 1, " c=", c + 1);
              break;
            }
      }
    }
  rec.add("power lemma and row/column sums", pass, detail);
}

void check_permutation_minors(Recorder& rec, long long q_max, int m_max) {
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(777);
  auto test_subset = [&](const TransitionMatrix& tm,
                         const std::vector<long long>& P) {
    const std::size_t n = P.size();
    std::vector<long long> sub(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sub[r * n + c] = entry(P[r], P[c], tm);
    const long long d = det_small(sub, n);
    if (d != 0 && !is_permutation_submatrix(P, tm)) {
      pass = false;
      detail = describe("nonzero minor on a non-permutation at q=", tm.ctx.q,
                        " m=", tm.ctx.m);
    }
    if (d != 0 && d != 1 && d != -1) {
      pass = false;
      detail = describe("non-unit permutation minor at q=", tm.ctx.q);
    }
  };
  for (long long q = 2; q <= std::min<long long>(q_max, 3) && pass; ++q)
    for (int m = 1; m <= std::min(m_max, 2) && pass; ++m) {
      const Context ctx(q, m);
      if (ctx.size() > 9) continue;
      const TransitionMatrix tm(ctx, 0);
      const long long n = ctx.size();
      for (long long mask = 1; mask < (1LL << n) && pass; ++mask) {
        std::vector<long long> P;
        for (long long b = 0; b < n; ++b)
          if (mask & (1LL << b)) P.push_back(b + 1);
        if (P.size() > 6) continue;
        test_subset(tm, P);
      }
    }
  if (q_max >= 3 && m_max >= 3) {
    const Context ctx(3, 3);
    const TransitionMatrix tm(ctx, 0);
    for (int t = 0; t < 4000 && pass; ++t) {
      std::set<long long> s;
      const std::size_t want = 1 + rng() % 6;
      while (s.size() < want)
        s.insert(1 + static_cast<long long>(rng() % 27));
      test_subset(tm, std::vector<long long>(s.begin(), s.end()));
    }
  }
  rec.add("permutation-minor lemma", pass, detail);
}

void check_cycles(Recorder& rec, long long q_max, int m_max) {
  bool pass = true;
  std::string detail;
  for (long long q = 2; q <= std::min<long long>(q_max, 3) && pass; ++q)
    for (int m = 1; m <= std::min(m_max, 3) && pass; ++m) {
      const Context ctx(q, m);
      const TransitionMatrix full(ctx, 0);
      const std::vector<Cycle> found = enumerate_cycles(full, m);
      std::map<int, long long> by_len;
      for (const Cycle& c : found) {
        ++by_len[c.k()];
        const long long mn = *std::min_element(c.elements.begin(), c.elements.end());
        if (mn != c.elements.front()) {
          pass = false;
          detail = "enumerated cycle not min-first";
          break;
        }
        if (!is_minimal(mn - 1, ctx) || prefix_info(mn - 1, ctx).l != c.k()) {
          pass = false;
          detail = describe("cycle minimum not minimal at q=", q, " m=", m,
                            " min=", mn);
          break;
        }
        if (unique_cycle(mn, full).elements != c.elements) {
          pass = false;
          detail = describe("unique_cycle disagrees with search at q=", q,
                            " m=", m, " min=", mn);
          break;
        }
        // round trip through the induction maps
        const Cycle lifted = cycle_up(c, m + 1);
        if (cycle_down(lifted, m).elements != c.elements) {
          pass = false;
          detail = describe("up/down round trip failed at q=", q, " m=", m);
          break;
        }
      }
      for (int k = 1; k <= m && pass; ++k) {
        if (count_cycles(full, k) != by_len[k]) {
          pass = false;
          detail = describe("count_cycles disagrees with search at q=", q,
                            " m=", m, " k=", k);
        }
        // trace bookkeeping: closed k-walks decompose over divisors of k
        long long walks = 0;
        for (int d = 1; d <= k; ++d)
          if (k % d == 0) walks += d * count_cycles(full, d);
        if (BigInt(walks) != trace_power(full, k)) {
          pass = false;
          detail = describe("trace bookkeeping failed at q=", q, " m=", m,
                            " k=", k);
        }
      }
    }
  rec.add("cycle structure (minimality, uniqueness, up/down, counts)", pass,
          detail);
}

void check_trace_invariance(Recorder& rec, long long q_max, int m_max,
                            long long budget) {
  bool pass = true;
  std::string detail;
  for (long long q = 2; q <= std::min<long long>(q_max, 3) && pass; ++q)
    for (int m = 1; m <= std::min(m_max, 3) && pass; ++m)
      for (int M = m; M <= std::min(m_max, 3) && pass; ++M) {
        const Context cm(q, m), cM(q, M);
        if (cM.size() > std::min<long long>(budget, 256)) continue;
        const long long scale = cM.qpow(M - m);
        for (long long c = 0; c <= cm.size() && pass; ++c)
          for (int k = 1; k <= M && pass; ++k) {
            if (trace_power(TransitionMatrix(cm, c), k, budget) !=
                trace_power(TransitionMatrix(cM, scale * c), k, budget)) {
              pass = false;
              detail = describe("trace invariance failed at q=", q, " m=", m,
                                " M=", M, " c=", c, " k=", k);
            }
          }
        // projection form: valid exactly when the prefix length equals m
        for (long long c = 0; c < cM.size() && pass; ++c) {
          if (prefix_info(c, cM).l != m) continue;
          for (int k = 1; k <= m && pass; ++k)
            if (trace_power(TransitionMatrix(cm, part(c, M - m, cM)), k, budget) !=
                trace_power(TransitionMatrix(cM, c), k, budget)) {
              pass = false;
              detail = describe("projected trace invariance failed at q=", q,
                                " m=", m, " M=", M, " c=", c, " k=", k);
            }
        }
      }
  rec.add("trace invariance across word lengths", pass, detail);
}

void check_charpoly(Recorder& rec, long long q_max, int m_max, long long budget) {
  bool pass = true;
  std::string detail;
  for (long long q = 2; q <= q_max && pass; ++q)
    for (int m = 1; m <= m_max && pass; ++m) {
      const Context ctx(q, m);
      for (long long i = 0; i < ctx.size() && pass; ++i) {
        const CharPoly fast = charpoly_fast(i, ctx);
        if (eval_g_at_q(fast) != prefix_info(i, ctx).nbar) {
          pass = false;
          detail = describe("evaluation identity failed at q=", q, " m=", m,
                            " i=", i);
        }
      }
      if (ctx.size() > std::min<long long>(budget, 100)) continue;
      for (long long i = 0; i < ctx.size() && pass; ++i) {
        const std::vector<long long> fast = full_coeffs(charpoly_fast(i, ctx));
        const std::vector<BigInt> oracle = charpoly_newton(i, ctx, budget);
        if (fast.size() != oracle.size()) {
          pass = false;
          detail = describe("oracle degree mismatch at q=", q, " m=", m, " i=", i);
          break;
        }
        for (std::size_t j = 0; j < fast.size(); ++j)
          if (BigInt(fast[j]) != oracle[j]) {
            pass = false;
            detail = describe("closed form != trace oracle at q=", q, " m=", m,
                              " i=", i, " j=", j + 1);
            break;
          }
        if (pass && ctx.size() - i <= 8) {
          const std::vector<long long> minors = charpoly_minors(i, ctx);
          for (std::size_t j = 0; j < minors.size(); ++j)
            if (BigInt(minors[j]) != oracle[j]) {
              pass = false;
              detail = describe("minors oracle mismatch at q=", q, " m=", m,
                                " i=", i);
              break;
            }
        }
      }
      // coefficient blocks repeat across word lengths
      for (int M = m + 1; M <= m_max && pass; ++M) {
        const Context cM(q, M);
        for (long long i = 0; i < ctx.size() && pass; ++i) {
          const std::vector<long long> lo = charpoly_fast(i, ctx).coeffs;
          const std::vector<long long> hi =
              charpoly_fast(cM.qpow(M - m) * i, cM).coeffs;
          for (std::size_t j = 0; j < hi.size(); ++j) {
            const long long want = j < lo.size() ? lo[j] : 0;
            if (hi[j] != want) {
              pass = false;
              detail = describe("coefficient block mismatch at q=", q, " m=", m,
                                " M=", M, " i=", i);
              break;
            }
          }
        }
      }
    }
  rec.add("characteristic polynomial closed form vs oracles", pass, detail);
}

void check_spectrum(Recorder& rec, long long q_max, int m_max, long long budget) {
  bool pass = true;
  std::string detail;
  for (long long q = 2; q <= q_max && pass; ++q) {
    for (int m = 1; m <= m_max && pass; ++m) {
      const Context ctx(q, m);
      if (ctx.size() > 4096) continue;
      double prev = 2.0;
      for (long long i = 0; i < ctx.size() && pass; ++i) {
        const DimPoint p = phi_exact(i, ctx);
        if (p.phi > prev + 1e-12 || p.phi < -1e-12 || p.phi > 1.0 + 1e-12) {
          pass = false;
          detail = describe("phi not monotone/in range at q=", q, " m=", m,
                            " i=", i);
        }
        prev = p.phi;
        if (ctx.size() <= std::min<long long>(budget, 128)) {
          const double pw =
              power_iteration_rho(dense(TransitionMatrix(ctx, i), budget));
          if (std::abs(pw - p.rho) > 1e-9 || p.residual > 1e-9) {
            pass = false;
            detail = describe("Perron dual-method disagreement at q=", q,
                              " m=", m, " i=", i);
          }
        }
      }
      if (phi_exact(0, ctx).phi != 1.0) {
        pass = false;
        detail = describe("phi(0) != 1 at q=", q, " m=", m);
      }
      const DimPoint edge = phi_exact(ctx.qpow(m - 1) * (q - 1), ctx);
      if (edge.rho == 1.0 && edge.phi != 0.0) {
        pass = false;
        detail = describe("phi at unit Perron root not 0 at q=", q, " m=", m);
      }
    }
    for (long long i = 0; i < q && pass; ++i) {
      const Plateau pl = plateau(i, Context(q, 1));
      const double closed = std::log(static_cast<double>(q - i)) /
                            std::log(static_cast<double>(q));
      if (std::abs(pl.value - closed) > 1e-12) {
        pass = false;
        detail = describe("plateau value mismatch at q=", q, " i=", i);
      }
      const double at_grid = psi(static_cast<double>(i) / static_cast<double>(q), q);
      if (std::abs(pl.value - at_grid) > 1e-12) {
        pass = false;
        detail = describe("phi/psi grid identity failed at q=", q, " i=", i);
      }
      for (int m = 2; m <= m_max && pass; ++m) {
        const Context cm(q, m);
        long long jm = 0;
        for (int t = 0; t < m; ++t) jm = jm * q + i;
        if (std::abs(phi_exact(cm.qpow(m - 1) * i, cm).phi -
                     phi_exact(jm, cm).phi) > 1e-12) {
          pass = false;
          detail = describe("plateau constancy failed at q=", q, " i=", i,
                            " m=", m);
        }
      }
    }
  }
  rec.add("spectrum (monotone, plateau, endpoints, dual-method Perron)", pass,
          detail);
}

void check_asymptotics(Recorder& rec, long long q_max) {
  bool pass = true;
  std::string detail;
  std::vector<long long> qs;
  for (long long q = 2; q <= std::max<long long>(q_max, 4); ++q) qs.push_back(q);
  qs.push_back(50);
  qs.push_back(500);
  for (double c : {0.0, 0.1, 0.25, 1.0 / 3.0, 0.5, 0.7, 0.9}) {
    for (const AsymptoticRow& row : asymptotic_check(c, qs))
      if (!row.ok) {
        pass = false;
        detail = describe("asymptotic sandwich failed at c=", c, " q=", row.q);
      }
  }
  rec.add("asymptotic sandwich phi/psi", pass, detail);
}

}  // namespace

std::vector<Check> run(long long q_max, int m_max, long long dense_budget) {
  std::vector<Check> out;
  Recorder rec{out};
  check_base_arith(rec, q_max, m_max);
  check_prefix(rec, q_max, m_max);
  check_matrix_structure(rec, q_max, m_max, dense_budget);
  check_permutation_minors(rec, q_max, m_max);
  check_cycles(rec, q_max, m_max);
  check_trace_invariance(rec, q_max, m_max, dense_budget);
  check_charpoly(rec, q_max, m_max, dense_budget);
  check_spectrum(rec, q_max, m_max, dense_budget);
  check_asymptotics(rec, q_max);
  return out;
}

}  // namespace dimshift::verify
