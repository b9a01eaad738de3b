#include "dimshift/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "dimshift/prefix.hpp"

namespace dimshift {

namespace {

// g(x) = x^d - b[0] x^{d-1} - ... - b[d-1], Horner form.
double eval_g(const std::vector<long long>& b, double x) {
  double v = 1.0;
  for (long long a : b) v = v * x - static_cast<double>(a);
  return v;
}

double eval_g_prime(const std::vector<long long>& b, double x) {
  const int d = static_cast<int>(b.size());
  double v = d;
  for (int j = 0; j < d - 1; ++j)
    v = v * x - static_cast<double>(b[static_cast<std::size_t>(j)]) * (d - 1 - j);
  return v;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PerronRoot perron_root(const CharPoly& p) {
  // Strip trailing zero coefficients; they only contribute roots at 0.
  std::size_t d = p.coeffs.size();
  while (d > 0 && p.coeffs[d - 1] == 0) --d;
  if (d == 0) throw std::invalid_argument("perron_root: zero polynomial factor");
  const std::vector<long long> b(p.coeffs.begin(),
                                 p.coeffs.begin() + static_cast<std::ptrdiff_t>(d));
  if (d == 1)  // linear: root is the coefficient itself (covers i = 0, root q)
    return PerronRoot{static_cast<double>(b[0]), 0.0};

  // One sign change, so [0, q] brackets the unique positive root:
  // g(0) = -b[d-1] < 0 and g(q) = ibar / q^strip > 0.
  double lo = 0.0, hi = static_cast<double>(p.ctx.q);
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (eval_g(b, mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 6; ++it) {
    const double fp = eval_g_prime(b, x);
    if (fp == 0.0) break;
    const double step = eval_g(b, x) / fp;
    const double nx = x - step;
    if (!(nx > 0.0) || nx > static_cast<double>(p.ctx.q)) break;
    x = nx;
    if (std::abs(step) < 1e-16 * std::max(1.0, x)) break;
  }
  return PerronRoot{x, std::abs(eval_g(b, x))};
}

double power_iteration_rho(const DenseMatrix& dm, double tol, long long max_iter) {
  const long long n = dm.n;
  if (n == 0) throw std::invalid_argument("power_iteration_rho: empty matrix");
  std::vector<double> v(static_cast<std::size_t>(n), 1.0);
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  double mu = 0.0;
  int stable = 0;
  for (long long it = 0; it < max_iter; ++it) {
    for (long long r = 0; r < n; ++r) {
      double acc = v[static_cast<std::size_t>(r)];  // the +I shift
      for (long long c = 0; c < n; ++c)
        if (dm.at(r, c)) acc += v[static_cast<std::size_t>(c)];
      w[static_cast<std::size_t>(r)] = acc;
    }
    const double norm = *std::max_element(w.begin(), w.end());
    for (double& x : w) x /= norm;
    v.swap(w);
    if (std::abs(norm - mu) <= tol * std::max(1.0, norm)) {
      if (++stable >= 32) return norm - 1.0;
    } else {
      stable = 0;
    }
    mu = norm;
  }
  return mu - 1.0;  // best available estimate at the iteration cap
}

DimPoint phi_exact(long long i, const Context& ctx) {
  const CharPoly p = charpoly_fast(i, ctx);
  const PerronRoot r = perron_root(p);
  return DimPoint{ctx.q,
                  ctx.m,
                  i,
                  r.rho,
                  std::log(r.rho) / std::log(static_cast<double>(ctx.q)),
                  r.residual};
}

Plateau plateau(long long i, const Context& ctx) {
  const long long q = ctx.q;
  if (i < 0 || i >= q) throw std::out_of_range("plateau: i outside [0, q)");
  // Both ends of [i/q, i/(q-1)] carry the same minimal prefix q^{m-1} i:
  // check the representative j(m) = i (q^m - 1)/(q - 1) for a few lengths.
  long long jm = 0;
  for (int mm = 1; mm <= 5; ++mm) {
    try {
      const Context cm(q, mm);
      jm = jm * q + i;  // i repeated mm times in base q; fits since jm < q^mm
      if (prefix_info(jm, cm).nbar != cm.qpow(mm - 1) * i)
        throw std::logic_error("plateau: representative has the wrong minimal prefix");
    } catch (const std::invalid_argument&) {
      break;  // q^mm no longer representable
    }
  }
  const double value = phi_exact(i, Context(q, 1)).phi;
  return Plateau{q, i, i, q, i, q - 1, value};
}

double psi(double c, long long q) {
  if (!(c >= 0.0) || !(c < 1.0)) throw std::out_of_range("psi: c outside [0, 1)");
  if (q < 2) throw std::invalid_argument("psi: q must be >= 2");
  const double qd = static_cast<double>(q);
  if (c < (qd - 1.0) / qd)
    return 1.0 + std::log1p(-c) / std::log(qd);
  return 0.0;
}

DimBracket phi_bracket(double c, const Context& ctx) {
  if (!(c >= 0.0) || !(c < 1.0))
    throw std::out_of_range("phi_bracket: c outside [0, 1)");
  const long long size = ctx.size();
  long long i = static_cast<long long>(std::floor(c * static_cast<double>(size)));
  i = std::clamp<long long>(i, 0, size - 1);
  const long long ilo = std::min<long long>(i + 1, size - 1);
  return DimBracket{c, ctx.q, ctx.m, phi_exact(ilo, ctx), phi_exact(i, ctx)};
}

std::vector<AsymptoticRow> asymptotic_check(double c,
                                            const std::vector<long long>& qs) {
  if (!(c >= 0.0) || !(c < 1.0))
    throw std::out_of_range("asymptotic_check: c outside [0, 1)");
  std::vector<AsymptoticRow> rows;
  rows.reserve(qs.size());
  const double slack = 1e-12;
  for (long long q : qs) {
    const Context ctx(q, 1);
    AsymptoticRow row{};
    row.q = q;
    row.psi_value = psi(c, q);
    row.bracket = phi_bracket(c, ctx);
    const long long i = row.bracket.upper.i;
    row.i = i;
    // phi is constant on [i/q, i/(q-1)], so c inside that interval has the
    // exact value log(q-i)/log(q).
    row.exact = (i == 0) ? (c == 0.0)
                         : c * static_cast<double>(q - 1) <= static_cast<double>(i);
    row.phi_value = row.exact ? row.bracket.upper.phi : 0.0;
    if (row.psi_value == 0.0) {
      // c >= (q-1)/q: both functions vanish; nothing to compare.
      row.degenerate = true;
      row.ok = row.exact && row.bracket.upper.phi == 0.0;
      rows.push_back(row);
      continue;
    }
    row.ratio_lo = row.bracket.lower.phi / row.psi_value;
    row.ratio_hi = row.bracket.upper.phi / row.psi_value;
    const double lgi = std::log(static_cast<double>(q - i));      // log(q-i)
    const double lgp = std::log(static_cast<double>(q - i + 1));  // log(q-i+1)
    row.band_lo = lgi / lgp;
    row.band_hi = lgp / lgi;
    if (q - i - 1 >= 2) {
      const double lgm = std::log(static_cast<double>(q - i - 1));  // log(q-i-1)
      row.wide_lo = lgm / lgi;
      row.wide_hi = lgi / lgm;
    } else {
      row.wide_lo = 0.0;
      row.wide_hi = std::numeric_limits<double>::infinity();
    }
    bool ok = true;
    // Provable enclosure always contains both bracket-end ratios.
    ok = ok && row.ratio_lo >= row.wide_lo - slack;
    ok = ok && row.ratio_hi <= row.wide_hi + slack;
    // The nominal band must at least intersect the possible ratio range.
    ok = ok && row.ratio_hi >= row.band_lo - slack;
    ok = ok && row.ratio_lo <= row.band_hi + slack;
    if (row.exact) {
      const double ratio = row.phi_value / row.psi_value;
      ok = ok && ratio >= row.wide_lo - slack && ratio <= row.wide_hi + slack;
      // At grid parameters c = i/q the two functions agree and the nominal
      // band holds for the exact ratio; off the grid only the provable
      // enclosure is guaranteed.
      const bool grid = c * static_cast<double>(q) == static_cast<double>(i);
      if (grid)
        ok = ok && ratio >= row.band_lo - slack && ratio <= row.band_hi + slack;
    }
    row.ok = ok;
    rows.push_back(row);
  }
  return rows;
}

std::string csv_header() { return "q,m,i,c_num,c_den,rho,phi,psi,residual"; }

std::string to_csv_row(const DimPoint& p, const double* psi_value) {
  Context ctx(p.q, p.m);
  std::string out;
  out += std::to_string(p.q);
  out += ',';
  out += std::to_string(p.m);
  out += ',';
  out += std::to_string(p.i);
  out += ',';
  out += std::to_string(p.i);
  out += ',';
  out += std::to_string(ctx.size());
  out += ',';
  out += fmt17(p.rho);
  out += ',';
  out += fmt17(p.phi);
  out += ',';
  if (psi_value != nullptr) out += fmt17(*psi_value);
  out += ',';
  out += fmt17(p.residual);
  return out;
}

nlohmann::json to_json(const DimPoint& p) {
  return nlohmann::json{{"q", p.q},           {"m", p.m},
                        {"i", p.i},           {"c_num", p.i},
                        {"c_den", Context(p.q, p.m).size()},
                        {"rho", p.rho},       {"phi", p.phi},
                        {"residual", p.residual}};
}

nlohmann::json to_json(const DimBracket& b) {
  return nlohmann::json{{"c", b.c},
                        {"q", b.q},
                        {"m", b.m},
                        {"lower", to_json(b.lower)},
                        {"upper", to_json(b.upper)}};
}

}  // namespace dimshift
