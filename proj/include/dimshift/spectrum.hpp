#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dimshift/charpoly.hpp"
#include "dimshift/context.hpp"
#include "dimshift/subshift.hpp"

namespace dimshift {

struct PerronRoot {
  double rho;
  double residual;  // |g(rho)| after polishing
};

// Unique positive root of the trailing-zero-stripped factor of g. The
// coefficients are nonnegative with a single sign change, so bisection on
// [0, q] is certain; a few tangent steps polish the bracket midpoint.
// Linear factors (including i = 0, root q) are returned exactly.
PerronRoot perron_root(const CharPoly& p);

// Spectral radius of a 0/1 matrix by power iteration on A + I (the shift
// pushes every other eigenvalue strictly inside the peripheral circle).
double power_iteration_rho(const DenseMatrix& dm, double tol = 1e-14,
                           long long max_iter = 500000);

// Dimension value at the exact parameter c = i / q^m.
struct DimPoint {
  long long q;
  int m;
  long long i;
  double rho;
  double phi;  // log(rho) / log(q)
  double residual;
};

DimPoint phi_exact(long long i, const Context& ctx);

// Closed interval [i/q, i/(q-1)] on which the dimension is constant, with
// its value. Degenerate [0, 0] for i = 0.
struct Plateau {
  long long q;
  long long i;
  long long lo_num, lo_den;
  long long hi_num, hi_den;
  double value;
};

Plateau plateau(long long i, const Context& ctx);

// Comparison function 1 + log(1-c)/log(q) for c < (q-1)/q, else 0.
double psi(double c, long long q);

// Sandwich around the dimension at an arbitrary parameter: phi evaluated at
// the neighbouring grid points of resolution m. Point values at non-grid
// parameters are never invented; only the bracket is reported.
struct DimBracket {
  double c;
  long long q;
  int m;
  DimPoint lower;  // at min(floor(c q^m) + 1, q^m - 1)
  DimPoint upper;  // at floor(c q^m)
};

DimBracket phi_bracket(double c, const Context& ctx);

// One row of the asymptotic comparison of phi against psi at a fixed c.
// With i = floor(qc), both functions lie in
// [log(q-i-1)/log q, log(q-i)/log q], which yields the provable enclosure
// wide_lo <= phi/psi <= wide_hi; that enclosure is asserted for the
// bracket-end ratios and, when c falls inside the constant interval
// [i/q, i/(q-1)], for the exact ratio too. The nominal band
// [log(q-i)/log(q-i+1), log(q-i+1)/log(q-i)] is asserted for the exact
// ratio at grid parameters c = i/q (where phi = psi) and as an overlap
// condition otherwise.
struct AsymptoticRow {
  long long q;
  long long i;
  double psi_value;
  DimBracket bracket;
  bool degenerate;   // psi = 0 (c >= (q-1)/q); ratio not formed
  bool exact;        // c lies in the constant interval, phi(c) known
  double phi_value;  // exact phi(c) when exact
  double ratio_lo, ratio_hi;
  double band_lo, band_hi;  // nominal sandwich bounds
  double wide_lo, wide_hi;  // provable bracket-derived bounds
  bool ok;
};

std::vector<AsymptoticRow> asymptotic_check(double c,
                                            const std::vector<long long>& qs);

// CSV schema: q,m,i,c_num,c_den,rho,phi,psi,residual with 17 significant
// digits for floating values; psi stays empty unless supplied.
std::string csv_header();
std::string to_csv_row(const DimPoint& p, const double* psi_value = nullptr);

nlohmann::json to_json(const DimPoint& p);
nlohmann::json to_json(const DimBracket& b);

}  // namespace dimshift
