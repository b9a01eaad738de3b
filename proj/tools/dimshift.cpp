// Command-line front end: single-point queries, table reproduction,
// verification sweeps and plot-data emission.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or range error.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimshift/base_arith.hpp"
#include "dimshift/charpoly.hpp"
#include "dimshift/prefix.hpp"
#include "dimshift/spectrum.hpp"
#include "dimshift/subshift.hpp"
#include "verify_suite.hpp"

namespace {

using namespace dimshift;

long long dense_budget_from_env() {
  if (const char* s = std::getenv("DIMSHIFT_DENSE_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("DIMSHIFT_DENSE_BUDGET must be a positive integer");
  }
  return kDenseBudgetDefault;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string poly_string(const CharPoly& p) {
  std::string s = "x^" + std::to_string(p.ctx.m);
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    const long long a = p.coeffs[j];
    if (a == 0) continue;
    const int pow = p.ctx.m - 1 - static_cast<int>(j);
    s += " - ";
    if (a != 1 || pow == 0) s += std::to_string(a);
    if (a != 1 && pow > 0) s += "*";
    if (pow > 1) s += "x^" + std::to_string(pow);
    else if (pow == 1) s += "x";
  }
  return s;
}

std::string coeff_list(const std::vector<long long>& a) {
  std::string s = "(";
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(a[j]);
  }
  return s + ")";
}

int cmd_prefix(long long q, int m, long long n) {
  const Context ctx(q, m);
  const PrefixInfo pi = prefix_info(n, ctx);
  std::cout << "l=" << pi.l << " nbar=" << pi.nbar << "\n";
  return 0;
}

int cmd_charpoly(long long q, int m, long long i, bool oracle, bool json,
                 long long budget) {
  const Context ctx(q, m);
  const CharPoly p = charpoly_fast(i, ctx);
  bool match = true;
  if (oracle) {
    const std::vector<BigInt> slow = charpoly_newton(i, ctx, budget);
    const std::vector<long long> fast = full_coeffs(p);
    match = slow.size() == fast.size();
    for (std::size_t j = 0; match && j < fast.size(); ++j)
      match = BigInt(fast[j]) == slow[j];
  }
  if (json) {
    nlohmann::json j = to_json(p);
    if (oracle) j["oracle"] = match ? "match" : "mismatch";
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "a=" << coeff_list(p.coeffs) << " trailing=" << p.trailing
              << " ibar=" << eval_g_at_q(p) << "\n";
    std::cout << "g(x) = " << poly_string(p) << "\n";
    if (oracle) std::cout << "oracle=" << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_table(long long q, int m) {
  const Context ctx(q, m);
  const TransitionMatrix full(ctx, 0);
  std::cout << "i ibar";
  for (int j = 1; j <= m; ++j) std::cout << " a" << j;
  std::cout << " l";
  for (int k = 1; k < m; ++k) std::cout << " d" << k;
  std::cout << "\n";
  for (long long i = 0; i < ctx.size(); ++i) {
    const CharPoly p = charpoly_fast(i, ctx);
    const PrefixInfo pi = prefix_info(i, ctx);
    std::cout << i << " " << pi.nbar;
    for (long long a : p.coeffs) std::cout << " " << a;
    std::cout << " " << pi.l;
    for (int k = 1; k < m; ++k)
      std::cout << " " << power_entry(i + 1, i + 1, k, full);
    std::cout << "\n";
  }
  return 0;
}

void print_point(const char* label, const DimPoint& p) {
  std::cout << label << "i=" << p.i << " rho=" << fmt17(p.rho)
            << " phi=" << fmt17(p.phi) << " residual=" << fmt17(p.residual)
            << "\n";
}

int cmd_dim(long long q, int m_flag, long long i_flag, const std::string& c_str,
            bool json) {
  if (i_flag >= 0) {
    if (m_flag <= 0) throw CLI::ValidationError("dim", "-i requires -m");
    const Context ctx(q, m_flag);
    const DimPoint p = phi_exact(i_flag, ctx);
    if (json) std::cout << to_json(p).dump() << "\n";
    else {
      std::cout << "c=" << p.i << "/" << ctx.size() << " q=" << q
                << " m=" << m_flag << "\n";
      print_point("", p);
    }
    return 0;
  }
  if (c_str.empty()) throw CLI::ValidationError("dim", "need -i or -c");
  const std::size_t slash = c_str.find('/');
  if (slash != std::string::npos) {
    // exact rational i/q^m: evaluate the point, no bracket
    const long long num = std::stoll(c_str.substr(0, slash));
    const long long den = std::stoll(c_str.substr(slash + 1));
    long long pw = 1;
    int m = 0;
    while (pw < den) {
      if (pw > den / q) {
        pw = -1;
        break;
      }
      pw *= q;
      ++m;
    }
    if (pw != den || m < 1)
      throw std::out_of_range("dim: denominator is not a power of q");
    if (m_flag > 0 && m_flag != m)
      throw std::out_of_range("dim: -m disagrees with the denominator");
    if (num < 0 || num >= den) throw std::out_of_range("dim: c outside [0, 1)");
    const Context ctx(q, m);
    const DimPoint p = phi_exact(num, ctx);
    if (json) std::cout << to_json(p).dump() << "\n";
    else {
      std::cout << "c=" << num << "/" << den << " q=" << q << " m=" << m << "\n";
      print_point("", p);
    }
    return 0;
  }
  // decimal parameter: bracket mode at resolution m
  if (m_flag <= 0) throw CLI::ValidationError("dim", "decimal -c requires -m");
  const double c = std::stod(c_str);
  const Context ctx(q, m_flag);
  const DimBracket b = phi_bracket(c, ctx);
  if (json) std::cout << to_json(b).dump() << "\n";
  else {
    std::cout << "c=" << fmt17(c) << " q=" << q << " m=" << m_flag
              << " bracket\n";
    print_point("lower: ", b.lower);
    print_point("upper: ", b.upper);
  }
  return 0;
}

int cmd_sweep(long long q, int m, long long i_lo, long long i_hi,
              const std::string& format, bool with_psi, int jobs) {
  const Context ctx(q, m);
  if (i_hi < 0) i_hi = ctx.size() - 1;
  if (i_lo < 0 || i_lo > i_hi || i_hi >= ctx.size())
    throw std::out_of_range("sweep: range outside [0, q^m)");
  const long long count = i_hi - i_lo + 1;
  std::vector<DimPoint> points(static_cast<std::size_t>(count));
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  std::atomic<long long> cursor{0};
  auto worker = [&] {
    for (;;) {
      const long long at = cursor.fetch_add(1);
      if (at >= count) return;
      points[static_cast<std::size_t>(at)] = phi_exact(i_lo + at, ctx);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  const double size = static_cast<double>(ctx.size());
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const DimPoint& p : points) {
      nlohmann::json j = to_json(p);
      if (with_psi) j["psi"] = psi(static_cast<double>(p.i) / size, q);
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << csv_header() << "\n";
    for (const DimPoint& p : points) {
      if (with_psi) {
        const double ps = psi(static_cast<double>(p.i) / size, q);
        std::cout << to_csv_row(p, &ps) << "\n";
      } else {
        std::cout << to_csv_row(p) << "\n";
      }
    }
  }
  return 0;
}

int cmd_verify(long long q_max, int m_max, long long budget) {
  const std::vector<verify::Check> checks = verify::run(q_max, m_max, budget);
  bool all = true;
  for (const verify::Check& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass) std::cout << " -- " << c.detail;
    std::cout << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "verify: all checks passed" : "verify: FAILURES") << "\n";
  return all ? 0 : 1;
}

int cmd_asym(double c, const std::vector<long long>& qs) {
  bool all = true;
  for (const AsymptoticRow& row : asymptotic_check(c, qs)) {
    std::cout << "q=" << row.q << " i=" << row.i;
    if (row.degenerate) {
      std::cout << " psi=0 phi=0 (both vanish)";
    } else {
      std::cout << " phi_lo=" << fmt17(row.bracket.lower.phi)
                << " phi_hi=" << fmt17(row.bracket.upper.phi)
                << " psi=" << fmt17(row.psi_value);
      if (row.exact)
        std::cout << " ratio=" << fmt17(row.phi_value / row.psi_value);
      std::cout << " ratio_range=[" << fmt17(row.ratio_lo) << ","
                << fmt17(row.ratio_hi) << "]"
                << " band=[" << fmt17(row.band_lo) << "," << fmt17(row.band_hi)
                << "]";
    }
    std::cout << (row.ok ? " ok" : " FAIL") << "\n";
    all = all && row.ok;
  }
  return all ? 0 : 1;
}

int cmd_matrix(long long q, int m, long long i, long long budget) {
  const Context ctx(q, m);
  const TransitionMatrix tm(ctx, i);
  dump_grid(dense(tm, budget), std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subshift transition matrices, characteristic polynomials and "
               "the dimension spectrum of orbits bounded below"};
  app.require_subcommand(1);

  long long q = 0;
  int m = 0;
  long long n = 0, i = -1;
  bool oracle = false, json = false, with_psi = false;
  std::string c_str, format = "csv";
  long long i_lo = 0, i_hi = -1;
  int jobs = 1;
  long long q_max = 3;
  int m_max = 3;
  double c_val = 0.0;
  std::vector<long long> q_list;

  CLI::App* sc_prefix = app.add_subcommand("prefix", "prefix length and minimal prefix");
  sc_prefix->add_option("-q", q, "radix")->required();
  sc_prefix->add_option("-m", m, "word length")->required();
  sc_prefix->add_option("n", n, "subject integer")->required();

  CLI::App* sc_char = app.add_subcommand("charpoly", "characteristic polynomial factor");
  sc_char->add_option("-q", q, "radix")->required();
  sc_char->add_option("-m", m, "word length")->required();
  sc_char->add_option("i", i, "cutoff")->required();
  sc_char->add_flag("--oracle", oracle, "also run the trace oracle and compare");
  sc_char->add_flag("--json", json, "JSON output");

  CLI::App* sc_table = app.add_subcommand("table", "per-cutoff table: minimal prefix, digits, diagonal indicators");
  sc_table->add_option("-q", q, "radix")->required();
  sc_table->add_option("-m", m, "word length")->required();

  CLI::App* sc_dim = app.add_subcommand("dim", "dimension at a parameter (exact point or bracket)");
  sc_dim->add_option("-q", q, "radix")->required();
  sc_dim->add_option("-m", m, "resolution");
  sc_dim->add_option("-i", i, "numerator of c = i/q^m");
  sc_dim->add_option("-c", c_str, "parameter: fraction i/q^m or decimal");
  sc_dim->add_flag("--json", json, "JSON output");

  CLI::App* sc_sweep = app.add_subcommand("sweep", "dimension values over a cutoff range");
  sc_sweep->add_option("-q", q, "radix")->required();
  sc_sweep->add_option("-m", m, "word length")->required();
  sc_sweep->add_option("--from", i_lo, "first cutoff");
  sc_sweep->add_option("--to", i_hi, "last cutoff (default q^m - 1)");
  sc_sweep->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sc_sweep->add_flag("--psi", with_psi, "include the comparison function");
  sc_sweep->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  CLI::App* sc_verify = app.add_subcommand("verify", "oracle-equivalence and invariant suite");
  sc_verify->add_option("--q-max", q_max, "largest radix");
  sc_verify->add_option("--m-max", m_max, "largest word length");

  CLI::App* sc_asym = app.add_subcommand("asym", "asymptotic comparison against psi");
  sc_asym->add_option("-c", c_val, "parameter in [0,1)")->required();
  sc_asym->add_option("-q", q_list, "radices (comma separated)")
      ->required()
      ->delimiter(',');

  CLI::App* sc_matrix = app.add_subcommand("matrix", "dump the 0/1 matrix grid");
  sc_matrix->add_option("-q", q, "radix")->required();
  sc_matrix->add_option("-m", m, "word length")->required();
  sc_matrix->add_option("-i", i, "cutoff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const long long budget = dense_budget_from_env();
    if (sc_prefix->parsed()) return cmd_prefix(q, m, n);
    if (sc_char->parsed()) return cmd_charpoly(q, m, i, oracle, json, budget);
    if (sc_table->parsed()) return cmd_table(q, m);
    if (sc_dim->parsed()) return cmd_dim(q, m, i, c_str, json);
    if (sc_sweep->parsed()) return cmd_sweep(q, m, i_lo, i_hi, format, with_psi, jobs);
    if (sc_verify->parsed()) return cmd_verify(q_max, m_max, budget);
    if (sc_asym->parsed()) return cmd_asym(c_val, q_list);
    if (sc_matrix->parsed()) return cmd_matrix(q, m, std::max<long long>(i, 0), budget);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // bare logic_error marks an internal consistency failure
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
