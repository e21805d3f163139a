// riley: per-knot queries and bulk scans.
//
// Exit codes: 0 ok, 1 root count below the bound, 2 usage, 3 numeric or
// internal failure, 4 I/O.

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "riley/deform.hpp"
#include "riley/riley.hpp"
#include "riley/scan.hpp"

namespace {

using riley::Fraction;
using ordered_json = nlohmann::ordered_json;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kInternal = 3, kIo = 4 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Fraction parse_fraction(std::int64_t p, std::int64_t q) {
  try {
    return riley::normalize(p, q);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

std::optional<riley::Rational> parse_width(const std::string& s) {
  if (s.empty()) return std::nullopt;
  riley::Rational w;
  if (w.set_str(s, 10) != 0) throw usage_error("width must be a rational such as 1/1024");
  w.canonicalize();
  if (w <= 0) throw usage_error("width must be positive");
  return w;
}

std::string fixed(double v, int digits = 15) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

ordered_json fraction_json(const Fraction& k, std::int64_t q_input) {
  return {{"p", k.p}, {"q_input", q_input}, {"q_canonical", k.q}};
}

int cmd_poly(std::int64_t p, std::int64_t q, bool json) {
  const Fraction k = parse_fraction(p, q);
  const riley::IntPoly lambda = riley::riley_polynomial(k);
  if (json) {
    ordered_json j = fraction_json(k, q);
    j["lambda"] = riley::to_string(lambda);
    j["coeffs"] = riley::coefficient_strings(lambda);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << riley::to_string(lambda) << '\n';
    std::cout << "coeffs [";
    const auto cs = riley::coefficient_strings(lambda);
    for (std::size_t i = 0; i < cs.size(); ++i) std::cout << (i ? ", " : "") << cs[i];
    std::cout << "]\n";
  }
  return kOk;
}

int cmd_invariants(std::int64_t p, std::int64_t q, bool json) {
  const Fraction k = parse_fraction(p, q);
  const auto sd = riley::sign_sequences(k);
  const int sigma = riley::signature(sd);
  const auto det = riley::determinant(k);
  const int bound = riley::conjecture_bound(sd);
  const bool cong = riley::congruence_holds(det, sigma);
  if (json) {
    ordered_json j = fraction_json(k, q);
    j["n"] = sd.n;
    j["sigma"] = sigma;
    j["determinant"] = det;
    j["bound"] = bound;
    j["congruence_ok"] = cong;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "knot " << riley::to_string(k) << '\n'
              << "n " << sd.n << '\n'
              << "sigma " << sigma << '\n'
              << "det " << det << '\n'
              << "bound " << bound << '\n'
              << "congruence " << (cong ? "ok" : "FAILED") << '\n';
  }
  return cong ? kOk : kInternal;
}

int cmd_roots(std::int64_t p, std::int64_t q, const std::string& width, bool json) {
  const Fraction k = parse_fraction(p, q);
  const auto w = parse_width(width);
  const auto lambda = riley::riley_polynomial(k);
  const auto a = riley::analyze_lambda(lambda, true, w);
  if (json) {
    ordered_json j = fraction_json(k, q);
    j["real_root_count"] = a.real_root_count;
    ordered_json roots = ordered_json::array();
    for (const auto& I : a.roots) roots.push_back({I.lo.get_str(), I.hi.get_str()});
    j["root_intervals"] = roots;
    std::cout << j.dump() << '\n';
    return kOk;
  }
  if (a.roots.empty()) {
    std::cout << "no real roots\n";
    return kOk;
  }
  std::cout << a.real_root_count << (a.real_root_count == 1 ? " real root\n" : " real roots\n");
  for (const auto& I : a.roots) std::cout << riley::to_string(I) << "  ~ " << fixed(I.approx(), 12) << '\n';
  return kOk;
}

int cmd_verify(std::int64_t p, std::int64_t q, bool json) {
  const Fraction k = parse_fraction(p, q);
  const auto r = riley::verify_conjecture(k);
  int code = kOk;
  if (!r.congruence_ok) code = kInternal;
  if (!r.satisfied) code = kViolation;
  if (json) {
    std::cout << riley::to_json(r, q, false).dump() << '\n';
    return code;
  }
  std::cout << "knot " << riley::to_string(k) << '\n'
            << "sigma " << r.sigma << '\n'
            << "det " << r.determinant << '\n'
            << "bound " << r.bound << '\n'
            << "count " << r.real_root_count << '\n'
            << "squarefree " << (r.squarefree ? "yes" : "no") << '\n'
            << "congruence " << (r.congruence_ok ? "ok" : "FAILED") << '\n';
  if (!r.satisfied) {
    std::cout << "VIOLATED: " << r.real_root_count << " real roots < bound " << r.bound << '\n'
              << "lambda " << riley::to_string(r.lambda) << '\n';
    for (const auto& I : r.roots) std::cout << "root " << riley::to_string(I) << '\n';
  } else if (r.real_root_count > r.bound) {
    std::cout << "satisfied (strict: " << r.real_root_count << " > " << r.bound << ")\n";
  } else {
    std::cout << "satisfied\n";
  }
  return code;
}

int cmd_scan(riley::ScanConfig config, bool quiet) {
  const auto s = riley::run_scan(config);
  std::ostream& os = quiet ? std::cerr : std::cout;
  os << "records " << s.total << " (computed " << s.computed << ", reused " << s.reused << ")\n"
     << "strict " << s.strict << '\n'
     << "max gap " << s.max_gap;
  if (s.max_gap_fraction) os << " at " << riley::to_string(*s.max_gap_fraction);
  os << '\n' << "not squarefree " << s.not_squarefree.size() << '\n';
  os << "congruence failures " << s.congruence_failures.size() << '\n';
  for (const auto& k : s.congruence_failures) os << "  " << riley::to_string(k) << '\n';
  os << "violations " << s.violations.size() << '\n';
  for (const auto& k : s.violations) os << "  VIOLATED " << riley::to_string(k) << '\n';
  os << "seconds " << fixed(s.seconds, 4) << '\n';
  if (!s.violations.empty()) return kViolation;
  if (!s.congruence_failures.empty()) return kInternal;
  return kOk;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
    const int lo = std::stoi(s.substr(0, colon));
    const int hi = std::stoi(s.substr(colon + 1));
    if (lo < 3 || hi < lo) throw std::invalid_argument("bad bounds");
    return {lo, hi};
  } catch (const std::exception&) {
    throw usage_error("--nrange expects LO:HI with 3 <= LO <= HI");
  }
}

int cmd_witness(std::int64_t p, std::int64_t q, int n, const std::string& nrange, bool json) {
  const Fraction k = parse_fraction(p, q);
  if (n != 0 && !nrange.empty()) throw usage_error("give either --n or --nrange");
  std::pair<int, int> range{n, n};
  if (!nrange.empty()) range = parse_range(nrange);
  else if (n == 0) throw usage_error("one of --n or --nrange is required");
  else if (n < 3) throw usage_error("--n must be >= 3");

  const auto d = riley::build_deformation(k);
  const auto roots = riley::isolate_real_roots(d.lambda);
  if (roots.empty()) {
    std::cout << "no real parabolic roots; sigma != 0 would guarantee one (sigma = "
              << riley::signature(d.signs) << ")\n";
    return kOk;
  }
  int converged_total = 0;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    std::optional<int> smallest;
    std::vector<double> trend;
    for (int m = range.first; m <= range.second; ++m) {
      riley::Witness w = riley::continue_root(d.psi, roots[r], m);
      w.fraction = k;
      const auto rep = riley::verify_representation(d.signs, w.s_n, w.x_n, m);
      if (w.converged) {
        ++converged_total;
        if (!smallest) smallest = m;
        trend.push_back(w.x_n);
      }
      if (json) {
        ordered_json j = fraction_json(k, q);
        j["root_index"] = r;
        j["root_interval"] = {roots[r].lo.get_str(), roots[r].hi.get_str()};
        j["n"] = m;
        j["s_n"] = w.s_n;
        j["x0"] = w.x0;
        j["x_n"] = w.x_n;
        j["residual"] = w.residual;
        j["tolerance"] = w.tolerance;
        j["converged"] = w.converged;
        j["method"] = w.method;
        j["relation_residual"] = rep.relation;
        j["entry21_residual"] = rep.eq21;
        j["entry22_residual"] = rep.eq22;
        j["order_residual"] = rep.order;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "root " << r << " n " << m << " s_n " << fixed(w.s_n) << " x_n " << fixed(w.x_n)
                  << " residual " << fixed(w.residual, 3) << (w.converged ? " converged" : " NOT converged")
                  << " relation " << fixed(rep.relation, 3) << '\n';
      }
    }
    bool increasing = true, decreasing = true;
    for (std::size_t i = 1; i < trend.size(); ++i) {
      increasing = increasing && trend[i] >= trend[i - 1];
      decreasing = decreasing && trend[i] <= trend[i - 1];
    }
    const char* mono = trend.size() < 2 ? "n/a" : increasing ? "increasing" : decreasing ? "decreasing" : "none";
    if (json) {
      ordered_json j = fraction_json(k, q);
      j["root_index"] = r;
      j["x0"] = roots[r].approx();
      j["smallest_converged_n"] = smallest ? ordered_json(*smallest) : ordered_json(nullptr);
      j["monotone_in_n"] = mono;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "root " << r << " x0 " << fixed(roots[r].approx()) << " smallest converged n "
                << (smallest ? std::to_string(*smallest) : std::string("none")) << " monotone " << mono << '\n';
    }
  }
  return converged_total == 0 ? kInternal : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riley polynomials of 2-bridge knots: root counts, bounds and deformations"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::int64_t p = 0, q = 0;
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("p", p, "odd p > 1")->required();
    sub->add_option("q", q, "q coprime to p")->required()->allow_extra_args(false);
  };
  auto* poly = app.add_subcommand("poly", "Riley polynomial coefficients");
  add_pq(poly);
  auto* inv = app.add_subcommand("invariants", "signature, determinant and bound");
  add_pq(inv);
  auto* roots = app.add_subcommand("roots", "isolating intervals of the real roots");
  add_pq(roots);
  std::string width;
  roots->add_option("--width", width, "refine intervals to this width, e.g. 1/1024");
  auto* verify = app.add_subcommand("verify", "check root count >= |sigma|/2");
  add_pq(verify);

  auto* scan = app.add_subcommand("scan", "verify every fraction up to pmax");
  riley::ScanConfig config;
  std::string out_path, scan_width;
  bool no_intervals = false, quiet = false;
  scan->add_option("--pmax", config.pmax, "largest p")->required()->check(CLI::Range(3, 1 << 20));
  scan->add_option("--jobs,-j", config.jobs, "worker threads")->check(CLI::Range(1, 1024));
  scan->add_flag("--dedup", config.dedup, "one fraction per knot");
  scan->add_option("--output,-o", out_path, "JSONL output file");
  scan->add_flag("--resume", config.resume, "keep valid records already in the output");
  scan->add_flag("--timing", config.timing, "add timing_ms to each record");
  scan->add_flag("--no-intervals", no_intervals, "count roots without isolating them");
  scan->add_option("--width", scan_width, "refine intervals to this width");
  scan->add_flag("--quiet", quiet, "summary to stderr");

  auto* witness = app.add_subcommand("witness", "continue real parabolic roots to s_n = 2 cos(2 pi / n)");
  add_pq(witness);
  int n = 0;
  std::string nrange;
  witness->add_option("--n", n, "order n >= 3");
  witness->add_option("--nrange", nrange, "LO:HI");

  for (auto* sub : {poly, inv, roots, verify, scan, witness}) sub->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*poly) return cmd_poly(p, q, json);
    if (*inv) return cmd_invariants(p, q, json);
    if (*roots) return cmd_roots(p, q, width, json);
    if (*verify) return cmd_verify(p, q, json);
    if (*witness) return cmd_witness(p, q, n, nrange, json);
    if (*scan) {
      if (config.resume && out_path.empty()) throw usage_error("--resume needs --output");
      if (!out_path.empty()) config.output = out_path;
      config.isolate = !no_intervals;
      config.width = parse_width(scan_width);
      return cmd_scan(config, quiet);
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const riley::io_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const riley::invariant_error& e) {
    std::cerr << "internal invariant failed: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
