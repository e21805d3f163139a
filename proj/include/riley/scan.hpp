// Bulk verification over all enumerated fractions: JSONL records in
// enumeration order, parallel workers, resume from a previous output.

#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "riley/riley.hpp"
#include "riley/twobridge.hpp"

namespace riley {

struct ScanConfig {
  std::int64_t pmax = 99;
  int jobs = 1;
  bool dedup = false;
  bool isolate = true;                // write isolating intervals
  std::optional<Rational> width;      // refine intervals to this width
  std::optional<std::filesystem::path> output;
  bool resume = false;
  bool timing = false;                // add timing_ms (makes output non-deterministic)
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const VerificationReport& r, std::int64_t q_input, bool timing) {
  ordered_json j;
  j["p"] = r.fraction.p;
  j["q_input"] = q_input;
  j["q_canonical"] = r.fraction.q;
  j["n"] = r.n;
  j["sigma"] = r.sigma;
  j["determinant"] = r.determinant;
  j["bound"] = r.bound;
  j["real_root_count"] = r.real_root_count;
  j["satisfied"] = r.satisfied;
  j["lambda_coeffs"] = coefficient_strings(r.lambda);
  ordered_json roots = ordered_json::array();
  for (const auto& I : r.roots) roots.push_back({I.lo.get_str(), I.hi.get_str()});
  j["root_intervals"] = std::move(roots);
  j["squarefree"] = r.squarefree;
  j["congruence_ok"] = r.congruence_ok;
  if (timing) j["timing_ms"] = r.millis;
  return j;
}

// The fields a summary needs, read back from a record line.
struct RecordDigest {
  Fraction fraction;
  std::int64_t q_input = 0;
  int bound = 0;
  int real_root_count = 0;
  bool satisfied = false;
  bool squarefree = true;
  bool congruence_ok = true;
};

inline std::optional<RecordDigest> parse_record(const std::string& line) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    RecordDigest d;
    d.fraction = {j.at("p").get<std::int64_t>(), j.at("q_canonical").get<std::int64_t>()};
    d.q_input = j.at("q_input").get<std::int64_t>();
    d.bound = j.at("bound").get<int>();
    d.real_root_count = j.at("real_root_count").get<int>();
    d.satisfied = j.at("satisfied").get<bool>();
    d.squarefree = j.at("squarefree").get<bool>();
    d.congruence_ok = j.at("congruence_ok").get<bool>();
    for (const char* key : {"n", "sigma", "determinant", "lambda_coeffs", "root_intervals"})
      if (!j.contains(key)) return std::nullopt;
    if (!is_canonical(d.fraction) || d.satisfied != (d.real_root_count >= d.bound)) return std::nullopt;
    return d;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

struct ScanSummary {
  std::size_t total = 0;
  std::size_t computed = 0;
  std::size_t reused = 0;   // taken verbatim from a previous output
  std::size_t strict = 0;   // real_root_count > bound
  int max_gap = 0;
  std::optional<Fraction> max_gap_fraction;
  std::vector<Fraction> violations;
  std::vector<Fraction> congruence_failures;
  std::vector<Fraction> not_squarefree;
  double seconds = 0.0;
  bool ok() const { return violations.empty() && congruence_failures.empty(); }
};

namespace detail {

// Records previously written for (p, q_input); corrupt lines are dropped.
inline std::map<std::pair<std::int64_t, std::int64_t>, std::string> read_previous(
    const std::vector<std::filesystem::path>& files) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::string> out;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) continue;
    std::string line;
    while (std::getline(in, line)) {
      if (auto d = parse_record(line)) out.emplace(std::make_pair(d->fraction.p, d->q_input), line);
    }
  }
  return out;
}

// Fractions with the same p whose words are reverses or mirrors of each
// other are processed together, so equal lambdas are analysed once.
inline std::vector<std::vector<std::size_t>> group_units(const std::vector<Fraction>& fracs) {
  std::vector<std::vector<std::size_t>> units;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> unit_of;
  for (std::size_t i = 0; i < fracs.size(); ++i) {
    const auto [p, q] = fracs[i];
    const std::int64_t r = mod(q, p), ri = mod_inverse(r, p);
    const std::int64_t key = std::min({r, p - r, ri, p - ri});
    auto [it, fresh] = unit_of.emplace(std::make_pair(p, key), units.size());
    if (fresh) units.emplace_back();
    units[it->second].push_back(i);
  }
  return units;
}

}  // namespace detail

// Runs the scan. Records are passed to `sink` (if any) and written to
// config.output (if set) in enumeration order.
inline ScanSummary run_scan(const ScanConfig& config,
                            const std::function<void(const VerificationReport&)>& sink = {}) {
  if (config.pmax < 3) throw std::invalid_argument("pmax must be >= 3");
  if (config.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Fraction> fracs = enumerate(config.pmax, config.dedup);
  const auto units = detail::group_units(fracs);

  std::map<std::pair<std::int64_t, std::int64_t>, std::string> previous;
  std::filesystem::path tmp;
  std::ofstream out;
  if (config.output) {
    tmp = *config.output;
    tmp += ".tmp";
    if (config.resume) previous = detail::read_previous({*config.output, tmp});
    out.open(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp.string() + " for writing");
  }

  struct Slot {
    std::string line;
    std::optional<VerificationReport> report;
    std::optional<RecordDigest> digest;
    bool reused = false;
    bool done = false;
  };
  std::vector<Slot> slots(fracs.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next_unit{0};
  std::exception_ptr failure;
  std::atomic<bool> abort{false};

  auto work = [&] {
    for (;;) {
      const std::size_t u = next_unit.fetch_add(1);
      if (u >= units.size() || abort) return;
      try {
        std::vector<std::pair<IntPoly, LambdaAnalysis>> seen;
        for (std::size_t i : units[u]) {
          Slot slot;
          const Fraction k = fracs[i];
          if (auto it = previous.find({k.p, k.q}); it != previous.end()) {
            slot.line = it->second;
            slot.digest = parse_record(slot.line);
            slot.reused = true;
          } else {
            const auto start = std::chrono::steady_clock::now();
            const SignData sd = sign_sequences(k);
            IntPoly lambda = riley_sequence(sd, Checks::structural).a.back();
            const LambdaAnalysis* analysis = nullptr;
            for (const auto& [l, a] : seen)
              if (l == lambda) analysis = &a;
            if (!analysis) {
              seen.emplace_back(lambda, analyze_lambda(lambda, config.isolate, config.width));
              analysis = &seen.back().second;
            }
            VerificationReport r = make_report(k, sd, std::move(lambda), *analysis);
            r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            if (config.output) slot.line = to_json(r, k.q, config.timing).dump();
            slot.report = std::move(r);
          }
          slot.done = true;
          std::lock_guard lock(mu);
          slots[i] = std::move(slot);
        }
        cv.notify_all();
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        abort = true;
        cv.notify_all();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (int i = 0; i < config.jobs; ++i) pool.emplace_back(work);

  ScanSummary summary;
  summary.total = fracs.size();
  for (std::size_t i = 0; i < fracs.size(); ++i) {
    Slot slot;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return slots[i].done || abort; });
      if (!slots[i].done) break;
      slot = std::move(slots[i]);
      slots[i] = Slot{};
    }
    RecordDigest d;
    if (slot.report) {
      const auto& r = *slot.report;
      d = {r.fraction, r.fraction.q, r.bound, r.real_root_count, r.satisfied, r.squarefree, r.congruence_ok};
      ++summary.computed;
      if (sink) sink(r);
    } else {
      d = *slot.digest;
      ++summary.reused;
    }
    if (config.output) {
      out << slot.line << '\n';
      if (!out) {
        abort = true;
        for (auto& th : pool) th.join();
        throw io_error("write to " + tmp.string() + " failed");
      }
    }
    if (!d.satisfied) summary.violations.push_back(d.fraction);
    if (!d.congruence_ok) summary.congruence_failures.push_back(d.fraction);
    if (!d.squarefree) summary.not_squarefree.push_back(d.fraction);
    const int gap = d.real_root_count - d.bound;
    if (gap > 0) ++summary.strict;
    if (gap > summary.max_gap) {
      summary.max_gap = gap;
      summary.max_gap_fraction = d.fraction;
    }
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  if (config.output) {
    out.close();
    if (!out) throw io_error("closing " + tmp.string() + " failed");
    std::error_code ec;
    std::filesystem::rename(tmp, *config.output, ec);
    if (ec) throw io_error("rename to " + config.output->string() + ": " + ec.message());
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return summary;
}

}  // namespace riley
