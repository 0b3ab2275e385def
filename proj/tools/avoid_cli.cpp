// Command-line front end; talks to the library only through avoid/avoid.h.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "avoid/avoid.h"

namespace {

constexpr int kUsage = 64;
constexpr int kDataError = 65;

int report_error(avoid_status s) {
  std::cerr << "error: " << avoid_last_error() << "\n";
  return s == AVOID_E_ARGUMENT ? kUsage : kDataError;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  avoid_string_free(s);
  return out;
}

struct CircuitHandle {
  avoid_circuit* p = nullptr;
  ~CircuitHandle() { avoid_circuit_free(p); }
};

struct ReportHandle {
  avoid_report* p = nullptr;
  ~ReportHandle() { avoid_report_free(p); }
};

// "8..16", "8,10,12" or "9"
std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
  return out;
}

int cmd_solve(const std::string& file, const std::string& method, bool verify, bool explain, bool json) {
  CircuitHandle c;
  if (auto s = avoid_circuit_load(file.c_str(), &c.p)) return report_error(s);
  avoid_solve_options opt{method.c_str(), verify ? 26 : 0};
  ReportHandle r;
  if (auto s = avoid_solve(c.p, &opt, &r.p)) return report_error(s);
  if (explain) {
    char* text = nullptr;
    if (auto s = avoid_report_explain(r.p, &text)) return report_error(s);
    std::cout << take(text);
  }
  if (json) {
    char* text = nullptr;
    if (auto s = avoid_report_json(r.p, &text)) return report_error(s);
    std::cout << take(text) << "\n";
  } else if (!explain) {
    const char* y = avoid_report_certificate(r.p);
    static const char* names[] = {"verified", "refuted", "unverified", "not-found", "unsupported"};
    std::cout << names[avoid_report_status(r.p)] << (*y ? std::string(" ") + y : "") << "\n";
  }
  return avoid_report_exit_code(r.p);
}

int cmd_verify(const std::string& file, const std::string& y) {
  CircuitHandle c;
  if (auto s = avoid_circuit_load(file.c_str(), &c.p)) return report_error(s);
  int inRange = 0;
  char* witness = nullptr;
  if (auto s = avoid_verify(c.p, y.c_str(), 0, &inRange, &witness)) return report_error(s);
  if (inRange) {
    std::cout << "in range: x=" << take(witness) << "\n";
    return 1;
  }
  std::cout << "not in range\n";
  return 0;
}

int cmd_gen(const std::string& cls, int n, int m, std::uint64_t seed, const std::string& outPath) {
  CircuitHandle c;
  if (auto s = avoid_circuit_generate(cls.c_str(), n, m, seed, &c.p)) return report_error(s);
  char* text = nullptr;
  if (auto s = avoid_circuit_serialize(c.p, &text)) return report_error(s);
  const std::string body = "# gen --class " + cls + " --n " + std::to_string(n) + " --m " + std::to_string(m) +
                           " --seed " + std::to_string(seed) + "\n" + take(text);
  if (outPath.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(outPath);
  f << body;
  if (!f) {
    std::cerr << "error: cannot write " << outPath << "\n";
    return kDataError;
  }
  return 0;
}

int cmd_pattern(const std::string& file, const std::string& kind) {
  CircuitHandle c;
  if (auto s = avoid_circuit_load(file.c_str(), &c.p)) return report_error(s);
  char* json = nullptr;
  if (auto s = avoid_pattern_find(c.p, kind.c_str(), &json)) return report_error(s);
  const std::string out = take(json);
  std::cout << out << "\n";
  return out.find("\"found\": true") != std::string::npos ? 0 : 3;
}

int cmd_bench(const std::string& cls, int trials, const std::string& sizes, int extra, std::uint64_t seed,
              int threads, const std::string& method) {
  std::vector<int> ns;
  try {
    ns = parse_sizes(sizes);
  } catch (const std::exception&) {
    std::cerr << "error: bad --sizes '" << sizes << "'\n";
    return kUsage;
  }
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::cout << "class,n,m,trials,certified,verified,not_found,unsupported,errors,success_rate,mean_ms,max_ms\n";
  int worst = 0;
  for (int n : ns) {
    const int m = n + extra;
    std::atomic<int> next{0}, certified{0}, verified{0}, notFound{0}, unsupported{0}, errors{0};
    std::mutex mu;
    double totalMs = 0, maxMs = 0;
    auto work = [&] {
      for (int t; (t = next++) < trials;) {
        CircuitHandle c;
        const std::uint64_t s = seed + static_cast<std::uint64_t>(n) * 1000003ULL + static_cast<std::uint64_t>(t);
        if (avoid_circuit_generate(cls.c_str(), n, m, s, &c.p) != AVOID_OK) {
          ++errors;
          continue;
        }
        avoid_solve_options opt{method.c_str(), 0};
        ReportHandle r;
        if (avoid_solve(c.p, &opt, &r.p) != AVOID_OK) {
          ++errors;
          continue;
        }
        const double ms = avoid_report_seconds(r.p) * 1000;
        {
          std::lock_guard lock(mu);
          totalMs += ms;
          maxMs = std::max(maxMs, ms);
        }
        switch (avoid_report_status(r.p)) {
          case AVOID_SOLVE_VERIFIED: ++verified; ++certified; break;
          case AVOID_SOLVE_UNVERIFIED: ++certified; break;
          case AVOID_SOLVE_NOT_FOUND: ++notFound; break;
          case AVOID_SOLVE_UNSUPPORTED: ++unsupported; break;
          case AVOID_SOLVE_REFUTED: ++errors; break;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    const int solved = trials - errors;
    char line[256];
    std::snprintf(line, sizeof line, "%s,%d,%d,%d,%d,%d,%d,%d,%d,%.3f,%.3f,%.3f", cls.c_str(), n, m, trials,
                  certified.load(), verified.load(), notFound.load(), unsupported.load(), errors.load(),
                  trials ? double(certified) / trials : 0.0, solved ? totalMs / solved : 0.0, maxMs);
    std::cout << line << "\n";
    if (errors) worst = 1;
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Range-avoidance solver for restricted circuit classes"};
  app.require_subcommand(1);

  std::string file, method = "auto", y, cls, outPath, kind, sizes = "8..16";
  bool verify = false, explain = false, json = false;
  int n = 0, m = 0, trials = 20, extra = 1, threads = 0;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "find y outside the range of a circuit");
  solve->add_option("file", file, "circuit file")->required();
  solve->add_option("--method", method, "auto|xcycle|wicket|grid|nc02|andor|depth1");
  solve->add_flag("--verify", verify, "brute-force check up to n=26 instead of 22");
  solve->add_flag("--explain", explain, "print the case fired at every step");
  solve->add_flag("--json", json, "print the full JSON report");

  auto* ver = app.add_subcommand("verify", "check whether a partial output is attained");
  ver->add_option("file", file, "circuit file")->required();
  ver->add_option("y", y, "string over 0,1,*")->required();

  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--class", cls, "mon-nc03|maj3|one-intersect-maj3|one-intersect-majk:k|nc02|andor:k|linear-hypergraph")
      ->required();
  gen->add_option("--n", n, "inputs")->required();
  gen->add_option("--m", m, "outputs")->required();
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("-o,--out", outPath, "write here instead of stdout");

  auto* pattern = app.add_subcommand("pattern", "search for a fixed pattern");
  pattern->require_subcommand(1);
  auto* find = pattern->add_subcommand("find", "lexicographically least match");
  find->add_option("file", file, "circuit file")->required();
  find->add_option("--kind", kind, "wicket, grid:k, weak-fano, cage:k, crown:k, cstar:k, butterfly:k,l, kite:k,l")
      ->required();

  auto* bench = app.add_subcommand("bench", "solve many generated instances, CSV out");
  bench->add_option("--class", cls, "generator class")->required();
  bench->add_option("--trials", trials, "instances per size");
  bench->add_option("--sizes", sizes, "n values: lo..hi or a,b,c");
  bench->add_option("--extra", extra, "m = n + extra");
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--threads", threads, "workers (0 = hardware)");
  bench->add_option("--method", method, "solver override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*solve) return cmd_solve(file, method, verify, explain, json);
  if (*ver) return cmd_verify(file, y);
  if (*gen) return cmd_gen(cls, n, m, seed, outPath);
  if (*find) return cmd_pattern(file, kind);
  if (*bench) return cmd_bench(cls, trials, sizes, extra, seed, threads, method);
  return kUsage;
}
