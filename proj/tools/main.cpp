#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "bsn/instances.hpp"
#include "bsn/io.hpp"
#include "bsn/oracle.hpp"
#include "bsn/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBracket = 3;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("steiner");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* env = std::getenv("STEINER_LOG");
  spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::info);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") std::cout << content;
  else bsn::write_file(path, content);
}

int cmd_solve(const std::string& input, int k, const std::string& output, const std::string& svg) {
  const auto pts = bsn::parse_instance(bsn::read_file(input));
  spdlog::debug("solving n={} k={}", pts.size(), k);
  const auto sol = bsn::solve(pts, k);
  spdlog::debug("bottleneck={} threshold={}", sol.bottleneck, sol.threshold);
  emit(output, bsn::format_solution(sol));
  if (!svg.empty()) bsn::write_file(svg, bsn::render_svg(sol));
  return kExitOk;
}

bool inside(bsn::Point2 p, bsn::Point2 lo, bsn::Point2 hi) {
  return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
}

int cmd_verify(const std::string& input, int k, double target) {
  const auto pts = bsn::parse_instance(bsn::read_file(input));
  const auto sol = bsn::solve(pts, k);
  std::string why;
  const bool structural = bsn::check_solution(sol, bsn::geometric_tolerance(pts), &why);
  double oracle = 0.0, bound = 0.0;
  bool pass = structural;
  if (k == 0) {
    oracle = bsn::oracle_mbsn0(pts);
    pass = pass && std::abs(sol.bottleneck - oracle) <= 1e-12;
  } else {
    if (!(target > 0.0)) target = (k == 1) ? 1e-3 : 1e-2;
    bsn::Point2 lo, hi;
    if (k == 1) {
      const auto o = bsn::oracle_k1(pts, target);
      oracle = o.bottleneck, bound = o.error_bound, lo = o.domain_lo, hi = o.domain_hi;
    } else {
      const auto o = bsn::oracle_k2(pts, target);
      oracle = o.bottleneck, bound = o.error_bound, lo = o.domain_lo, hi = o.domain_hi;
    }
    for (const auto& s : sol.steiner)
      if (!inside(s, lo, hi)) {
        pass = false;
        why = "Steiner point outside the oracle domain";
      }
    pass = pass && sol.bottleneck >= oracle - bound && sol.bottleneck <= oracle + 1e-9;
  }
  std::cout << "k=" << k << " solver=" << fmt::format("{:.12g}", sol.bottleneck)
            << " oracle=" << fmt::format("{:.12g}", oracle) << " error_bound=" << fmt::format("{:.3g}", bound)
            << " structure=" << (structural ? "ok" : why) << " bracket=" << (pass ? "pass" : "fail") << "\n";
  return pass ? kExitOk : kExitBracket;
}

int cmd_gen(int n, std::uint64_t seed, const std::string& dist, const std::string& output) {
  const auto pts = bsn::generate_instance(n, seed, bsn::parse_distribution(dist));
  emit(output, bsn::format_instance(pts));
  return kExitOk;
}

int cmd_bench(const std::vector<int>& sizes, int repeats, int k, std::uint64_t seed, const std::string& csv) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw std::invalid_argument("sizes must be ascending");
  std::string out = "n,time_ms,bottleneck\n";
  std::vector<double> lx, ly;
  for (int n : sizes) {
    const auto pts = bsn::generate_instance(n, seed + static_cast<std::uint64_t>(n), bsn::Distribution::Uniform);
    std::vector<double> times;
    double bottleneck = 0.0;
    for (int r = 0; r < std::max(1, repeats); ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      bottleneck = bsn::solve(pts, k).bottleneck;
      times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    const double median = times[times.size() / 2];
    out += fmt::format("{},{:.6f},{:.12g}\n", n, median, bottleneck);
    spdlog::debug("n={} median {:.3f} ms", n, median);
    if (median > 0.0) {
      lx.push_back(std::log(n));
      ly.push_back(std::log(median));
    }
  }
  if (lx.size() >= 2) {
    // Least-squares slope of log time against log n.
    const double m = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sx += lx[i], sy += ly[i], sxx += lx[i] * lx[i], sxy += lx[i] * ly[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    spdlog::info("k={} fitted exponent {:.2f} over n in [{}, {}]", k, slope, sizes.front(), sizes.back());
  }
  emit(csv, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Minimum bottleneck 2-connected Steiner networks with up to two Steiner points"};
  app.require_subcommand(1);

  std::string input, output, svg, csv, distribution = "uniform";
  int k = 0, n = 8, repeats = 3;
  std::uint64_t seed = 1;
  double resolution = 0.0;
  std::vector<int> sizes{8, 16, 32};

  auto* solve = app.add_subcommand("solve", "Solve an instance and write the solution document");
  solve->add_option("--input", input, "Instance JSON")->required();
  solve->add_option("--k", k, "Number of Steiner points")->check(CLI::Range(0, 2));
  solve->add_option("--output", output, "Solution JSON (stdout if omitted)");
  solve->add_option("--svg", svg, "Optional SVG drawing");

  auto* verify = app.add_subcommand("verify", "Compare the solver against the oracle");
  verify->add_option("--input", input, "Instance JSON")->required();
  verify->add_option("--k", k, "Number of Steiner points")->check(CLI::Range(0, 2));
  verify->add_option("--resolution", resolution, "Oracle target error (default 1e-3 for k=1, 1e-2 for k=2)");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", n, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--distribution", distribution, "uniform or clusters")
      ->check(CLI::IsMember({"uniform", "clusters"}));
  gen->add_option("--output", output, "Instance JSON (stdout if omitted)");

  auto* bench = app.add_subcommand("bench", "Time the solver over instance sizes");
  bench->add_option("--sizes", sizes, "Ascending instance sizes")->delimiter(',');
  bench->add_option("--repeats", repeats, "Runs per size");
  bench->add_option("--k", k, "Number of Steiner points")->check(CLI::Range(0, 2));
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--csv", csv, "CSV output (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*solve) return cmd_solve(input, k, output, svg);
    if (*verify) return cmd_verify(input, k, resolution);
    if (*gen) return cmd_gen(n, seed, distribution, output);
    if (*bench) return cmd_bench(sizes, repeats, k, seed, csv);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}
