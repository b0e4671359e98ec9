#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cqom/analog.hpp"
#include "cqom/io.hpp"
#include "cqom/params.hpp"

namespace cqom::sweep {

inline constexpr int kDefaultPoints = 401;
inline constexpr double kHalfFluxWindow = 5e-3;

enum class Target { fig3_4, fig5, fig7, fig8, fig10, fig11, fig12, custom };
enum class Spacing { linear, log };

Target target_from_string(const std::string& s);
std::string to_string(Target t);

struct Axis {
  std::string parameter;
  double lo = 0.0;
  double hi = 1.0;
  int points = kDefaultPoints;
  Spacing spacing = Spacing::linear;

  std::vector<double> values() const;
};

struct SweepPlan {
  Target target = Target::fig10;
  std::optional<Axis> axis;                 // replaces the target's default axis
  std::optional<nlohmann::json> base_spec;  // required for fig10, fig11, fig12 and custom
  int n = 1;                                // custom target
  int m = 2;
  int jobs = 1;
};

// Default axis of a figure target.
Axis default_axis(Target t);
std::vector<std::string> columns(const SweepPlan& plan);
void validate(const SweepPlan& plan);
io::CsvTable run_sweep(const SweepPlan& plan);

// Drops flux points within kHalfFluxWindow of a half quantum.
std::vector<double> exclude_half_flux(const std::vector<double>& phi);

// Order-preserving parallel map over [0, count).
template <class F>
auto parallel_map(std::size_t count, int jobs, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

enum class FreeParam { coupling_cap, bias_flux, area_ratio };

FreeParam free_param_from_string(const std::string& s);
std::string to_string(FreeParam p);

struct FreeAxis {
  FreeParam param = FreeParam::bias_flux;
  double lo = 0.0;
  double hi = 0.45;
};

struct DesignConstraints {
  double max_lj0_ratio = kMaxLjRatio;
  double max_cj_ratio = kMaxCjRatio;
  double min_x_star = 0.0;  // 0 disables the amplitude constraint
};

struct DesignResult {
  analog::CouplingReport report;
  std::vector<std::pair<FreeParam, double>> argmax;
  double objective = 0.0;            // |g_nm / Omega_m|
  double best_grid_objective = 0.0;  // best feasible point of the coarse grid
  std::vector<std::string> binding;  // active constraints or bounds at the optimum
  int evaluations = 0;
};

AnalogSystemSpec apply_free(const AnalogSystemSpec& base, FreeParam p, double value);
double free_value(const AnalogSystemSpec& spec, FreeParam p);

DesignResult design_search(const AnalogSystemSpec& base, const DesignConstraints& constraints,
                           const std::vector<FreeAxis>& free, int n, int m, int grid_points = 41);

}  // namespace cqom::sweep
