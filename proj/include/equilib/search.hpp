#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equilib/equilibria.hpp"

namespace equilib {

struct SearchParams {
  /// Starting step size; when unset each manipulation uses diameter / 16.
  std::optional<Scalar> epsilon0;
  Scalar shrink = rational(1, 2);
  int budget = 64;
  /// Fixed-point refinements of the centroid estimate per epsilon level.
  int fixed_point = 4;
  int grid_rounds = 6;
  int grid_size = 9;
  /// Hard cap on exact evaluations across all phases.
  int max_trials = 1500;
  std::uint64_t seed = 1;
};

/// Throws Error(ParamsOutOfWindow) if the fields are inconsistent.
void check_params(const SearchParams& sp);

/// Outcome of one exact evaluation.
struct CheckResult {
  bool ok = false;
  /// Lower is better; 0 only for ok results.
  double score = 0;
  std::string diagnostic;
};

using ClassCheck = std::function<CheckResult(const Polyhedron&, const EquilibriumReport&)>;

/// Accepts exactly class (S, U) with f faces and v vertices (f, v < 0: any) and no
/// degenerate site. Near misses are scored by class distance, then by the weakest
/// margin, and the diagnostic names the failing sites.
ClassCheck class_check(int S, int U, int f = -1, int v = -1);

/// A one-epsilon family of candidate polyhedra with `dims` further free parameters.
struct StepDescriptor {
  std::string name;
  Scalar epsilon0;
  int dims = 0;
  /// Free parameters for a step size, given the current centroid estimate.
  std::function<std::vector<double>(const Scalar& eps, const Vec3d& centroid)> guess;
  /// Half-widths of the grid box around the best guess.
  std::vector<double> half_width;
  /// Builds the candidate; may throw Error for a broken candidate.
  std::function<Polyhedron(const Scalar& eps, const std::vector<Scalar>& x)> build;
  /// Centroid estimate of the unmodified polyhedron.
  Vec3d centroid0;
};

struct Tuned {
  Scalar epsilon;
  std::vector<Scalar> x;
  Polyhedron poly;
  int trials = 0;
};

/// Shrinks epsilon geometrically from epsilon0, refining the free parameters by
/// centroid fixed-point iteration at each level; if that fails, refines a grid
/// around the best near miss. Deterministic.
/// Throws Error(BudgetExhausted) with the best near miss.
Tuned tune(const StepDescriptor& step, const ClassCheck& check, const SearchParams& sp);

/// Rational within 1e-12 relative of x; what tune stores for a double parameter.
Scalar snap(double x);

/// splitmix64 step; per-trial seeds are split_seed(master, i).
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

/// Hull of n points with coordinates k / 2^16, k uniform in [-2^16, 2^16].
/// Degenerate draws are re-rolled from the same stream.
Polyhedron random_polyhedron(int n_points, std::uint64_t seed);

/// Random tetrahedron from the same generator.
Polyhedron random_tetrahedron(std::uint64_t seed);

struct SurveyResult {
  long trials = 0;
  std::map<std::pair<int, int>, long> histogram;
  long degenerate = 0;
  /// Tetrahedra with fewer than two unstable vertices (must stay 0).
  long few_vertex_equilibria = 0;
  std::uint64_t seed = 0;
};

/// Classifies `trials` random tetrahedra. Trials run on `threads` workers
/// (0: hardware concurrency); the histogram does not depend on the thread count.
/// Throws Error(CounterexampleFound) if a tetrahedron has S = 1 or U = 1.
SurveyResult tetrahedron_survey(long trials, std::uint64_t seed, unsigned threads = 0);

}  // namespace equilib
