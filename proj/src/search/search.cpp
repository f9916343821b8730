#include "equilib/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace equilib {

void check_params(const SearchParams& sp) {
  if (!(sp.shrink > 0 && sp.shrink < 1))
    throw Error(ErrorKind::ParamsOutOfWindow, "shrink must lie in (0, 1)");
  if (sp.budget < 1) throw Error(ErrorKind::ParamsOutOfWindow, "budget must be >= 1");
  if (sp.epsilon0 && *sp.epsilon0 <= 0)
    throw Error(ErrorKind::ParamsOutOfWindow, "epsilon0 must be positive");
  if (sp.grid_size < 2 && sp.grid_rounds > 0)
    throw Error(ErrorKind::ParamsOutOfWindow, "grid_size must be >= 2");
}

Scalar snap(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NoConvergence, "non-finite parameter");
  return rationalize(x, std::max(1.0, std::fabs(x)) * 1e-12);
}

namespace {

std::string site_name(SiteType t, int i) { return std::string(to_string(t)) + " " + std::to_string(i); }

}  // namespace

ClassCheck class_check(int S, int U, int f, int v) {
  return [=](const Polyhedron& p, const EquilibriumReport& r) {
    CheckResult out;
    double dist = std::abs(r.S - S) + std::abs(r.U - U);
    if (f >= 0) dist += std::abs(p.f() - f);
    if (v >= 0) dist += std::abs(p.v() - v);
    if (r.degenerate) dist += 0.5;
    out.ok = dist == 0;
    double weakest = std::numeric_limits<double>::infinity();
    auto scan = [&](const std::vector<double>& m) {
      for (double x : m) weakest = std::min(weakest, std::fabs(x));
    };
    scan(r.face_margin);
    scan(r.edge_margin);
    scan(r.vertex_margin);
    if (out.ok) return out;
    out.score = dist + 1.0 / (1.0 + weakest * 1e3);
    std::ostringstream d;
    d << "class (" << r.S << "," << r.U << ") want (" << S << "," << U << ")";
    if (f >= 0 || v >= 0) d << ", (f,v)=(" << p.f() << "," << p.v() << ")";
    if (r.degenerate) {
      d << ", degenerate:";
      for (const Site& s : r.degenerate_sites()) d << " " << site_name(s.type, s.index);
    }
    // name the sites closest to switching
    std::vector<std::pair<double, std::string>> near;
    for (int i = 0; i < r.f(); ++i)
      near.push_back({std::fabs(r.face_margin[static_cast<size_t>(i)]),
                      site_name(SiteType::Face, i) + " " + to_string(r.faces[static_cast<size_t>(i)])});
    for (int i = 0; i < r.e(); ++i)
      near.push_back({std::fabs(r.edge_margin[static_cast<size_t>(i)]),
                      site_name(SiteType::Edge, i) + " " +
                          to_string(r.edge_status[static_cast<size_t>(i)])});
    for (int i = 0; i < r.v(); ++i)
      near.push_back({std::fabs(r.vertex_margin[static_cast<size_t>(i)]),
                      site_name(SiteType::Vertex, i) + " " +
                          to_string(r.vertices[static_cast<size_t>(i)])});
    std::sort(near.begin(), near.end());
    d << "; weakest:";
    for (size_t i = 0; i < near.size() && i < 3; ++i)
      d << " [" << near[i].second << " margin " << near[i].first << "]";
    out.diagnostic = d.str();
    return out;
  };
}

namespace {

struct Best {
  double score = std::numeric_limits<double>::infinity();
  Scalar eps;
  std::vector<double> x;
  std::string diagnostic;
};

}  // namespace

Tuned tune(const StepDescriptor& step, const ClassCheck& check, const SearchParams& sp) {
  check_params(sp);
  Tuned out;
  Best best;
  int trials = 0;

  auto evaluate = [&](const Scalar& eps, const std::vector<double>& xd,
                      Vec3d* centroid_out) -> bool {
    ++trials;
    std::vector<Scalar> x;
    for (double v : xd) x.push_back(snap(v));
    Polyhedron p;
    try {
      p = step.build(eps, x);
    } catch (const Error& e) {
      if (best.score == std::numeric_limits<double>::infinity()) best.diagnostic = e.what();
      return false;
    }
    EquilibriumReport r = analyze(p);
    if (centroid_out) *centroid_out = to_double(r.reference);
    CheckResult c = check(p, r);
    if (c.ok) {
      out.epsilon = eps;
      out.x = x;
      out.poly = std::move(p);
      out.trials = trials;
      return true;
    }
    if (c.score < best.score) {
      best.score = c.score;
      best.eps = eps;
      best.x = xd;
      best.diagnostic = c.diagnostic;
    }
    return false;
  };

  // phase 1: epsilon schedule with centroid fixed-point refinement
  Scalar eps = step.epsilon0;
  for (int level = 0; level < sp.budget && trials < sp.max_trials; ++level, eps *= sp.shrink) {
    Vec3d c = step.centroid0;
    int rounds = step.dims == 0 ? 1 : std::max(1, sp.fixed_point);
    for (int it = 0; it < rounds && trials < sp.max_trials; ++it) {
      std::vector<double> x = step.dims == 0 ? std::vector<double>{} : step.guess(eps, c);
      Vec3d next = c;
      if (evaluate(eps, x, &next)) return out;
      c = next;
    }
  }

  // phase 2: coarse-to-fine grid around the best near miss
  if (step.dims > 0 && step.dims <= 2 && sp.grid_rounds > 0 && !best.x.empty()) {
    std::vector<double> centre = best.x, hw = step.half_width;
    hw.resize(static_cast<size_t>(step.dims), 0.0);
    Scalar e = best.eps;
    int n = sp.grid_size;
    for (int round = 0; round < sp.grid_rounds && trials < sp.max_trials; ++round) {
      Best local;
      int cells = step.dims == 1 ? n : n * n;
      for (int k = 0; k < cells && trials < sp.max_trials; ++k) {
        std::vector<double> x = centre;
        int idx[2] = {k % n, k / n};
        for (int d = 0; d < step.dims; ++d)
          x[static_cast<size_t>(d)] += hw[static_cast<size_t>(d)] * (2.0 * idx[d] / (n - 1) - 1.0);
        double before = best.score;
        if (evaluate(e, x, nullptr)) return out;
        if (best.score < before) local.x = x;
      }
      if (!local.x.empty()) centre = local.x;
      for (double& h : hw) h /= 3;
    }
  }

  std::ostringstream msg;
  msg << step.name << ": no admissible parameters after " << trials << " trials";
  if (!best.diagnostic.empty()) msg << "; best near miss at eps=" << to_decimal(best.eps, 6) << ": "
                                    << best.diagnostic;
  throw Error(ErrorKind::BudgetExhausted, msg.str());
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

constexpr long kDen = 1L << 16;

Polyhedron draw(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> u(-kDen, kDen);
  for (;;) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      long x = u(rng), y = u(rng), z = u(rng);
      pts.push_back({rational(x, kDen), rational(y, kDen), rational(z, kDen)});
    }
    try {
      Polyhedron p = hull_from_points(pts);
      if (n == 4 && p.v() != 4) continue;
      return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace

Polyhedron random_polyhedron(int n_points, std::uint64_t seed) {
  if (n_points < 4) throw Error(ErrorKind::DegenerateInput, "need at least 4 points");
  std::mt19937_64 rng(seed);
  return draw(n_points, rng);
}

Polyhedron random_tetrahedron(std::uint64_t seed) { return random_polyhedron(4, seed); }

SurveyResult tetrahedron_survey(long trials, std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw Error(ErrorKind::ParamsOutOfWindow, "trials must be >= 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, trials));
  std::vector<SurveyResult> parts(threads);
  std::vector<std::string> counterexample(threads);
  auto work = [&](unsigned t) {
    SurveyResult& r = parts[t];
    for (long i = t; i < trials; i += threads) {
      Polyhedron p = random_tetrahedron(split_seed(seed, static_cast<std::uint64_t>(i)));
      EquilibriumReport rep = analyze(p);
      if (rep.degenerate) {
        ++r.degenerate;
        continue;
      }
      ++r.histogram[{rep.S, rep.U}];
      if (rep.U < 2) ++r.few_vertex_equilibria;
      if ((rep.S == 1 || rep.U == 1) && counterexample[t].empty())
        counterexample[t] = "trial " + std::to_string(i) + " has class (" + std::to_string(rep.S) +
                            "," + std::to_string(rep.U) + ")";
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();

  SurveyResult out;
  out.trials = trials;
  out.seed = seed;
  for (unsigned t = 0; t < threads; ++t) {
    if (!counterexample[t].empty()) throw Error(ErrorKind::CounterexampleFound, counterexample[t]);
    out.degenerate += parts[t].degenerate;
    out.few_vertex_equilibria += parts[t].few_vertex_equilibria;
    for (const auto& [k, n] : parts[t].histogram) out.histogram[k] += n;
  }
  return out;
}

}  // namespace equilib
