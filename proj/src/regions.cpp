#include "bosonic/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "bosonic/entropy.hpp"

namespace bosonic {

namespace {

constexpr double kLambdaGridFloor = 1e-6;

// Coordinates of the 2-D slices: index of the traced coordinate (the one the
// frontier is parameterized by) and of its companion within a RateTriple.
struct SliceAxes {
  int traced;
  int companion;
};

SliceAxes slice_axes(SliceKind slice) {
  switch (slice) {
    case SliceKind::cq:
    case SliceKind::rp:
      return {1, 0};  // trace Q (or P), companion C (or R)
    case SliceKind::ce:
      return {2, 0};  // trace E, companion C
    case SliceKind::bounds:
      break;
  }
  throw std::invalid_argument("slice has no traced rate coordinates");
}

double coord(const RateTriple& r, int axis) {
  switch (axis) {
    case 0:
      return r.first;
    case 1:
      return r.second;
    default:
      return r.third;
  }
}

// Keeps only nondominated points (strictly larger companion than every point
// with a traced coordinate at least as large), sorted by increasing traced
// coordinate.
void prune_to_frontier(Frontier& f) {
  const SliceAxes axes = slice_axes(f.slice);
  std::stable_sort(f.points.begin(), f.points.end(),
                   [&](const FrontierPoint& a, const FrontierPoint& b) {
                     const double ta = coord(a.rates, axes.traced);
                     const double tb = coord(b.rates, axes.traced);
                     if (ta != tb) {
                       return ta > tb;
                     }
                     return coord(a.rates, axes.companion) >
                            coord(b.rates, axes.companion);
                   });
  std::vector<FrontierPoint> kept;
  kept.reserve(f.points.size());
  double best_companion = -std::numeric_limits<double>::infinity();
  for (const FrontierPoint& pt : f.points) {
    const double c = coord(pt.rates, axes.companion);
    if (c > best_companion) {
      kept.push_back(pt);
      best_companion = c;
    }
  }
  std::reverse(kept.begin(), kept.end());
  f.points = std::move(kept);
}

// Largest first coordinate compatible with the bound triple when the third
// coordinate is pinned to zero and the second must reach `second`.
double slice_first_rate(RegionKind region, const BoundTriple& b,
                        double second) {
  if (region == RegionKind::cqe) {
    return std::min(b.b1 - 2.0 * second, b.b3 - second);
  }
  return std::min(b.b1 - second, b.b3 - second);
}

}  // namespace

ShareParam::ShareParam(double share) : lambda(share) {
  if (!std::isfinite(share) || share < 0.0 || share > 1.0) {
    throw std::domain_error(
        "ShareParam: sharing parameter must lie in [0, 1], got " +
        std::to_string(share));
  }
}

const char* region_name(RegionKind region) {
  return region == RegionKind::cqe ? "CQE" : "RPS";
}

const char* slice_name(SliceKind slice) {
  switch (slice) {
    case SliceKind::cq:
      return "cq";
    case SliceKind::ce:
      return "ce";
    case SliceKind::rp:
      return "rp";
    case SliceKind::bounds:
      return "bounds";
  }
  return "?";
}

BoundTriple cqe_bounds(ChannelSpec ch, PowerBudget p, ShareParam s) {
  const double lam_ns = s.lambda * p.ns;
  const double env = g_entropy((1.0 - ch.eta) * lam_ns);
  const double out_full = g_entropy(ch.eta * p.ns);
  return {g_entropy(lam_ns) + out_full - env,
          g_entropy(ch.eta * lam_ns) - env, out_full - env};
}

BoundTriple rps_bounds(ChannelSpec ch, PowerBudget p, ShareParam s) {
  const double lam_ns = s.lambda * p.ns;
  const double env = g_entropy((1.0 - ch.eta) * lam_ns);
  const double out_full = g_entropy(ch.eta * p.ns);
  return {out_full, g_entropy(ch.eta * lam_ns) - env, out_full - env};
}

BoundTriple region_bounds(RegionKind region, ChannelSpec ch, PowerBudget p,
                          ShareParam s) {
  return region == RegionKind::cqe ? cqe_bounds(ch, p, s)
                                   : rps_bounds(ch, p, s);
}

bool satisfies_region(RegionKind region, const BoundTriple& b,
                      const RateTriple& r, double tol) {
  const double weight_first = region == RegionKind::cqe ? 2.0 : 1.0;
  return r.first + weight_first * r.second <= b.b1 + tol &&
         r.second + r.third <= b.b2 + tol &&
         r.first + r.second + r.third <= b.b3 + tol;
}

std::vector<double> lambda_grid(std::size_t points) {
  if (points < 2) {
    throw std::invalid_argument("lambda_grid: need at least 2 grid points");
  }
  std::vector<double> grid;
  grid.reserve(points + 1);
  grid.push_back(0.0);
  const double lo = std::log10(kLambdaGridFloor);
  for (std::size_t i = 0; i < points; ++i) {
    const double f =
        static_cast<double>(i) / static_cast<double>(points - 1);
    grid.push_back(std::pow(10.0, lo * (1.0 - f)));
  }
  grid.back() = 1.0;
  return grid;
}

OptimalPoint max_first_given_second(RegionKind region, ChannelSpec ch,
                                    PowerBudget p, double second_target,
                                    std::size_t grid_points) {
  if (!std::isfinite(second_target) || second_target < 0.0) {
    throw std::domain_error(
        "max_first_given_second: target rate must be finite and nonnegative");
  }
  const double cap = region_bounds(region, ch, p, ShareParam(1.0)).b2;
  if (second_target > cap) {
    throw infeasible_error(
        "max_first_given_second: target " + std::to_string(second_target) +
        " exceeds the largest achievable second rate " + std::to_string(cap));
  }

  const double neg_inf = -std::numeric_limits<double>::infinity();
  const auto objective = [&](double lam) {
    const BoundTriple b = region_bounds(region, ch, p, ShareParam(lam));
    if (b.b2 < second_target) {
      return neg_inf;  // second rate unreachable at this sharing parameter
    }
    return slice_first_rate(region, b, second_target);
  };

  const std::vector<double> grid = lambda_grid(grid_points);
  std::size_t best_idx = 0;
  double best_val = neg_inf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = objective(grid[i]);
    if (v > best_val) {
      best_val = v;
      best_idx = i;
    }
  }
  double best_lam = grid[best_idx];

  // Golden-section refinement inside the bracketing cells. The objective is
  // quasi-unimodal in lambda (monotone value away from the feasibility edge),
  // so this converges well past the requested 1e-6 tolerance in lambda.
  double a = grid[best_idx == 0 ? 0 : best_idx - 1];
  double b = grid[std::min(best_idx + 1, grid.size() - 1)];
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  for (int it = 0; it < 120 && b - a > 1e-12; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = objective(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = objective(x1);
    }
  }
  if (f1 > best_val) {
    best_val = f1;
    best_lam = x1;
  }
  if (f2 > best_val) {
    best_val = f2;
    best_lam = x2;
  }
  return {best_val, best_lam};
}

namespace {

Frontier traced_frontier(RegionKind region, SliceKind slice, ChannelSpec ch,
                         PowerBudget p, std::size_t grid_points) {
  Frontier f{region, slice, {}};
  for (const double lam : lambda_grid(grid_points)) {
    const ShareParam s(lam);
    const BoundTriple b = region_bounds(region, ch, p, s);
    FrontierPoint pt;
    pt.lambda = lam;
    pt.bounds = b;
    if (slice == SliceKind::ce) {
      // Entanglement-assisted classical trade-off: C = b1 at entanglement
      // consumption g(lambda * ns) (stored signed).
      pt.rates = {b.b1, 0.0, -g_entropy(lam * p.ns)};
    } else {
      const double second = std::max(b.b2, 0.0);
      pt.rates = {slice_first_rate(region, b, second), second, 0.0};
    }
    f.points.push_back(pt);
  }
  prune_to_frontier(f);
  return f;
}

}  // namespace

Frontier cq_frontier(ChannelSpec ch, PowerBudget p, std::size_t grid_points) {
  return traced_frontier(RegionKind::cqe, SliceKind::cq, ch, p, grid_points);
}

Frontier rp_frontier(ChannelSpec ch, PowerBudget p, std::size_t grid_points) {
  return traced_frontier(RegionKind::rps, SliceKind::rp, ch, p, grid_points);
}

Frontier ce_frontier(ChannelSpec ch, PowerBudget p, std::size_t grid_points) {
  return traced_frontier(RegionKind::cqe, SliceKind::ce, ch, p, grid_points);
}

CEPoint ce_point_at_consumption(ChannelSpec ch, PowerBudget p,
                                double ebits_consumed) {
  if (!std::isfinite(ebits_consumed) || ebits_consumed < 0.0) {
    throw std::domain_error(
        "ce_point_at_consumption: consumption must be finite and "
        "nonnegative");
  }
  const double cap = g_entropy(p.ns);
  if (ebits_consumed > cap) {
    throw infeasible_error(
        "ce_point_at_consumption: consumption " +
        std::to_string(ebits_consumed) +
        " exceeds the largest useful entanglement rate " + std::to_string(cap));
  }
  if (p.ns == 0.0) {
    return {0.0, 0.0, 0.0};
  }
  const double lam_ns = std::min(g_inverse(ebits_consumed), p.ns);
  const double c = ebits_consumed + g_entropy(ch.eta * p.ns) -
                   g_entropy((1.0 - ch.eta) * lam_ns);
  return {c, ebits_consumed, lam_ns / p.ns};
}

RateTriple timeshare_point(const RateTriple& corner_a,
                           const RateTriple& corner_b, double t) {
  if (!std::isfinite(t) || t < 0.0 || t > 1.0) {
    throw std::domain_error(
        "timeshare_point: block fraction must lie in [0, 1]");
  }
  const double u = 1.0 - t;
  return {t * corner_a.first + u * corner_b.first,
          t * corner_a.second + u * corner_b.second,
          t * corner_a.third + u * corner_b.third};
}

Frontier timeshare_frontier(const RateTriple& corner_a,
                            const RateTriple& corner_b,
                            std::size_t grid_points, RegionKind region,
                            SliceKind slice) {
  if (grid_points < 2) {
    throw std::invalid_argument(
        "timeshare_frontier: need at least 2 grid points");
  }
  Frontier f{region, slice, {}};
  f.points.reserve(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double t =
        static_cast<double>(i) / static_cast<double>(grid_points - 1);
    FrontierPoint pt;
    pt.rates = timeshare_point(corner_a, corner_b, t);
    pt.lambda = t;
    f.points.push_back(pt);
  }
  const SliceAxes axes = slice_axes(slice);
  std::stable_sort(f.points.begin(), f.points.end(),
                   [&](const FrontierPoint& a, const FrontierPoint& b) {
                     return coord(a.rates, axes.traced) <
                            coord(b.rates, axes.traced);
                   });
  return f;
}

double timeshare_first_at_second(const RateTriple& corner_a,
                                 const RateTriple& corner_b,
                                 double second_target) {
  const double lo = std::min(corner_a.second, corner_b.second);
  const double hi = std::max(corner_a.second, corner_b.second);
  if (!std::isfinite(second_target) || second_target < lo ||
      second_target > hi) {
    throw infeasible_error(
        "timeshare_first_at_second: target " + std::to_string(second_target) +
        " lies outside the corner interval [" + std::to_string(lo) + ", " +
        std::to_string(hi) + "]");
  }
  if (corner_a.second == corner_b.second) {
    return std::max(corner_a.first, corner_b.first);
  }
  const double t =
      std::clamp((second_target - corner_b.second) /
                     (corner_a.second - corner_b.second),
                 0.0, 1.0);
  return t * corner_a.first + (1.0 - t) * corner_b.first;
}

Frontier timeshare_reallocating_cq(ChannelSpec ch, PowerBudget p,
                                   std::size_t grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument(
        "timeshare_reallocating_cq: need at least 2 grid points");
  }
  Frontier f{RegionKind::cqe, SliceKind::cq, {}};
  const std::size_t n = grid_points;
  f.points.reserve((n + 1) * (n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n);
    for (std::size_t j = 0; j <= n; ++j) {
      // Photon share s goes to the quantum blocks: their budget is
      // s * ns / t, the classical blocks get (1 - s) * ns / (1 - t).
      const double s = static_cast<double>(j) / static_cast<double>(n);
      if ((t == 0.0 && s > 0.0) || (t == 1.0 && s < 1.0)) {
        continue;  // photons assigned to a zero-length block
      }
      const double q =
          t > 0.0 ? t * quantum_capacity(ch, PowerBudget(s * p.ns / t)) : 0.0;
      const double c =
          t < 1.0 ? (1.0 - t) * classical_capacity(
                                    ch, PowerBudget((1.0 - s) * p.ns /
                                                    (1.0 - t)))
                  : 0.0;
      FrontierPoint pt;
      pt.rates = {c, q, 0.0};
      pt.lambda = t;
      f.points.push_back(pt);
    }
  }
  prune_to_frontier(f);
  return f;
}

GainMetrics gain_metrics(const RateTriple& point, const RateTriple& reference) {
  GainMetrics m;
  m.additive = {point.first - reference.first,
                point.second - reference.second,
                point.third - reference.third};
  const auto db = [](double num, double den) -> std::optional<double> {
    if (num > 0.0 && den > 0.0) {
      return 10.0 * std::log10(num / den);
    }
    return std::nullopt;
  };
  m.db_first = db(point.first, reference.first);
  m.db_second = db(point.second, reference.second);
  m.db_third = db(point.third, reference.third);
  return m;
}

Frontier minkowski_sum(const Frontier& a, const Frontier& b) {
  if (a.region != b.region || a.slice != b.slice) {
    throw std::invalid_argument(
        "minkowski_sum: operands must share one region and slice, got " +
        std::string(region_name(a.region)) + "/" + slice_name(a.slice) +
        " and " + region_name(b.region) + "/" + slice_name(b.slice));
  }
  if (a.slice == SliceKind::bounds) {
    throw std::invalid_argument(
        "minkowski_sum: a bounds table is not a rate frontier");
  }
  Frontier out{a.region, a.slice, {}};
  out.points.reserve(a.points.size() * b.points.size());
  for (const FrontierPoint& pa : a.points) {
    for (const FrontierPoint& pb : b.points) {
      FrontierPoint pt;
      pt.rates = {pa.rates.first + pb.rates.first,
                  pa.rates.second + pb.rates.second,
                  pa.rates.third + pb.rates.third};
      pt.lambda = pa.lambda;  // the sum has no single generator; keep the left one
      if (pa.bounds && pb.bounds) {
        // Each inequality is linear in the rates, so summed points satisfy
        // the summed bound triples.
        pt.bounds = BoundTriple{pa.bounds->b1 + pb.bounds->b1,
                                pa.bounds->b2 + pb.bounds->b2,
                                pa.bounds->b3 + pb.bounds->b3};
      }
      out.points.push_back(pt);
    }
  }
  prune_to_frontier(out);
  return out;
}

}  // namespace bosonic
