#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bosonic/channel.hpp"

namespace bosonic {

// Photon-number sharing parameter lambda in [0, 1]: the fraction of the
// budget assigned to the quantum/entangled part of a trade-off code.
struct ShareParam {
  double lambda;
  explicit ShareParam(double share);
};

// The two triple-resource regions of the pure-loss channel:
//   cqe - classical bits (C), qubits (Q), entanglement (E)
//   rps - public bits (R), private bits (P), secret keys (S)
enum class RegionKind { cqe, rps };

// Two-dimensional slices traced by the library, plus the raw bound table.
enum class SliceKind { cq, ce, rp, bounds };

const char* region_name(RegionKind region);
const char* slice_name(SliceKind slice);

// Right-hand sides of the three outer-bound inequalities of a region at one
// sharing parameter. For CQE (E signed, negative when consumed):
//   C + 2Q <= b1,  Q + E <= b2,  C + Q + E <= b3
// For RPS:
//   R + P  <= b1,  P + S <= b2,  R + P + S <= b3
struct BoundTriple {
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
};

// One rate point of a region. Coordinate order follows the region's letters:
// CQE -> (C, Q, E), RPS -> (R, P, S). The entanglement coordinate is signed:
// negative values mean ebits consumed, so `-third` is the consumption rate.
struct RateTriple {
  double first = 0.0;
  double second = 0.0;
  double third = 0.0;
};

struct FrontierPoint {
  RateTriple rates;
  double lambda = 0.0;  // sharing parameter that generated the point
  // Bound triple at the generating parameter, when one exists (traced
  // frontiers and their Minkowski sums carry it; synthetic frontiers may not).
  std::optional<BoundTriple> bounds;
};

// A one-parameter family of Pareto-optimal points of a region slice, sorted
// by the traced coordinate.
struct Frontier {
  RegionKind region = RegionKind::cqe;
  SliceKind slice = SliceKind::cq;
  std::vector<FrontierPoint> points;
};

// Thrown when a requested rate target lies outside the achievable region.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outer-bound triples at sharing parameter lambda.
//   cqe: b1 = g(l*ns) + g(eta*ns) - g((1-eta)*l*ns)
//        b2 = g(eta*l*ns) - g((1-eta)*l*ns)
//        b3 = g(eta*ns) - g((1-eta)*l*ns)
//   rps: b1 = g(eta*ns), b2 and b3 as above.
BoundTriple cqe_bounds(ChannelSpec ch, PowerBudget p, ShareParam s);
BoundTriple rps_bounds(ChannelSpec ch, PowerBudget p, ShareParam s);
BoundTriple region_bounds(RegionKind region, ChannelSpec ch, PowerBudget p,
                          ShareParam s);

// Whether a rate triple satisfies all three inequalities of the region at the
// given bound triple, within an additive tolerance.
bool satisfies_region(RegionKind region, const BoundTriple& b,
                      const RateTriple& r, double tol = 1e-9);

// Default sampling grid for the sharing parameter: lambda = 0 followed by
// `points` logarithmically spaced values on [1e-6, 1], the last exactly 1.
std::vector<double> lambda_grid(std::size_t points = 512);

// Largest first coordinate achievable on the slice through the region with
// the third coordinate at zero, subject to the second coordinate reaching
// `second_target`: grid scan over the sharing parameter followed by
// golden-section refinement (tolerance 1e-6 in lambda). Throws
// infeasible_error when the target exceeds the lambda = 1 bound, and
// std::domain_error for a negative or non-finite target.
struct OptimalPoint {
  double first = 0.0;
  double lambda = 0.0;
};
OptimalPoint max_first_given_second(RegionKind region, ChannelSpec ch,
                                    PowerBudget p, double second_target,
                                    std::size_t grid_points = 512);

// Traced Pareto frontiers (pruned to nondominated points):
//   cq: (C, Q) with E = 0 - points ((b3 - b2), max(b2, 0)) over the grid
//   rp: (R, P) with S = 0 - numerically identical to cq
//   ce: (C, E) with Q = 0 - C = b1, E = -g(lambda * ns) (consumption signed)
Frontier cq_frontier(ChannelSpec ch, PowerBudget p,
                     std::size_t grid_points = 512);
Frontier rp_frontier(ChannelSpec ch, PowerBudget p,
                     std::size_t grid_points = 512);
Frontier ce_frontier(ChannelSpec ch, PowerBudget p,
                     std::size_t grid_points = 512);

// Exact point of the classical/entanglement trade-off at a prescribed
// entanglement consumption kappa (ebits per use): lambda = g_inverse(kappa)/ns
// and C = kappa + g(eta*ns) - g((1-eta)*g_inverse(kappa)). Throws
// infeasible_error when kappa exceeds g(ns).
struct CEPoint {
  double classical_bits = 0.0;
  double ebits_consumed = 0.0;
  double lambda = 0.0;
};
CEPoint ce_point_at_consumption(ChannelSpec ch, PowerBudget p,
                                double ebits_consumed);

// Time-sharing between two protocol corner points: each corner runs with the
// full photon budget during its block fraction (no photon reallocation).
RateTriple timeshare_point(const RateTriple& corner_a,
                           const RateTriple& corner_b, double t);

// Straight-line frontier t -> t * corner_a + (1 - t) * corner_b over a
// uniform grid in t (the point's lambda field stores t). Points carry no
// bound annotations.
Frontier timeshare_frontier(const RateTriple& corner_a,
                            const RateTriple& corner_b,
                            std::size_t grid_points = 512,
                            RegionKind region = RegionKind::cqe,
                            SliceKind slice = SliceKind::cq);

// First coordinate of the time-sharing line at a prescribed second
// coordinate (exact linear interpolation between the corners). Throws
// infeasible_error when the target lies outside the corner interval.
double timeshare_first_at_second(const RateTriple& corner_a,
                                 const RateTriple& corner_b,
                                 double second_target);

// Stronger baseline for the (C, Q) plane: block time-sharing that also
// reallocates the photon budget between the classical and quantum blocks
// (sweep over block fraction x photon split, pruned to nondominated points).
// It contains the fixed-budget baseline as the equal-split diagonal.
Frontier timeshare_reallocating_cq(ChannelSpec ch, PowerBudget p,
                                   std::size_t grid_points = 128);

// Coordinate-by-coordinate comparison of two rate points: additive gaps
// point_i - reference_i and decibel ratios 10*log10(point_i / reference_i).
// A decibel entry is present only when both coordinates are strictly
// positive (it is undefined otherwise, not an error). Signed-entanglement
// coordinates should be converted to positive consumption magnitudes by the
// caller before asking for ratios.
struct GainMetrics {
  RateTriple additive;
  std::optional<double> db_first;
  std::optional<double> db_second;
  std::optional<double> db_third;
};
GainMetrics gain_metrics(const RateTriple& point, const RateTriple& reference);

// Pointwise Minkowski sum of two frontiers of the same region and slice:
// all pairwise sums, pruned to nondominated points. The summed point keeps
// the left operand's sharing parameter; bound annotations add when both
// operands carry them. Throws std::invalid_argument on a region/slice
// mismatch.
Frontier minkowski_sum(const Frontier& a, const Frontier& b);

}  // namespace bosonic
