#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bosonic/finite_dim.hpp"
#include "bosonic/fock.hpp"
#include "bosonic/regions.hpp"

namespace bosonic::io {

// Decimal rendering of a double at 17 significant digits ("%.17g"):
// guaranteed to parse back to the identical bit pattern, except that both
// zeros render as "0" (the sign of zero is not preserved).
std::string format_double(double v);

// A frontier together with the channel parameters that produced it.
struct FrontierDocument {
  Frontier frontier;
  double eta = 0.0;
  double ns = 0.0;
  std::size_t grid = 0;
};

// Column names of the CSV/JSON tables for a (region, slice) pair, e.g.
// {"lambda", "C", "Q", "cqe_b1", "cqe_b2", "cqe_b3"} for the CQE cq slice.
std::vector<std::string> frontier_columns(RegionKind region, SliceKind slice);

// CSV table: one header row naming the region-tagged columns, then one row
// per point with lambda, the two traced rates, and the three bounds, all at
// 17 significant digits. Requires every point to carry bound annotations.
std::string frontier_csv(const FrontierDocument& doc);

// JSON document mirroring the CSV records plus metadata (tool, version,
// region, slice, eta, ns, grid, column names). Deterministic output:
// serializing, parsing, and serializing again is byte-identical.
std::string frontier_json(const FrontierDocument& doc);

// Parses a document produced by frontier_json. Numbers are recovered
// bit-exactly. Throws std::invalid_argument on malformed input.
FrontierDocument read_frontier_json(const std::string& text);

// Bound-triple table over the sharing-parameter grid (the `bounds` slice):
// columns lambda, <region>_b1..b3.
struct BoundsDocument {
  RegionKind region = RegionKind::cqe;
  double eta = 0.0;
  double ns = 0.0;
  std::size_t grid = 0;
  std::vector<std::pair<double, BoundTriple>> rows;
};
std::string bounds_csv(const BoundsDocument& doc);
std::string bounds_json(const BoundsDocument& doc);

// Finite-dimensional channel + ensemble instance, exchanged as a JSON file:
//
// {
//   "dim_in": 2,
//   "dim_out": 2,
//   "kraus": [ [[re, im], ...row-major dim_out*dim_in entries...], ... ],
//   "ensemble": [
//     {"weight": 0.5, "ket": [[re, im], ...dim_in entries...]},
//     {"weight": 0.5, "rho": [[re, im], ...row-major dim_in*dim_in...]}
//   ]
// }
//
// A "ket" entry is converted to the rank-one density matrix of the
// (normalized) vector; the writer always emits the "rho" form.
struct FDInstance {
  fd::FDChannel channel;
  fd::FDEnsemble ensemble;
};
FDInstance parse_fd_instance(const std::string& json_text);
std::string write_fd_instance(const fd::FDChannel& ch, const fd::FDEnsemble& ens);

// Verification report as JSON (per-quantity expected/observed/deviation
// records plus the run parameters and pass flag).
std::string verification_json(const fock::VerificationReport& rep);

// Whole-file helpers.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bosonic::io
