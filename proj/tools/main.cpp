// Command-line front end for the trade-off capacity toolkit of the
// single-mode pure-loss bosonic channel.
//
// Exit codes: 0 success, 2 invalid arguments or malformed input,
// 3 infeasible rate target, 4 numerical verification failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bosonic/channel.hpp"
#include "bosonic/entropy.hpp"
#include "bosonic/finite_dim.hpp"
#include "bosonic/fock.hpp"
#include "bosonic/io.hpp"
#include "bosonic/regions.hpp"
#include "bosonic/rule_of_thumb.hpp"
#include "bosonic/version.hpp"

namespace {

using namespace bosonic;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitVerification = 4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(out_path, text);
  }
}

std::string fmt(double v) { return io::format_double(v); }

// Short echo of user-supplied parameters in human-readable output. Emitted
// data values always use the full 17-digit form.
std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// ---------------------------------------------------------------- capacities

int run_capacities(double eta, double ns, const std::string& format,
                   const std::string& out_path) {
  const ChannelSpec ch(eta);
  const PowerBudget p(ns);
  const double c = classical_capacity(ch, p);
  const double q = quantum_capacity(ch, p);
  const CapacityLimit limit = quantum_capacity_limit(ch);
  const EAPoint ea = ea_classical_capacity(ch, p);

  std::string text;
  if (format == "json") {
    text += "{\n  \"tool\": \"" + std::string(tool_name) + "\",\n";
    text += "  \"version\": \"" + std::string(tool_version) + "\",\n";
    text += "  \"eta\": " + fmt(eta) + ",\n";
    text += "  \"ns\": " + fmt(ns) + ",\n";
    text += "  \"classical_capacity_bits\": " + fmt(c) + ",\n";
    text += "  \"quantum_capacity_qubits\": " + fmt(q) + ",\n";
    if (limit.unbounded) {
      text += "  \"quantum_capacity_limit\": {\"unbounded\": true},\n";
    } else {
      text += "  \"quantum_capacity_limit\": {\"unbounded\": false, "
              "\"qubits\": " +
              fmt(limit.value) + "},\n";
    }
    text += "  \"ea_classical_capacity_bits\": " + fmt(ea.rate_bits) + ",\n";
    text += "  \"ea_ebits_consumed\": " + fmt(ea.ebits_consumed) + "\n}\n";
  } else {
    text += "pure-loss channel: eta = " + fmt_short(eta) + ", ns = " +
            fmt_short(ns) + "\n";
    text += "classical_capacity_bits      " + fmt(c) + "\n";
    text += "quantum_capacity_qubits      " + fmt(q) + "\n";
    text += "quantum_capacity_limit       " +
            (limit.unbounded ? std::string("unbounded") : fmt(limit.value)) +
            "\n";
    text += "ea_classical_capacity_bits   " + fmt(ea.rate_bits) + "\n";
    text += "ea_ebits_consumed            " + fmt(ea.ebits_consumed) + "\n";
  }
  emit(text, out_path);
  return kExitOk;
}

// ------------------------------------------------------------------ frontier

int run_frontier(double eta, double ns, const std::string& slice,
                 const std::string& region, std::size_t grid,
                 const std::string& format, const std::string& out_path) {
  const ChannelSpec ch(eta);
  const PowerBudget p(ns);

  if (slice == "bounds") {
    io::BoundsDocument doc;
    doc.region = region == "rps" ? RegionKind::rps : RegionKind::cqe;
    doc.eta = eta;
    doc.ns = ns;
    doc.grid = grid;
    for (const double lam : lambda_grid(grid)) {
      doc.rows.emplace_back(lam,
                            region_bounds(doc.region, ch, p, ShareParam(lam)));
    }
    emit(format == "json" ? io::bounds_json(doc) : io::bounds_csv(doc),
         out_path);
    return kExitOk;
  }

  io::FrontierDocument doc;
  doc.eta = eta;
  doc.ns = ns;
  doc.grid = grid;
  if (slice == "cq") {
    doc.frontier = cq_frontier(ch, p, grid);
  } else if (slice == "ce") {
    doc.frontier = ce_frontier(ch, p, grid);
  } else {
    doc.frontier = rp_frontier(ch, p, grid);
  }
  emit(format == "json" ? io::frontier_json(doc) : io::frontier_csv(doc),
       out_path);
  return kExitOk;
}

// ------------------------------------------------------------------- compare

std::string db_or_undefined(const std::optional<double>& db) {
  return db ? fmt(*db) : std::string("null");
}

int run_compare_cq(ChannelSpec ch, PowerBudget p, double at, std::size_t grid,
                   const std::string& baseline, const std::string& format,
                   const std::string& out_path) {
  const OptimalPoint opt =
      max_first_given_second(RegionKind::cqe, ch, p, at, grid);

  double baseline_c = 0.0;
  if (baseline == "reallocating") {
    // Piecewise-linear interpolation on the pruned reallocating frontier.
    const Frontier f = timeshare_reallocating_cq(ch, p, 256);
    baseline_c = 0.0;
    bool found = false;
    for (std::size_t i = 0; i + 1 < f.points.size(); ++i) {
      const double q0 = f.points[i].rates.second;
      const double q1 = f.points[i + 1].rates.second;
      if (q0 <= at && at <= q1) {
        const double t = q1 > q0 ? (at - q0) / (q1 - q0) : 0.0;
        baseline_c = (1.0 - t) * f.points[i].rates.first +
                     t * f.points[i + 1].rates.first;
        found = true;
        break;
      }
    }
    if (!found) {
      throw infeasible_error(
          "compare: target lies outside the reallocating baseline");
    }
  } else {
    const RateTriple classical_corner{classical_capacity(ch, p), 0.0, 0.0};
    const RateTriple quantum_corner{0.0, quantum_capacity(ch, p), 0.0};
    baseline_c =
        timeshare_first_at_second(classical_corner, quantum_corner, at);
  }

  const GainMetrics gm = gain_metrics({opt.first, at, 0.0},
                                      {baseline_c, at, 0.0});
  std::string text;
  if (format == "json") {
    text += "{\n  \"slice\": \"cq\",\n";
    text += "  \"eta\": " + fmt(ch.eta) + ",\n  \"ns\": " + fmt(p.ns) + ",\n";
    text += "  \"at_Q\": " + fmt(at) + ",\n";
    text += "  \"tradeoff_C\": " + fmt(opt.first) + ",\n";
    text += "  \"tradeoff_lambda\": " + fmt(opt.lambda) + ",\n";
    text += "  \"baseline\": \"" + baseline + "\",\n";
    text += "  \"baseline_C\": " + fmt(baseline_c) + ",\n";
    text += "  \"advantage_bits\": " + fmt(gm.additive.first) + ",\n";
    text += "  \"advantage_db\": " + db_or_undefined(gm.db_first) + "\n}\n";
  } else {
    text += "cq comparison at Q = " + fmt_short(at) + " (eta = " +
            fmt_short(ch.eta) + ", ns = " + fmt_short(p.ns) + ")\n";
    text += "tradeoff_C      " + fmt(opt.first) +
            "   (lambda = " + fmt(opt.lambda) + ")\n";
    text += "baseline_C      " + fmt(baseline_c) + "   (" + baseline +
            " time-sharing)\n";
    text += "advantage_bits  " + fmt(gm.additive.first) + "\n";
    text += "advantage_db    " +
            (gm.db_first ? fmt(*gm.db_first) : std::string("undefined")) +
            "\n";
  }
  emit(text, out_path);
  return kExitOk;
}

int run_compare_ce(ChannelSpec ch, PowerBudget p, double at,
                   const std::string& format, const std::string& out_path) {
  const CEPoint pt = ce_point_at_consumption(ch, p, at);
  const EAPoint ea = ea_classical_capacity(ch, p);
  // Positive consumption magnitudes in the third coordinate so that the
  // decibel ratio is defined.
  const GainMetrics gm = gain_metrics({ea.rate_bits, 0.0, ea.ebits_consumed},
                                      {pt.classical_bits, 0.0,
                                       pt.ebits_consumed});
  std::string text;
  if (format == "json") {
    text += "{\n  \"slice\": \"ce\",\n";
    text += "  \"eta\": " + fmt(ch.eta) + ",\n  \"ns\": " + fmt(p.ns) + ",\n";
    text += "  \"at_consumption\": " + fmt(at) + ",\n";
    text += "  \"tradeoff_C\": " + fmt(pt.classical_bits) + ",\n";
    text += "  \"tradeoff_lambda\": " + fmt(pt.lambda) + ",\n";
    text += "  \"ea_corner_C\": " + fmt(ea.rate_bits) + ",\n";
    text += "  \"ea_corner_consumption\": " + fmt(ea.ebits_consumed) + ",\n";
    text += "  \"corner_extra_bits\": " + fmt(gm.additive.first) + ",\n";
    text += "  \"corner_extra_bits_db\": " + db_or_undefined(gm.db_first) +
            ",\n";
    text += "  \"corner_extra_consumption\": " + fmt(gm.additive.third) +
            ",\n";
    text += "  \"corner_extra_consumption_db\": " +
            db_or_undefined(gm.db_third) + "\n}\n";
  } else {
    text += "ce comparison at consumption = " + fmt_short(at) +
            " ebits (eta = " + fmt_short(ch.eta) + ", ns = " +
            fmt_short(p.ns) + ")\n";
    text += "tradeoff_C                 " + fmt(pt.classical_bits) +
            "   (lambda = " + fmt(pt.lambda) + ")\n";
    text += "ea_corner_C                " + fmt(ea.rate_bits) + "\n";
    text += "ea_corner_consumption      " + fmt(ea.ebits_consumed) + "\n";
    text += "corner_extra_bits          " + fmt(gm.additive.first) + " (" +
            (gm.db_first ? fmt(*gm.db_first) + " dB" : "undefined") + ")\n";
    text += "corner_extra_consumption   " + fmt(gm.additive.third) + " (" +
            (gm.db_third ? fmt(*gm.db_third) + " dB" : "undefined") + ")\n";
  }
  emit(text, out_path);
  return kExitOk;
}

// -------------------------------------------------------------- rule-of-thumb

int run_rule_of_thumb(double eta, double ns, double eps,
                      const std::string& format,
                      const std::string& out_path) {
  const ChannelSpec ch(eta);
  const PowerBudget p(ns);
  const double star = lambda_star(ch, p, eps);
  const CapacityLimit limit = quantum_capacity_limit(ch);
  const double bound = taylor_lower_bound(ch, p, ShareParam(star));
  const double achieved =
      g_entropy(ch.eta * star * ns) - g_entropy((1.0 - ch.eta) * star * ns);

  std::string text;
  if (format == "json") {
    text += "{\n  \"eta\": " + fmt(eta) + ",\n  \"ns\": " + fmt(ns) + ",\n";
    text += "  \"epsilon\": " + fmt(eps) + ",\n";
    text += "  \"lambda_star\": " + fmt(star) + ",\n";
    text += "  \"q_limit\": " + fmt(limit.value) + ",\n";
    text += "  \"taylor_bound_at_lambda_star\": " + fmt(bound) + ",\n";
    text += "  \"q_at_lambda_star\": " + fmt(achieved) + "\n}\n";
  } else {
    text += "photon-allocation rule of thumb (eta = " + fmt_short(eta) +
            ", ns = " + fmt_short(ns) + ", epsilon = " + fmt_short(eps) +
            ")\n";
    text += "lambda_star                  " + fmt(star) + "\n";
    text += "q_limit                      " + fmt(limit.value) + "\n";
    text += "taylor_bound_at_lambda_star  " + fmt(bound) + "\n";
    text += "q_at_lambda_star             " + fmt(achieved) + "\n";
  }
  emit(text, out_path);
  return kExitOk;
}

// -------------------------------------------------------------------- verify

int run_verify(double eta, double ns, double lambda, int cutoff, double tol,
               const std::string& format, const std::string& out_path) {
  const fock::VerificationReport rep =
      fock::verify_cqe_entropies(eta, ns, lambda, cutoff, tol);
  if (rep.tail_warning) {
    std::cerr << "warning: truncated tail mass " << fmt(rep.tail_mass)
              << " exceeds 1e-8; raise the cutoff for this photon number\n";
  }
  std::string text;
  if (format == "json") {
    text = io::verification_json(rep);
  } else {
    text += "entropy verification (eta = " + fmt_short(eta) + ", ns = " +
            fmt_short(ns) + ", lambda = " + fmt_short(lambda) +
            ", cutoff = " + std::to_string(cutoff) + ")\n";
    for (const fock::QuantityCheck& c : rep.checks) {
      text += "  " + c.name + ": expected " + fmt(c.expected) + ", observed " +
              fmt(c.observed) + ", deviation " + fmt(c.deviation) + "\n";
    }
    text += "tail_mass      " + fmt(rep.tail_mass) + "\n";
    text += "max_deviation  " + fmt(rep.max_deviation) + " (tolerance " +
            fmt(rep.tolerance) + ")\n";
    text += rep.passed ? "PASSED\n" : "FAILED\n";
  }
  emit(text, out_path);
  return rep.passed ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------------- fd-eval

int run_fd_eval(const std::string& input_path, const std::string& format,
                const std::string& out_path) {
  const io::FDInstance inst =
      io::parse_fd_instance(io::read_text_file(input_path));
  const fd::RateFormulas rates =
      fd::hsieh_wilde_rates(inst.channel, inst.ensemble);
  const BoundTriple b = fd::cqe_region_bounds_fd(inst.channel, inst.ensemble);

  std::string text;
  if (format == "json") {
    text += "{\n  \"dim_in\": " + std::to_string(inst.channel.dim_in()) +
            ",\n";
    text += "  \"dim_out\": " + std::to_string(inst.channel.dim_out()) + ",\n";
    text += "  \"env_dim\": " + std::to_string(inst.channel.env_dim()) + ",\n";
    text += "  \"bits\": " + fmt(rates.bits) + ",\n";
    text += "  \"qubits\": " + fmt(rates.qubits) + ",\n";
    text += "  \"ebits_consumed\": " + fmt(rates.ebits_consumed) + ",\n";
    text += "  \"cqe_b1\": " + fmt(b.b1) + ",\n";
    text += "  \"cqe_b2\": " + fmt(b.b2) + ",\n";
    text += "  \"cqe_b3\": " + fmt(b.b3) + "\n}\n";
  } else {
    text += "finite-dimensional channel: dim_in = " +
            std::to_string(inst.channel.dim_in()) + ", dim_out = " +
            std::to_string(inst.channel.dim_out()) + ", env_dim = " +
            std::to_string(inst.channel.env_dim()) + "\n";
    text += "bits            " + fmt(rates.bits) + "\n";
    text += "qubits          " + fmt(rates.qubits) + "\n";
    text += "ebits_consumed  " + fmt(rates.ebits_consumed) + "\n";
    text += "cqe_b1          " + fmt(b.b1) + "\n";
    text += "cqe_b2          " + fmt(b.b2) + "\n";
    text += "cqe_b3          " + fmt(b.b3) + "\n";
  }
  emit(text, out_path);
  return kExitOk;
}

// ----------------------------------------------------------------- minkowski

int run_minkowski(const std::string& in_a, const std::string& in_b,
                  const std::string& format, const std::string& out_path) {
  const io::FrontierDocument a =
      io::read_frontier_json(io::read_text_file(in_a));
  const io::FrontierDocument b =
      io::read_frontier_json(io::read_text_file(in_b));
  io::FrontierDocument sum;
  sum.frontier = minkowski_sum(a.frontier, b.frontier);
  sum.eta = a.eta;  // metadata of the left operand; the sum spans two channels
  sum.ns = a.ns + b.ns;
  sum.grid = a.grid;
  emit(format == "json" ? io::frontier_json(sum) : io::frontier_csv(sum),
       out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Trade-off capacity regions of the single-mode pure-loss bosonic "
      "channel.\nExit codes: 0 success, 2 invalid arguments, 3 infeasible "
      "target, 4 verification failure."};
  app.require_subcommand(1);

  double eta = 0.75;
  double ns = 1.0;
  std::string format;
  std::string out_path;
  std::size_t grid = 512;

  // capacities
  auto* cap = app.add_subcommand(
      "capacities", "Channel capacities under the photon budget");
  cap->add_option("--eta", eta, "Transmissivity in (0, 1]")->required();
  cap->add_option("--ns", ns, "Mean photon budget, >= 0")->required();
  cap->add_option("--format", format, "text|json (default text)");
  cap->add_option("--out", out_path, "Write to a file instead of stdout");

  // frontier
  std::string slice = "cq";
  std::string region = "cqe";
  auto* fr = app.add_subcommand(
      "frontier", "Trace a Pareto frontier or the raw bound table");
  fr->add_option("--slice", slice, "cq|ce|rp|bounds (default cq)")
      ->check(CLI::IsMember({"cq", "ce", "rp", "bounds"}));
  fr->add_option("--region", region,
                 "cqe|rps, used by --slice bounds (default cqe)")
      ->check(CLI::IsMember({"cqe", "rps"}));
  fr->add_option("--eta", eta, "Transmissivity in (0, 1]")->required();
  fr->add_option("--ns", ns, "Mean photon budget, >= 0")->required();
  fr->add_option("--grid", grid, "Sharing-parameter grid size (default 512)");
  fr->add_option("--format", format, "csv|json (default csv)");
  fr->add_option("--out", out_path, "Write to a file instead of stdout");

  // compare
  double at = 0.0;
  std::string baseline = "fixed";
  auto* cmp = app.add_subcommand(
      "compare", "Trade-off point vs time-sharing baseline at a rate target");
  cmp->add_option("--slice", slice, "cq|ce (default cq)")
      ->check(CLI::IsMember({"cq", "ce"}));
  cmp->add_option("--eta", eta, "Transmissivity in (0, 1]")->required();
  cmp->add_option("--ns", ns, "Mean photon budget, >= 0")->required();
  cmp->add_option("--at", at,
                  "Rate target: Q for the cq slice, ebit consumption for ce")
      ->required();
  cmp->add_option("--grid", grid, "Sharing-parameter grid size (default 512)");
  cmp->add_option("--baseline", baseline,
                  "fixed|reallocating time-sharing baseline, cq only "
                  "(default fixed)")
      ->check(CLI::IsMember({"fixed", "reallocating"}));
  cmp->add_option("--format", format, "text|json (default text)");
  cmp->add_option("--out", out_path, "Write to a file instead of stdout");

  // rule-of-thumb
  double eps = 0.1;
  auto* rot = app.add_subcommand(
      "rule-of-thumb", "Photon-allocation rule for the quantum share");
  rot->add_option("--eta", eta, "Transmissivity strictly between 1/2 and 1")
      ->required();
  rot->add_option("--ns", ns, "Mean photon budget, > 0")->required();
  rot->add_option("--epsilon", eps, "Rate-gap tolerance, > 0")->required();
  rot->add_option("--format", format, "text|json (default text)");
  rot->add_option("--out", out_path, "Write to a file instead of stdout");

  // verify
  double lambda = 1.0;
  int cutoff = 80;
  double tol = 1e-7;
  auto* ver = app.add_subcommand(
      "verify",
      "Brute-force truncated-Fock validation of the closed-form entropies");
  ver->add_option("--eta", eta, "Transmissivity in (0, 1]")->required();
  ver->add_option("--ns", ns, "Mean photon budget, >= 0")->required();
  ver->add_option("--lambda", lambda, "Sharing parameter in [0, 1]")
      ->required();
  ver->add_option("--cutoff", cutoff, "Fock-space cutoff (default 80)");
  ver->add_option("--tol", tol, "Deviation tolerance (default 1e-7)");
  ver->add_option("--format", format, "text|json (default text)");
  ver->add_option("--out", out_path, "Write to a file instead of stdout");

  // fd-eval
  std::string input_path;
  auto* fde = app.add_subcommand(
      "fd-eval",
      "Evaluate rates and bounds for a finite-dimensional channel instance");
  fde->add_option("--input", input_path, "JSON channel instance file")
      ->required();
  fde->add_option("--format", format, "text|json (default text)");
  fde->add_option("--out", out_path, "Write to a file instead of stdout");

  // minkowski
  std::string in_a;
  std::string in_b;
  auto* mk = app.add_subcommand(
      "minkowski", "Minkowski sum of two frontier JSON documents");
  mk->add_option("--in-a", in_a, "Left frontier JSON file")->required();
  mk->add_option("--in-b", in_b, "Right frontier JSON file")->required();
  mk->add_option("--format", format, "csv|json (default csv)");
  mk->add_option("--out", out_path, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(cap)) {
      return run_capacities(eta, ns, format, out_path);
    }
    if (app.got_subcommand(fr)) {
      return run_frontier(eta, ns, slice, region, grid, format, out_path);
    }
    if (app.got_subcommand(cmp)) {
      const ChannelSpec ch(eta);
      const PowerBudget p(ns);
      if (slice == "ce") {
        return run_compare_ce(ch, p, at, format, out_path);
      }
      return run_compare_cq(ch, p, at, grid, baseline, format, out_path);
    }
    if (app.got_subcommand(rot)) {
      return run_rule_of_thumb(eta, ns, eps, format, out_path);
    }
    if (app.got_subcommand(ver)) {
      return run_verify(eta, ns, lambda, cutoff, tol, format, out_path);
    }
    if (app.got_subcommand(fde)) {
      return run_fd_eval(input_path, format, out_path);
    }
    if (app.got_subcommand(mk)) {
      return run_minkowski(in_a, in_b, format, out_path);
    }
  } catch (const infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
