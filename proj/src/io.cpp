#include "bosonic/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bosonic/version.hpp"

namespace bosonic::io {

namespace {

using nlohmann::json;

// All JSON documents are written by hand so that every number appears as a
// 17-significant-digit decimal and the byte stream is fully deterministic:
// serialize -> parse -> serialize is the identity on bytes.

void append_number(std::string& out, double v) { out += format_double(v); }

void append_quoted(std::string& out, const std::string& s) {
  out += '"';
  out += s;  // all emitted strings are plain identifiers, no escaping needed
  out += '"';
}

double get_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw std::invalid_argument(std::string("missing numeric field \"") +
                                key + "\"");
  }
  return j[key].get<double>();
}

RegionKind parse_region(const std::string& name) {
  if (name == "CQE") {
    return RegionKind::cqe;
  }
  if (name == "RPS") {
    return RegionKind::rps;
  }
  throw std::invalid_argument("unknown region tag \"" + name + "\"");
}

SliceKind parse_slice(const std::string& name) {
  if (name == "cq") {
    return SliceKind::cq;
  }
  if (name == "ce") {
    return SliceKind::ce;
  }
  if (name == "rp") {
    return SliceKind::rp;
  }
  if (name == "bounds") {
    return SliceKind::bounds;
  }
  throw std::invalid_argument("unknown slice tag \"" + name + "\"");
}

// The traced slices store two of the three rate coordinates; the signed
// entanglement coordinate sits in `third` for the ce slice.
std::pair<double, double> emitted_rates(SliceKind slice, const RateTriple& r) {
  if (slice == SliceKind::ce) {
    return {r.first, r.third};
  }
  return {r.first, r.second};
}

RateTriple rates_from_emitted(SliceKind slice, double rate1, double rate2) {
  if (slice == SliceKind::ce) {
    return {rate1, 0.0, rate2};
  }
  return {rate1, rate2, 0.0};
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) {
    // Canonicalize the sign of zero: "-0" does not survive a JSON round
    // trip, and the sign carries no meaning for any emitted quantity.
    return "0";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> frontier_columns(RegionKind region, SliceKind slice) {
  const std::string tag = region == RegionKind::cqe ? "cqe" : "rps";
  std::vector<std::string> cols{"lambda"};
  switch (slice) {
    case SliceKind::cq:
      cols.push_back("C");
      cols.push_back("Q");
      break;
    case SliceKind::ce:
      cols.push_back("C");
      cols.push_back("E");
      break;
    case SliceKind::rp:
      cols.push_back("R");
      cols.push_back("P");
      break;
    case SliceKind::bounds:
      break;
  }
  cols.push_back(tag + "_b1");
  cols.push_back(tag + "_b2");
  cols.push_back(tag + "_b3");
  return cols;
}

std::string frontier_csv(const FrontierDocument& doc) {
  if (doc.frontier.slice == SliceKind::bounds) {
    throw std::invalid_argument(
        "frontier_csv: a bounds table uses bounds_csv");
  }
  std::string out;
  const auto cols = frontier_columns(doc.frontier.region, doc.frontier.slice);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += cols[i];
  }
  out += '\n';
  for (const FrontierPoint& pt : doc.frontier.points) {
    if (!pt.bounds) {
      throw std::invalid_argument(
          "frontier_csv: point lacks bound annotations");
    }
    const auto [r1, r2] = emitted_rates(doc.frontier.slice, pt.rates);
    append_number(out, pt.lambda);
    out += ',';
    append_number(out, r1);
    out += ',';
    append_number(out, r2);
    out += ',';
    append_number(out, pt.bounds->b1);
    out += ',';
    append_number(out, pt.bounds->b2);
    out += ',';
    append_number(out, pt.bounds->b3);
    out += '\n';
  }
  return out;
}

std::string frontier_json(const FrontierDocument& doc) {
  if (doc.frontier.slice == SliceKind::bounds) {
    throw std::invalid_argument(
        "frontier_json: a bounds table uses bounds_json");
  }
  std::string out;
  out += "{\n";
  out += "  \"tool\": ";
  append_quoted(out, tool_name);
  out += ",\n  \"version\": ";
  append_quoted(out, tool_version);
  out += ",\n  \"region\": ";
  append_quoted(out, region_name(doc.frontier.region));
  out += ",\n  \"slice\": ";
  append_quoted(out, slice_name(doc.frontier.slice));
  out += ",\n  \"eta\": ";
  append_number(out, doc.eta);
  out += ",\n  \"ns\": ";
  append_number(out, doc.ns);
  out += ",\n  \"grid\": ";
  out += std::to_string(doc.grid);
  out += ",\n  \"columns\": [";
  const auto cols = frontier_columns(doc.frontier.region, doc.frontier.slice);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    append_quoted(out, cols[i]);
  }
  out += "],\n  \"points\": [\n";
  for (std::size_t i = 0; i < doc.frontier.points.size(); ++i) {
    const FrontierPoint& pt = doc.frontier.points[i];
    if (!pt.bounds) {
      throw std::invalid_argument(
          "frontier_json: point lacks bound annotations");
    }
    const auto [r1, r2] = emitted_rates(doc.frontier.slice, pt.rates);
    out += "    {\"lambda\": ";
    append_number(out, pt.lambda);
    out += ", \"rate1\": ";
    append_number(out, r1);
    out += ", \"rate2\": ";
    append_number(out, r2);
    out += ", \"b1\": ";
    append_number(out, pt.bounds->b1);
    out += ", \"b2\": ";
    append_number(out, pt.bounds->b2);
    out += ", \"b3\": ";
    append_number(out, pt.bounds->b3);
    out += i + 1 < doc.frontier.points.size() ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

FrontierDocument read_frontier_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("frontier document: ") + e.what());
  }
  if (!j.contains("region") || !j.contains("slice") || !j.contains("points")) {
    throw std::invalid_argument(
        "frontier document: region, slice, and points are required");
  }
  FrontierDocument doc;
  doc.frontier.region = parse_region(j["region"].get<std::string>());
  doc.frontier.slice = parse_slice(j["slice"].get<std::string>());
  if (doc.frontier.slice == SliceKind::bounds) {
    throw std::invalid_argument(
        "frontier document: a bounds table is not a rate frontier");
  }
  doc.eta = get_number(j, "eta");
  doc.ns = get_number(j, "ns");
  doc.grid = j.contains("grid") ? j["grid"].get<std::size_t>() : 0;
  for (const json& p : j["points"]) {
    FrontierPoint pt;
    pt.lambda = get_number(p, "lambda");
    pt.rates = rates_from_emitted(doc.frontier.slice, get_number(p, "rate1"),
                                  get_number(p, "rate2"));
    pt.bounds = BoundTriple{get_number(p, "b1"), get_number(p, "b2"),
                            get_number(p, "b3")};
    doc.frontier.points.push_back(pt);
  }
  return doc;
}

std::string bounds_csv(const BoundsDocument& doc) {
  std::string out;
  const auto cols = frontier_columns(doc.region, SliceKind::bounds);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += cols[i];
  }
  out += '\n';
  for (const auto& [lambda, b] : doc.rows) {
    append_number(out, lambda);
    out += ',';
    append_number(out, b.b1);
    out += ',';
    append_number(out, b.b2);
    out += ',';
    append_number(out, b.b3);
    out += '\n';
  }
  return out;
}

std::string bounds_json(const BoundsDocument& doc) {
  std::string out;
  out += "{\n";
  out += "  \"tool\": ";
  append_quoted(out, tool_name);
  out += ",\n  \"version\": ";
  append_quoted(out, tool_version);
  out += ",\n  \"region\": ";
  append_quoted(out, region_name(doc.region));
  out += ",\n  \"slice\": \"bounds\",\n  \"eta\": ";
  append_number(out, doc.eta);
  out += ",\n  \"ns\": ";
  append_number(out, doc.ns);
  out += ",\n  \"grid\": ";
  out += std::to_string(doc.grid);
  out += ",\n  \"rows\": [\n";
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto& [lambda, b] = doc.rows[i];
    out += "    {\"lambda\": ";
    append_number(out, lambda);
    out += ", \"b1\": ";
    append_number(out, b.b1);
    out += ", \"b2\": ";
    append_number(out, b.b2);
    out += ", \"b3\": ";
    append_number(out, b.b3);
    out += i + 1 < doc.rows.size() ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

namespace {

std::complex<double> parse_complex_pair(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument(
        "complex entries must be two-element [re, im] arrays");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

fd::Matrix parse_matrix(const json& j, Eigen::Index rows, Eigen::Index cols,
                        const char* what) {
  if (!j.is_array() ||
      j.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a row-major array of " +
                                std::to_string(rows * cols) +
                                " complex entries");
  }
  fd::Matrix m(rows, cols);
  std::size_t idx = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = parse_complex_pair(j[idx++]);
    }
  }
  return m;
}

void append_matrix(std::string& out, const fd::Matrix& m) {
  out += '[';
  bool first = true;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!first) {
        out += ", ";
      }
      first = false;
      out += '[';
      append_number(out, m(r, c).real());
      out += ", ";
      append_number(out, m(r, c).imag());
      out += ']';
    }
  }
  out += ']';
}

}  // namespace

FDInstance parse_fd_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("channel instance: ") + e.what());
  }
  if (!j.contains("dim_in") || !j.contains("dim_out") ||
      !j.contains("kraus") || !j.contains("ensemble")) {
    throw std::invalid_argument(
        "channel instance: dim_in, dim_out, kraus, and ensemble are "
        "required");
  }
  const auto dim_in = j["dim_in"].get<Eigen::Index>();
  const auto dim_out = j["dim_out"].get<Eigen::Index>();
  if (dim_in < 1 || dim_out < 1) {
    throw std::invalid_argument(
        "channel instance: dimensions must be positive");
  }

  std::vector<fd::Matrix> kraus;
  for (const json& k : j["kraus"]) {
    kraus.push_back(parse_matrix(k, dim_out, dim_in, "kraus operator"));
  }

  std::vector<fd::EnsembleEntry> entries;
  for (const json& e : j["ensemble"]) {
    if (!e.contains("weight")) {
      throw std::invalid_argument(
          "channel instance: every ensemble entry needs a weight");
    }
    fd::EnsembleEntry entry;
    entry.weight = e["weight"].get<double>();
    if (e.contains("rho")) {
      entry.rho = parse_matrix(e["rho"], dim_in, dim_in, "ensemble state");
    } else if (e.contains("ket")) {
      const json& kj = e["ket"];
      if (!kj.is_array() || kj.size() != static_cast<std::size_t>(dim_in)) {
        throw std::invalid_argument(
            "channel instance: ket length must equal dim_in");
      }
      Eigen::VectorXcd ket(dim_in);
      for (Eigen::Index i = 0; i < dim_in; ++i) {
        ket(i) = parse_complex_pair(kj[static_cast<std::size_t>(i)]);
      }
      const double norm = ket.norm();
      if (norm <= 0.0) {
        throw std::invalid_argument(
            "channel instance: ket must have positive norm");
      }
      ket /= norm;
      entry.rho = ket * ket.adjoint();
    } else {
      throw std::invalid_argument(
          "channel instance: every ensemble entry needs a rho or a ket");
    }
    entries.push_back(std::move(entry));
  }

  return {fd::FDChannel(std::move(kraus)), fd::FDEnsemble(std::move(entries))};
}

std::string write_fd_instance(const fd::FDChannel& ch,
                              const fd::FDEnsemble& ens) {
  std::string out;
  out += "{\n  \"dim_in\": ";
  out += std::to_string(ch.dim_in());
  out += ",\n  \"dim_out\": ";
  out += std::to_string(ch.dim_out());
  out += ",\n  \"kraus\": [\n";
  for (std::size_t i = 0; i < ch.kraus.size(); ++i) {
    out += "    ";
    append_matrix(out, ch.kraus[i]);
    out += i + 1 < ch.kraus.size() ? ",\n" : "\n";
  }
  out += "  ],\n  \"ensemble\": [\n";
  for (std::size_t i = 0; i < ens.entries.size(); ++i) {
    out += "    {\"weight\": ";
    append_number(out, ens.entries[i].weight);
    out += ", \"rho\": ";
    append_matrix(out, ens.entries[i].rho);
    out += i + 1 < ens.entries.size() ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string verification_json(const fock::VerificationReport& rep) {
  std::string out;
  out += "{\n  \"tool\": ";
  append_quoted(out, tool_name);
  out += ",\n  \"version\": ";
  append_quoted(out, tool_version);
  out += ",\n  \"eta\": ";
  append_number(out, rep.eta);
  out += ",\n  \"ns\": ";
  append_number(out, rep.ns);
  out += ",\n  \"lambda\": ";
  append_number(out, rep.lambda);
  out += ",\n  \"cutoff\": ";
  out += std::to_string(rep.cutoff);
  out += ",\n  \"tolerance\": ";
  append_number(out, rep.tolerance);
  out += ",\n  \"tail_mass\": ";
  append_number(out, rep.tail_mass);
  out += ",\n  \"tail_warning\": ";
  out += rep.tail_warning ? "true" : "false";
  out += ",\n  \"max_deviation\": ";
  append_number(out, rep.max_deviation);
  out += ",\n  \"passed\": ";
  out += rep.passed ? "true" : "false";
  out += ",\n  \"checks\": [\n";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const fock::QuantityCheck& c = rep.checks[i];
    out += "    {\"name\": ";
    append_quoted(out, c.name);
    out += ", \"expected\": ";
    append_number(out, c.expected);
    out += ", \"observed\": ";
    append_number(out, c.observed);
    out += ", \"deviation\": ";
    append_number(out, c.deviation);
    out += i + 1 < rep.checks.size() ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file for reading: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open file for writing: " + path);
  }
  out << content;
  if (!out.flush()) {
    throw std::runtime_error("failed writing file: " + path);
  }
}

}  // namespace bosonic::io
