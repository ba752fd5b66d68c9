#include "bosonic/io.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "bosonic/channel.hpp"
#include "bosonic/entropy.hpp"
#include "bosonic/regions.hpp"

using namespace bosonic;

TEST_CASE("17-digit decimal rendering round-trips doubles exactly") {
  for (const double v :
       {0.1, 1.0 / 3.0, g_entropy(150.0), 1e-300, 1e300, 0.0, -2.5,
        4.4243226851438974411, 5e-324}) {
    const std::string s = io::format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  // Both zeros render canonically, so emitted text survives parsers that
  // drop the sign of zero.
  CHECK(io::format_double(-0.0) == "0");
  CHECK(io::format_double(0.0) == "0");
}

TEST_CASE("frontier CSV: header and first row") {
  const ChannelSpec ch(0.75);
  const PowerBudget p(200.0);
  io::FrontierDocument doc{cq_frontier(ch, p, 32), 0.75, 200.0, 32};
  const std::string csv = io::frontier_csv(doc);

  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "lambda,C,Q,cqe_b1,cqe_b2,cqe_b3");

  std::string first_row;
  std::getline(in, first_row);
  // lambda = 0 row: C equals the classical capacity, Q = 0.
  CHECK(first_row.substr(0, 2) == "0,");
  const std::size_t second_comma = first_row.find(',', 2);
  const std::string c_field =
      first_row.substr(2, second_comma - 2);
  CHECK(std::strtod(c_field.c_str(), nullptr) ==
        classical_capacity(ch, p));

  // One line per point plus the header.
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) {
      ++rows;
    }
  }
  CHECK(rows + 2 == doc.frontier.points.size() + 1);
}

TEST_CASE("frontier CSV: region tags follow the slice") {
  const ChannelSpec ch(0.8);
  const PowerBudget p(10.0);
  io::FrontierDocument rp{rp_frontier(ch, p, 16), 0.8, 10.0, 16};
  CHECK(io::frontier_csv(rp).substr(0, 33) == "lambda,R,P,rps_b1,rps_b2,rps_b3\n0");
  io::FrontierDocument ce{ce_frontier(ch, p, 16), 0.8, 10.0, 16};
  CHECK(io::frontier_csv(ce).rfind("lambda,C,E,cqe_b1,cqe_b2,cqe_b3\n", 0) == 0);
}

TEST_CASE("frontier JSON: parse recovers every double bit-exactly") {
  const ChannelSpec ch(0.75);
  const PowerBudget p(200.0);
  io::FrontierDocument doc{ce_frontier(ch, p, 48), 0.75, 200.0, 48};
  const std::string text = io::frontier_json(doc);

  const io::FrontierDocument back = io::read_frontier_json(text);
  CHECK(back.frontier.region == doc.frontier.region);
  CHECK(back.frontier.slice == doc.frontier.slice);
  CHECK(back.eta == doc.eta);
  CHECK(back.ns == doc.ns);
  CHECK(back.grid == doc.grid);
  REQUIRE(back.frontier.points.size() == doc.frontier.points.size());
  for (std::size_t i = 0; i < doc.frontier.points.size(); ++i) {
    const FrontierPoint& a = doc.frontier.points[i];
    const FrontierPoint& b = back.frontier.points[i];
    CHECK(a.lambda == b.lambda);
    CHECK(a.rates.first == b.rates.first);
    CHECK(a.rates.third == b.rates.third);  // ce slice stores (rate1, rate2) = (C, E)
    CHECK(a.bounds->b1 == b.bounds->b1);
    CHECK(a.bounds->b2 == b.bounds->b2);
    CHECK(a.bounds->b3 == b.bounds->b3);
  }

  // Serialize -> parse -> serialize is the identity on bytes.
  CHECK(io::frontier_json(back) == text);
}

TEST_CASE("frontier JSON: malformed documents are rejected") {
  CHECK_THROWS_AS(io::read_frontier_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(io::read_frontier_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(io::read_frontier_json(
                      R"({"region":"XYZ","slice":"cq","eta":1,"ns":1,"points":[]})"),
                  std::invalid_argument);
}

TEST_CASE("bounds table emission") {
  io::BoundsDocument doc;
  doc.region = RegionKind::rps;
  doc.eta = 0.75;
  doc.ns = 200.0;
  doc.grid = 8;
  const ChannelSpec ch(0.75);
  const PowerBudget p(200.0);
  for (const double lam : lambda_grid(8)) {
    doc.rows.emplace_back(lam, rps_bounds(ch, p, ShareParam(lam)));
  }
  const std::string csv = io::bounds_csv(doc);
  CHECK(csv.rfind("lambda,rps_b1,rps_b2,rps_b3\n", 0) == 0);
  std::size_t lines = 0;
  for (const char c : csv) {
    if (c == '\n') {
      ++lines;
    }
  }
  CHECK(lines == doc.rows.size() + 1);

  const std::string json = io::bounds_json(doc);
  CHECK(json.find("\"slice\": \"bounds\"") != std::string::npos);
  CHECK(json.find("\"region\": \"RPS\"") != std::string::npos);
}

TEST_CASE("channel instance files: write, parse, and canonical round trip") {
  const double r = std::sqrt(0.5);
  fd::Matrix k0 = r * fd::Matrix::Identity(2, 2);
  fd::Matrix k1 = fd::Matrix::Zero(2, 2);
  k1(0, 0) = r;
  k1(1, 1) = -r;
  const fd::FDChannel ch({k0, k1});
  fd::Matrix rho0 = fd::Matrix::Zero(2, 2);
  rho0(0, 0) = 1.0;
  fd::Matrix rho1 = fd::Matrix::Zero(2, 2);
  rho1(1, 1) = 1.0;
  const fd::FDEnsemble ens({{0.5, rho0}, {0.5, rho1}});

  const std::string text = io::write_fd_instance(ch, ens);
  const io::FDInstance inst = io::parse_fd_instance(text);
  CHECK(inst.channel.dim_in() == 2);
  CHECK(inst.channel.env_dim() == 2);
  CHECK(inst.channel.kraus[1](1, 1) == std::complex<double>(-r, 0.0));
  CHECK(inst.ensemble.entries[0].weight == 0.5);

  // Canonical writer: write(parse(write(x))) == write(x).
  CHECK(io::write_fd_instance(inst.channel, inst.ensemble) == text);
}

TEST_CASE("channel instance files: ket entries become rank-one projectors") {
  const std::string text = R"({
    "dim_in": 2,
    "dim_out": 2,
    "kraus": [ [[1, 0], [0, 0], [0, 0], [1, 0]] ],
    "ensemble": [
      {"weight": 0.5, "ket": [[1, 0], [1, 0]]},
      {"weight": 0.5, "ket": [[1, 0], [-1, 0]]}
    ]
  })";
  const io::FDInstance inst = io::parse_fd_instance(text);
  // |+><+| has entries 1/2 everywhere.
  const fd::Matrix& plus = inst.ensemble.entries[0].rho;
  CHECK(std::abs(plus(0, 1).real() - 0.5) <= 1e-15);
  CHECK(std::abs(plus(1, 0).real() - 0.5) <= 1e-15);
  const fd::Matrix& minus = inst.ensemble.entries[1].rho;
  CHECK(std::abs(minus(0, 1).real() + 0.5) <= 1e-15);
}

TEST_CASE("channel instance files: malformed inputs are rejected") {
  CHECK_THROWS_AS(io::parse_fd_instance("nope"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_fd_instance(R"({"dim_in":2,"dim_out":2})"),
                  std::invalid_argument);
  // Wrong Kraus entry count.
  CHECK_THROWS_AS(io::parse_fd_instance(R"({
    "dim_in": 2, "dim_out": 2,
    "kraus": [ [[1,0],[0,0]] ],
    "ensemble": [ {"weight": 1.0, "ket": [[1,0],[0,0]]} ]
  })"),
                  std::invalid_argument);
  // Completeness violation surfaces through the channel constructor.
  CHECK_THROWS_AS(io::parse_fd_instance(R"({
    "dim_in": 2, "dim_out": 2,
    "kraus": [ [[0.5,0],[0,0],[0,0],[0.5,0]] ],
    "ensemble": [ {"weight": 1.0, "ket": [[1,0],[0,0]]} ]
  })"),
                  std::invalid_argument);
}

TEST_CASE("verification report JSON carries per-quantity records") {
  fock::VerificationReport rep;
  rep.eta = 0.6;
  rep.ns = 1.0;
  rep.lambda = 1.0;
  rep.cutoff = 60;
  rep.tolerance = 1e-8;
  rep.tail_mass = 2.2e-13;
  rep.tail_warning = false;
  rep.max_deviation = 3.5e-12;
  rep.passed = true;
  rep.checks.push_back({"H(B) vs g(eta*lambda*ns)", 0.5, 0.5 + 1e-12, 1e-12});
  const std::string text = io::verification_json(rep);
  CHECK(text.find("\"passed\": true") != std::string::npos);
  CHECK(text.find("\"name\": \"H(B) vs g(eta*lambda*ns)\"") !=
        std::string::npos);
  CHECK(text.find("\"max_deviation\": " + io::format_double(3.5e-12)) !=
        std::string::npos);
}
