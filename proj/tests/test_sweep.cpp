// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qkdrates/common.hpp"
#include "qkdrates/sweep.hpp"

using namespace qkdrates;
using namespace qkdrates::sweep;

namespace {

// Rows of the CSV body (after comments and the header line), split on commas.
std::vector<std::vector<std::string>> csv_rows(const std::string& text,
                                               std::string* header = nullptr) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      saw_header = true;
      if (header) *header = line;
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_SUITE_BEGIN("sweep");

TEST_CASE("grid helpers") {
  std::vector<double> lin = linspace(0.0, 1.0, 5);
  REQUIRE(lin.size() == 5);
  CHECK(lin.front() == 0.0);
  CHECK(lin.back() == 1.0);
  CHECK(lin[2] == doctest::Approx(0.5));

  std::vector<double> lg = logspace(0.01, 100.0, 5);
  REQUIRE(lg.size() == 5);
  CHECK(lg.front() == doctest::Approx(0.01));
  CHECK(lg[2] == doctest::Approx(1.0));
  CHECK(lg.back() == doctest::Approx(100.0));

  CHECK(linspace(3.0, 9.0, 1) == std::vector<double>{3.0});
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), domain_error);
  CHECK_THROWS_AS(logspace(-1.0, 1.0, 3), domain_error);
}

TEST_CASE("target names") {
  for (Target t : {Target::dr, Target::rr, Target::ccq, Target::er_ub,
                   Target::bb84_unrestricted, Target::bb84_restricted,
                   Target::all})
    CHECK(parse_target(to_string(t)) == t);
  CHECK_THROWS_AS(parse_target("banana"), domain_error);
}

TEST_CASE("preset catalog") {
  const std::vector<std::string> names = {
      "fig3a", "fig3b", "fig4",  "fig6",  "fig7",  "fig8",  "fig9",  "fig10",
      "fig11", "fig12", "fig13", "fig14", "fig15", "fig16", "fig17", "fig18"};
  for (const std::string& n : names) REQUIRE(find_preset(n) != nullptr);
  CHECK(presets().size() == names.size());
  CHECK(find_preset("fig5") == nullptr);

  const SweepSpec* fig8 = find_preset("fig8");
  CHECK(fig8->fixed.at("eta") == 0.7);
  CHECK(fig8->fixed.at("ne") == 1.0);
  CHECK(std::isinf(fig8->fixed.at("mu")));
  CHECK(find_preset("fig3b")->fixed.at("kappa") == 0.1);
  CHECK(find_preset("fig13")->fixed.at("bb84_fl") == 1.0);
  for (const SweepSpec& s : presets()) CHECK_NOTHROW(s.validate());
}

TEST_CASE("spec validation") {
  SweepSpec s;
  s.axes = {{"kappa", {0.1, 0.5}}};
  s.fixed = {{"eta", 0.6}, {"mu", 1.0}};
  s.columns = {"dr"};
  CHECK_NOTHROW(s.validate());
  CHECK(s.row_count() == 2);

  SweepSpec bad = s;
  bad.axes.push_back({"nope", {1.0}});
  CHECK_THROWS_AS(bad.validate(), domain_error);

  bad = s;
  bad.axes.push_back({"eta", {0.5}});  // duplicates the fixed value
  CHECK_THROWS_AS(bad.validate(), domain_error);

  bad = s;
  bad.fixed["loss_db"] = 3.0;  // both transmissivity spellings
  CHECK_THROWS_AS(bad.validate(), domain_error);

  bad = s;
  bad.fixed.erase("eta");
  CHECK_THROWS_AS(bad.validate(), domain_error);
}

TEST_CASE("spec file parsing") {
  std::istringstream good(
      "# comment line\n"
      "name = tiny\n"
      "target = rr\n"
      "axis.kappa = log:0.1:1:3\n"
      "eta = 0.6        # trailing comment\n"
      "mu = inf\n");
  SweepSpec spec = parse_spec_file(good);
  CHECK(spec.name == "tiny");
  CHECK(spec.target == Target::rr);
  REQUIRE(spec.axes.size() == 1);
  CHECK(spec.axes[0].values.size() == 3);
  CHECK(std::isinf(spec.fixed.at("mu")));

  std::istringstream no_eq("name tiny\n");
  CHECK_THROWS_AS(parse_spec_file(no_eq), domain_error);
  std::istringstream bad_axis("axis.kappa = log:0.1:1\neta=0.5\nkappa=1\n");
  CHECK_THROWS_AS(parse_spec_file(bad_axis), domain_error);
  std::istringstream bad_num("eta = banana\n");
  CHECK_THROWS_AS(parse_spec_file(bad_num), domain_error);
}

TEST_CASE("deterministic output") {
  SweepSpec s;
  s.name = "tiny";
  s.axes = {{"kappa", {0.1, 0.5, 0.9}}};
  s.fixed = {{"eta", 0.6}, {"mu", 2.0}};
  s.columns = {"dr", "rr"};

  SweepOptions opts;
  opts.timestamp = false;

  std::ostringstream once, twice, serial;
  run_sweep(s, once, opts);
  run_sweep(s, twice, opts);
  opts.threads = 1;
  run_sweep(s, serial, opts);
  CHECK(once.str() == twice.str());
  CHECK(once.str() == serial.str());
  CHECK(once.str().find("generated") == std::string::npos);

  std::string header;
  auto rows = csv_rows(once.str(), &header);
  CHECK(header == "kappa,dr,rr,error");
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    REQUIRE(r.size() == 4);
    CHECK(r[3].empty());
  }
  CHECK(rows[0][0] == "0.1");
}

TEST_CASE("no axes means one pinned row") {
  SweepSpec s;
  s.fixed = {{"eta", 0.5}, {"kappa", 0.3}, {"mu", 1.0}};
  s.columns = {"dr"};
  std::ostringstream out;
  SweepOptions opts;
  opts.timestamp = false;
  run_sweep(s, out, opts);
  auto rows = csv_rows(out.str());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][1].empty());
}

TEST_CASE("numeric failures land in the error column") {
  SweepSpec s;
  s.axes = {{"kappa", {0.2}}};
  // bb84 columns need a finite intensity; mu=inf forces a row error while
  // the dr column still evaluates.
  s.fixed = {{"eta", 0.5}, {"mu", std::numeric_limits<double>::infinity()}};
  s.columns = {"dr", "bb84_restricted"};
  std::ostringstream out;
  SweepOptions opts;
  opts.timestamp = false;
  std::size_t failed = run_sweep(s, out, opts);
  CHECK(failed == 1);
  auto rows = csv_rows(out.str());
  REQUIRE(rows.size() == 1);
  CHECK(!rows[0][1].empty());       // dr value present
  CHECK(rows[0][2].empty());        // bb84 cell empty
  CHECK(!rows[0][3].empty());       // error populated
}

TEST_CASE("crossover shows up in the fig3a dataset") {
  std::ostringstream out;
  SweepOptions opts;
  opts.timestamp = false;
  std::size_t failed = run_sweep(*find_preset("fig3a"), out, opts);
  CHECK(failed == 0);
  auto rows = csv_rows(out.str());
  REQUIRE(rows.size() == 41);
  // kappa=0.01: direct wins; kappa=1: reverse wins.
  CHECK(std::stod(rows.front()[1]) > std::stod(rows.front()[2]));
  CHECK(std::stod(rows.back()[2]) > std::stod(rows.back()[1]));
}

TEST_CASE("gnuplot companion") {
  const SweepSpec* s = find_preset("fig3b");
  std::string script = gnuplot_script(*s, "fig3b.csv");
  CHECK(script.find("plot ") != std::string::npos);
  CHECK(script.find("fig3b.csv") != std::string::npos);
  CHECK(script.find("loss_db") != std::string::npos);
}

TEST_SUITE_END();
