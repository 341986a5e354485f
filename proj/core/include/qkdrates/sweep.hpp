// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps over the channel and protocol models with CSV output:
// grid specs, named presets for the standard figure datasets, a flat
// key=value spec-file parser, and a deterministic parallel runner.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qkdrates::sweep {

enum class Target { dr, rr, ccq, er_ub, bb84_unrestricted, bb84_restricted, all };

std::string to_string(Target t);
Target parse_target(const std::string& s);

struct GridAxis {
  std::string name;
  std::vector<double> values;
};

std::vector<double> linspace(double lo, double hi, int count);
std::vector<double> logspace(double lo, double hi, int count);  // geometric

// A sweep: cartesian product of the axes (in order, last axis fastest),
// each point overlaid on `fixed`. `columns` lists the value columns;
// when empty it is derived from `target`.
struct SweepSpec {
  std::string name;
  Target target = Target::all;
  std::vector<GridAxis> axes;
  std::map<std::string, double> fixed;
  std::vector<std::string> columns;
  std::string notes;

  std::vector<std::string> effective_columns() const;
  std::size_t row_count() const;
  void validate() const;
};

// Named sweeps reproducing the standard figure datasets.
const std::vector<SweepSpec>& presets();
const SweepSpec* find_preset(const std::string& name);

// Flat key=value format: name=, target=, columns=, notes=,
// axis.<param>=<linear|log>:<lo>:<hi>:<count>, and numeric fixed values
// (mu=inf selects the asymptotic forms). '#' starts a comment.
SweepSpec parse_spec_file(std::istream& in);

struct SweepOptions {
  bool timestamp = true;
  int threads = 0;  // 0: hardware concurrency
};

// Evaluates the grid and writes the CSV: '#' comment header, one header
// row (axes, value columns, error), then one row per grid point in
// deterministic order. Row-level numeric failures fill the error column;
// returns the number of rows that failed.
std::size_t run_sweep(const SweepSpec& spec, std::ostream& out,
                      const SweepOptions& opts = {});

// Companion gnuplot script plotting each value column against the first axis.
std::string gnuplot_script(const SweepSpec& spec, const std::string& csv_path);

}  // namespace qkdrates::sweep
