// Copyright (c) 2026 the qkdrates authors
// SPDX-License-Identifier: Apache-2.0

#include "qkdrates/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "qkdrates/bb84.hpp"
#include "qkdrates/common.hpp"
#include "qkdrates/entanglement.hpp"
#include "qkdrates/key_rates.hpp"
#include "qkdrates/wiretap.hpp"

namespace qkdrates::sweep {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Stand-in intensity for asymptotic rows of columns with no closed-form
// limit; saturation error is far below plot resolution.
constexpr double kLargeMu = 1e6;

using Point = std::map<std::string, double>;

const std::set<std::string>& known_columns() {
  static const std::set<std::string> cols = {
      "dr",     "rr",   "ccq", "er_ub", "bb84_unrestricted",
      "bb84_restricted", "plob"};
  return cols;
}

const std::set<std::string>& known_params() {
  static const std::set<std::string> keys = {
      "eta",      "loss_db",  "kappa",      "ne",      "mu",
      "beta",     "bb84_rate", "bb84_eta",  "bb84_eta_e",
      "bb84_nd",  "bb84_fl",  "bb84_mu",   "bb84_opt_mu"};
  return keys;
}

bool has(const Point& p, const std::string& k) { return p.count(k) != 0; }

double get(const Point& p, const std::string& k, double dflt) {
  auto it = p.find(k);
  return it == p.end() ? dflt : it->second;
}

double require_key(const Point& p, const std::string& k) {
  auto it = p.find(k);
  if (it == p.end()) throw domain_error("parameter '" + k + "' not specified");
  return it->second;
}

double eta_of(const Point& p) {
  bool e = has(p, "eta"), l = has(p, "loss_db");
  if (e && l) throw domain_error("eta and loss_db are mutually exclusive");
  if (e) return p.at("eta");
  if (l) return std::pow(10.0, -p.at("loss_db") / 10.0);
  throw domain_error("neither eta nor loss_db specified");
}

double point_mu(const Point& p) { return get(p, "mu", kInf); }

wiretap::ChannelParams channel_of(const Point& p, double mu) {
  wiretap::ChannelParams cp{eta_of(p), require_key(p, "kappa"), get(p, "ne", 0.0),
                            mu};
  cp.validate();
  return cp;
}

bb84::Bb84Params bb84_of(const Point& p) {
  bb84::Bb84Params bp;
  bp.rate_R = get(p, "bb84_rate", 1.0);
  bp.eta = has(p, "bb84_eta") ? p.at("bb84_eta") : eta_of(p);
  bp.eta_e = has(p, "bb84_eta_e") ? p.at("bb84_eta_e")
                                  : require_key(p, "kappa") * (1.0 - bp.eta);
  bp.n_d = get(p, "bb84_nd", 0.0);
  bp.f_l = get(p, "bb84_fl", 1.0);
  return bp;
}

double bb84_value(const Point& p, bool restricted) {
  bb84::Bb84Params bp = bb84_of(p);
  if (get(p, "bb84_opt_mu", 0.0) != 0.0)
    return bb84::optimize_mu(bp, restricted).skr_star;
  if (has(p, "bb84_mu"))
    bp.mu = p.at("bb84_mu");
  else {
    double mu = point_mu(p);
    if (!std::isfinite(mu))
      throw domain_error("bb84 columns need bb84_mu, a finite mu, or bb84_opt_mu");
    bp.mu = mu;
  }
  return restricted ? bb84::skr_restricted(bp) : bb84::skr_unrestricted(bp);
}

double value_for(const std::string& column, const Point& p) {
  if (column == "plob") return -std::log2(1.0 - eta_of(p));
  if (column == "bb84_unrestricted") return bb84_value(p, false);
  if (column == "bb84_restricted") return bb84_value(p, true);

  double mu = point_mu(p);
  double beta = get(p, "beta", 1.0);
  if (column == "dr") {
    if (std::isfinite(mu)) return rates::dr_thermal(channel_of(p, mu)).clamped();
    wiretap::ChannelParams cp = channel_of(p, 1.0);
    return rates::dr_thermal_limit(cp.eta, cp.kappa, cp.n_e).clamped();
  }
  if (column == "rr") {
    if (std::isfinite(mu)) {
      if (beta == 1.0) return rates::rr_thermal(channel_of(p, mu)).clamped();
      return rates::hashing_rr_numeric(channel_of(p, mu), beta).clamped();
    }
    if (beta == 1.0) {
      wiretap::ChannelParams cp = channel_of(p, 1.0);
      return rates::rr_thermal_limit(cp.eta, cp.kappa, cp.n_e).clamped();
    }
    return rates::hashing_rr_numeric(channel_of(p, kLargeMu), beta).clamped();
  }
  if (column == "ccq") {
    double use_mu = std::isfinite(mu) ? mu : kLargeMu;
    return rates::ccq_rate(channel_of(p, use_mu), beta).clamped();
  }
  if (column == "er_ub") {
    wiretap::ChannelParams cp = channel_of(p, 1.0);
    if (cp.n_e == 0.0) return bounds::er_upper_bound_pure_loss(cp.eta, cp.kappa);
    return bounds::er_upper_bound_numeric(cp).bits;
  }
  throw domain_error("unknown column '" + column + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

std::vector<std::string> columns_for(Target t) {
  switch (t) {
    case Target::dr: return {"dr"};
    case Target::rr: return {"rr"};
    case Target::ccq: return {"ccq"};
    case Target::er_ub: return {"er_ub"};
    case Target::bb84_unrestricted: return {"bb84_unrestricted"};
    case Target::bb84_restricted: return {"bb84_restricted"};
    case Target::all: return {"dr", "rr", "ccq", "er_ub"};
  }
  return {};
}

SweepSpec make_preset(std::string name, Target target,
                      std::vector<GridAxis> axes,
                      std::map<std::string, double> fixed,
                      std::vector<std::string> columns, std::string notes) {
  SweepSpec s;
  s.name = std::move(name);
  s.target = target;
  s.axes = std::move(axes);
  s.fixed = std::move(fixed);
  s.columns = std::move(columns);
  s.notes = std::move(notes);
  return s;
}

}  // namespace

std::string to_string(Target t) {
  switch (t) {
    case Target::dr: return "dr";
    case Target::rr: return "rr";
    case Target::ccq: return "ccq";
    case Target::er_ub: return "er_ub";
    case Target::bb84_unrestricted: return "bb84_unrestricted";
    case Target::bb84_restricted: return "bb84_restricted";
    case Target::all: return "all";
  }
  return "all";
}

Target parse_target(const std::string& s) {
  if (s == "dr") return Target::dr;
  if (s == "rr") return Target::rr;
  if (s == "ccq") return Target::ccq;
  if (s == "er_ub") return Target::er_ub;
  if (s == "bb84_unrestricted") return Target::bb84_unrestricted;
  if (s == "bb84_restricted") return Target::bb84_restricted;
  if (s == "all") return Target::all;
  throw domain_error("unknown target '" + s + "'");
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw domain_error("grid count must be at least 1");
  if (count == 1) return {lo};
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / (count - 1);
  v.back() = hi;  // keep endpoints exact; roundoff past a bound would reject the row
  return v;
}

std::vector<double> logspace(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > 0.0))
    throw domain_error("log grid endpoints must be positive");
  if (count < 1) throw domain_error("grid count must be at least 1");
  if (count == 1) return {lo};
  std::vector<double> v(count);
  double l = std::log(hi / lo);
  for (int i = 0; i < count; ++i) v[i] = lo * std::exp(l * i / (count - 1));
  v.front() = lo;
  v.back() = hi;  // same endpoint pinning as linspace
  return v;
}

std::vector<std::string> SweepSpec::effective_columns() const {
  return columns.empty() ? columns_for(target) : columns;
}

std::size_t SweepSpec::row_count() const {
  std::size_t n = 1;
  for (const GridAxis& a : axes) n *= a.values.size();
  return n;
}

void SweepSpec::validate() const {
  std::set<std::string> avail;
  for (const auto& [k, v] : fixed) {
    if (!known_params().count(k))
      throw domain_error("unknown fixed parameter '" + k + "'");
    avail.insert(k);
  }
  for (const GridAxis& a : axes) {
    if (!known_params().count(a.name) || a.name == "bb84_opt_mu")
      throw domain_error("unknown sweep axis '" + a.name + "'");
    if (a.values.empty())
      throw domain_error("axis '" + a.name + "' has no grid points");
    if (avail.count(a.name))
      throw domain_error("parameter '" + a.name + "' specified more than once");
    avail.insert(a.name);
  }
  if (avail.count("eta") && avail.count("loss_db"))
    throw domain_error("eta and loss_db are mutually exclusive");

  std::vector<std::string> cols = effective_columns();
  if (cols.empty()) throw domain_error("no value columns requested");
  bool transmissivity = avail.count("eta") || avail.count("loss_db");
  for (const std::string& c : cols) {
    if (!known_columns().count(c)) throw domain_error("unknown column '" + c + "'");
    if (c == "plob" && !transmissivity)
      throw domain_error("column 'plob' needs eta or loss_db");
    if ((c == "dr" || c == "rr" || c == "ccq" || c == "er_ub") &&
        (!transmissivity || !avail.count("kappa")))
      throw domain_error("column '" + c + "' needs eta (or loss_db) and kappa");
    if (c == "bb84_restricted" && !avail.count("bb84_eta_e") &&
        !avail.count("kappa"))
      throw domain_error("column 'bb84_restricted' needs bb84_eta_e or kappa");
    if ((c == "bb84_unrestricted" || c == "bb84_restricted") &&
        !avail.count("bb84_eta") && !transmissivity)
      throw domain_error("column '" + c + "' needs bb84_eta, eta, or loss_db");
  }
}

const std::vector<SweepSpec>& presets() {
  static const std::vector<SweepSpec> all = [] {
    std::vector<SweepSpec> v;
    v.push_back(make_preset(
        "fig3a", Target::all, {{"kappa", logspace(0.01, 1.0, 41)}},
        {{"eta", 0.6}, {"mu", kInf}}, {"dr", "rr"},
        "pure loss asymptotic rates vs the collection fraction; direct beats "
        "reverse at small kappa"));
    v.push_back(make_preset(
        "fig3b", Target::all, {{"loss_db", linspace(0.5, 25.0, 50)}},
        {{"kappa", 0.1}, {"mu", kInf}}, {"dr", "rr", "plob"},
        "pure loss asymptotic rates vs channel loss at kappa=0.1, with the "
        "unrestricted-capacity reference"));
    v.push_back(make_preset(
        "fig4", Target::all,
        {{"kappa", {0.1, 0.9}}, {"mu", logspace(0.01, 100.0, 41)}},
        {{"eta", 0.8}, {"ne", 1.0}}, {"dr", "rr"},
        "thermal rates vs input intensity; saturation toward the asymptote"));
    v.push_back(make_preset("fig6", Target::all,
                            {{"ne", linspace(0.0, 5.0, 51)}},
                            {{"eta", 0.8}, {"kappa", 0.4}, {"mu", kInf}},
                            {"dr", "rr"}, "asymptotic rates vs injected noise"));
    v.push_back(make_preset("fig7", Target::all,
                            {{"eta", linspace(0.02, 0.98, 49)}},
                            {{"kappa", 0.6}, {"ne", 1.0}, {"mu", kInf}},
                            {"dr", "rr"}, "asymptotic rates vs transmissivity"));
    v.push_back(make_preset("fig8", Target::all,
                            {{"kappa", logspace(0.01, 1.0, 41)}},
                            {{"eta", 0.7}, {"ne", 1.0}, {"mu", kInf}},
                            {"dr", "rr"},
                            "asymptotic rates vs the collection fraction"));
    v.push_back(make_preset(
        "fig9", Target::all,
        {{"kappa", {0.01, 0.1, 0.5}}, {"loss_db", linspace(0.5, 25.0, 50)}},
        {{"ne", 0.0}, {"mu", kInf}}, {"dr", "rr", "er_ub"},
        "pure loss upper and lower bounds vs loss for three collection "
        "fractions; closed-form upper bound"));
    v.push_back(make_preset(
        "fig10", Target::all,
        {{"ne", {0.05, 0.5}}, {"loss_db", linspace(0.5, 20.0, 40)}},
        {{"kappa", 0.1}, {"mu", kInf}}, {"dr", "rr", "er_ub"},
        "thermal upper and lower bounds vs loss at kappa=0.1; upper bound from "
        "the three-mode search"));
    v.push_back(make_preset(
        "fig11", Target::rr,
        {{"ne", {0.05, 0.5}},
         {"kappa", {0.01, 0.1, 0.5, 1.0}},
         {"loss_db", linspace(0.5, 25.0, 50)}},
        {{"mu", kInf}}, {"rr"},
        "reverse rate vs loss for two noise levels and four collection "
        "fractions"));
    v.push_back(make_preset(
        "fig12", Target::rr,
        {{"ne", {0.05, 0.5, 1.0, 5.0}}, {"loss_db", linspace(0.5, 25.0, 50)}},
        {{"kappa", 0.1}, {"mu", kInf}}, {"rr"},
        "reverse rate vs loss at kappa=0.1 for four noise levels"));
    v.push_back(make_preset(
        "fig13", Target::all,
        {{"kappa", {0.01, 0.5}}, {"mu", logspace(0.01, 1000.0, 61)}},
        {{"eta", 0.6},
         {"ne", 0.0},
         {"beta", 1.0},
         {"bb84_nd", 0.0},
         {"bb84_fl", 1.0},
         {"bb84_rate", 1.0}},
        {"rr", "ccq", "bb84_restricted"},
        "pure loss comparison vs intensity: reverse bound, measured-both-sides "
        "rate, and decoy BB84 with eta_e=kappa*(1-eta); rates per pulse"));
    v.push_back(make_preset(
        "fig14", Target::all,
        {{"eta", {0.6, 0.3}}, {"mu", logspace(0.01, 1000.0, 61)}},
        {{"kappa", 0.1},
         {"ne", 0.0005},
         {"beta", 1.0},
         {"bb84_nd", 0.0005},
         {"bb84_fl", 1.0},
         {"bb84_rate", 1.0}},
        {"rr", "ccq", "bb84_restricted"},
        "thermal comparison vs intensity at kappa=0.1, ne=nd=5e-4, ideal "
        "reconciliation"));
    v.push_back(make_preset(
        "fig15", Target::all, {{"mu", logspace(0.01, 1000.0, 61)}},
        {{"eta", 0.6},
         {"kappa", 0.1},
         {"ne", 0.0005},
         {"beta", 0.95},
         {"bb84_nd", 0.0005},
         {"bb84_fl", 1.1},
         {"bb84_rate", 1.0}},
        {"rr", "ccq", "bb84_restricted"},
        "fig14 eta=0.6 panel with reconciliation efficiency 0.95 and "
        "f_l=1.1; finite optimal intensity appears"));
    v.push_back(make_preset(
        "fig16", Target::all, {{"mu", logspace(0.01, 1000.0, 61)}},
        {{"eta", 0.3},
         {"kappa", 0.1},
         {"ne", 0.0005},
         {"beta", 0.95},
         {"bb84_nd", 0.0005},
         {"bb84_fl", 1.1},
         {"bb84_rate", 1.0}},
        {"rr", "ccq", "bb84_restricted"},
        "fig14 eta=0.3 panel with reconciliation efficiency 0.95 and f_l=1.1"));
    v.push_back(make_preset(
        "fig17", Target::all, {{"loss_db", linspace(0.5, 25.0, 50)}},
        {{"kappa", 0.1},
         {"ne", 0.5},
         {"mu", kInf},
         {"beta", 1.0},
         {"bb84_nd", 0.5},
         {"bb84_fl", 1.0},
         {"bb84_rate", 1.0},
         {"bb84_opt_mu", 1.0}},
        {"ccq", "er_ub", "bb84_restricted", "plob"},
        "thermal ne=nd=0.5 comparison vs loss at kappa=0.1; BB84 intensity "
        "optimized per point; unrestricted-capacity reference included"));
    v.push_back(make_preset(
        "fig18", Target::all, {{"bb84_mu", logspace(0.001, 10.0, 81)}},
        {{"kappa", 0.1},
         {"bb84_eta", 0.005},
         {"bb84_nd", 1e-4},
         {"bb84_fl", 1.1},
         {"bb84_rate", 1e9}},
        {"bb84_unrestricted", "bb84_restricted"},
        "decoy BB84 vs intensity at the reference link budget (1 Gpulse/s, "
        "eta=0.005, nd=1e-4, f_l=1.1); restricted collection "
        "eta_e=kappa*(1-eta), kappa=0.1 so both curves peak inside the grid"));
    for (SweepSpec& s : v) s.validate();
    return v;
  }();
  return all;
}

const SweepSpec* find_preset(const std::string& name) {
  for (const SweepSpec& s : presets())
    if (s.name == name) return &s;
  return nullptr;
}

SweepSpec parse_spec_file(std::istream& in) {
  SweepSpec spec;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw domain_error("spec line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    std::string::size_type eq = line.find('=');
    if (eq == std::string::npos) fail("expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) fail("expected key=value");

    if (key == "name") {
      spec.name = val;
    } else if (key == "notes") {
      spec.notes = val;
    } else if (key == "target") {
      spec.target = parse_target(val);
    } else if (key == "columns") {
      spec.columns.clear();
      std::stringstream ss(val);
      std::string col;
      while (std::getline(ss, col, ','))
        if (!trim(col).empty()) spec.columns.push_back(trim(col));
    } else if (key.rfind("axis.", 0) == 0) {
      std::string axis = key.substr(5);
      std::stringstream ss(val);
      std::string scale, lo_s, hi_s, n_s;
      if (!std::getline(ss, scale, ':') || !std::getline(ss, lo_s, ':') ||
          !std::getline(ss, hi_s, ':') || !std::getline(ss, n_s))
        fail("axis format is <linear|log>:<lo>:<hi>:<count>");
      double lo, hi;
      int n;
      try {
        lo = std::stod(lo_s);
        hi = std::stod(hi_s);
        n = std::stoi(n_s);
      } catch (const std::exception&) {
        fail("axis bounds must be numeric");
        return spec;  // unreachable
      }
      if (scale == "linear")
        spec.axes.push_back({axis, linspace(lo, hi, n)});
      else if (scale == "log")
        spec.axes.push_back({axis, logspace(lo, hi, n)});
      else
        fail("axis scale must be linear or log");
    } else {
      double num;
      if (val == "inf") {
        num = kInf;
      } else {
        try {
          num = std::stod(val);
        } catch (const std::exception&) {
          fail("value for '" + key + "' must be numeric (or inf)");
          return spec;  // unreachable
        }
      }
      spec.fixed[key] = num;
    }
  }
  spec.validate();
  return spec;
}

std::size_t run_sweep(const SweepSpec& spec, std::ostream& out,
                      const SweepOptions& opts) {
  spec.validate();
  const std::vector<std::string> cols = spec.effective_columns();
  const std::size_t rows = spec.row_count();

  // Materialize the grid points in lexicographic order, last axis fastest.
  std::vector<Point> points(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    Point p = spec.fixed;
    std::size_t rem = r;
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      const GridAxis& ax = spec.axes[a];
      p[ax.name] = ax.values[rem % ax.values.size()];
      rem /= ax.values.size();
    }
    points[r] = std::move(p);
  }

  struct Row {
    std::vector<double> values;
    std::vector<bool> ok;
    std::string error;
  };
  std::vector<Row> results(rows);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t r = next.fetch_add(1);
      if (r >= rows) return;
      Row& row = results[r];
      row.values.assign(cols.size(), 0.0);
      row.ok.assign(cols.size(), false);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        try {
          row.values[c] = value_for(cols[c], points[r]);
          row.ok[c] = true;
        } catch (const std::exception& e) {
          if (row.error.empty()) row.error = sanitize(e.what());
        }
      }
    }
  };
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t n_threads = opts.threads > 0 ? opts.threads : (hw ? hw : 1);
  n_threads = std::min<std::size_t>(n_threads, rows ? rows : 1);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  if (!spec.name.empty()) out << "# name: " << spec.name << "\n";
  out << "# target: " << to_string(spec.target) << "\n";
  if (!spec.fixed.empty()) {
    out << "# fixed:";
    for (const auto& [k, v] : spec.fixed) out << ' ' << k << '=' << fmt(v);
    out << "\n";
  }
  if (!spec.notes.empty()) out << "# notes: " << spec.notes << "\n";
  bool mu_asymptotic = !std::isfinite(get(spec.fixed, "mu", kInf));
  for (const GridAxis& a : spec.axes)
    if (a.name == "mu") mu_asymptotic = false;
  if (mu_asymptotic) {
    double beta = get(spec.fixed, "beta", 1.0);
    bool subst = std::count(cols.begin(), cols.end(), "ccq") ||
                 (beta < 1.0 && std::count(cols.begin(), cols.end(), "rr"));
    if (subst)
      out << "# note: asymptotic rows without a closed form evaluated at mu="
          << fmt(kLargeMu) << "\n";
  }
  if (opts.timestamp) {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    out << "# generated: " << buf << "\n";
  }

  for (std::size_t a = 0; a < spec.axes.size(); ++a)
    out << spec.axes[a].name << ',';
  for (const std::string& c : cols) out << c << ',';
  out << "error\n";

  std::size_t failed = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (const GridAxis& ax : spec.axes) out << fmt(points[r].at(ax.name)) << ',';
    const Row& row = results[r];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (row.ok[c]) out << fmt(row.values[c]);
      out << ',';
    }
    out << row.error << "\n";
    if (!row.error.empty()) ++failed;
  }
  return failed;
}

std::string gnuplot_script(const SweepSpec& spec, const std::string& csv_path) {
  std::vector<std::string> cols = spec.effective_columns();
  std::ostringstream os;
  os << "# gnuplot companion for " << (spec.name.empty() ? "sweep" : spec.name)
     << "\n";
  os << "set datafile separator ','\n";
  os << "set datafile commentschars '#'\n";
  os << "set key autotitle columnhead\n";
  if (!spec.axes.empty()) os << "set xlabel '" << spec.axes.front().name << "'\n";
  os << "set ylabel 'rate'\n";
  os << "plot ";
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c) os << ", ";
    os << "'" << csv_path << "' using 1:" << (spec.axes.size() + c + 1)
       << " with lines";
  }
  os << "\n";
  return os.str();
}

}  // namespace qkdrates::sweep
