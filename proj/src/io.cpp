#include "wenoza/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wenoza/euler.hpp"

namespace wenoza {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

}  // namespace

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out = open_out(path);
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("write_csv: row width differs from header");
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << g17(row[c]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
  std::stringstream hs(line);
  for (std::string cell; std::getline(hs, cell, ',');) t.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::vector<double> row;
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    if (row.size() != t.columns.size())
      throw std::runtime_error("ragged csv row in " + path);
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_scalar_csv(const std::string& path, const Grid1D& grid,
                      const std::vector<double>& u) {
  CsvTable t;
  t.columns = {"x", "u"};
  t.rows.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    t.rows.push_back({grid.center(static_cast<int>(i)), u[i]});
  write_csv(path, t);
}

void write_euler1d_csv(const std::string& path, const Grid1D& grid,
                       const std::vector<std::array<double, 3>>& q, double gamma) {
  CsvTable t;
  t.columns = {"x", "rho", "u", "p"};
  t.rows.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const EulerState1D s{q[i][0], q[i][1], q[i][2]};
    t.rows.push_back({grid.center(static_cast<int>(i)), s.rho, s.u(), pressure(s, gamma)});
  }
  write_csv(path, t);
}

void write_density_grid(const std::string& path, const Grid2D& grid,
                        const std::vector<std::array<double, 4>>& q) {
  if (q.size() != static_cast<std::size_t>(grid.Nx) * grid.Ny)
    throw std::invalid_argument("write_density_grid: size mismatch");
  std::ofstream out = open_out(path);
  out << "# Nx=" << grid.Nx << " Ny=" << grid.Ny << " ax=" << g17(grid.ax)
      << " bx=" << g17(grid.bx) << " ay=" << g17(grid.ay) << " by=" << g17(grid.by)
      << '\n';
  for (int j = 0; j < grid.Ny; ++j) {
    for (int i = 0; i < grid.Nx; ++i)
      out << (i ? "," : "") << g17(q[static_cast<std::size_t>(j) * grid.Nx + i][0]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

DensityGrid read_density_grid(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string header;
  if (!std::getline(in, header) || header.rfind("# Nx=", 0) != 0)
    throw std::runtime_error("missing density-grid header in " + path);
  DensityGrid g;
  if (std::sscanf(header.c_str(), "# Nx=%d Ny=%d ax=%lf bx=%lf ay=%lf by=%lf", &g.Nx,
                  &g.Ny, &g.ax, &g.bx, &g.ay, &g.by) != 6)
    throw std::runtime_error("malformed density-grid header in " + path);
  g.rho.reserve(static_cast<std::size_t>(g.Nx) * g.Ny);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) g.rho.push_back(std::stod(cell));
  }
  if (g.rho.size() != static_cast<std::size_t>(g.Nx) * g.Ny)
    throw std::runtime_error("density grid truncated in " + path);
  return g;
}

void DtDigest::add(double dt) {
  if (count == 0) first = dt;
  last = dt;
  ++count;
  std::uint64_t bits;
  std::memcpy(&bits, &dt, sizeof bits);
  for (int b = 0; b < 8; ++b) {
    fnv ^= (bits >> (8 * b)) & 0xffu;
    fnv *= 1099511628211ull;
  }
}

std::string DtDigest::hex() const {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv));
  return buf;
}

void write_metadata(const std::string& path, const ProblemSpec& spec,
                    const SolveOptions& opt, const RunStats& stats,
                    const DtDigest& digest) {
  nlohmann::json j;
  j["problem"] = spec.name;
  j["equation"] = to_string(spec.equation);
  j["gamma"] = spec.gamma;
  j["t_final"] = spec.t_final;
  if (spec.is_2d()) {
    j["grid"] = {{"Nx", spec.Nx}, {"Ny", spec.Ny}, {"ax", spec.ax}, {"bx", spec.bx},
                 {"ay", spec.ay}, {"by", spec.by}};
  } else {
    j["grid"] = {{"N", spec.N}, {"a", spec.a}, {"b", spec.b}};
  }
  j["scheme"] = opt.scheme.name();
  const WeightParams& wp = opt.scheme.params;
  j["params"] = {{"L", wp.L},
                 {"p", wp.p},
                 {"q", wp.q},
                 {"eps", wp.eps},
                 {"tau", wp.tau_variant == TauVariant::tau ? "tau" : "tau_prime"},
                 {"affine_invariant", wp.affine_invariant}};
  if (wp.eps_variable_exponent)
    j["params"]["eps_variable_exponent"] = *wp.eps_variable_exponent;
  j["cfl"] = opt.cfl;
  j["positivity"] = opt.positivity;
  if (opt.positivity)
    j["positivity_floors"] = {{"rho", opt.positivity_params.eps_rho},
                              {"p", opt.positivity_params.eps_p}};
  j["componentwise"] = opt.componentwise;
  j["averaging"] = opt.averaging == InterfaceAveraging::roe ? "roe" : "arithmetic";
  j["guard_abs_sound_speed"] = opt.guard_abs_sound_speed;
  j["threads"] = opt.threads;
  j["steps"] = stats.steps;
  j["t"] = stats.t;
  j["wall_seconds"] = stats.wall_seconds;
  j["stage_seconds"] = stats.stage_seconds;
  j["stage_evals"] = stats.stage_evals;
  if (std::isfinite(stats.min_rho)) j["min_rho"] = stats.min_rho;
  if (std::isfinite(stats.min_p)) j["min_p"] = stats.min_p;
  if (std::isfinite(stats.max_rho)) j["max_rho"] = stats.max_rho;
  j["min_theta"] = stats.min_theta;
  j["limited_interfaces"] = stats.limited_interfaces;
  j["dt_digest"] = {{"count", digest.count},
                    {"first", digest.first},
                    {"last", digest.last},
                    {"fnv64", digest.hex()}};
  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace wenoza
