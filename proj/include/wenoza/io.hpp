#pragma once
// Plain-text artifacts: solution CSVs, analysis tables, density grids, and
// per-run metadata.  All floating-point output uses 17 significant digits so
// files round-trip bit for bit and reruns can be compared byte-wise.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wenoza/grid.hpp"
#include "wenoza/problems.hpp"
#include "wenoza/solver.hpp"

namespace wenoza {

// Shortest decimal that round-trips the double exactly.
std::string g17(double v);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};
void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

// 1D scalar solution: x, u.
void write_scalar_csv(const std::string& path, const Grid1D& grid,
                      const std::vector<double>& u);

// 1D Euler solution in primitives: x, rho, u, p.
void write_euler1d_csv(const std::string& path, const Grid1D& grid,
                       const std::vector<std::array<double, 3>>& q, double gamma);

// 2D density on the structured grid, one row of Nx values per y line (row
// major, bottom to top), preceded by a header comment with dimensions and
// extents.
void write_density_grid(const std::string& path, const Grid2D& grid,
                        const std::vector<std::array<double, 4>>& q);

struct DensityGrid {
  int Nx = 0, Ny = 0;
  double ax = 0, bx = 0, ay = 0, by = 0;
  std::vector<double> rho;  // row-major interior values
};
DensityGrid read_density_grid(const std::string& path);

// Order-sensitive digest of the accepted time-step sequence, recorded in run
// metadata so two runs can be compared without storing every dt.
struct DtDigest {
  long count = 0;
  double first = 0.0, last = 0.0;
  std::uint64_t fnv = 14695981039346656037ull;

  void add(double dt);
  std::string hex() const;
};

// One JSON document per run: problem, scheme and weight parameters, solver
// options, step/timing counters, extrema, and the dt digest.
void write_metadata(const std::string& path, const ProblemSpec& spec,
                    const SolveOptions& opt, const RunStats& stats,
                    const DtDigest& digest);

}  // namespace wenoza
