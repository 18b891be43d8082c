#pragma once
// Uniform grids with ghost layers, cell-centered sample points.

#include <stdexcept>
#include <vector>

namespace wenoza {

struct Grid1D {
  double a = 0.0, b = 1.0;
  int N = 0;
  int ghost = 0;

  double dx() const { return (b - a) / N; }
  // Center of interior cell i in [0, N); ghosts use i < 0 or i >= N.
  double center(int i) const { return a + (i + 0.5) * dx(); }

  void validate() const {
    if (N <= 0 || !(b > a) || ghost < 0)
      throw std::invalid_argument("Grid1D: need N > 0, b > a, ghost >= 0");
  }
};

struct Grid2D {
  double ax = 0.0, bx = 1.0, ay = 0.0, by = 1.0;
  int Nx = 0, Ny = 0;
  int ghost = 0;

  double dx() const { return (bx - ax) / Nx; }
  double dy() const { return (by - ay) / Ny; }
  double xc(int i) const { return ax + (i + 0.5) * dx(); }
  double yc(int j) const { return ay + (j + 0.5) * dy(); }

  void validate() const {
    if (Nx <= 0 || Ny <= 0 || !(bx > ax) || !(by > ay) || ghost < 0)
      throw std::invalid_argument("Grid2D: need Nx,Ny > 0, bx > ax, by > ay");
  }
};

// Storage including ghosts; index -ghost .. N+ghost-1.
template <class T>
struct Field1D {
  Grid1D grid;
  std::vector<T> data;

  explicit Field1D(const Grid1D& g) : grid(g), data(g.N + 2 * g.ghost) {}
  T& at(int i) { return data[i + grid.ghost]; }
  const T& at(int i) const { return data[i + grid.ghost]; }
};

// Row-major storage including ghosts in both directions.
template <class T>
struct Field2D {
  Grid2D grid;
  int stride = 0;
  std::vector<T> data;

  explicit Field2D(const Grid2D& g)
      : grid(g),
        stride(g.Nx + 2 * g.ghost),
        data(static_cast<std::size_t>(g.Nx + 2 * g.ghost) * (g.Ny + 2 * g.ghost)) {}
  T& at(int i, int j) {
    return data[static_cast<std::size_t>(j + grid.ghost) * stride + (i + grid.ghost)];
  }
  const T& at(int i, int j) const {
    return data[static_cast<std::size_t>(j + grid.ghost) * stride + (i + grid.ghost)];
  }
};

}  // namespace wenoza
