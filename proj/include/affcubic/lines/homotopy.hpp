#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "affcubic/algebra/poly.hpp"
#include "affcubic/lines/plucker.hpp"

namespace affcubic::lines {

/// Symmetric trilinear form T with F(x) = T(x, x, x) for a cubic form F in
/// four variables.
class CubicTensor {
 public:
  explicit CubicTensor(const Poly& cubic);

  cd operator()(const Vec4& u, const Vec4& v, const Vec4& w) const;
  cd eval(const Vec4& x) const { return (*this)(x, x, x); }
  double scale() const { return scale_; }

 private:
  std::array<cd, 64> t_{};
  double scale_ = 1;
};

/// The four equations "F vanishes on the line" in one of the six affine
/// charts of the space of lines.
///
/// Chart (i, j) parametrizes lines spanned by P = e_i + a e_k + b e_l and
/// Q = e_j + c e_k + d e_l; the unknowns are (a, b, c, d) and the equations
/// are the coefficients of the binary cubic F(sP + tQ).
struct LineChart {
  int i, j, k, l;

  static std::array<LineChart, 6> all();

  std::pair<Vec4, Vec4> points(const Vec4& unknowns) const;
  /// Chart coordinates of a line with p_ij != 0.
  Vec4 coordinates(const Plucker& p) const;
  void evaluate(const CubicTensor& t, const Vec4& x, Vec4& value,
                std::array<Vec4, 4>* jacobian) const;
};

struct TrackerOptions {
  double min_step = 1e-6;
  double max_step = 0.1;
  double divergence = 1e8;
  int max_steps = 20000;
};

enum class PathStatus { Converged, Diverged, Failed };

struct PathResult {
  Vec4 endpoint{};
  PathStatus status = PathStatus::Failed;
  int steps = 0;
};

/// Total-degree start system x_m^3 = 1: all 81 start points.
std::vector<Vec4> start_points();

/// Tracks H(x, t) = (1 - t) gamma G0(x) + t G(x) from t = 0 to 1 with an
/// adaptive Euler predictor and Newton corrector.
PathResult track_path(const CubicTensor& t, const LineChart& chart, cd gamma,
                      const Vec4& start, const TrackerOptions& opts);

/// Newton iteration on the target system; returns true when the residual
/// falls below `tol` (relative to the tensor scale).
bool refine_newton(const CubicTensor& t, const LineChart& chart, Vec4& x, double tol,
                   int max_iterations = 20);

struct ChartTask {
  int chart_index;
  int start_index;
};

/// Reference kernel: tracks every (chart, start point) pair in order.
std::vector<PathResult> track_all_serial(const CubicTensor& t, std::span<const ChartTask> tasks,
                                         std::span<const cd> gammas,
                                         const TrackerOptions& opts);

/// OpenMP kernel with identical results: paths are independent and each
/// result lands in its task's slot.
std::vector<PathResult> track_all_parallel(const CubicTensor& t,
                                           std::span<const ChartTask> tasks,
                                           std::span<const cd> gammas,
                                           const TrackerOptions& opts);

}  // namespace affcubic::lines
