#pragma once

#include <vector>

#include "cutshell/types.hpp"

namespace cutshell {

/// 1D Gauss-Legendre rule with q points, exact for polynomials of degree 2q-1.
struct GaussRule1d {
  std::vector<double> nodes;    // on [0,1]
  std::vector<double> weights;  // sum to 1
};

const GaussRule1d& gauss_legendre_01(int q);

/// Quadrature rule in parametric coordinates.
struct QuadRule {
  std::vector<Vec2> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
  double total_weight() const;
  void append(const QuadRule& other);
};

/// Tensor Gauss rule of q points per direction on the rectangle [x0,x1]x[y0,y1].
QuadRule tensor_rule(double x0, double x1, double y0, double y1, int q);

/// Tensor Gauss rule mapped onto a triangle through a collapsed-square
/// transform. All weights are positive for a counterclockwise triangle and
/// sum to the triangle area. Exact for bivariate polynomials of degree
/// 2q-2 and below on the triangle.
QuadRule triangle_rule(const Vec2& v0, const Vec2& v1, const Vec2& v2, int q);

}  // namespace cutshell
