#include "cutshell/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cutshell {

namespace {

// Nodes and weights on [-1,1] by Newton iteration on the Legendre recurrence.
GaussRule1d compute_gauss(int q) {
  if (q < 1) throw std::invalid_argument("gauss rule needs q >= 1");
  GaussRule1d rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < q; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= q; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= q; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = q * (x * p1 - p0) / (x * x - 1.0);
    // shift [-1,1] -> [0,1]
    rule.nodes[i] = 0.5 * (1.0 - x);  // descending x gives ascending nodes
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule1d& gauss_legendre_01(int q) {
  static std::map<int, GaussRule1d> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, compute_gauss(q)).first;
  return it->second;
}

double QuadRule::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

void QuadRule::append(const QuadRule& other) {
  points.insert(points.end(), other.points.begin(), other.points.end());
  weights.insert(weights.end(), other.weights.begin(), other.weights.end());
}

QuadRule tensor_rule(double x0, double x1, double y0, double y1, int q) {
  const GaussRule1d& g = gauss_legendre_01(q);
  QuadRule rule;
  rule.points.reserve(q * q);
  rule.weights.reserve(q * q);
  const double hx = x1 - x0, hy = y1 - y0;
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      rule.points.emplace_back(x0 + hx * g.nodes[i], y0 + hy * g.nodes[j]);
      rule.weights.push_back(hx * hy * g.weights[i] * g.weights[j]);
    }
  }
  return rule;
}

QuadRule triangle_rule(const Vec2& v0, const Vec2& v1, const Vec2& v2, int q) {
  const GaussRule1d& g = gauss_legendre_01(q);
  const Vec2 e1 = v1 - v0, e2 = v2 - v0;
  const double area2 = e1.x() * e2.y() - e1.y() * e2.x();  // 2A, signed
  QuadRule rule;
  rule.points.reserve(q * q);
  rule.weights.reserve(q * q);
  for (int i = 0; i < q; ++i) {
    const double u = g.nodes[i];
    for (int j = 0; j < q; ++j) {
      const double v = g.nodes[j];
      // P(u,v) = (1-u) v0 + u(1-v) v1 + uv v2, |J| = 2A u
      Vec2 p = (1.0 - u) * v0 + u * (1.0 - v) * v1 + u * v * v2;
      rule.points.push_back(p);
      rule.weights.push_back(g.weights[i] * g.weights[j] * area2 * u);
    }
  }
  return rule;
}

}  // namespace cutshell
