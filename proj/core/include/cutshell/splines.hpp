#pragma once

#include <vector>

#include "cutshell/types.hpp"

namespace cutshell {

/// Open knot vector of degree p. The first and last knots are repeated
/// exactly p+1 times and interior multiplicities stay at or below p.
struct KnotVector {
  std::vector<double> values;
  int degree = 1;

  KnotVector() = default;
  KnotVector(std::vector<double> knots, int p);

  /// Open uniform knot vector on [a,b] with the stated number of elements
  /// and maximal smoothness C^{p-1}.
  static KnotVector open_uniform(int p, int num_elements, double a, double b);

  int num_basis() const { return static_cast<int>(values.size()) - degree - 1; }
  double front() const { return values.front(); }
  double back() const { return values.back(); }

  /// Index s with values[s] <= x < values[s+1]; right-limit convention, the
  /// final knot maps to the last nonempty span.
  int find_span(double x) const;
};

/// Univariate B-spline space; evaluation of values and derivatives of the
/// p+1 functions active on the span containing x.
class SplineSpace1d {
 public:
  SplineSpace1d() = default;
  explicit SplineSpace1d(KnotVector knots);

  int degree() const { return knots_.degree; }
  int dim() const { return knots_.num_basis(); }
  const KnotVector& knots() const { return knots_; }

  int num_elements() const { return static_cast<int>(spans_.size()); }
  double element_lo(int e) const { return knots_.values[spans_[e]]; }
  double element_hi(int e) const { return knots_.values[spans_[e] + 1]; }
  int element_span(int e) const { return spans_[e]; }
  /// Element containing x (right-limit convention).
  int element_of(double x) const;

  /// Values of the p+1 active functions at x. Returns the index of the first
  /// active function; vals receives p+1 nonnegative entries summing to one.
  int eval(double x, std::vector<double>& vals) const;

  /// Values and derivatives up to `order` (<= degree). Row k of `ders` holds
  /// the k-th derivatives of the p+1 active functions.
  int eval_derivs(double x, int order, MatX& ders) const;

 private:
  KnotVector knots_;
  std::vector<int> spans_;  // knot-span index of each nonempty element
};

/// Tensor-product space over the fictitious parametric grid. Global indices
/// pair the directional ones direction-1-major: g = i1 * dim2 + i2.
class TensorSplineSpace {
 public:
  TensorSplineSpace() = default;
  TensorSplineSpace(SplineSpace1d s1, SplineSpace1d s2);

  const SplineSpace1d& dir1() const { return s1_; }
  const SplineSpace1d& dir2() const { return s2_; }
  int dim() const { return s1_.dim() * s2_.dim(); }
  int num_elements_1() const { return s1_.num_elements(); }
  int num_elements_2() const { return s2_.num_elements(); }
  int num_elements() const { return s1_.num_elements() * s2_.num_elements(); }

  int global_index(int i1, int i2) const { return i1 * s2_.dim() + i2; }
  std::pair<int, int> unpack(int g) const { return {g / s2_.dim(), g % s2_.dim()}; }

  int element_id(int e1, int e2) const { return e1 * s2_.num_elements() + e2; }
  std::pair<int, int> element_unpack(int id) const {
    return {id / s2_.num_elements(), id % s2_.num_elements()};
  }

  /// Global indices of the (p1+1)(p2+1) functions supported on the element,
  /// in ascending order.
  std::vector<int> active_functions(int e1, int e2) const;

  /// Values (and derivatives up to order <= 1,2) of all functions active on
  /// the element containing xi. N holds values; dN column a holds the
  /// d/dxi_a derivatives; second derivatives in d2N ordered (11, 22, 12).
  struct Eval {
    std::vector<int> idx;
    VecX N;
    Eigen::Matrix<double, Eigen::Dynamic, 2> dN;
    Eigen::Matrix<double, Eigen::Dynamic, 3> d2N;
  };
  Eval eval(const Vec2& xi, int order) const;

 private:
  SplineSpace1d s1_, s2_;
};

}  // namespace cutshell
