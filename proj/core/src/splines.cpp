#include "cutshell/splines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cutshell {

KnotVector::KnotVector(std::vector<double> knots, int p) : values(std::move(knots)), degree(p) {
  if (p < 1) throw std::invalid_argument("spline degree must be >= 1");
  if (static_cast<int>(values.size()) < 2 * (p + 1))
    throw std::invalid_argument("knot vector too short for degree");
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1]) throw std::invalid_argument("knots must be nondecreasing");
  const size_t n = values.size();
  for (int i = 0; i <= p; ++i) {
    if (values[i] != values[0] || values[n - 1 - i] != values[n - 1])
      throw std::invalid_argument("knot vector must be open (end knots repeated p+1 times)");
  }
  if (static_cast<int>(n) > 2 * (p + 1) && (values[p + 1] == values[0] || values[n - p - 2] == values[n - 1]))
    throw std::invalid_argument("end knot multiplicity exceeds p+1");
  // interior multiplicity <= p
  int run = 1;
  for (size_t i = p + 2; i + p + 1 < n; ++i) {
    run = (values[i] == values[i - 1]) ? run + 1 : 1;
    if (run > p) throw std::invalid_argument("interior knot multiplicity exceeds p");
  }
}

KnotVector KnotVector::open_uniform(int p, int num_elements, double a, double b) {
  if (num_elements < 1) throw std::invalid_argument("need at least one element");
  if (!(b > a)) throw std::invalid_argument("empty parametric interval");
  std::vector<double> knots;
  knots.reserve(num_elements + 1 + 2 * p);
  for (int i = 0; i < p; ++i) knots.push_back(a);
  const double h = (b - a) / num_elements;
  for (int i = 0; i <= num_elements; ++i)
    knots.push_back(i == num_elements ? b : a + i * h);
  for (int i = 0; i < p; ++i) knots.push_back(b);
  return KnotVector(std::move(knots), p);
}

int KnotVector::find_span(double x) const {
  const int p = degree;
  const int m = num_basis();
  if (x < front() || x > back()) throw std::domain_error("evaluation point outside knot range");
  if (x >= values[m]) {
    // left limit at the final knot: last nonempty span
    int s = m - 1;
    while (s > p && values[s] == values[s + 1]) --s;
    return s;
  }
  int lo = p, hi = m;
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    (x < values[mid] ? hi : lo) = mid;
  }
  return lo;
}

SplineSpace1d::SplineSpace1d(KnotVector knots) : knots_(std::move(knots)) {
  const int m = knots_.num_basis();
  if (m <= 0) throw std::invalid_argument("spline space has nonpositive dimension");
  for (int s = knots_.degree; s < m; ++s)
    if (knots_.values[s] < knots_.values[s + 1]) spans_.push_back(s);
}

int SplineSpace1d::element_of(double x) const {
  const int span = knots_.find_span(x);
  auto it = std::lower_bound(spans_.begin(), spans_.end(), span);
  if (it == spans_.end() || *it != span) throw std::domain_error("point not in any element");
  return static_cast<int>(it - spans_.begin());
}

int SplineSpace1d::eval(double x, std::vector<double>& vals) const {
  const int p = degree();
  const int span = knots_.find_span(x);
  const auto& t = knots_.values;
  vals.assign(p + 1, 0.0);
  std::vector<double> left(p + 1), right(p + 1);
  vals[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = x - t[span + 1 - j];
    right[j] = t[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      double tmp = vals[r] / (right[r + 1] + left[j - r]);
      vals[r] = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    vals[j] = saved;
  }
  return span - p;
}

int SplineSpace1d::eval_derivs(double x, int order, MatX& ders) const {
  const int p = degree();
  if (order > p) throw std::invalid_argument("derivative order exceeds spline degree");
  const int span = knots_.find_span(x);
  const auto& t = knots_.values;

  // Triangular table of basis values for all degrees and the knot differences.
  MatX ndu(p + 1, p + 1);
  std::vector<double> left(p + 1), right(p + 1);
  ndu(0, 0) = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = x - t[span + 1 - j];
    right[j] = t[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      ndu(j, r) = right[r + 1] + left[j - r];
      double tmp = ndu(r, j - 1) / ndu(j, r);
      ndu(r, j) = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    ndu(j, j) = saved;
  }

  ders.setZero(order + 1, p + 1);
  for (int j = 0; j <= p; ++j) ders(0, j) = ndu(j, p);

  MatX a(2, p + 1);
  for (int r = 0; r <= p; ++r) {
    int s1 = 0, s2 = 1;
    a(0, 0) = 1.0;
    for (int k = 1; k <= order; ++k) {
      double d = 0.0;
      const int rk = r - k, pk = p - k;
      if (r >= k) {
        a(s2, 0) = a(s1, 0) / ndu(pk + 1, rk);
        d = a(s2, 0) * ndu(rk, pk);
      }
      const int j1 = (rk >= -1) ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
      for (int j = j1; j <= j2; ++j) {
        a(s2, j) = (a(s1, j) - a(s1, j - 1)) / ndu(pk + 1, rk + j);
        d += a(s2, j) * ndu(rk + j, pk);
      }
      if (r <= pk) {
        a(s2, k) = -a(s1, k - 1) / ndu(pk + 1, r);
        d += a(s2, k) * ndu(r, pk);
      }
      ders(k, r) = d;
      std::swap(s1, s2);
    }
  }
  double factor = p;
  for (int k = 1; k <= order; ++k) {
    for (int j = 0; j <= p; ++j) ders(k, j) *= factor;
    factor *= (p - k);
  }
  return span - p;
}

TensorSplineSpace::TensorSplineSpace(SplineSpace1d s1, SplineSpace1d s2)
    : s1_(std::move(s1)), s2_(std::move(s2)) {}

std::vector<int> TensorSplineSpace::active_functions(int e1, int e2) const {
  if (e1 < 0 || e1 >= s1_.num_elements() || e2 < 0 || e2 >= s2_.num_elements())
    throw std::invalid_argument("element index outside grid");
  const int f1 = s1_.element_span(e1) - s1_.degree();
  const int f2 = s2_.element_span(e2) - s2_.degree();
  std::vector<int> idx;
  idx.reserve((s1_.degree() + 1) * (s2_.degree() + 1));
  for (int i = 0; i <= s1_.degree(); ++i)
    for (int j = 0; j <= s2_.degree(); ++j) idx.push_back(global_index(f1 + i, f2 + j));
  return idx;
}

TensorSplineSpace::Eval TensorSplineSpace::eval(const Vec2& xi, int order) const {
  const int p1 = s1_.degree(), p2 = s2_.degree();
  const int nb = (p1 + 1) * (p2 + 1);
  MatX d1, d2;
  const int ord1 = std::min(order, 2);
  const int f1 = s1_.eval_derivs(xi.x(), ord1, d1);
  const int f2 = s2_.eval_derivs(xi.y(), ord1, d2);

  Eval out;
  out.idx.reserve(nb);
  out.N.resize(nb);
  if (order >= 1) out.dN.resize(nb, 2);
  if (order >= 2) out.d2N.resize(nb, 3);
  int k = 0;
  for (int i = 0; i <= p1; ++i) {
    for (int j = 0; j <= p2; ++j, ++k) {
      out.idx.push_back(global_index(f1 + i, f2 + j));
      out.N[k] = d1(0, i) * d2(0, j);
      if (order >= 1) {
        out.dN(k, 0) = d1(1, i) * d2(0, j);
        out.dN(k, 1) = d1(0, i) * d2(1, j);
      }
      if (order >= 2) {
        out.d2N(k, 0) = d1(2, i) * d2(0, j);
        out.d2N(k, 1) = d1(0, i) * d2(2, j);
        out.d2N(k, 2) = d1(1, i) * d2(1, j);
      }
    }
  }
  return out;
}

}  // namespace cutshell
