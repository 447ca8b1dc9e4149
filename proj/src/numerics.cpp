#include "seqnorm/numerics.hpp"

#include <cmath>

namespace seqnorm {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NoBracketError("bisect: f(lo) and f(hi) have the same sign");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // interval at machine resolution
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

Vector project_monotone(const Vector& y) {
  const std::size_t n = y.dim();
  // pool-adjacent-violators for the non-increasing order
  std::vector<double> level;
  std::vector<std::size_t> count;
  level.reserve(n);
  count.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = y[i];
    std::size_t c = 1;
    while (!level.empty() && level.back() < v) {
      v = (v * c + level.back() * count.back()) / (c + count.back());
      c += count.back();
      level.pop_back();
      count.pop_back();
    }
    level.push_back(v);
    count.push_back(c);
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t b = 0; b < level.size(); ++b)
    out.insert(out.end(), count[b], std::max(level[b], 0.0));
  return Vector(std::move(out));
}

Vector project_monotone_simplex(const Vector& y, double s) {
  // Dykstra alternation between the monotone cone and the hyperplane
  // { sum = s }; both are closed convex, the iteration converges to the
  // projection onto the intersection.
  const std::size_t n = y.dim();
  Vector x = y;
  Vector p = Vector::zeros(n), q = Vector::zeros(n);
  for (int it = 0; it < 200; ++it) {
    Vector z(x.entries());
    for (std::size_t i = 0; i < n; ++i) z[i] += p[i];
    Vector u = project_monotone(z);
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] - u[i];
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] += q[i];
      sum += u[i];
    }
    double shift = (sum - s) / static_cast<double>(n);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double v = u[i] - shift;
      q[i] = u[i] - v;
      delta = std::max(delta, std::abs(v - x[i]));
      x[i] = v;
    }
    if (delta < 1e-14) break;
  }
  // final clean pass keeps the iterate feasible
  Vector out = project_monotone(x);
  double sum = 0.0;
  for (double v : out) sum += v;
  if (sum > 0.0)
    for (std::size_t i = 0; i < n; ++i) out[i] *= s / sum;
  return out;
}

MinimizeResult minimize_convex(const std::function<double(const Vector&)>& g,
                               const std::function<Vector(const Vector&)>& project,
                               const Vector& start, const SolverConfig& config) {
  Vector x = project(start);
  double fx = g(x);
  Vector best = x;
  double fbest = fx;
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  double step = std::max(scale, 1e-6);
  bool converged = false;
  for (int it = 0; it < config.max_iterations; ++it) {
    Vector grad = fd_gradient(g, x);
    double gnorm = std::sqrt(dot(grad, grad));
    if (gnorm < 1e-15) {
      converged = true;
      break;
    }
    Vector trial = x;
    for (std::size_t i = 0; i < x.dim(); ++i)
      trial[i] = x[i] - step * grad[i] / gnorm;
    trial = project(trial);
    double ft = g(trial);
    if (ft < fx) {
      x = trial;
      fx = ft;
      step *= 1.3;
      if (fx < fbest) {
        fbest = fx;
        best = x;
      }
    } else {
      step *= 0.5;
      if (step < config.tolerance * std::max(1.0, scale) * 1e-3) {
        converged = true;
        break;
      }
    }
  }
  return {best, fbest, converged};
}

Vector fd_gradient(const std::function<double(const Vector&)>& f,
                   const Vector& x, double h) {
  Vector g = Vector::zeros(x.dim());
  Vector t = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    double hi = h * std::max(1.0, std::abs(x[i]));
    t[i] = x[i] + hi;
    double fp = f(t);
    t[i] = x[i] - hi;
    double fm = f(t);
    t[i] = x[i];
    g[i] = (fp - fm) / (2.0 * hi);
  }
  return g;
}

}  // namespace seqnorm
