#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqnorm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteError : Error {
  using Error::Error;
};

struct InvalidDescriptorError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

/// A finite real sequence. All norm evaluations take one of these; entries
/// must be finite, the dimension is the entry count.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> entries) : entries_(std::move(entries)) {
    check_finite();
  }
  Vector(std::initializer_list<double> entries) : entries_(entries) {
    check_finite();
  }
  static Vector ones(std::size_t n) { return Vector(std::vector<double>(n, 1.0)); }
  static Vector zeros(std::size_t n) { return Vector(std::vector<double>(n, 0.0)); }
  static Vector unit(std::size_t n, std::size_t k) {
    std::vector<double> e(n, 0.0);
    e.at(k) = 1.0;
    return Vector(std::move(e));
  }

  std::size_t dim() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  double& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](double v) { return v == 0.0; });
  }

 private:
  void check_finite() const {
    for (double v : entries_)
      if (!std::isfinite(v)) throw NonFiniteError("vector entry is not finite");
  }
  std::vector<double> entries_;
};

/// Decreasing rearrangement x*: |x| sorted non-increasingly.
/// Ties keep the original index order (stable), so witnesses are deterministic.
inline Vector rearrange(const Vector& x) {
  std::vector<double> a(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) a[i] = std::abs(x[i]);
  std::stable_sort(a.begin(), a.end(), std::greater<double>());
  return Vector(std::move(a));
}

/// Running Cesaro means x**_n = (1/n) sum_{k<=n} x*_k of the decreasing
/// rearrangement. Output is non-increasing and dominates x* pointwise.
inline Vector cesaro_mean(const Vector& x) {
  Vector xs = rearrange(x);
  std::vector<double> out(xs.dim());
  double run = 0.0;
  for (std::size_t i = 0; i < xs.dim(); ++i) {
    run += xs[i];
    out[i] = run / static_cast<double>(i + 1);
  }
  return Vector(std::move(out));
}

inline double dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("dot: dimension mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace seqnorm
