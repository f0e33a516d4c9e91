// n-dimensional two-ball lens measures via the Gauss hypergeometric series.
#pragma once

#include <stdexcept>

#include "ballm/exact.hpp"

namespace ballm {

// Ambient dimension, integer n >= 2.
class Dimension {
 public:
  explicit Dimension(int n) : n_(n) {
    if (n < 2) throw std::domain_error("dimension must be an integer >= 2");
  }
  int value() const { return n_; }

 private:
  int n_;
};

// Real gamma function for x > 0; relative error <= 1e-13 on (0, 100].
double gamma_real(double x);

// Parameters for 2F1(a, b; c; z) with the series restricted to 0 <= z < 1 and
// c not a non-positive integer.
struct HypergeomParams {
  double a, b, c, z;
  HypergeomParams(double a_, double b_, double c_, double z_) : a(a_), b(b_), c(c_), z(z_) {
    if (!(z >= 0.0) || !(z < 1.0))
      throw std::domain_error("hypergeometric argument must satisfy 0 <= z < 1");
    if (c <= 0.0 && c == static_cast<double>(static_cast<long long>(c)))
      throw std::domain_error("hypergeometric c must not be a non-positive integer");
  }
};

// Direct power series with term recurrence; terminates exactly when a or b is a
// non-positive integer, otherwise stops when the geometric tail bound is <= 1e-14.
double gauss_2f1(const HypergeomParams& p);

// Volume of the intersection of two unit n-balls at center distance 2 cos(phi).
double ndim_lens_volume(Dimension n, AngularRadius phi);

// Surface measure of the same body (perimeter when n = 2).
double ndim_lens_area(Dimension n, AngularRadius phi);

}  // namespace ballm
