// Adaptive one-dimensional integration using a nested 7-point Gauss / 15-point Kronrod rule.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ballm {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated Kronrod error estimate
  bool converged = false;
};

namespace detail {

// Kronrod abscissae on [0, 1] and weights; Gauss weights reuse the odd-index nodes.
struct G7K15 {
  static constexpr double xk[8] = {
      0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
      0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
  static constexpr double wk[8] = {
      0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
      0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
  static constexpr double wg[4] = {
      0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};
};

template <class F>
inline void g7k15(const F& f, double a, double b, double& kronrod, double& err) {
  const double h = 0.5 * (b - a);
  const double m = 0.5 * (a + b);
  const double fc = f(m);
  double rk = G7K15::wk[7] * fc;
  double rg = G7K15::wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * G7K15::xk[i];
    const double fs = f(m - dx) + f(m + dx);
    rk += G7K15::wk[i] * fs;
    if (i % 2 == 1) rg += G7K15::wg[i / 2] * fs;
  }
  kronrod = rk * h;
  err = std::abs((rk - rg) * h);
}

}  // namespace detail

// Integrates f over [a, b] to the requested absolute tolerance by bisecting the worst
// interval first. max_intervals bounds the subdivision count.
template <class F>
QuadResult integrate(const F& f, double a, double b, double abs_tol,
                     int max_intervals = 4000) {
  struct Seg {
    double a, b, value, error;
  };
  if (a == b) return {0.0, 0.0, true};

  Seg first{a, b, 0.0, 0.0};
  detail::g7k15(f, a, b, first.value, first.error);
  std::vector<Seg> segs{first};

  auto total_error = [&] {
    double e = 0.0;
    for (const Seg& s : segs) e += s.error;
    return e;
  };

  while (static_cast<int>(segs.size()) < max_intervals) {
    if (total_error() <= abs_tol) break;
    size_t worst = 0;
    for (size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    Seg s = segs[worst];
    const double m = 0.5 * (s.a + s.b);
    if (m == s.a || m == s.b) break;  // interval exhausted at double precision
    Seg l{s.a, m, 0.0, 0.0}, r{m, s.b, 0.0, 0.0};
    detail::g7k15(f, l.a, l.b, l.value, l.error);
    detail::g7k15(f, r.a, r.b, r.value, r.error);
    segs[worst] = l;
    segs.push_back(r);
  }

  QuadResult res;
  // Sum smallest-magnitude first to limit rounding in long accumulations.
  std::sort(segs.begin(), segs.end(),
            [](const Seg& x, const Seg& y) { return std::abs(x.value) < std::abs(y.value); });
  for (const Seg& s : segs) {
    res.value += s.value;
    res.error += s.error;
  }
  res.converged = res.error <= abs_tol;
  return res;
}

}  // namespace ballm
