// SPDX-License-Identifier: Apache-2.0
// Brute-force reference implementations, independent of the production
// enumeration paths. Everything here favors obviousness over speed.
#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "lapmult/exact.hpp"
#include "lapmult/qform.hpp"

namespace oracle {

using lapmult::Exact;
using lapmult::Int;
using lapmult::Rat;
using lapmult::qform::Form;

using Sol = std::pair<Int, Int>;

inline void sort_sols(std::vector<Sol>& v) {
  std::sort(v.begin(), v.end(), [](const Sol& a, const Sol& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
}

// Every solution of f(x,y) = n lies in the ellipse bounding box
// |x| <= sqrt(4cn/|delta|), |y| <= sqrt(4an/|delta|).
inline std::vector<Sol> representations(const Form& f, const Int& n) {
  std::vector<Sol> out;
  if (n < 0) return out;
  Int abs_delta = 4 * f.a * f.c - f.b * f.b;
  Int xb = lapmult::isqrt(4 * f.c * n / abs_delta) + 1;
  Int yb = lapmult::isqrt(4 * f.a * n / abs_delta) + 1;
  for (Int x = -xb; x <= xb; ++x)
    for (Int y = -yb; y <= yb; ++y)
      if (lapmult::qform::eval(f, x, y) == n) out.emplace_back(x, y);
  sort_sols(out);
  return out;
}

inline long count_R(const Form& f, const Int& n) {
  return static_cast<long>(representations(f, n).size());
}

// First-quadrant count by plain double loop (small N only).
inline long quadrant_double_loop(const Int& m, const Int& n, const Int& N) {
  long count = 0;
  for (Int x = 1; m * x * x <= N; ++x)
    for (Int y = 1; m * x * x + n * y * y <= N; ++y)
      if (m * x * x + n * y * y == N) ++count;
  return count;
}

// First-quadrant count scanning the transposed axis (production scans y).
inline long quadrant_x_scan(const Int& m, const Int& n, const Int& N) {
  long count = 0;
  for (Int x = 1; m * x * x + n <= N; ++x) {
    Int rem = N - m * x * x;
    if (!mpz_divisible_p(rem.get_mpz_t(), n.get_mpz_t())) continue;
    Int y;
    if (lapmult::is_perfect_square(rem / n, &y) && y >= 1) ++count;
  }
  return count;
}

// Solutions of x^2 + b xy + c y^2 = z via the completed-square bounding box:
// f(x,y) = (x + (b/2) y)^2 + (c - b^2/4) y^2, so y^2 <= z / (c - b^2/4) and
// |x| <= |b/2| |y| + sqrt(z).
inline std::vector<Sol> irrational_representations(const Exact& b,
                                                   const Exact& c,
                                                   const Exact& z) {
  std::vector<Sol> out;
  if (z.sign() < 0) return out;
  if (z.sign() == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  Exact s = c - b * b * Exact(Rat(1, 4));
  Rat slo;
  for (unsigned k = 16;; k *= 2) {
    slo = s.enclosure(k).first;
    if (slo > 0) break;
  }
  Rat zhi = z.enclosure(64).second;
  Rat yb_sq = zhi / slo;
  Int yb = lapmult::isqrt(yb_sq.get_num() / yb_sq.get_den()) + 1;
  auto [bh_lo, bh_hi] = (b * Exact(Rat(1, 2))).enclosure(64);
  Rat bhalf_abs = std::max(Rat(abs(bh_lo)), Rat(abs(bh_hi)));
  Int zroot = lapmult::isqrt(zhi.get_num() / zhi.get_den()) + 1;
  for (Int y = -yb; y <= yb; ++y) {
    Rat xr = bhalf_abs * Rat(abs(y)) + Rat(zroot);
    Int xb = xr.get_num() / xr.get_den() + 2;
    for (Int x = -xb; x <= xb; ++x) {
      Exact val = Exact(Rat(x * x)) + b * Exact(Rat(x * y)) +
                  c * Exact(Rat(y * y));
      if (val == z) out.emplace_back(x, y);
    }
  }
  sort_sols(out);
  return out;
}

inline Form random_primitive_definite(std::mt19937_64& rng, long coeff_max) {
  std::uniform_int_distribution<long> da(1, coeff_max);
  std::uniform_int_distribution<long> db(-coeff_max, coeff_max);
  for (;;) {
    Form f{Int(da(rng)), Int(db(rng)), Int(da(rng))};
    if (!lapmult::qform::is_positive_definite(f)) continue;
    if (!lapmult::qform::is_primitive(f)) continue;
    return f;
  }
}

}  // namespace oracle
