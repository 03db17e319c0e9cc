// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "lapmult/exact.hpp"
#include "lapmult/qform.hpp"

namespace lapmult::repcount {

using qform::Form;

/// All integer representations of an integer target by a form, with the
/// associated counts. Solutions are distinct and sorted by (y, x).
struct RepSet {
  Int target;
  std::vector<std::pair<Int, Int>> solutions;
  long R = 0;                // |solutions|
  long r_plus = 0;           // orbits under Aut+ (= R / |Aut+| for n > 0)
  long r_full = 0;           // orbits under the full automorphism group
  long primitive_count = 0;  // solutions with gcd(x, y) = 1
};

/// Exactly the integer pairs with f(x, y) = n, n >= 0. The scan runs over
/// y^2 <= 4an/|delta| and solves for x per row; for n = 0 the single
/// solution is (0, 0). Requires a primitive positive-definite form.
RepSet representations(const Form& f, const Int& n);

/// Count-only variants. count_R avoids materializing solutions and is the
/// kernel behind histograms and acceptance sweeps (OpenMP-parallel for
/// large rows, bit-identical to the serial reference).
long count_R(const Form& f, const Int& n);
long count_r_plus(const Form& f, const Int& n);
long count_r_full(const Form& f, const Int& n);

/// Subset with gcd(x, y) = 1 (gcd(x, 0) := |x|), counts recomputed on it.
RepSet primitive_representations(const Form& f, const Int& n);

/// #{(x, y) : x >= 1, y >= 1, m x^2 + n y^2 = N} with the solution list,
/// sorted by (y, x). Axis points are excluded.
struct QuadrantCount {
  long count = 0;
  std::vector<std::pair<Int, Int>> solutions;
};
QuadrantCount first_quadrant_count(const Int& m, const Int& n, const Int& N);

/// Representations of an exact value z by x^2 + b xy + c y^2 with b or c
/// irrational. Enumeration is complete: a rational mu > 0 with
/// f(x, y) >= mu (x^2 + y^2) is derived from the Gram matrix by interval
/// refinement and the disc x^2 + y^2 <= zhat/mu is scanned. A positive
/// `box` additionally clamps |x|, |y| (engineering cap, may truncate).
struct IrrationalRepSet {
  Exact target;
  std::vector<std::pair<Int, Int>> solutions;
  long R = 0;
};
IrrationalRepSet representations_irrational(const Exact& b, const Exact& c,
                                            const Exact& z, long box = 0);

/// x^2 + b xy + c y^2 evaluated exactly at an integer point.
Exact eval_quadratic(const Exact& b, const Exact& c, const Int& x,
                     const Int& y);

/// Rational lower bound on the least eigenvalue of the Gram matrix
/// [[1, b/2], [b/2, c]]; positive whenever b^2 - 4c < 0.
Rat gram_lower_bound(const Exact& b, const Exact& c);

}  // namespace lapmult::repcount
