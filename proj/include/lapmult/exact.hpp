// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lapmult/error.hpp"
#include "lapmult/primes.hpp"

namespace lapmult {

/// An exact real number of the form  c0 + c1*sqrt(d1) + c2*sqrt(d2) + c3*sqrt(d3),
/// with rational coefficients and pairwise distinct squarefree radicands >= 2.
/// At most two of the radicals are independent: a support of three radicands
/// {a, b, c} is only admitted when sqrt(a)*sqrt(b) lies on the sqrt(c) line,
/// i.e. the value lives in a single biquadratic field Q(sqrt(a), sqrt(b)).
///
/// Representation is canonical (terms sorted by radicand, zero coefficients
/// dropped), so equality of values is equality of term lists. Values are
/// immutable and cheap to copy; every operation is a pure function.
class Exact {
 public:
  enum class Kind { Rational, Quadratic, Composite };

  struct Term {
    std::int64_t d;  // squarefree radicand; 1 for the rational coordinate
    Rat coeff;       // nonzero
  };

  Exact() = default;  // zero
  Exact(long v);      // NOLINT: implicit on purpose, mirrors integer literals
  explicit Exact(const Int& v);
  explicit Exact(const Rat& v);

  /// p + q*sqrt(d). d is canonicalized (square part folded into q);
  /// d < 0 is rejected, d with an undetectable large square factor too.
  static Exact quadratic(const Rat& p, const Rat& q, const Int& d);

  /// sqrt of a nonnegative rational, as an exact value.
  static Exact sqrt_of(const Rat& x);

  Kind kind() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rat> as_rational() const;

  /// Accessors for values with at most one radical (throws otherwise).
  Rat rational_part() const;       // p
  Rat radical_coeff() const;       // q (0 when rational)
  std::int64_t radicand() const;   // d (1 when rational)

  const std::vector<Term>& terms() const { return terms_; }

  Exact operator-() const;
  friend Exact operator+(const Exact& x, const Exact& y);
  friend Exact operator-(const Exact& x, const Exact& y);
  friend Exact operator*(const Exact& x, const Exact& y);
  Exact inverse() const;  // throws on zero

  bool operator==(const Exact& o) const;

  /// Exact sign: -1, 0, +1. Zero is decided from the coordinates; nonzero
  /// signs of composite values use interval refinement with rational
  /// endpoints, doubling the working precision until 0 is excluded.
  int sign() const;

  /// Rational enclosure [lo, hi] with radicals evaluated to k fractional bits.
  std::pair<Rat, Rat> enclosure(unsigned k) const;

  /// Canonical text form, e.g. "3/2", "0+1*sqrt(2)", "-1/2+3/4*sqrt(5)".
  std::string str() const;

  /// Parses the text grammar: INT | INT/INT | sums of terms RAT[*sqrt(INT)].
  /// Whitespace is ignored. Throws domain_error on malformed input.
  static Exact parse(std::string_view text);

  /// Structural total order (radicand-lexicographic), for use as a map key.
  static int compare_structural(const Exact& x, const Exact& y);

 private:
  explicit Exact(std::vector<Term> terms);
  void normalize();

  std::vector<Term> terms_;  // sorted by d; no zero coefficients
};

struct ExactLess {
  bool operator()(const Exact& x, const Exact& y) const {
    return Exact::compare_structural(x, y) < 0;
  }
};

/// Outcome of testing whether {1, b, c} is linearly dependent over Q,
/// for irrational quadratic b and c. When dependent, c = alpha*b + beta.
struct DependenceReport {
  bool dependent = false;
  Rat alpha;
  Rat beta;
};

/// Decides Q-linear dependence of {1, b, c} for two irrational quadratic
/// values. Values over the same radicand are always dependent; distinct
/// radicands give independence since Q(sqrt(d1)) and Q(sqrt(d2)) intersect
/// in Q. Throws domain_error if either argument is rational or composite.
DependenceReport linear_dependence(const Exact& b, const Exact& c);

/// some(s) with s >= 0 and s^2 = x iff x is a square in Q, none otherwise.
std::optional<Rat> rational_square_root(const Rat& x);

/// Rational in canonical form (positive denominator, reduced).
Rat make_rational(const Int& num, const Int& den);

}  // namespace lapmult
