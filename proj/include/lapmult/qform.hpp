// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lapmult/exact.hpp"
#include "lapmult/primes.hpp"

namespace lapmult::qform {

/// Integer binary quadratic form a x^2 + b xy + c y^2.
struct Form {
  Int a, b, c;
  bool operator==(const Form&) const = default;
};

Int eval(const Form& f, const Int& x, const Int& y);

/// Change of variables with determinant +-1: (x, y) -> (px + qy, rx + sy).
struct UnimodularMap {
  Int p{1}, q{0}, r{0}, s{1};
  Int det() const { return p * s - q * r; }
  bool operator==(const UnimodularMap&) const = default;
};

UnimodularMap mul(const UnimodularMap& m, const UnimodularMap& n);
UnimodularMap inverse(const UnimodularMap& m);

/// F composed with T: the form G with G(x, y) = F(px + qy, rx + sy).
Form apply(const Form& f, const UnimodularMap& t);

struct Fundamental {
  Int delta0;     // fundamental discriminant
  Int conductor;  // f > 0 with delta = delta0 * f^2
};

struct Discriminant {
  Int delta;
  std::optional<Fundamental> fundamental;  // absent for square delta >= 0
  /// Accessor for contexts that require a definite-form discriminant.
  const Fundamental& fundamental_or_throw() const;
};

/// delta = b^2 - 4ac with its fundamental decomposition when one exists.
Discriminant discriminant(const Form& f);

/// The fundamental-discriminant predicate: d != 1, no odd prime square
/// divides d, and d = 1 (mod 4) or d = 8, 12 (mod 16).
bool is_fundamental_discriminant(const Int& d);

bool is_primitive(const Form& f);
bool is_positive_definite(const Form& f);

struct Reduction {
  Form reduced;
  UnimodularMap map;  // det +1, apply(original, map) == reduced
};

/// Unique reduced representative: |b| <= a <= c, with b >= 0 on the
/// boundaries |b| = a or a = c. Requires primitive positive-definite input.
Reduction reduce(const Form& f);

bool is_reduced(const Form& f);

/// A det +1 map T with apply(f, T) == g, when the two classes coincide.
std::optional<UnimodularMap> is_equivalent(const Form& f, const Form& g);

/// Gaussian composition (Dirichlet's method), returned reduced.
/// Requires primitive positive-definite forms of equal discriminant.
Form compose(const Form& f, const Form& g);

/// The full group Aut+(f): order 6, 4, 2 as delta = -3, -4, < -4. Elements
/// of non-reduced forms are conjugates of the reduced form's; every
/// returned map is verified to fix f.
std::vector<UnimodularMap> proper_automorphisms(const Form& f);

long aut_plus_order(const Int& delta);

/// A det -1 map fixing f, present iff f is ambiguous.
std::optional<UnimodularMap> improper_automorphism(const Form& f);

/// True iff f is properly equivalent to (a, -b, c).
bool is_ambiguous(const Form& f);

/// All primitive reduced forms of discriminant delta (delta < 0 and
/// delta = 0 or 1 mod 4), sorted lexicographically by (a, b, c).
std::vector<Form> class_group(const Int& delta);

/// (1, 0, -delta/4) or (1, 1, (1-delta)/4) by delta mod 4.
Form principal_form(const Int& delta);

/// Text forms: "a,b,c".
Form parse_form(const std::string& text);
std::string form_str(const Form& f);

}  // namespace lapmult::qform
