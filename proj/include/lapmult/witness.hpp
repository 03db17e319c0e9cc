// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "lapmult/repcount.hpp"

namespace lapmult::witness {

using qform::Form;

constexpr long kDefaultPrimeBound = 1'000'000;

/// A prime represented by a form, with a verified representation.
struct PrimeWitness {
  Int p;
  std::pair<Int, Int> rep;  // f(rep) = p, entries coprime
  Form form;
};

enum class WitnessKind { RectCount, RPlusSurjectivity };

/// An integer whose representation count realizes a prescribed value.
/// Every witness is recounted before it is returned; none is emitted on
/// trust.
struct MultiplicityWitness {
  WitnessKind kind;
  long target_count = 0;
  Int value;  // the integer N (or n) realizing the count
  std::vector<std::pair<Int, Int>> solutions;
  Int prime_p;             // base prime for constructive searches (0 if none)
  Int prime_q;             // auxiliary prime (0 if none)
  long search_steps = 0;   // candidates examined before success
};

/// Smallest prime p <= bound represented by f and coprime to every member
/// of `avoid`, with a representation (the first first-quadrant solution
/// when one exists). Throws search_exhausted past the cap.
PrimeWitness find_represented_prime(const Form& f, const std::vector<Int>& avoid,
                                    const Int& bound = kDefaultPrimeBound);

/// A prime p with p^(2k-1) = m x^2 + n y^2 having exactly k solutions with
/// x, y >= 1. Scans primes smallest-first; candidates must satisfy
/// gcd(p, 2mn) = 1, have a representation with x y != 0 unique up to signs
/// (R = 4), and pass the positive-count verification; failures advance the
/// scan. Requires gcd(m, n) = 1 and m n > 3.
MultiplicityWitness theorem_q_witness(const Int& m, const Int& n, long k,
                                      const Int& bound = kDefaultPrimeBound);

/// An n with r+_f(n) = k, verified by recount. The search mirrors the
/// constructive argument: a prime q represented by the principal form with
/// gcd(q, conductor * delta) = 1, a base n0 (a represented prime coprime to
/// q and the conductor for non-ambiguous forms, a small represented value
/// for ambiguous ones), candidates n0 * q^(k-1); a linear scan of n is the
/// last resort.
MultiplicityWitness surjectivity_witness(const Form& f, long k,
                                         const Int& bound = kDefaultPrimeBound);

/// Tally of count_R(f, n) over 1 <= n <= n_max: {count -> #n}. Empty for
/// n_max <= 0.
std::map<long, long> multiplicity_histogram(const Form& f, const Int& n_max);

}  // namespace lapmult::witness
