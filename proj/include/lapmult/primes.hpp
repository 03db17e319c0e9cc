// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "lapmult/error.hpp"

namespace lapmult {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Primality for arbitrary integers. Inputs must fit in 64 bits; the
/// search bounds used elsewhere keep everything inside that range.
/// Throws domain_error for larger inputs.
bool is_prime(const Int& n);

/// Floor of sqrt(n), n >= 0.
Int isqrt(const Int& n);

/// Integer-square-root test with confirmation multiply.
/// If n is a perfect square, stores the nonnegative root in *root.
bool is_perfect_square(const Int& n, Int* root = nullptr);

/// v = square * squarefree with squarefree squarefree, for v >= 1.
/// Trial factorization up to `bound`; residues that could still hide a
/// square factor of a prime above the bound are rejected.
struct SquarefreeSplit {
  Int square;      // s with v = s^2 * squarefree
  Int squarefree;  // the squarefree part
};
SquarefreeSplit squarefree_split(Int v, unsigned long bound = 1'000'000UL);

}  // namespace lapmult
