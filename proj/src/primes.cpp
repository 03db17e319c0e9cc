// SPDX-License-Identifier: Apache-2.0
#include "lapmult/primes.hpp"

namespace lapmult {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// One strong-pseudoprime round for base a; n odd, n-1 = d * 2^s.
bool sprp_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases decide primality for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (!sprp_round(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (!n.fits_ulong_p()) {
    throw domain_error(
        "primality test restricted to 64-bit inputs; keep search bounds "
        "inside that range");
  }
  return is_prime_u64(n.get_ui());
}

Int isqrt(const Int& n) {
  if (n < 0) throw domain_error("isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

SquarefreeSplit squarefree_split(Int v, unsigned long bound) {
  if (v < 1) throw domain_error("squarefree_split requires v >= 1");
  SquarefreeSplit out{1, 1};
  auto peel = [&](unsigned long p) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) out.square *= p;
      if (e % 2) out.squarefree *= p;
    }
  };
  bool residue_prime = false;
  peel(2);
  peel(3);
  for (unsigned long p = 5; p <= bound && v > 1; p += 6) {
    peel(p);
    if (v > 1 && p + 2 <= bound) peel(p + 2);
    if (v > 1 && Int(p) * p > v) {
      residue_prime = true;  // no factor <= sqrt(v) remains
      break;
    }
  }
  if (v > 1) {
    Int r;
    if (residue_prime || v <= Int(bound) * bound ||
        (v.fits_ulong_p() && is_prime_u64(v.get_ui()))) {
      // A residue with no factor <= bound and value <= bound^2 is prime;
      // a certified prime residue is squarefree either way.
      out.squarefree *= v;
    } else if (is_perfect_square(v, &r)) {
      // r's prime factors all exceed the bound, and r < bound^2, so r
      // cannot itself contain a repeated prime: fold it into the square.
      out.square *= r;
    } else {
      throw domain_error("cannot certify squarefree part: residue " +
                         v.get_str() + " exceeds the factorization bound");
    }
  }
  return out;
}

}  // namespace lapmult
