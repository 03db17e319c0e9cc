// SPDX-License-Identifier: Apache-2.0
#include "lapmult/witness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lapmult/parallel.hpp"
#include "lapmult/primes.hpp"

namespace lapmult::witness {

namespace {

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool coprime_to_all(const Int& v, const std::vector<Int>& avoid) {
  for (const auto& a : avoid)
    if (gcd(v, a) != 1) return false;
  return true;
}

// First-quadrant representation when one exists (smallest by (x, y)),
// otherwise the first solution in (y, x) order.
std::pair<Int, Int> pick_representation(
    const std::vector<std::pair<Int, Int>>& sols) {
  const std::pair<Int, Int>* best = nullptr;
  for (const auto& s : sols) {
    if (s.first < 0 || s.second < 0) continue;
    if (!best || s.first < best->first ||
        (s.first == best->first && s.second < best->second))
      best = &s;
  }
  return best ? *best : sols.front();
}

}  // namespace

PrimeWitness find_represented_prime(const Form& f, const std::vector<Int>& avoid,
                                    const Int& bound) {
  if (!qform::is_primitive(f) || !qform::is_positive_definite(f))
    throw domain_error(
        "find_represented_prime: form must be primitive positive-definite");
  for (Int v = 2; v <= bound; ++v) {
    if (!is_prime(v)) continue;
    if (!coprime_to_all(v, avoid)) continue;
    repcount::RepSet reps = repcount::representations(f, v);
    if (reps.R == 0) continue;
    return {v, pick_representation(reps.solutions), f};
  }
  throw search_exhausted("no represented prime found below " + bound.get_str());
}

MultiplicityWitness theorem_q_witness(const Int& m, const Int& n, long k,
                                      const Int& bound) {
  if (m < 1 || n < 1 || gcd(m, n) != 1)
    throw domain_error("theorem_q_witness requires coprime m, n >= 1");
  if (m * n <= 3)
    throw domain_error("theorem_q_witness requires m*n > 3");
  if (k < 1) throw domain_error("theorem_q_witness requires k >= 1");
  Form f{m, 0, n};
  long steps = 0;
  for (Int p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    ++steps;
    if (gcd(p, 2 * m * n) != 1) continue;
    repcount::RepSet reps = repcount::representations(f, p);
    if (reps.R != 4) continue;  // unique up to signs, with x y != 0
    bool off_axis = false;
    for (const auto& s : reps.solutions)
      if (s.first != 0 && s.second != 0) off_axis = true;
    if (!off_axis) continue;
    Int target = pow_int(p, static_cast<unsigned long>(2 * k - 1));
    repcount::QuadrantCount qc = repcount::first_quadrant_count(m, n, target);
    if (qc.count != k) continue;  // edge prime, advance
    MultiplicityWitness w;
    w.kind = WitnessKind::RectCount;
    w.target_count = k;
    w.value = target;
    w.solutions = qc.solutions;
    w.prime_p = p;
    w.prime_q = 0;
    w.search_steps = steps;
    return w;
  }
  throw search_exhausted("theorem_q_witness: no prime below " +
                         bound.get_str() + " verified");
}

namespace {

// Primes q represented by the principal form with gcd(q, conductor*delta)=1.
std::vector<Int> principal_prime_candidates(const Form& principal,
                                            const Int& conductor,
                                            const Int& delta, const Int& bound,
                                            size_t want) {
  std::vector<Int> out;
  for (Int v = 2; v <= bound && out.size() < want; ++v) {
    if (!is_prime(v)) continue;
    if (gcd(v, conductor * abs(delta)) != 1) continue;
    if (repcount::count_R(principal, v) == 0) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace

MultiplicityWitness surjectivity_witness(const Form& f, long k,
                                         const Int& bound) {
  if (!qform::is_primitive(f) || !qform::is_positive_definite(f))
    throw domain_error(
        "surjectivity_witness: form must be primitive positive-definite");
  if (k < 1) throw domain_error("surjectivity_witness requires k >= 1");
  qform::Discriminant d = qform::discriminant(f);
  const Int conductor = d.fundamental_or_throw().conductor;
  Form principal = qform::principal_form(d.delta);
  bool ambiguous = qform::is_ambiguous(f);
  long steps = 0;

  auto emit = [&](const Int& value, const Int& n0, const Int& q) {
    repcount::RepSet reps = repcount::representations(f, value);
    MultiplicityWitness w;
    w.kind = WitnessKind::RPlusSurjectivity;
    w.target_count = k;
    w.value = value;
    w.solutions = reps.solutions;
    w.prime_p = n0;
    w.prime_q = q;
    w.search_steps = steps;
    return w;
  };

  std::vector<Int> qs;
  if (k == 1) {
    qs = {Int(1)};  // q^0 = 1, no auxiliary prime needed
  } else {
    qs = principal_prime_candidates(principal, conductor, d.delta, bound, 6);
  }
  for (const Int& q : qs) {
    // Base candidates: represented primes (non-ambiguous) or any small
    // represented values (ambiguous), coprime to q and the conductor.
    size_t tried = 0;
    for (Int v = 1; v <= bound && tried < 12; ++v) {
      if (gcd(v, q * conductor) != 1) continue;
      if (!ambiguous && !(v >= 2 && is_prime(v))) continue;
      if (repcount::count_R(f, v) == 0) continue;
      ++tried;
      ++steps;
      Int candidate = v * pow_int(q, static_cast<unsigned long>(k - 1));
      if (repcount::count_r_plus(f, candidate) == k) return emit(candidate, v, q);
    }
  }
  // Last resort: direct scan with recount.
  for (Int v = 1; v <= bound; ++v) {
    ++steps;
    if (repcount::count_r_plus(f, v) == k) return emit(v, 0, 0);
  }
  throw search_exhausted("surjectivity_witness: no n below " + bound.get_str() +
                         " has proper count " + std::to_string(k));
}

std::map<long, long> multiplicity_histogram(const Form& f, const Int& n_max) {
  if (!qform::is_primitive(f) || !qform::is_positive_definite(f))
    throw domain_error(
        "multiplicity_histogram: form must be primitive positive-definite");
  std::map<long, long> out;
  if (n_max < 1) return out;
  if (!n_max.fits_slong_p())
    throw domain_error("multiplicity_histogram: n_max too large");
  long top = n_max.get_si();
  if (parallel::enabled() && top >= 256) {
    int nt = parallel::max_threads();
    std::vector<std::map<long, long>> parts(nt);
#pragma omp parallel for schedule(dynamic, 64)
    for (long v = 1; v <= top; ++v) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      parts[tid][repcount::count_R(f, Int(v))] += 1;
    }
    for (const auto& p : parts)
      for (const auto& [count, freq] : p) out[count] += freq;
  } else {
    for (long v = 1; v <= top; ++v) out[repcount::count_R(f, Int(v))] += 1;
  }
  return out;
}

}  // namespace lapmult::witness
