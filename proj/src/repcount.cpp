// SPDX-License-Identifier: Apache-2.0
#include "lapmult/repcount.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lapmult/parallel.hpp"

namespace lapmult::repcount {

namespace {

void require_primitive_definite(const Form& f, const char* who) {
  if (!qform::is_primitive(f) || !qform::is_positive_definite(f))
    throw domain_error(std::string(who) +
                       ": form must be primitive positive-definite");
}

std::uint64_t isqrt_u64(std::uint64_t v) {
  if (v == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

using Sol = std::pair<Int, Int>;

void sort_solutions(std::vector<Sol>& sols) {
  std::sort(sols.begin(), sols.end(), [](const Sol& u, const Sol& v) {
    if (u.second != v.second) return u.second < v.second;
    return u.first < v.first;
  });
}

// Appends the x solutions of f(x, y) = n for one fixed y.
// disc = delta y^2 + 4 a n must be a perfect square s^2; then
// x = (-b y +- s) / (2a) when the division is exact.
void row_solutions(const Form& f, const Int& n, const Int& y,
                   std::vector<Sol>& out) {
  Int disc = (f.b * f.b - 4 * f.a * f.c) * y * y + 4 * f.a * n;
  Int s;
  if (disc < 0 || !is_perfect_square(disc, &s)) return;
  Int den = 2 * f.a;
  Int num = -f.b * y + s;
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    out.emplace_back(num / den, y);
  if (s != 0) {
    num = -f.b * y - s;
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
      out.emplace_back(num / den, y);
  }
}

// Count-only u64 kernel for one row; preconditions as in count_R fast path.
long row_count_u64(std::int64_t a, std::int64_t b, std::int64_t abs_delta,
                   std::int64_t four_an, std::int64_t y) {
  std::int64_t disc = four_an - abs_delta * y * y;
  if (disc < 0) return 0;
  auto s = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(disc)));
  if (s * s != disc) return 0;
  std::int64_t den = 2 * a;
  long cnt = 0;
  if ((-b * y + s) % den == 0) ++cnt;
  if (s != 0 && (-b * y - s) % den == 0) ++cnt;
  return cnt;
}

Int y_bound(const Form& f, const Int& n) {
  Int abs_delta = 4 * f.a * f.c - f.b * f.b;
  return isqrt(4 * f.a * n / abs_delta);
}

}  // namespace

RepSet representations(const Form& f, const Int& n) {
  require_primitive_definite(f, "representations");
  if (n < 0) throw domain_error("representations: n must be >= 0");
  RepSet out;
  out.target = n;
  if (n == 0) {
    out.solutions.emplace_back(0, 0);
    out.R = out.r_plus = out.r_full = 1;
    out.primitive_count = 0;
    return out;
  }
  Int ymax = y_bound(f, n);
  if (parallel::enabled() && ymax.fits_slong_p() && ymax.get_si() >= 2048) {
    long Y = ymax.get_si();
    int nt = parallel::max_threads();
    std::vector<std::vector<Sol>> parts(nt);
#pragma omp parallel for schedule(static)
    for (long y = -Y; y <= Y; ++y) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      row_solutions(f, n, Int(y), parts[tid]);
    }
    for (auto& p : parts)
      out.solutions.insert(out.solutions.end(), p.begin(), p.end());
  } else {
    for (Int y = -ymax; y <= ymax; ++y) row_solutions(f, n, y, out.solutions);
  }
  sort_solutions(out.solutions);
  out.R = static_cast<long>(out.solutions.size());
  long order = qform::aut_plus_order(f.b * f.b - 4 * f.a * f.c);
  if (out.R % order != 0)
    throw domain_error("representations: orbit arithmetic violated");
  out.r_plus = out.R / order;
  for (const auto& [x, y] : out.solutions)
    if (gcd(x, y) == 1) ++out.primitive_count;
  out.r_full = count_r_full(f, n);
  return out;
}

long count_R(const Form& f, const Int& n) {
  require_primitive_definite(f, "count_R");
  if (n < 0) throw domain_error("count_R: n must be >= 0");
  if (n == 0) return 1;
  Int ymax = y_bound(f, n);
  // u64 fast path: everything stays well inside 63 bits.
  if (f.a < 1048576 && abs(f.b) < 1048576 && f.c < 1048576 &&
      n < Int("1099511627776")) {
    std::int64_t a = f.a.get_si(), b = f.b.get_si();
    std::int64_t abs_delta = Int(4 * f.a * f.c - f.b * f.b).get_si();
    std::int64_t four_an = Int(4 * f.a * n).get_si();
    long Y = ymax.get_si();
    long total = 0;
    if (parallel::enabled() && Y >= 2048) {
#pragma omp parallel for schedule(static) reduction(+ : total)
      for (long y = -Y; y <= Y; ++y)
        total += row_count_u64(a, b, abs_delta, four_an, y);
    } else {
      for (long y = -Y; y <= Y; ++y)
        total += row_count_u64(a, b, abs_delta, four_an, y);
    }
    return total;
  }
  long total = 0;
  std::vector<Sol> row;
  for (Int y = -ymax; y <= ymax; ++y) {
    row.clear();
    row_solutions(f, n, y, row);
    total += static_cast<long>(row.size());
  }
  return total;
}

long count_r_plus(const Form& f, const Int& n) {
  if (n < 0) throw domain_error("count_r_plus: n must be >= 0");
  if (n == 0) return 1;
  long R = count_R(f, n);
  long order = qform::aut_plus_order(f.b * f.b - 4 * f.a * f.c);
  if (R % order != 0)
    throw domain_error("count_r_plus: orbit arithmetic violated");
  return R / order;
}

long count_r_full(const Form& f, const Int& n) {
  require_primitive_definite(f, "count_r_full");
  if (n < 0) throw domain_error("count_r_full: n must be >= 0");
  if (n == 0) return 1;
  // Genuine orbit partition: improper stabilizers need not be trivial.
  std::vector<Sol> sols;
  Int ymax = y_bound(f, n);
  for (Int y = -ymax; y <= ymax; ++y) row_solutions(f, n, y, sols);
  sort_solutions(sols);
  auto group = qform::proper_automorphisms(f);
  if (auto imp = qform::improper_automorphism(f)) {
    size_t plus = group.size();
    for (size_t i = 0; i < plus; ++i) group.push_back(qform::mul(*imp, group[i]));
  }
  auto find_index = [&](const Sol& s) {
    auto it = std::lower_bound(sols.begin(), sols.end(), s,
                               [](const Sol& u, const Sol& v) {
                                 if (u.second != v.second) return u.second < v.second;
                                 return u.first < v.first;
                               });
    if (it == sols.end() || !(*it == s))
      throw domain_error("count_r_full: automorphism image missing");
    return static_cast<size_t>(it - sols.begin());
  };
  std::vector<size_t> root(sols.size());
  for (size_t i = 0; i < root.size(); ++i) root[i] = i;
  auto find = [&](size_t i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  for (size_t i = 0; i < sols.size(); ++i) {
    for (const auto& g : group) {
      Sol img{g.p * sols[i].first + g.q * sols[i].second,
              g.r * sols[i].first + g.s * sols[i].second};
      size_t j = find_index(img);
      size_t ri = find(i), rj = find(j);
      if (ri != rj) root[ri] = rj;
    }
  }
  long orbits = 0;
  for (size_t i = 0; i < sols.size(); ++i)
    if (find(i) == i) ++orbits;
  return orbits;
}

RepSet primitive_representations(const Form& f, const Int& n) {
  RepSet all = representations(f, n);
  RepSet out;
  out.target = all.target;
  for (auto& s : all.solutions)
    if (gcd(s.first, s.second) == 1) out.solutions.push_back(s);
  out.R = static_cast<long>(out.solutions.size());
  out.primitive_count = out.R;
  if (n > 0) {
    long order = qform::aut_plus_order(f.b * f.b - 4 * f.a * f.c);
    // Unimodular maps preserve gcd, so orbits split cleanly.
    if (out.R % order != 0)
      throw domain_error("primitive_representations: orbit arithmetic violated");
    out.r_plus = out.R / order;
  }
  out.r_full = 0;  // orbit count of the primitive subset is not surfaced
  return out;
}

QuadrantCount first_quadrant_count(const Int& m, const Int& n, const Int& N) {
  if (m < 1 || n < 1 || N < 1)
    throw domain_error("first_quadrant_count requires m, n, N >= 1");
  QuadrantCount out;
  for (Int y = 1; n * y * y + m <= N; ++y) {
    Int rem = N - n * y * y;
    if (!mpz_divisible_p(rem.get_mpz_t(), m.get_mpz_t())) continue;
    Int x;
    if (!is_perfect_square(rem / m, &x) || x < 1) continue;
    out.solutions.emplace_back(x, y);
  }
  out.count = static_cast<long>(out.solutions.size());
  return out;
}

Exact eval_quadratic(const Exact& b, const Exact& c, const Int& x,
                     const Int& y) {
  Exact res(Rat(x * x));
  if (x != 0 && y != 0) res = res + b * Exact(Rat(x * y));
  if (y != 0) res = res + c * Exact(Rat(y * y));
  return res;
}

Rat gram_lower_bound(const Exact& b, const Exact& c) {
  // det = c - b^2/4 > 0, trace = 1 + c; least eigenvalue >= det/trace.
  Exact det = c - b * b * Exact(Rat(1, 4));
  if (det.sign() <= 0)
    throw domain_error("form x^2 + bxy + cy^2 is not positive definite");
  Exact tr = Exact(1) + c;
  for (unsigned k = 16;; k *= 2) {
    auto [dlo, dhi] = det.enclosure(k);
    auto [tlo, thi] = tr.enclosure(k);
    if (dlo > 0 && tlo > 0) return dlo / thi;
    if (k > (1u << 20))
      throw domain_error("internal: eigenvalue bound failed to converge");
  }
}

namespace {

// Largest integer t >= 0 with t^2 <= r, for rational r >= 0.
Int rational_isqrt_floor(const Rat& r) {
  Int t = isqrt(r.get_num() / r.get_den());
  while (Rat((t + 1) * (t + 1)) <= r) ++t;
  return t;
}

}  // namespace

IrrationalRepSet representations_irrational(const Exact& b, const Exact& c,
                                            const Exact& z, long box) {
  IrrationalRepSet out;
  out.target = z;
  int zs = z.sign();
  if (zs < 0) return out;
  if (zs == 0) {
    out.solutions.emplace_back(0, 0);
    out.R = 1;
    return out;
  }
  Rat mu = gram_lower_bound(b, c);
  Rat zhat = z.enclosure(64).second;
  Rat rsq = zhat / mu;
  Int ybound = rational_isqrt_floor(rsq);
  if (box > 0 && ybound > box) ybound = box;
  if (!ybound.fits_slong_p())
    throw domain_error("representations_irrational: scan bound too large");
  long Y = ybound.get_si();
  auto scan_row = [&](long y, std::vector<Sol>& dst) {
    Rat rem = rsq - Rat(Int(y) * Int(y));
    if (rem < 0) return;
    Int xb = rational_isqrt_floor(rem);
    if (box > 0 && xb > box) xb = box;
    for (Int x = -xb; x <= xb; ++x) {
      if (x == 0 && y == 0) continue;
      if (eval_quadratic(b, c, x, Int(y)) == z) dst.emplace_back(x, Int(y));
    }
  };
  if (parallel::enabled() && Y >= 64) {
    int nt = parallel::max_threads();
    std::vector<std::vector<Sol>> parts(nt);
#pragma omp parallel for schedule(dynamic, 8)
    for (long y = -Y; y <= Y; ++y) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      scan_row(y, parts[tid]);
    }
    for (auto& p : parts)
      out.solutions.insert(out.solutions.end(), p.begin(), p.end());
  } else {
    for (long y = -Y; y <= Y; ++y) scan_row(y, out.solutions);
  }
  sort_solutions(out.solutions);
  out.R = static_cast<long>(out.solutions.size());
  return out;
}

}  // namespace lapmult::repcount
