// SPDX-License-Identifier: Apache-2.0
#include "lapmult/spectra.hpp"

#include <algorithm>
#include <map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lapmult/parallel.hpp"

namespace lapmult::spectra {

RectangleSpec make_rectangle(const Exact& ratio_sq) {
  if (ratio_sq.sign() <= 0)
    throw domain_error("rectangle: (a/b)^2 must be positive");
  RectangleSpec spec;
  spec.ratio_sq = ratio_sq;
  if (auto r = ratio_sq.as_rational()) {
    spec.reduced = std::make_pair(Int(r->get_den()), Int(r->get_num()));
  }
  return spec;
}

TorusSpec make_torus(const Exact& rcos, const Exact& rsq) {
  if (rcos.sign() < 0)
    throw domain_error("torus: r cos(theta) must be >= 0 (theta in (0, pi/2])");
  if (rsq.sign() <= 0) throw domain_error("torus: r^2 must be positive");
  if ((rsq - rcos * rcos).sign() <= 0)
    throw domain_error("torus: r^2 - (r cos theta)^2 must be positive");
  return {rcos, rsq};
}

TorusFormData torus_form(const TorusSpec& spec) {
  auto rc = spec.rcos.as_rational();
  auto rs = spec.rsq.as_rational();
  if (!rc || !rs)
    throw domain_error("torus_form requires rational r cos(theta) and r^2");
  Rat two_rcos = Rat(2) * *rc;
  TorusFormData out;
  out.alpha = two_rcos.get_num();
  out.beta = two_rcos.get_den();
  out.gamma = rs->get_num();
  out.delta = rs->get_den();
  out.tau = gcd(out.beta, out.delta);
  out.form = Form{out.beta * out.delta / out.tau,
                  -out.alpha * out.delta / out.tau,
                  out.gamma * out.beta / out.tau};
  if (!qform::is_primitive(out.form) || !qform::is_positive_definite(out.form))
    throw domain_error("torus_form: constructed form fails its invariants");
  out.disc = qform::discriminant(out.form);
  // tau^2 * Delta = alpha^2 delta^2 - 4 beta^2 gamma delta, checked exactly.
  if (out.tau * out.tau * out.disc.delta !=
      out.alpha * out.alpha * out.delta * out.delta -
          4 * out.beta * out.beta * out.gamma * out.delta)
    throw domain_error("torus_form: discriminant identity failed");
  return out;
}

std::string tag_str(MultTag tag) {
  switch (tag) {
    case MultTag::AllNaturals: return "N";
    case MultTag::Singleton1: return "{1}";
    case MultTag::TwoN: return "2N";
    case MultTag::FourN: return "4N";
    case MultTag::SixN: return "6N";
    case MultTag::SetTwo: return "{2}";
    case MultTag::SetTwoFour: return "{2,4}";
  }
  throw domain_error("unknown multiplicity tag");
}

MultiplicitySet rect_classify(const RectangleSpec& spec) {
  if (spec.reduced)
    return {MultTag::AllNaturals, "ratio_sq rational", std::nullopt};
  return {MultTag::Singleton1, "ratio_sq irrational", std::nullopt};
}

long rect_multiplicity(const RectangleSpec& spec, const Int& m0, const Int& n0) {
  if (!spec.reduced)
    throw domain_error(
        "rect_multiplicity: irrational ratio, every multiplicity is 1");
  if (m0 < 1 || n0 < 1)
    throw domain_error("rect_multiplicity: indices must be >= 1");
  const auto& [p_r, q_r] = *spec.reduced;
  Int level = p_r * m0 * m0 + q_r * n0 * n0;
  return repcount::first_quadrant_count(p_r, q_r, level).count;
}

RectWitness rect_witness(const RectangleSpec& spec, long k, const Int& bound) {
  if (!spec.reduced)
    throw domain_error("rect_witness: irrational ratio, every multiplicity is 1");
  if (k < 1) throw domain_error("rect_witness requires k >= 1");
  const auto& [p_r, q_r] = *spec.reduced;
  if (p_r * q_r > 3) {
    return {witness::theorem_q_witness(p_r, q_r, k, bound), q_r};
  }
  // Small products (square and near-square ratios): direct scan.
  long steps = 0;
  for (Int level = 1; level <= bound; ++level) {
    ++steps;
    repcount::QuadrantCount qc = repcount::first_quadrant_count(p_r, q_r, level);
    if (qc.count != k) continue;
    witness::MultiplicityWitness w;
    w.kind = witness::WitnessKind::RectCount;
    w.target_count = k;
    w.value = level;
    w.solutions = qc.solutions;
    w.prime_p = 0;
    w.prime_q = 0;
    w.search_steps = steps;
    return {w, q_r};
  }
  throw search_exhausted("rect_witness: no level below " + bound.get_str() +
                         " has multiplicity " + std::to_string(k));
}

MultiplicitySet torus_classify(const TorusSpec& spec) {
  bool rc_rational = spec.rcos.is_rational();
  bool rs_rational = spec.rsq.is_rational();
  if (rc_rational && rs_rational) {
    TorusFormData tf = torus_form(spec);
    if (tf.disc.delta == -3)
      return {MultTag::SixN, "rational pair, delta = -3", tf.disc.delta};
    if (tf.disc.delta == -4)
      return {MultTag::FourN, "rational pair, delta = -4", tf.disc.delta};
    return {MultTag::TwoN, "rational pair, delta < -4", tf.disc.delta};
  }
  if (rc_rational && !rs_rational)
    return {MultTag::SetTwoFour, "rcos rational, rsq irrational", std::nullopt};
  if (!rc_rational && rs_rational) {
    if (rational_square_root(*spec.rsq.as_rational()))
      return {MultTag::SetTwoFour, "rcos irrational, r rational", std::nullopt};
    return {MultTag::SetTwo, "rcos irrational, rsq rational non-square",
            std::nullopt};
  }
  // Both irrational: decide through b = -2 rcos and c = rsq.
  Exact b = Exact(-2) * spec.rcos;
  const Exact& c = spec.rsq;
  DependenceReport dep = linear_dependence(b, c);
  if (!dep.dependent)
    return {MultTag::SetTwo, "radicals independent", std::nullopt};
  Rat disc = dep.alpha * dep.alpha + dep.beta;
  if (rational_square_root(disc))
    return {MultTag::SetTwoFour, "dependent, alpha^2 + beta a square",
            std::nullopt};
  return {MultTag::SetTwo, "dependent, alpha^2 + beta not a square",
          std::nullopt};
}

long torus_multiplicity(const TorusSpec& spec, const Int& x0, const Int& y0,
                        long box) {
  if (x0 == 0 && y0 == 0)
    throw domain_error("torus_multiplicity: generator must be nonzero");
  if (spec.rcos.is_rational() && spec.rsq.is_rational()) {
    TorusFormData tf = torus_form(spec);
    return repcount::count_R(tf.form, qform::eval(tf.form, x0, y0));
  }
  Exact b = Exact(-2) * spec.rcos;
  Exact z = repcount::eval_quadratic(b, spec.rsq, x0, y0);
  return repcount::representations_irrational(b, spec.rsq, z, box).R;
}

namespace {

std::set<long> sample_rational(const TorusSpec& spec, const Int& n_max) {
  TorusFormData tf = torus_form(spec);
  if (!n_max.fits_slong_p())
    throw domain_error("multiplicity_set_sample: n_max too large");
  long top = n_max.get_si();
  std::set<long> out;
  if (parallel::enabled() && top >= 256) {
    int nt = parallel::max_threads();
    std::vector<std::set<long>> parts(nt);
#pragma omp parallel for schedule(dynamic, 64)
    for (long v = 1; v <= top; ++v) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      long r = repcount::count_R(tf.form, Int(v));
      if (r > 0) parts[tid].insert(r);
    }
    for (const auto& p : parts) out.insert(p.begin(), p.end());
  } else {
    for (long v = 1; v <= top; ++v) {
      long r = repcount::count_R(tf.form, Int(v));
      if (r > 0) out.insert(r);
    }
  }
  return out;
}

// One complete scan tallies every generated value at once: any solution of
// f(x, y) = z with z <= zmax lies in x^2 + y^2 <= zmax/mu.
std::set<long> sample_irrational(const TorusSpec& spec, long box) {
  Exact b = Exact(-2) * spec.rcos;
  const Exact& c = spec.rsq;
  Rat mu = repcount::gram_lower_bound(b, c);

  std::vector<Exact> keys;
  for (Int x = -box; x <= box; ++x) {
    for (Int y = -box; y <= box; ++y) {
      if (x == 0 && y == 0) continue;
      keys.push_back(repcount::eval_quadratic(b, c, x, y));
    }
  }
  std::sort(keys.begin(), keys.end(), ExactLess{});
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  Rat zmax_hi(0);
  for (const auto& z : keys) {
    Rat hi = z.enclosure(64).second;
    if (hi > zmax_hi) zmax_hi = hi;
  }
  Rat rsq_bound = zmax_hi / mu;
  Int yb = isqrt(rsq_bound.get_num() / rsq_bound.get_den());
  while (Rat((yb + 1) * (yb + 1)) <= rsq_bound) ++yb;
  if (!yb.fits_slong_p())
    throw domain_error("multiplicity_set_sample: scan bound too large");
  long Y = yb.get_si();

  auto key_index = [&](const Exact& v) -> long {
    auto it = std::lower_bound(keys.begin(), keys.end(), v, ExactLess{});
    if (it == keys.end() || !(*it == v)) return -1;
    return static_cast<long>(it - keys.begin());
  };

  std::vector<long> counts(keys.size(), 0);
  int nt = parallel::enabled() ? parallel::max_threads() : 1;
  std::vector<std::vector<long>> parts(nt, std::vector<long>(keys.size(), 0));
#pragma omp parallel for schedule(dynamic, 4) if (parallel::enabled())
  for (long y = -Y; y <= Y; ++y) {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    Rat rem = rsq_bound - Rat(Int(y) * Int(y));
    if (rem < 0) continue;
    Int xb = isqrt(rem.get_num() / rem.get_den());
    while (Rat((xb + 1) * (xb + 1)) <= rem) ++xb;
    for (Int x = -xb; x <= xb; ++x) {
      if (x == 0 && y == 0) continue;
      long idx = key_index(repcount::eval_quadratic(b, c, x, Int(y)));
      if (idx >= 0) ++parts[static_cast<size_t>(tid)][static_cast<size_t>(idx)];
    }
  }
  for (const auto& p : parts)
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
  return {counts.begin(), counts.end()};
}

}  // namespace

std::set<long> multiplicity_set_sample(const TorusSpec& spec,
                                       const Int& n_max_or_box) {
  if (n_max_or_box < 1)
    throw domain_error("multiplicity_set_sample: bound must be >= 1");
  if (spec.rcos.is_rational() && spec.rsq.is_rational())
    return sample_rational(spec, n_max_or_box);
  if (!n_max_or_box.fits_slong_p())
    throw domain_error("multiplicity_set_sample: box too large");
  return sample_irrational(spec, n_max_or_box.get_si());
}

}  // namespace lapmult::spectra
