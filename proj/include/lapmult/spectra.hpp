// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>

#include "lapmult/repcount.hpp"
#include "lapmult/witness.hpp"

namespace lapmult::spectra {

using qform::Form;

/// Rectangle [0,a] x [0,b], described by the exact value (a/b)^2.
/// When rational, ratio_sq = q_r / p_r in lowest terms.
struct RectangleSpec {
  Exact ratio_sq;
  std::optional<std::pair<Int, Int>> reduced;  // (p_r, q_r), coprime
};

RectangleSpec make_rectangle(const Exact& ratio_sq);

/// Flat torus R^2/L described by r cos(theta) >= 0 and r^2 > 0 for the
/// generator length ratio r and angle theta in (0, pi/2]. Validity requires
/// r^2 - (r cos theta)^2 > 0, i.e. the associated form is positive definite.
struct TorusSpec {
  Exact rcos;
  Exact rsq;
};

TorusSpec make_torus(const Exact& rcos, const Exact& rsq);

/// The rationalized data of the torus form: 2 r cos(theta) = alpha/beta and
/// r^2 = gamma/delta in lowest terms, tau = gcd(beta, delta), and the
/// primitive positive-definite integer form
/// (beta*delta x^2 - alpha*delta xy + gamma*beta y^2) / tau.
struct TorusFormData {
  Int alpha, beta, gamma, delta, tau;
  Form form;
  qform::Discriminant disc;
};

TorusFormData torus_form(const TorusSpec& spec);

enum class MultTag {
  AllNaturals,  // N
  Singleton1,   // {1}
  TwoN,         // 2N
  FourN,        // 4N
  SixN,         // 6N
  SetTwo,       // {2}
  SetTwoFour,   // {2,4}
};

struct MultiplicitySet {
  MultTag tag;
  std::string provenance;     // which classification case fired
  std::optional<Int> delta;   // form discriminant on the rational branch
};

std::string tag_str(MultTag tag);

/// N iff (a/b)^2 is rational, {1} otherwise.
MultiplicitySet rect_classify(const RectangleSpec& spec);

/// Multiplicity of lambda_{m0,n0} for a rational-ratio rectangle: the
/// first-quadrant count of p_r x^2 + q_r y^2 = p_r m0^2 + q_r n0^2.
long rect_multiplicity(const RectangleSpec& spec, const Int& m0, const Int& n0);

/// An eigenvalue of multiplicity exactly k: lambda = N pi^2 / (b^2 q_r).
/// For p_r q_r > 3 the constructive prime-power search produces N = p^(2k-1);
/// otherwise a direct scan finds the smallest N, oracle-verified either way.
struct RectWitness {
  witness::MultiplicityWitness w;
  Int scale_den;  // q_r in lambda = N pi^2 / (b^2 q_r)
};
RectWitness rect_witness(const RectangleSpec& spec, long k,
                         const Int& bound = witness::kDefaultPrimeBound);

/// Full classification of the torus multiplicity set.
MultiplicitySet torus_classify(const TorusSpec& spec);

/// Multiplicity of the eigenvalue generated by lattice point (x0, y0) != 0:
/// the number of integer points with the same form value.
long torus_multiplicity(const TorusSpec& spec, const Int& x0, const Int& y0,
                        long box = 0);

/// Observed multiplicity set. Rational branch: counts over levels
/// 1..n_max_or_box; irrational branch: counts of all values generated by
/// |x|, |y| <= n_max_or_box, each recounted over its complete solution disc.
std::set<long> multiplicity_set_sample(const TorusSpec& spec,
                                       const Int& n_max_or_box);

}  // namespace lapmult::spectra
