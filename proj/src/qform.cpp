// SPDX-License-Identifier: Apache-2.0
#include "lapmult/qform.hpp"

#include <algorithm>

namespace lapmult::qform {

namespace {

void require_primitive_definite(const Form& f, const char* who) {
  if (!is_primitive(f))
    throw domain_error(std::string(who) + ": form must be primitive");
  if (!is_positive_definite(f))
    throw domain_error(std::string(who) + ": form must be positive definite");
}

// Nonnegative remainder of v mod m, m > 0.
Int mod_pos(const Int& v, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Int eval(const Form& f, const Int& x, const Int& y) {
  return f.a * x * x + f.b * x * y + f.c * y * y;
}

UnimodularMap mul(const UnimodularMap& m, const UnimodularMap& n) {
  return {m.p * n.p + m.q * n.r, m.p * n.q + m.q * n.s,
          m.r * n.p + m.s * n.r, m.r * n.q + m.s * n.s};
}

UnimodularMap inverse(const UnimodularMap& m) {
  Int d = m.det();
  if (d == 1) return {m.s, -m.q, -m.r, m.p};
  if (d == -1) return {-m.s, m.q, m.r, -m.p};
  throw domain_error("inverse of a non-unimodular map");
}

Form apply(const Form& f, const UnimodularMap& t) {
  // F(px + qy, rx + sy) expanded.
  Form g;
  g.a = f.a * t.p * t.p + f.b * t.p * t.r + f.c * t.r * t.r;
  g.b = 2 * f.a * t.p * t.q + f.b * (t.p * t.s + t.q * t.r) + 2 * f.c * t.r * t.s;
  g.c = f.a * t.q * t.q + f.b * t.q * t.s + f.c * t.s * t.s;
  return g;
}

const Fundamental& Discriminant::fundamental_or_throw() const {
  if (!fundamental)
    throw domain_error("not a discriminant of a definite form");
  return *fundamental;
}

bool is_fundamental_discriminant(const Int& d) {
  if (d == 1 || d == 0) return false;
  Int m = mod_pos(d, 4);
  if (m == 1) {
    SquarefreeSplit s = squarefree_split(abs(d));
    return s.square == 1;
  }
  Int m16 = mod_pos(d, 16);
  if (m16 != 8 && m16 != 12) return false;
  SquarefreeSplit s = squarefree_split(abs(d) / 4);
  return s.square == 1;
}

Discriminant discriminant(const Form& f) {
  Discriminant out;
  out.delta = f.b * f.b - 4 * f.a * f.c;
  if (out.delta == 0 || (out.delta > 0 && is_perfect_square(out.delta))) {
    return out;  // square discriminants have no fundamental decomposition
  }
  // delta = d * s^2 with d squarefree (signed); then delta0 = d or 4d.
  SquarefreeSplit s = squarefree_split(abs(out.delta));
  Int d = sgn(out.delta) * s.squarefree;
  Fundamental fd;
  if (mod_pos(d, 4) == 1) {
    fd.delta0 = d;
    fd.conductor = s.square;
  } else {
    // delta = 0, 1 (mod 4) forces the square part even here.
    fd.delta0 = 4 * d;
    if (mod_pos(s.square, 2) != 0)
      throw domain_error("discriminant: not 0 or 1 mod 4");
    fd.conductor = s.square / 2;
  }
  out.fundamental = fd;
  return out;
}

bool is_primitive(const Form& f) {
  Int g = gcd(gcd(f.a, f.b), f.c);
  return g == 1;
}

bool is_positive_definite(const Form& f) {
  return f.a > 0 && f.b * f.b - 4 * f.a * f.c < 0;
}

bool is_reduced(const Form& f) {
  if (!(abs(f.b) <= f.a && f.a <= f.c)) return false;
  if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

Reduction reduce(const Form& f) {
  require_primitive_definite(f, "reduce");
  Form g = f;
  UnimodularMap m;  // accumulated: apply(f, m) == g
  const UnimodularMap swap{0, -1, 1, 0};
  for (;;) {
    if (g.b > g.a || g.b <= -g.a) {
      // translate b into (-a, a]: k = floor((a - b) / 2a)
      Int k;
      Int num = g.a - g.b, den = 2 * g.a;
      mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      UnimodularMap t{1, k, 0, 1};
      g = apply(g, t);
      m = mul(m, t);
    }
    if (g.a > g.c) {
      g = apply(g, swap);
      m = mul(m, swap);
      continue;
    }
    break;
  }
  if (g.b < 0 && (g.a == g.c || -g.b == g.a)) {
    if (g.a == g.c) {
      g = apply(g, swap);
      m = mul(m, swap);
    } else {
      UnimodularMap t{1, 1, 0, 1};
      g = apply(g, t);
      m = mul(m, t);
    }
  }
  if (!is_reduced(g) || m.det() != 1 || !(apply(f, m) == g))
    throw domain_error("reduce: certificate verification failed");
  return {g, m};
}

std::optional<UnimodularMap> is_equivalent(const Form& f, const Form& g) {
  Reduction rf = reduce(f), rg = reduce(g);
  if (!(rf.reduced == rg.reduced)) return std::nullopt;
  UnimodularMap t = mul(rf.map, inverse(rg.map));
  if (t.det() != 1 || !(apply(f, t) == g))
    throw domain_error("is_equivalent: certificate verification failed");
  return t;
}

Form compose(const Form& f, const Form& g) {
  require_primitive_definite(f, "compose");
  require_primitive_definite(g, "compose");
  Int delta = f.b * f.b - 4 * f.a * f.c;
  if (g.b * g.b - 4 * g.a * g.c != delta)
    throw domain_error("compose: discriminant mismatch");

  // Dirichlet composition: with s = (b1+b2)/2 and e = gcd(a1, a2, s)
  // written as t*a1 + u*a2 + w*s, the product class is represented by
  //   A = a1*a2/e^2,
  //   B = b2 + 2(a2/e)(u(b1-b2)/2 - w*c2)  (mod 2A).
  Int s = (f.b + g.b) / 2;
  Int e0, x1, y1;
  mpz_gcdext(e0.get_mpz_t(), x1.get_mpz_t(), y1.get_mpz_t(), f.a.get_mpz_t(),
             g.a.get_mpz_t());
  Int e, x2, w;
  mpz_gcdext(e.get_mpz_t(), x2.get_mpz_t(), w.get_mpz_t(), e0.get_mpz_t(),
             s.get_mpz_t());
  Int u = x2 * y1;
  Int bigA = f.a * g.a / (e * e);
  Int bigB = g.b + 2 * (g.a / e) * (u * (f.b - g.b) / 2 - w * g.c);
  bigB = mod_pos(bigB, 2 * bigA);
  Int num = bigB * bigB - delta;
  if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * bigA).get_mpz_t()))
    throw domain_error("compose: internal consistency failure");
  Form h{bigA, bigB, num / (4 * bigA)};
  Form out = reduce(h).reduced;
  if (out.b * out.b - 4 * out.a * out.c != delta || !is_primitive(out))
    throw domain_error("compose: result verification failed");
  return out;
}

long aut_plus_order(const Int& delta) {
  if (delta == -3) return 6;
  if (delta == -4) return 4;
  if (delta < -4) return 2;
  throw domain_error("automorphism order defined for delta <= -3 only");
}

std::vector<UnimodularMap> proper_automorphisms(const Form& f) {
  require_primitive_definite(f, "proper_automorphisms");
  Int delta = f.b * f.b - 4 * f.a * f.c;
  const UnimodularMap eye;
  std::vector<UnimodularMap> base{eye, {-1, 0, 0, -1}};
  if (delta == -4) {
    base.push_back({0, -1, 1, 0});
    base.push_back({0, 1, -1, 0});
  } else if (delta == -3) {
    base.push_back({0, -1, 1, 1});
    base.push_back({0, 1, -1, -1});
    base.push_back({1, 1, -1, 0});
    base.push_back({-1, -1, 1, 0});
  }
  Reduction red = reduce(f);
  std::vector<UnimodularMap> out;
  out.reserve(base.size());
  UnimodularMap tinv = inverse(red.map);
  for (const auto& a : base) {
    UnimodularMap conj = mul(mul(red.map, a), tinv);
    if (conj.det() != 1 || !(apply(f, conj) == f))
      throw domain_error("proper_automorphisms: verification failed");
    out.push_back(conj);
  }
  return out;
}

std::optional<UnimodularMap> improper_automorphism(const Form& f) {
  require_primitive_definite(f, "improper_automorphism");
  Form flipped{f.a, -f.b, f.c};
  auto t = is_equivalent(flipped, f);
  if (!t) return std::nullopt;
  // (x, y) -> (x, -y) carries f to flipped; chain with t back to f.
  UnimodularMap j{1, 0, 0, -1};
  UnimodularMap a = mul(j, *t);
  if (a.det() != -1 || !(apply(f, a) == f))
    throw domain_error("improper_automorphism: verification failed");
  return a;
}

bool is_ambiguous(const Form& f) {
  require_primitive_definite(f, "is_ambiguous");
  return is_equivalent(f, Form{f.a, -f.b, f.c}).has_value();
}

std::vector<Form> class_group(const Int& delta) {
  if (delta >= 0) throw domain_error("class_group requires delta < 0");
  Int m = mod_pos(delta, 4);
  if (m != 0 && m != 1)
    throw domain_error("class_group: delta must be 0 or 1 mod 4");
  std::vector<Form> out;
  Int amax = isqrt(abs(delta) / 3);
  for (Int a = 1; a <= amax; ++a) {
    for (Int b = -a; b <= a; ++b) {
      if (mod_pos(b, 2) != mod_pos(delta, 2)) continue;
      Int num = b * b - delta;
      if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * a).get_mpz_t())) continue;
      Int c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;  // boundary sign rule
      Form f{a, b, c};
      if (!is_primitive(f)) continue;
      out.push_back(f);
    }
  }
  // The scan emits (a, b) in lexicographic order already; keep it explicit.
  std::sort(out.begin(), out.end(), [](const Form& x, const Form& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  });
  return out;
}

Form principal_form(const Int& delta) {
  Int m = mod_pos(delta, 4);
  if (m == 0) return {1, 0, -delta / 4};
  if (m == 1) return {1, 1, (1 - delta) / 4};
  throw domain_error("principal_form: delta must be 0 or 1 mod 4");
}

Form parse_form(const std::string& text) {
  size_t c1 = text.find(',');
  size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(',', c1 + 1);
  if (c2 == std::string::npos || text.find(',', c2 + 1) != std::string::npos)
    throw domain_error("form literal must be 'a,b,c'");
  try {
    return {Int(text.substr(0, c1)), Int(text.substr(c1 + 1, c2 - c1 - 1)),
            Int(text.substr(c2 + 1))};
  } catch (const std::invalid_argument&) {
    throw domain_error("form literal must be 'a,b,c' with integers");
  }
}

std::string form_str(const Form& f) {
  return f.a.get_str() + "," + f.b.get_str() + "," + f.c.get_str();
}

}  // namespace lapmult::qform
