// SPDX-License-Identifier: Apache-2.0
#include "lapmult/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lapmult {

namespace {

// sqrt(m) * sqrt(n) = g * sqrt(m' n') with g = gcd(m, n) and m'n' squarefree
// (m, n squarefree). Returns {g, m'n'}; guards the int64 radicand range.
std::pair<std::int64_t, std::int64_t> radical_product(std::int64_t m,
                                                      std::int64_t n) {
  std::int64_t g = std::gcd(m, n);
  __int128 prod = static_cast<__int128>(m / g) * (n / g);
  if (prod > INT64_MAX) throw domain_error("radicand product out of range");
  return {g, static_cast<std::int64_t>(prod)};
}

Rat rat_of(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rat make_rational(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("zero denominator");
  return rat_of(num, den);
}

Exact::Exact(long v) {
  if (v != 0) terms_.push_back({1, Rat(v)});
}

Exact::Exact(const Int& v) {
  if (v != 0) terms_.push_back({1, Rat(v)});
}

Exact::Exact(const Rat& v) {
  if (v != 0) terms_.push_back({1, v});
}

Exact::Exact(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

void Exact::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.d < b.d; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (t.d < 1) throw domain_error("negative or zero radicand");
    if (!merged.empty() && merged.back().d == t.d) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff == 0) merged.pop_back();
    } else if (t.coeff != 0) {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
  // Support check: at most three radicands, closed under products.
  std::vector<std::int64_t> rads;
  for (const auto& t : terms_)
    if (t.d > 1) rads.push_back(t.d);
  if (rads.size() > 3)
    throw domain_error("value requires more than two independent radicals");
  if (rads.size() == 3) {
    auto [g, k] = radical_product(rads[0], rads[1]);
    (void)g;
    if (k != rads[2])
      throw domain_error("value requires more than two independent radicals");
  }
}

Exact Exact::quadratic(const Rat& p, const Rat& q, const Int& d) {
  std::vector<Term> t;
  if (p != 0) t.push_back({1, p});
  if (q != 0) {
    if (d < 0) throw domain_error("negative radicand: values must be real");
    if (d == 0 || d == 1) {
      // sqrt(0) and sqrt(1) degenerate to rationals.
      if (d == 1) t.push_back({1, q});
    } else {
      SquarefreeSplit s = squarefree_split(d);
      if (!s.squarefree.fits_slong_p())
        throw domain_error("radicand out of range");
      Rat coeff = q * Rat(s.square);
      if (s.squarefree == 1) {
        t.push_back({1, coeff});
      } else {
        t.push_back({s.squarefree.get_si(), coeff});
      }
    }
  }
  return Exact(std::move(t));
}

Exact Exact::sqrt_of(const Rat& x) {
  if (x < 0) throw domain_error("square root of a negative rational");
  if (x == 0) return Exact();
  // sqrt(n/d) = sqrt(n*d)/d.
  Int nd = x.get_num() * x.get_den();
  return quadratic(Rat(0), rat_of(1, x.get_den()), nd);
}

Exact::Kind Exact::kind() const {
  int rads = 0;
  for (const auto& t : terms_)
    if (t.d > 1) ++rads;
  if (rads == 0) return Kind::Rational;
  if (rads == 1) return Kind::Quadratic;
  return Kind::Composite;
}

bool Exact::is_rational() const { return kind() == Kind::Rational; }

std::optional<Rat> Exact::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return terms_.empty() ? Rat(0) : terms_[0].coeff;
}

Rat Exact::rational_part() const {
  if (kind() == Kind::Composite)
    throw domain_error("composite value has no single radical decomposition");
  for (const auto& t : terms_)
    if (t.d == 1) return t.coeff;
  return Rat(0);
}

Rat Exact::radical_coeff() const {
  if (kind() == Kind::Composite)
    throw domain_error("composite value has no single radical decomposition");
  for (const auto& t : terms_)
    if (t.d > 1) return t.coeff;
  return Rat(0);
}

std::int64_t Exact::radicand() const {
  if (kind() == Kind::Composite)
    throw domain_error("composite value has no single radical decomposition");
  for (const auto& t : terms_)
    if (t.d > 1) return t.d;
  return 1;
}

Exact Exact::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = -x.coeff;
  return Exact(std::move(t));
}

Exact operator+(const Exact& x, const Exact& y) {
  std::vector<Exact::Term> t = x.terms_;
  t.insert(t.end(), y.terms_.begin(), y.terms_.end());
  return Exact(std::move(t));
}

Exact operator-(const Exact& x, const Exact& y) { return x + (-y); }

Exact operator*(const Exact& x, const Exact& y) {
  std::vector<Exact::Term> t;
  t.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& a : x.terms_) {
    for (const auto& b : y.terms_) {
      if (a.d == 1 || b.d == 1) {
        t.push_back({a.d == 1 ? b.d : a.d, a.coeff * b.coeff});
      } else if (a.d == b.d) {
        t.push_back({1, a.coeff * b.coeff * Rat(a.d)});
      } else {
        auto [g, k] = radical_product(a.d, b.d);
        t.push_back({k, a.coeff * b.coeff * Rat(g)});
      }
    }
  }
  return Exact(std::move(t));
}

Exact Exact::inverse() const {
  if (is_zero()) throw domain_error("division by zero");
  if (is_rational()) return Exact(Rat(1 / terms_[0].coeff));
  // Multiply through by the Galois conjugates; the full product is the
  // rational field norm.
  std::vector<std::int64_t> rads;
  for (const auto& t : terms_)
    if (t.d > 1) rads.push_back(t.d);
  std::int64_t d1 = rads[0];
  std::int64_t d2 = rads.size() > 1 ? rads[1] : 0;
  auto conjugate = [&](int e1, int e2) {
    std::vector<Term> t = terms_;
    for (auto& x : t) {
      if (x.d == 1) continue;
      int flip = 1;
      if (x.d == d1) {
        flip = e1;
      } else if (x.d == d2) {
        flip = e2;
      } else {
        flip = e1 * e2;  // the third radicand carries sqrt(d1)*sqrt(d2)
      }
      if (flip < 0) x.coeff = -x.coeff;
    }
    return Exact(std::move(t));
  };
  Exact prod = conjugate(-1, 1);
  if (d2 != 0) prod = prod * conjugate(1, -1) * conjugate(-1, -1);
  Exact norm = *this * prod;
  auto n = norm.as_rational();
  if (!n || *n == 0) throw domain_error("internal: norm not rational");
  return prod * Exact(Rat(1 / *n));
}

bool Exact::operator==(const Exact& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].d != o.terms_[i].d || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  }
  return true;
}

int Exact::compare_structural(const Exact& x, const Exact& y) {
  size_t n = std::min(x.terms_.size(), y.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (x.terms_[i].d != y.terms_[i].d)
      return x.terms_[i].d < y.terms_[i].d ? -1 : 1;
    int c = mpq_cmp(x.terms_[i].coeff.get_mpq_t(), y.terms_[i].coeff.get_mpq_t());
    if (c != 0) return c;
  }
  if (x.terms_.size() != y.terms_.size())
    return x.terms_.size() < y.terms_.size() ? -1 : 1;
  return 0;
}

std::pair<Rat, Rat> Exact::enclosure(unsigned k) const {
  Rat lo(0), hi(0);
  Int scale = Int(1) << k;
  for (const auto& t : terms_) {
    if (t.d == 1) {
      lo += t.coeff;
      hi += t.coeff;
      continue;
    }
    // floor(sqrt(d * 4^k)) / 2^k <= sqrt(d) <= (floor + 1) / 2^k
    Int s = isqrt(Int(t.d) * scale * scale);
    Rat rlo = rat_of(s, scale), rhi = rat_of(s + 1, scale);
    if (t.coeff > 0) {
      lo += t.coeff * rlo;
      hi += t.coeff * rhi;
    } else {
      lo += t.coeff * rhi;
      hi += t.coeff * rlo;
    }
  }
  return {lo, hi};
}

int Exact::sign() const {
  if (terms_.empty()) return 0;
  Kind kd = kind();
  if (kd == Kind::Rational) return sgn(terms_[0].coeff);
  if (kd == Kind::Quadratic) {
    Rat p = rational_part(), q = radical_coeff();
    if (p == 0) return sgn(q);
    if (sgn(p) == sgn(q)) return sgn(p);
    // p and q*sqrt(d) compete: compare p^2 with q^2 d exactly.
    Rat lhs = p * p, rhs = q * q * Rat(radicand());
    if (lhs == rhs) throw domain_error("internal: sqrt(d) cannot be rational");
    return lhs > rhs ? sgn(p) : sgn(q);
  }
  // Composite: a nonzero coordinate vector denotes a nonzero real, so
  // refinement terminates.
  for (unsigned k = 16;; k *= 2) {
    auto [lo, hi] = enclosure(k);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (k > (1u << 20))
      throw domain_error("internal: sign refinement failed to converge");
  }
}

std::string Exact::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool lead_rational = terms_[0].d == 1;
  if (kind() != Kind::Rational && !lead_rational) out = "0";
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.get_str();
    if (t.d == 1) {
      out += c;
      first = false;
      continue;
    }
    if (!(first && out.empty())) {
      if (t.coeff > 0) {
        out += "+";
      } else {
        out += "-";
        c = Rat(abs(t.coeff)).get_str();
      }
    }
    out += c + "*sqrt(" + std::to_string(t.d) + ")";
    first = false;
  }
  return out;
}

Exact Exact::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw domain_error("empty exact-value literal");

  size_t i = 0;
  auto fail = [&]() -> void {
    throw domain_error("malformed exact-value literal: " + s);
  };
  auto parse_int = [&]() -> Int {
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) fail();
    return Int(s.substr(start, i - start));
  };
  auto parse_rat = [&]() -> Rat {
    Int num = parse_int();
    if (i < s.size() && s[i] == '/') {
      ++i;
      Int den = parse_int();
      if (den == 0) throw domain_error("zero denominator in literal: " + s);
      return rat_of(num, den);
    }
    return Rat(num);
  };
  auto parse_sqrt_arg = [&]() -> Int {
    if (s.compare(i, 5, "sqrt(") != 0) fail();
    i += 5;
    Int d = parse_int();
    if (i >= s.size() || s[i] != ')') fail();
    ++i;
    return d;
  };

  Exact result;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (!first || s[i] == '+' || s[i] == '-') {
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) fail();
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    Rat coeff(1);
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = parse_rat();
      have_coeff = true;
    }
    if (i < s.size() && (s[i] == '*' || (!have_coeff && s[i] == 's'))) {
      if (s[i] == '*') ++i;
      Int d = parse_sqrt_arg();
      result = result + quadratic(Rat(0), sign * coeff, d);
    } else if (have_coeff) {
      result = result + Exact(Rat(sign * coeff));
    } else {
      fail();
    }
    first = false;
  }
  return result;
}

DependenceReport linear_dependence(const Exact& b, const Exact& c) {
  if (b.kind() != Exact::Kind::Quadratic || c.kind() != Exact::Kind::Quadratic)
    throw domain_error(
        "linear_dependence requires two irrational quadratic values");
  if (b.radicand() != c.radicand()) return {};  // Q(sqrt d1) ∩ Q(sqrt d2) = Q
  DependenceReport rep;
  rep.dependent = true;
  rep.alpha = c.radical_coeff() / b.radical_coeff();
  rep.beta = c.rational_part() - rep.alpha * b.rational_part();
  return rep;
}

std::optional<Rat> rational_square_root(const Rat& x) {
  if (x < 0) return std::nullopt;
  Int rn, rd;
  if (!is_perfect_square(x.get_num(), &rn)) return std::nullopt;
  if (!is_perfect_square(x.get_den(), &rd)) return std::nullopt;
  return rat_of(rn, rd);
}

}  // namespace lapmult
