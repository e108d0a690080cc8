#include "cmm/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cmm {

namespace {

using Term = LaurentQ::Term;

// Merges a list of terms sorted by exponent, summing equal exponents and
// dropping zeros.
std::vector<Term> merge_sorted(std::vector<Term> terms) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Integer exponent_lcm(const std::vector<Term>& a, const std::vector<Term>& b) {
  Integer d = 1;
  for (const auto& t : a) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.exp.get_den_mpz_t());
  for (const auto& t : b) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.exp.get_den_mpz_t());
  return d;
}

// Dense univariate polynomial over Q in t = q^{1/D}, index = degree.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentQ& a, const Integer& d) {
  Dense out;
  for (const auto& t : a.terms()) {
    Rational idx = (t.exp - a.min_exponent()) * Rational(d);
    const long i = idx.get_num().get_si();
    if (static_cast<long>(out.size()) <= i) out.resize(i + 1);
    out[i] = t.coeff;
  }
  return out;
}

LaurentQ from_dense(const Dense& p, const Integer& d) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) terms.push_back({Rational(Integer(static_cast<unsigned long>(i)), d), p[i]});
  }
  for (auto& t : terms) t.exp.canonicalize();
  return LaurentQ::from_terms(std::move(terms));
}

// Remainder of a modulo b (b nonzero, trimmed).
Dense poly_rem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Rational lead_inv = 1 / b.back();
  while (a.size() >= b.size()) {
    const Rational c = a.back() * lead_inv;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

void make_monic(Dense& p) {
  const Rational inv = 1 / p.back();
  for (auto& c : p) c *= inv;
}

}  // namespace

LaurentQ::LaurentQ(long constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentQ::LaurentQ(const Rational& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentQ LaurentQ::monomial(const Rational& coeff, const QExponent& exp) {
  LaurentQ r;
  if (coeff != 0) r.terms_.push_back({exp, coeff});
  return r;
}

LaurentQ LaurentQ::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
  LaurentQ r;
  r.terms_ = merge_sorted(std::move(terms));
  return r;
}

bool LaurentQ::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

const QExponent& LaurentQ::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero LaurentQ");
  return terms_.front().exp;
}

const QExponent& LaurentQ::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero LaurentQ");
  return terms_.back().exp;
}

Rational LaurentQ::coeff(const QExponent& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const QExponent& e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

Rational LaurentQ::coefficient_sum() const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

LaurentQ LaurentQ::truncated(const QExponent& order) const {
  LaurentQ r;
  for (const auto& t : terms_) {
    if (t.exp > order) break;
    r.terms_.push_back(t);
  }
  return r;
}

LaurentQ LaurentQ::shifted(const QExponent& shift) const {
  LaurentQ r = *this;
  if (shift != 0) {
    for (auto& t : r.terms_) t.exp += shift;
  }
  return r;
}

LaurentQ LaurentQ::exponents_scaled(const Rational& factor) const {
  if (factor == 0) throw std::invalid_argument("exponents_scaled by zero");
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.exp *= factor;
  return from_terms(std::move(terms));
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->exp < j->exp)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->exp < i->exp) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.push_back({std::move(i->exp), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& other) { return *this += -other; }

LaurentQ& LaurentQ::operator*=(const LaurentQ& other) {
  *this = *this * other;
  return *this;
}

LaurentQ& LaurentQ::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) {
    LaurentQ r = b.shifted(a.terms_[0].exp);
    return r *= a.terms_[0].coeff;
  }
  if (b.is_monomial()) {
    LaurentQ r = a.shifted(b.terms_[0].exp);
    return r *= b.terms_[0].coeff;
  }

  // Dense convolution on the common exponent lattice when it is not too sparse.
  const Integer d = exponent_lcm(a.terms_, b.terms_);
  const Rational span = (a.max_exponent() - a.min_exponent() + b.max_exponent() - b.min_exponent()) * Rational(d);
  const std::size_t pairs = a.size() * b.size();
  if (d.fits_slong_p() && span <= Rational(static_cast<unsigned long>(4 * pairs + 64))) {
    const long width = span.get_num().get_si() + 1;
    std::vector<Rational> acc(static_cast<std::size_t>(width));
    std::vector<long> bi;
    bi.reserve(b.size());
    for (const auto& t : b.terms_) {
      bi.push_back(Rational((t.exp - b.min_exponent()) * Rational(d)).get_num().get_si());
    }
    Rational prod;
    for (const auto& ta : a.terms_) {
      const long ai = Rational((ta.exp - a.min_exponent()) * Rational(d)).get_num().get_si();
      for (std::size_t j = 0; j < b.size(); ++j) {
        mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), b.terms_[j].coeff.get_mpq_t());
        acc[ai + bi[j]] += prod;
      }
    }
    const Rational base = a.min_exponent() + b.min_exponent();
    LaurentQ r;
    for (long i = 0; i < width; ++i) {
      if (acc[i] != 0) {
        Rational e(Integer(i), d);
        e.canonicalize();
        r.terms_.push_back({base + e, std::move(acc[i])});
      }
    }
    return r;
  }

  std::vector<Term> all;
  all.reserve(pairs);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) all.push_back({ta.exp + tb.exp, ta.coeff * tb.coeff});
  }
  std::sort(all.begin(), all.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
  LaurentQ r;
  r.terms_ = merge_sorted(std::move(all));
  return r;
}

LaurentQ LaurentQ::pow(unsigned e) const {
  LaurentQ result(1);
  LaurentQ base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string LaurentQ::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    if (t.exp == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "q^";
    out += is_integer(t.exp) ? to_string(t.exp) : "(" + to_string(t.exp) + ")";
  }
  return out;
}

LaurentQ parse_laurent(std::string_view text) {
  auto fail = [&]() { throw std::invalid_argument("malformed Laurent polynomial '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::vector<Term> terms;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
  }
  while (true) {
    std::size_t next = std::string::npos;
    bool next_negative = false;
    for (std::size_t i = pos; i + 2 < text.size(); ++i) {
      if (text[i] == ' ' && (text[i + 1] == '+' || text[i + 1] == '-') && text[i + 2] == ' ') {
        next = i;
        next_negative = text[i + 1] == '-';
        break;
      }
    }
    std::string_view body = text.substr(pos, next == std::string::npos ? std::string_view::npos : next - pos);
    if (body.empty()) fail();
    Rational coeff = 1;
    QExponent exp = 0;
    const auto qpos = body.find("q^");
    if (qpos == std::string_view::npos) {
      coeff = parse_rational(body);
    } else {
      if (qpos > 0) {
        if (body[qpos - 1] != '*') fail();
        coeff = parse_rational(body.substr(0, qpos - 1));
      }
      std::string_view e = body.substr(qpos + 2);
      if (e.empty()) fail();
      if (e.front() == '(') {
        if (e.back() != ')') fail();
        e = e.substr(1, e.size() - 2);
        if (e.find('/') == std::string_view::npos) fail();
      } else if (e.find('/') != std::string_view::npos) {
        fail();
      }
      exp = parse_rational(e);
    }
    if (coeff <= 0 && !(body == "0" && terms.empty() && next == std::string::npos)) fail();
    terms.push_back({exp, negative ? Rational(-coeff) : coeff});
    if (next == std::string::npos) break;
    negative = next_negative;
    pos = next + 3;
  }
  LaurentQ r = LaurentQ::from_terms(terms);
  if (r.str() != text) fail();
  return r;
}

void add_product(LaurentQ& acc, const LaurentQ& a, const LaurentQ& b) { acc += a * b; }

LaurentQ qbracket(long m) {
  if (m == 0) return {};
  if (m < 0) return -qbracket(-m);
  std::vector<Term> terms;
  for (long e = 1 - m; e <= m - 1; e += 2) terms.push_back({e, 1});
  return LaurentQ::from_terms(std::move(terms));
}

std::optional<LaurentQ> divide_exact(const LaurentQ& a, const LaurentQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero LaurentQ");
  if (a.is_zero()) return LaurentQ{};
  const QExponent lowest = a.min_exponent() - b.min_exponent();
  const Rational lead_inv = 1 / b.highest().coeff;
  LaurentQ rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    QExponent e = rem.max_exponent() - b.max_exponent();
    if (e < lowest) return std::nullopt;
    Rational c = rem.highest().coeff * lead_inv;
    rem -= (b * c).shifted(e);
    quotient.push_back({std::move(e), std::move(c)});
  }
  return LaurentQ::from_terms(std::move(quotient));
}

LaurentQ gcd(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return gcd(b, b);
  if (b.is_zero()) return gcd(a, a);
  const Integer d = exponent_lcm(a.terms(), b.terms());
  Dense x = to_dense(a, d);
  Dense y = to_dense(b, d);
  trim(x);
  trim(y);
  make_monic(x);
  make_monic(y);
  while (!y.empty()) {
    Dense r = poly_rem(x, y);
    if (!r.empty()) make_monic(r);
    x = std::move(y);
    y = std::move(r);
  }
  // x has a nonzero constant term; normalize it to 1.
  const Rational c0 = x.front();
  for (auto& c : x) c /= c0;
  return from_dense(x, d);
}

RationalQ::RationalQ(LaurentQ num) : num_(std::move(num)), den_(1) {}

RationalQ::RationalQ(LaurentQ num, LaurentQ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RationalQ::normalize() {
  if (den_.is_zero()) throw std::domain_error("RationalQ with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentQ(1);
    return;
  }
  const QExponent shift = -den_.min_exponent();
  const Rational scale = 1 / den_.lowest().coeff;
  if (shift != 0) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  if (scale != 1) {
    num_ *= scale;
    den_ *= scale;
  }
}

RationalQ RationalQ::reduced() const {
  if (num_.is_zero() || is_laurent()) return *this;
  const LaurentQ g = gcd(num_, den_);
  auto n = divide_exact(num_, g);
  auto d = divide_exact(den_, g);
  if (!n || !d) throw std::logic_error("gcd does not divide its arguments");
  return RationalQ(std::move(*n), std::move(*d));
}

RationalQ operator+(const RationalQ& a, const RationalQ& b) {
  if (a.den_ == b.den_) return RationalQ(a.num_ + b.num_, a.den_);
  return RationalQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalQ operator-(const RationalQ& a, const RationalQ& b) { return a + (-b); }

RationalQ operator*(const RationalQ& a, const RationalQ& b) {
  return RationalQ(a.num_ * b.num_, a.den_ * b.den_);
}

RationalQ operator/(const RationalQ& a, const RationalQ& b) {
  if (b.is_zero()) throw std::domain_error("RationalQ division by zero");
  return RationalQ(a.num_ * b.den_, a.den_ * b.num_);
}

bool rational_eq(const RationalQ& a, const RationalQ& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalQ::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalQ parse_rational_q(std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    const auto split = text.find(")/(");
    if (split == std::string_view::npos || text.back() != ')') {
      throw std::invalid_argument("malformed rational function '" + std::string(text) + "'");
    }
    LaurentQ num = parse_laurent(text.substr(1, split - 1));
    LaurentQ den = parse_laurent(text.substr(split + 3, text.size() - split - 4));
    RationalQ r(std::move(num), std::move(den));
    if (r.str() != text) throw std::invalid_argument("non-canonical rational function '" + std::string(text) + "'");
    return r;
  }
  return RationalQ(parse_laurent(text));
}

}  // namespace cmm
