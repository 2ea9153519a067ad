#include "strongq/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace strongq {

namespace {

// Splits d = s^2 * d' with d' square-free; returns {s, d'}.
std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t d) {
  std::uint64_t s = 1;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      s *= p;
    }
  }
  return {s, d};
}

Rational parse_rational(std::string_view t) {
  if (t.empty()) throw ParseError("empty rational literal");
  std::string s(t);
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
      throw ParseError("bad rational literal '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

ExactScalar::ExactScalar(Rational a, Rational b, std::uint64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  normalize();
}

ExactScalar ExactScalar::sqrt_of(std::uint64_t d) {
  if (d == 0) return ExactScalar();
  return ExactScalar(Rational(0), Rational(1), d);
}

void ExactScalar::normalize() {
  if (d_ != 0) {
    auto [s, df] = square_free_split(d_);
    if (s != 1) {
      b_ *= Rational(static_cast<unsigned long>(s));
      d_ = df;
    }
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
  }
  if (b_ == 0) d_ = 0;
  if (d_ == 0 && b_ != 0) throw InvalidFieldError("surd part with zero radicand");
}

std::uint64_t ExactScalar::join_radicand(std::uint64_t d1, std::uint64_t d2) {
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  if (d1 != d2)
    throw InvalidFieldError("mixed radicands sqrt(" + std::to_string(d1) + ") and sqrt(" +
                            std::to_string(d2) + ")");
  return d1;
}

std::uint64_t ExactScalar::align(ExactScalar& x, ExactScalar& y) {
  std::uint64_t d = join_radicand(x.d_, y.d_);
  x.d_ = y.d_ = d;
  return d;
}

int ExactScalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) compete: compare a^2 against b^2*d.  Equality cannot
  // happen for square-free d > 1 with a, b nonzero.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(static_cast<unsigned long>(d_));
  return lhs > rhs ? sa : sb;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  ExactScalar rhs = o;
  align(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  ExactScalar rhs = o;
  std::uint64_t d = align(*this, rhs);
  Rational rad(static_cast<unsigned long>(d));
  Rational na = a_ * rhs.a_ + b_ * rhs.b_ * rad;
  Rational nb = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = na;
  b_ = nb;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  ExactScalar rhs = o;
  std::uint64_t d = align(*this, rhs);
  // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero for
  // nonzero elements of Q(sqrt(d)).
  Rational norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * Rational(static_cast<unsigned long>(d));
  ExactScalar inv(rhs.a_ / norm, -rhs.b_ / norm, d);
  return *this *= inv;
}

double ExactScalar::to_double() const {
  double v = a_.get_d();
  if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string ExactScalar::to_string() const {
  if (d_ == 0) return rational_str(a_);
  std::string s = rational_str(a_);
  if (b_ < 0)
    s += "-" + rational_str(Rational(-b_));
  else
    s += "+" + rational_str(b_);
  s += "*sqrt(" + std::to_string(d_) + ")";
  return s;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty scalar literal");

  // Split into at most two top-level terms at a '+'/'-' that is not leading
  // and not part of "p/-q" style garbage (we only split after a digit or ')').
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') &&
        (std::isdigit(static_cast<unsigned char>(s[i - 1])) || s[i - 1] == ')')) {
      split = i;
      break;
    }
  }

  auto parse_term = [](std::string_view term, bool negated) -> ExactScalar {
    std::string t(term);
    bool neg = negated;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      if (t[0] == '-') neg = !neg;
      t.erase(0, 1);
    }
    ExactScalar value;
    auto pos = t.find("sqrt(");
    if (pos != std::string::npos) {
      if (t.back() != ')') throw ParseError("unterminated sqrt in '" + t + "'");
      std::string inner = t.substr(pos + 5, t.size() - pos - 6);
      if (inner.empty()) throw ParseError("empty radicand in '" + t + "'");
      for (char c : inner)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("bad radicand '" + inner + "'");
      std::uint64_t d = std::stoull(inner);
      Rational coef(1);
      if (pos > 0) {
        if (t[pos - 1] != '*') throw ParseError("expected '*' before sqrt in '" + t + "'");
        coef = parse_rational(std::string_view(t).substr(0, pos - 1));
      }
      value = ExactScalar(Rational(0), coef, d);
    } else {
      value = ExactScalar(parse_rational(t));
    }
    return neg ? -value : value;
  };

  if (split == std::string::npos) return parse_term(s, false);
  ExactScalar first = parse_term(std::string_view(s).substr(0, split), false);
  ExactScalar second = parse_term(std::string_view(s).substr(split + 1), s[split] == '-');
  return first + second;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

}  // namespace strongq
