#include "tsv/scalar.hpp"

#include <cmath>
#include <stdexcept>

#include "tsv/errors.hpp"

namespace tsv {

bool is_square_free(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

std::int64_t combine_tags(std::int64_t lhs, std::int64_t rhs) {
  if (lhs == rhs || rhs == 1) return lhs;
  if (lhs == 1) return rhs;
  throw ExtensionMismatch("cannot mix sqrt(" + std::to_string(lhs) + ") and sqrt(" +
                          std::to_string(rhs) + ") scalars");
}

Scalar::Scalar(Rational rational, Rational surd, std::int64_t d)
    : rational_(std::move(rational)), surd_(std::move(surd)), d_(d) {
  if (!is_square_free(d)) {
    throw std::invalid_argument("extension tag must be a square-free positive integer, got " +
                                std::to_string(d));
  }
  rational_.canonicalize();
  surd_.canonicalize();
  if (d_ == 1) {
    // sqrt(1) = 1
    rational_ += surd_;
    surd_ = 0;
  }
}

Scalar Scalar::conjugate() const {
  Scalar out = *this;
  out.surd_ = -surd_;
  return out;
}

Rational Scalar::norm() const {
  return Rational(rational_ * rational_ - Rational(d_) * surd_ * surd_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Rational n = norm();
  Scalar out;
  out.d_ = d_;
  out.rational_ = rational_ / n;
  out.surd_ = -surd_ / n;
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.rational_ = -rational_;
  out.surd_ = -surd_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  d_ = combine_tags(d_, other.d_);
  rational_ += other.rational_;
  surd_ += other.surd_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  d_ = combine_tags(d_, other.d_);
  rational_ -= other.rational_;
  surd_ -= other.surd_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  d_ = combine_tags(d_, other.d_);
  Rational re = rational_ * other.rational_ + Rational(d_) * surd_ * other.surd_;
  Rational su = rational_ * other.surd_ + surd_ * other.rational_;
  rational_ = std::move(re);
  surd_ = std::move(su);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  combine_tags(d_, other.d_);
  return *this *= other.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  combine_tags(lhs.d_, rhs.d_);
  return lhs.rational_ == rhs.rational_ && lhs.surd_ == rhs.surd_;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::string Scalar::str() const {
  if (is_rational()) return rational_.get_str();
  std::string out;
  if (sgn(rational_) != 0) out = rational_.get_str();
  Rational magnitude = abs(surd_);
  std::string sign = sgn(surd_) < 0 ? "-" : (out.empty() ? "" : "+");
  std::string surd = "sqrt(" + std::to_string(d_) + ")";
  if (magnitude == 1) return out + sign + surd;
  return out + sign + magnitude.get_str() + "*" + surd;
}

double Scalar::approx() const {
  return rational_.get_d() + surd_.get_d() * std::sqrt(static_cast<double>(d_));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// One additive term: rational, or [rational "*"] "sqrt(" d ")" ["/" q].
Scalar parse_term(std::string_view term, bool negative) {
  auto pos = term.find("sqrt(");
  if (pos == std::string_view::npos) {
    Rational r = parse_rational(term);
    return Scalar(negative ? Rational(-r) : r);
  }
  Rational coeff = 1;
  std::string_view head = term.substr(0, pos);
  if (!head.empty()) {
    if (head.back() != '*') throw ParseError("expected '*' before sqrt in \"" + std::string(term) + "\"");
    coeff = parse_rational(head.substr(0, head.size() - 1));
  }
  auto close = term.find(')', pos);
  if (close == std::string_view::npos) throw ParseError("unterminated sqrt( in \"" + std::string(term) + "\"");
  std::string_view radicand = trim(term.substr(pos + 5, close - pos - 5));
  if (!all_digits(radicand)) throw ParseError("sqrt argument must be a positive integer: \"" + std::string(term) + "\"");
  std::int64_t d = std::stoll(std::string(radicand));
  if (!is_square_free(d)) throw ParseError("sqrt argument must be square-free: " + std::string(radicand));
  std::string_view tail = trim(term.substr(close + 1));
  if (!tail.empty()) {
    if (tail.front() != '/') throw ParseError("unexpected text after sqrt(...): \"" + std::string(tail) + "\"");
    Rational den = parse_rational(tail.substr(1));
    if (sgn(den) == 0) throw ParseError("zero denominator in \"" + std::string(term) + "\"");
    coeff /= den;
  }
  if (negative) coeff = -coeff;
  return Scalar(Rational(0), coeff, d);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer n{std::string(num)}, q{std::string(den)};
  if (sgn(q) == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  Rational out(n, q);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

Scalar Scalar::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty scalar");
  Scalar total;
  std::size_t start = 0;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    start = 1;
  }
  int depth = 0;
  for (std::size_t i = start; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : '\0';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (i == text.size() || (depth == 0 && (c == '+' || c == '-') && i > start)) {
      std::string_view term = trim(text.substr(start, i - start));
      if (term.empty()) throw ParseError("malformed scalar \"" + std::string(text) + "\"");
      total += parse_term(term, negative);
      negative = c == '-';
      start = i + 1;
    }
  }
  return total;
}

}  // namespace tsv
