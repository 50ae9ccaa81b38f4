#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tsv {

using Integer = mpz_class;
using Rational = mpq_class;

/// An element x + y*sqrt(d) of Q(sqrt(d)), d square-free and positive.
///
/// d == 1 is the plain-rational tag; the surd part is then always zero. Values
/// whose surd part is zero combine freely with any tag; two nonzero tags that
/// differ throw ExtensionMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational rational, Rational surd, std::int64_t d);

  const Rational& rational_part() const noexcept { return rational_; }
  const Rational& surd_part() const noexcept { return surd_; }
  std::int64_t d() const noexcept { return d_; }

  bool is_zero() const noexcept { return sgn(rational_) == 0 && sgn(surd_) == 0; }
  bool is_rational() const noexcept { return sgn(surd_) == 0; }

  Scalar conjugate() const;
  /// Field norm x^2 - d*y^2.
  Rational norm() const;
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Exact text form, e.g. "3/2", "-1/2*sqrt(2)", "1+1/3*sqrt(5)".
  std::string str() const;
  /// Only for display; never used to decide anything.
  double approx() const;

  /// Accepts "p/q", "p/q+r/s*sqrt(d)", "sqrt(d)", "-sqrt(d)/2", "r*sqrt(d)".
  static Scalar parse(std::string_view text);

 private:
  Rational rational_{0};
  Rational surd_{0};
  std::int64_t d_ = 1;
};

bool is_square_free(std::int64_t d);
/// Tag of a combination of two scalars; throws ExtensionMismatch.
std::int64_t combine_tags(std::int64_t lhs, std::int64_t rhs);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(const Integer& value) { return sgn(value) == 0; }
inline bool is_zero(const Scalar& value) { return value.is_zero(); }

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);
inline std::string to_string(const Scalar& value) { return value.str(); }

/// Parses "p" or "p/q"; throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace tsv
