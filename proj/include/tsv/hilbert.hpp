#pragma once

#include <vector>

#include "tsv/scalar.hpp"

namespace tsv {

/// A place of Q: 0 stands for the real place, otherwise a prime.
using Place = long;
inline constexpr Place kInfinity = 0;

/// Hilbert symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
/// solution over Q_v. a and b must be nonzero.
int hilbert_symbol(const Rational& a, const Rational& b, Place place);

/// infinity, 2, and every odd prime dividing a numerator or denominator of a, b.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

std::string place_name(Place place);

}  // namespace tsv
