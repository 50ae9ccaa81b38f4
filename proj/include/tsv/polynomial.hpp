#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsv/scalar.hpp"

namespace tsv {

/// Rational polynomial, coefficients from the constant term up. Kept
/// normalized: no trailing zero coefficients.
using Polynomial = std::vector<Rational>;

void normalize(Polynomial& p);
int degree(const Polynomial& p);  // -1 for the zero polynomial
Polynomial multiply(const Polynomial& a, const Polynomial& b);
/// (quotient, remainder) of a / b; b nonzero.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& factor, const Polynomial& p);
Rational evaluate(const Polynomial& p, const Rational& x);
std::string format_polynomial(const Polynomial& p);

/// A rational root, if one exists (rational root theorem).
std::optional<Rational> rational_root(const Polynomial& p);

/// A monic quadratic factor of a degree-4 polynomial over Q, if one exists.
std::optional<Polynomial> quadratic_factor(const Polynomial& quartic);

/// A nontrivial monic factor over Q, or nullopt when irreducible. Only
/// degrees up to 4 are supported (std::invalid_argument otherwise).
std::optional<Polynomial> find_factor(const Polynomial& p);

}  // namespace tsv
