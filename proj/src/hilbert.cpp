#include "tsv/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tsv {

namespace {

// a = n/d has the same square class as n*d.
Integer square_class_integer(const Rational& a) { return a.get_num() * a.get_den(); }

// n = p^v * u with p not dividing u.
long split_valuation(const Integer& n, long p, Integer& unit) {
  unit = n;
  long v = 0;
  Integer prime(p);
  while (mpz_divisible_p(unit.get_mpz_t(), prime.get_mpz_t())) {
    unit /= prime;
    ++v;
  }
  return v;
}

int legendre(const Integer& u, long p) {
  Integer prime(p);
  return mpz_legendre(u.get_mpz_t(), prime.get_mpz_t());
}

// epsilon(u) = (u - 1)/2 mod 2, omega(u) = (u^2 - 1)/8 mod 2, for odd u.
int epsilon2(const Integer& u) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 4);
  return r == 3 ? 1 : 0;
}

int omega2(const Integer& u) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

void add_prime_factors(Integer n, std::vector<Place>& out) {
  n = abs(n);
  for (long p = 2; Integer(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n > 1) out.push_back(n.get_si());
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, Place place) {
  if (sgn(a) == 0 || sgn(b) == 0) throw std::invalid_argument("Hilbert symbol of zero");
  if (place == kInfinity) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  if (place < 2) throw std::invalid_argument("invalid place " + std::to_string(place));

  Integer u, w;
  long alpha = split_valuation(square_class_integer(a), place, u);
  long beta = split_valuation(square_class_integer(b), place, w);
  int exponent = 0;
  if (place == 2) {
    exponent = epsilon2(u) * epsilon2(w) + alpha * omega2(w) + beta * omega2(u);
    return exponent % 2 == 0 ? 1 : -1;
  }
  int sign = ((alpha * beta) % 2 == 1 && ((place - 1) / 2) % 2 == 1) ? -1 : 1;
  if (beta % 2 == 1) sign *= legendre(u, place);
  if (alpha % 2 == 1) sign *= legendre(w, place);
  return sign;
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
  std::vector<Place> primes;
  add_prime_factors(a.get_num(), primes);
  add_prime_factors(a.get_den(), primes);
  add_prime_factors(b.get_num(), primes);
  add_prime_factors(b.get_den(), primes);
  primes.push_back(2);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out{kInfinity};
  out.insert(out.end(), primes.begin(), primes.end());
  return out;
}

std::string place_name(Place place) { return place == kInfinity ? "inf" : std::to_string(place); }

}  // namespace tsv
