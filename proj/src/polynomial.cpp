#include "tsv/polynomial.hpp"

#include <stdexcept>

namespace tsv {

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer k = 1; k * k <= n; ++k) {
    if (mpz_divisible_p(n.get_mpz_t(), k.get_mpz_t())) {
      out.push_back(k);
      Integer other = n / k;
      if (other != k) out.push_back(other);
    }
  }
  return out;
}

// Integer coefficients of a nonzero rational multiple of p.
std::vector<Integer> clear_denominators(const Polynomial& p) {
  Integer lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : p) out.push_back(c.get_num() * (lcm / c.get_den()));
  return out;
}

Polynomial monic(Polynomial p) {
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

}  // namespace

void normalize(Polynomial& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Polynomial& p) {
  Polynomial q = p;
  normalize(q);
  return static_cast<int>(q.size()) - 1;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  normalize(out);
  return out;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  Polynomial divisor = b;
  normalize(divisor);
  if (divisor.empty()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = a;
  normalize(rem);
  if (rem.size() < divisor.size()) return {{}, rem};
  Polynomial quot(rem.size() - divisor.size() + 1, Rational(0));
  while (rem.size() >= divisor.size() && !rem.empty()) {
    std::size_t shift = rem.size() - divisor.size();
    Rational factor = rem.back() / divisor.back();
    quot[shift] = factor;
    for (std::size_t i = 0; i < divisor.size(); ++i) rem[shift + i] -= factor * divisor[i];
    normalize(rem);
  }
  normalize(quot);
  return {quot, rem};
}

bool divides(const Polynomial& factor, const Polynomial& p) { return divide(p, factor).second.empty(); }

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational out = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out = out * x + *it;
  return out;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    const Rational& c = p[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::optional<Rational> rational_root(const Polynomial& p) {
  Polynomial q = p;
  normalize(q);
  if (q.size() < 2) return std::nullopt;
  if (sgn(q.front()) == 0) return Rational(0);
  auto ints = clear_denominators(q);
  for (const auto& num : divisors(ints.front())) {
    for (const auto& den : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        Rational candidate(num * sign, den);
        candidate.canonicalize();
        if (sgn(evaluate(q, candidate)) == 0) return candidate;
      }
    }
  }
  return std::nullopt;
}

std::optional<Polynomial> quadratic_factor(const Polynomial& quartic) {
  Polynomial p = quartic;
  normalize(p);
  if (p.size() != 5) throw std::invalid_argument("quadratic_factor expects a quartic");
  p = monic(std::move(p));
  // y = D x turns p into a monic integer quartic q(y) = D^4 p(y / D).
  Integer D = 1;
  for (const auto& c : p) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> q(5);
  Integer power = 1;
  for (int k = 4; k >= 0; --k) {
    Rational scaled = p[k] * Rational(power);
    q[k] = scaled.get_num();
    power *= D;
  }
  // By Gauss's lemma q = (y^2 + a y + b)(y^2 + c y + e) with integer a, b, c, e.
  const Integer& q0 = q[0];
  const Integer& q1 = q[1];
  const Integer& q2 = q[2];
  const Integer& q3 = q[3];
  auto to_x = [&D](const Integer& a, const Integer& b) {
    Rational lin(a, D), con(b, D * D);
    lin.canonicalize();
    con.canonicalize();
    return Polynomial{con, lin, Rational(1)};
  };
  if (sgn(q0) == 0) {
    // p = x * cubic; a quadratic factor exists iff the cubic has a root r.
    Polynomial cubic(p.begin() + 1, p.end());
    auto r = rational_root(cubic);
    if (!r) return std::nullopt;
    return Polynomial{Rational(0), Rational(-*r), Rational(1)};
  }
  for (const auto& dv : divisors(q0)) {
    for (int sign : {1, -1}) {
      Integer b = dv * sign;
      Integer e = q0 / b;
      if (b != e) {
        // a + c = q3, a e + b c = q1  =>  a (e - b) = q1 - b q3
        Integer num = q1 - b * q3;
        Integer den = e - b;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
        Integer a = num / den;
        Integer c = q3 - a;
        if (a * c + b + e == q2) return to_x(a, b);
      } else {
        if (q1 != b * q3) continue;
        // a + c = q3, a c = q2 - 2b
        Integer disc = q3 * q3 - 4 * (q2 - 2 * b);
        if (sgn(disc) < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        Integer root = sqrt(disc);
        Integer twice_a = q3 + root;
        if (!mpz_even_p(twice_a.get_mpz_t())) continue;
        return to_x(Integer(twice_a / 2), b);
      }
    }
  }
  return std::nullopt;
}

std::optional<Polynomial> find_factor(const Polynomial& p) {
  Polynomial q = p;
  normalize(q);
  const int deg = static_cast<int>(q.size()) - 1;
  if (deg > 4) throw std::invalid_argument("irreducibility test supports degree <= 4");
  if (deg <= 1) return std::nullopt;
  if (auto r = rational_root(q)) return Polynomial{Rational(-*r), Rational(1)};
  if (deg == 4) return quadratic_factor(q);
  return std::nullopt;
}

}  // namespace tsv
