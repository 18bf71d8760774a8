#pragma once

// Polynomials in X with rational coefficients and the two integration
// products, computed from calculus (integrate, differentiate, multiply)
// rather than from closed-form structure constants.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace oracle {

using Poly = std::map<std::size_t, mpq_class>;

inline Poly monomial(std::size_t k) { return Poly{{k, mpq_class(1)}}; }

inline void clean(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline Poly add(Poly a, const Poly& b, const mpq_class& s = 1) {
  for (const auto& [k, c] : b) a[k] += s * c;
  clean(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) out[i + j] += x * y;
  }
  clean(out);
  return out;
}

/// integral from 0 to X
inline Poly integrate(const Poly& a) {
  Poly out;
  for (const auto& [k, c] : a) out[k + 1] = c / mpq_class(static_cast<long>(k + 1));
  return out;
}

inline Poly derivative(const Poly& a) {
  Poly out;
  for (const auto& [k, c] : a) {
    if (k > 0) out[k - 1] = c * mpq_class(static_cast<long>(k));
  }
  clean(out);
  return out;
}

inline Poly truncate(Poly p, std::size_t n) {
  for (auto it = p.begin(); it != p.end();) it = it->first > n ? p.erase(it) : std::next(it);
  return p;
}

/// a*b = b * integral(a)
inline Poly right_product(const Poly& a, const Poly& b) { return mul(b, integrate(a)); }

/// a o b = integral(b * a')
inline Poly left_product(const Poly& a, const Poly& b) { return integrate(mul(b, derivative(a))); }

/// Dense c[i][j][k] of the truncated model on X^0..X^n.
inline std::vector<std::vector<std::vector<mpq_class>>> table(std::size_t n, bool right) {
  std::vector<std::vector<std::vector<mpq_class>>> c(
      n + 1, std::vector<std::vector<mpq_class>>(n + 1, std::vector<mpq_class>(n + 1)));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const Poly p = right ? right_product(monomial(i), monomial(j))
                           : left_product(monomial(i), monomial(j));
      for (const auto& [k, v] : truncate(p, n)) c[i][j][k] = v;
    }
  }
  return c;
}

}  // namespace oracle
