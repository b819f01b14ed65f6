#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "khopos/diagram.hpp"

namespace khopos {

/// Laurent polynomial in two variables with integer coefficients.
class BivariatePolynomial {
 public:
  using Key = std::pair<int, int>;  // (exponent of first, exponent of second)

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::string x, std::string y = "z") : x_(std::move(x)), y_(std::move(y)) {}
  static BivariatePolynomial monomial(std::int64_t c, int ex, int ey, std::string x = "v", std::string y = "z");

  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  const std::string& first_var() const { return x_; }
  std::int64_t coeff(int ex, int ey) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(std::int64_t c, int ex, int ey);

  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial operator-(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(const BivariatePolynomial& o) const;
  BivariatePolynomial scaled(std::int64_t c, int ex, int ey) const;
  /// Substitutes (x, y) -> (x^-1, -y).
  BivariatePolynomial mirrored() const;

  /// Terms ordered by second exponent, then first; e.g. "2*v^2 - v^4 + v^2*z^2".
  std::string to_string() const;
  /// Coefficient of y^e as a polynomial in x only.
  std::map<int, std::int64_t> slice(int ey) const;

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.terms_ == b.terms_;
  }

 private:
  void check_vars(const BivariatePolynomial& o) const;

  std::string x_ = "v";
  std::string y_ = "z";
  std::map<Key, std::int64_t> terms_;
};

/// Skein relation v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1.
/// Throws ResourceError after `maxNodes` resolving-tree evaluations.
BivariatePolynomial homfly(const LinkDiagram& d, std::int64_t maxNodes = 20'000'000);

/// Rewrites P(v, z) in the (alpha, z) normalization with prefactor z^(mu-1).
BivariatePolynomial ito_normalize(const BivariatePolynomial& p, int chi, int components);

BivariatePolynomial ito_recursion(const BivariatePolynomial& hm2, const BivariatePolynomial& hm1, bool nOdd);

enum class HomflyVerdict { Obstructed, Inconclusive };
/// Obstructed exactly when some coefficient is negative.
HomflyVerdict braid_positivity_obstruction(const BivariatePolynomial& h);

}  // namespace khopos
