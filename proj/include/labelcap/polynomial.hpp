#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "labelcap/bigint.hpp"

namespace labelcap {

// Integer-coefficient polynomial, coefficients in ascending degree order.
// Coefficient arithmetic is exact; only root extraction is floating point.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> ascending_coeffs);

  // Builds from (degree, coefficient) terms; repeated degrees accumulate.
  static IntPolynomial from_terms(
      std::initializer_list<std::pair<int, std::int64_t>> terms);
  static IntPolynomial monomial(int degree, std::int64_t coeff = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int degree) const;
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

  // Exact sign of p(x) for any finite double x (every double is a dyadic
  // rational, so the sign is computed in integer arithmetic, never rounded).
  int sign_at(double x) const;

  double evaluate(double x) const;

  // Human-readable form like "x^5 - x^4 - x^3 + x^2 - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;  // coeffs_[i] multiplies x^i
};

// Largest real root of p in [lo, hi] to absolute tolerance tol.
//
// A descending scan over subintervals of [lo, hi] locates the topmost sign
// change, which bisection then refines. Sign evaluation is exact, so the
// only approximation is the final interval width. Throws std::runtime_error
// when no sign change exists in the bracket (a misapplied formula).
double largest_real_root(const IntPolynomial& p, double lo, double hi,
                         double tol = 1e-12);

// Default bracket for capacity polynomials: (1 + 1e-9, q + 1]. Every theorem
// polynomial has its Perron-matching root strictly above one and the spectral
// radius of a q-ary presentation is at most q.
double largest_real_root_for_capacity(const IntPolynomial& p, int q,
                                      double tol = 1e-12);

}  // namespace labelcap
