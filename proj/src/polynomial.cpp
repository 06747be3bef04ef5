#include "labelcap/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace labelcap {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::from_terms(
    std::initializer_list<std::pair<int, std::int64_t>> terms) {
  IntPolynomial p;
  for (const auto& [deg, c] : terms) {
    if (deg < 0) throw std::invalid_argument("negative degree");
    if (p.coeffs_.size() <= static_cast<std::size_t>(deg)) p.coeffs_.resize(deg + 1, 0);
    p.coeffs_[deg] += c;
  }
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t coeff) {
  return from_terms({{degree, coeff}});
}

std::int64_t IntPolynomial::coeff(int degree) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= coeffs_.size()) return 0;
  return coeffs_[degree];
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  IntPolynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] = (i < coeffs_.size() ? coeffs_[i] : 0) +
                   (i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0);
  }
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  IntPolynomial neg = rhs;
  for (auto& c : neg.coeffs_) c = -c;
  return *this + neg;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return IntPolynomial();
  IntPolynomial r;
  r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

int IntPolynomial::sign_at(double x) const {
  if (coeffs_.empty()) return 0;
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite evaluation point");
  // Decompose x = M * 2^(-S) with integer M and S >= 0 (exact for doubles),
  // then evaluate p(x) * 2^(S*deg) = sum c_i * M^i * 2^(S*(deg-i)) by Horner.
  int exp = 0;
  double fr = std::frexp(x, &exp);                 // x = fr * 2^exp, |fr| in [0.5, 1)
  auto mant = static_cast<std::int64_t>(std::ldexp(fr, 53));  // exact integer
  BigInt big_m(mant);
  long shift = 53 - exp;
  if (shift < 0) {
    big_m = big_m.shifted_left(static_cast<unsigned>(-shift));
    shift = 0;
  }
  const int d = degree();
  BigInt acc(coeffs_[d]);
  for (int i = d - 1; i >= 0; --i) {
    acc = acc * big_m +
          BigInt(coeffs_[i]).shifted_left(static_cast<unsigned>(shift) * (d - i));
  }
  return acc.sign();
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + static_cast<double>(coeffs_[i]);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) {
      out += c > 0 ? " + " : " - ";
    } else if (c < 0) {
      out += "-";
    }
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || i == 0) out += std::to_string(a);
    if (i >= 1) {
      out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

double largest_real_root(const IntPolynomial& p, double lo, double hi, double tol) {
  if (p.degree() < 1) throw std::invalid_argument("constant polynomial has no root");
  if (!(lo < hi)) throw std::invalid_argument("empty bracket");

  if (p.sign_at(hi) == 0) return hi;

  // Descending scan: the first sign change from the top brackets the largest
  // root in [lo, hi], assuming subinterval width below the root separation.
  constexpr int kCells = 1024;
  double b = hi;
  int sb = p.sign_at(b);
  double a = b;
  int sa = sb;
  bool found = false;
  for (int cell = 1; cell <= kCells; ++cell) {
    a = hi - (hi - lo) * cell / kCells;
    if (cell == kCells) a = lo;  // avoid rounding drift at the low end
    sa = p.sign_at(a);
    if (sa == 0) return a;
    if (sa != sb) {
      found = true;
      break;
    }
    b = a;
    sb = sa;
  }
  if (!found) throw std::runtime_error("no sign change of " + p.to_string() +
                                       " in bracket - formula misapplied?");

  while (b - a > tol) {
    double mid = a + (b - a) / 2;
    if (mid <= a || mid >= b) break;  // double resolution reached
    int sm = p.sign_at(mid);
    if (sm == 0) return mid;
    if (sm == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return a + (b - a) / 2;
}

double largest_real_root_for_capacity(const IntPolynomial& p, int q, double tol) {
  return largest_real_root(p, 1.0 + 1e-9, static_cast<double>(q) + 1.0, tol);
}

}  // namespace labelcap
