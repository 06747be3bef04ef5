#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace labelcap {

// Arbitrary-precision signed integer, sized for exact polynomial sign
// evaluation and path-count accumulation. Magnitude is little-endian
// base-2^32; zero has empty magnitude and sign 0.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT: implicit by design, mirrors int literals

  static BigInt zero() { return BigInt(); }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt operator+(const BigInt& rhs) const;
  BigInt operator-(const BigInt& rhs) const;
  BigInt operator*(const BigInt& rhs) const;
  BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
  BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
  BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

  // *this * 2^bits, bits >= 0.
  BigInt shifted_left(unsigned bits) const;

  bool operator==(const BigInt& rhs) const;
  bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
  bool operator<(const BigInt& rhs) const;
  bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
  bool operator>(const BigInt& rhs) const { return rhs < *this; }
  bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

  std::string to_string() const;

  // Value as double; exact only while the value fits the mantissa.
  double to_double() const;

 private:
  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void trim();

  int sign_ = 0;
  std::vector<std::uint32_t> mag_;
};

}  // namespace labelcap
