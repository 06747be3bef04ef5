#include "labelcap/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace labelcap {

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid UB on INT64_MIN.
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += (std::int64_t{1} << 32);
    r.push_back(static_cast<std::uint32_t>(d));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
  if (sign_ == 0) return rhs;
  if (rhs.sign_ == 0) return *this;
  BigInt r;
  if (sign_ == rhs.sign_) {
    r.sign_ = sign_;
    r.mag_ = add_mag(mag_, rhs.mag_);
    return r;
  }
  int cmp = compare_mag(mag_, rhs.mag_);
  if (cmp == 0) return BigInt();
  if (cmp > 0) {
    r.sign_ = sign_;
    r.mag_ = sub_mag(mag_, rhs.mag_);
  } else {
    r.sign_ = rhs.sign_;
    r.mag_ = sub_mag(rhs.mag_, mag_);
  }
  return r;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
  if (sign_ == 0 || rhs.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = sign_ * rhs.sign_;
  r.mag_.assign(mag_.size() + rhs.mag_.size(), 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
      std::uint64_t cur = r.mag_[i + j] +
                          static_cast<std::uint64_t>(mag_[i]) * rhs.mag_[j] + carry;
      r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.mag_.size();
    while (carry) {
      std::uint64_t cur = r.mag_[k] + carry;
      r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::shifted_left(unsigned bits) const {
  if (sign_ == 0 || bits == 0) return *this;
  BigInt r;
  r.sign_ = sign_;
  unsigned words = bits / 32;
  unsigned rem = bits % 32;
  r.mag_.assign(words, 0);
  std::uint32_t carry = 0;
  for (std::uint32_t w : mag_) {
    if (rem == 0) {
      r.mag_.push_back(w);
    } else {
      r.mag_.push_back((w << rem) | carry);
      carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(w) >> (32 - rem));
    }
  }
  if (carry) r.mag_.push_back(carry);
  r.trim();
  return r;
}

bool BigInt::operator==(const BigInt& rhs) const {
  return sign_ == rhs.sign_ && mag_ == rhs.mag_;
}

bool BigInt::operator<(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ < rhs.sign_;
  int cmp = compare_mag(mag_, rhs.mag_);
  return sign_ >= 0 ? cmp < 0 : cmp > 0;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  // Repeated division by 1e9.
  std::vector<std::uint32_t> work = mag_;
  std::string digits;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

double BigInt::to_double() const {
  double v = 0.0;
  for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
  return sign_ < 0 ? -v : v;
}

}  // namespace labelcap
