// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace pnet {

// Arbitrary-precision natural number, base 2^32. Only the handful of
// operations the bound formulas need.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v) {
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
      ++bits;
      top >>= 1;
    }
    return bits;
  }

  static int compare(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
  }

  friend bool operator==(const BigNat& a, const BigNat& b) { return compare(a, b) == 0; }
  friend bool operator<(const BigNat& a, const BigNat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigNat& a, const BigNat& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigNat& a, const BigNat& b) { return compare(a, b) >= 0; }

  friend BigNat operator+(const BigNat& a, const BigNat& b) {
    BigNat r;
    std::uint64_t carry = 0;
    std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t s = carry;
      if (i < a.limbs_.size()) s += a.limbs_[i];
      if (i < b.limbs_.size()) s += b.limbs_[i];
      r.limbs_.push_back(static_cast<std::uint32_t>(s));
      carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  friend BigNat operator*(const BigNat& a, const BigNat& b) {
    BigNat r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = r.limbs_[i + j] +
                            static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      std::size_t k = i + b.limbs_.size();
      while (carry) {
        std::uint64_t cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  // a^e, refusing to materialize results beyond max_bits (returns false).
  static bool pow(const BigNat& base, std::uint64_t e, std::size_t max_bits, BigNat& out) {
    if (e > 0 && base.bit_length() > 0 &&
        (base.bit_length() - 1) * static_cast<std::size_t>(e) + 1 > max_bits)
      return false;
    BigNat acc(1), b = base;
    while (e) {
      if (e & 1) {
        acc = acc * b;
        if (acc.bit_length() > max_bits) return false;
      }
      e >>= 1;
      if (e) {
        b = b * b;
        if (b.bit_length() > max_bits) return false;
      }
    }
    out = acc;
    return true;
  }

  std::uint64_t to_u64_saturating() const {
    if (limbs_.size() > 2) return UINT64_MAX;
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
  }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> t = limbs_;
    std::string digits;
    while (!t.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = t.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | t[i];
        t[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!t.empty() && t.back() == 0) t.pop_back();
      for (int i = 0; i < 9; ++i) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    return std::string(digits.rbegin(), digits.rend());
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
  std::vector<std::uint32_t> limbs_;  // little endian
};

// A bound value that may be too large to materialize. `symbolic` carries a
// printable expression when `finite` is false or materialization overflowed.
struct Bound {
  bool exact = true;        // value holds the exact bound
  BigNat value;             // meaningful when exact
  std::string expression;   // always set, human-readable

  std::string to_string() const { return exact ? value.to_string() : expression; }

  // steps <= bound? Non-exact bounds are astronomically large by
  // construction, so they dominate any measured count.
  bool at_least(std::uint64_t steps) const {
    return exact ? BigNat(steps) <= value : true;
  }
};

}  // namespace pnet
