// Copyright 2026 The colorpack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLORPACK_RATIONAL_HPP_
#define COLORPACK_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace colorpack {

// Exact rational arithmetic. Feasibility comparisons against bin sizes must
// be exact: unit-mode instances carry 1/n entries and a bin is infeasible the
// moment a coordinate exceeds B by any amount, including 1/n.
//
// Denominators stay tiny at the scales this library runs at (they divide the
// vertex count of the source hypergraph), so a normalized int64 pair with
// 128-bit intermediates is ample.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  // Implicit from integers so that binary-mode code reads naturally.
  constexpr Rational(long long n) : num_(n), den_(1) {}  // NOLINT
  constexpr Rational(int n) : num_(n), den_(1) {}        // NOLINT

  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  // Accepts "a/b" or a bare integer "a".
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(parse_int(text));
      }
      return Rational(parse_int(text.substr(0, slash)),
                      parse_int(text.substr(slash + 1)));
    } catch (const std::domain_error&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "num" when integral, "num/den" otherwise.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return fraction_str();
  }
  // Always "num/den" (canonical lowest terms, positive denominator).
  std::string fraction_str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational& operator+=(const Rational& o) {
    *this = from_wide(wide(num_) * o.den_ + wide(o.num_) * den_,
                      wide(den_) * o.den_);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += Rational(-o.num_, o.den_); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using wide = __int128;

  static long long parse_int(const std::string& s) {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  }

  static Rational from_wide(wide num, wide den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const wide g = gcd_wide(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr wide kMax = INT64_MAX;
    if (num > kMax || num < -kMax || den > kMax) {
      throw std::overflow_error("rational overflow");
    }
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static wide gcd_wide(wide a, wide b) {
    while (b != 0) {
      const wide t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_;
  long long den_;
};

}  // namespace colorpack

#endif  // COLORPACK_RATIONAL_HPP_
