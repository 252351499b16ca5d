#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace genus {

// Exact rational scalar over checked 64-bit integers. Everything in this
// project is tiny (grid denominators <= 48, matrix entries in {0,+-1/2,+-1,+-2}),
// so an overflow is always a logic error: we throw instead of wrapping.
class Frac {
 public:
  constexpr Frac() : num_(0), den_(1) {}
  constexpr Frac(std::int64_t n) : num_(n), den_(1) {}
  Frac(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Frac operator+(const Frac& a, const Frac& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num_ == 0) throw std::domain_error("Frac: division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Frac operator-() const { return Frac(-num_, den_); }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }
  Frac& operator/=(const Frac& o) { return *this = *this / o; }

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
  friend bool operator<(const Frac& a, const Frac& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
  friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

  // Largest integer <= *this.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  // Fractional part in [0, 1).
  Frac frac_part() const { return *this - Frac(floor()); }

  Frac abs() const { return num_ < 0 ? -*this : *this; }

  // Reduced "p/q" serialization, e.g. "-3/4", "0/1", "5/1".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Frac parse(const std::string& s);

 private:
  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static Frac from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Frac: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Frac: 64-bit overflow");
    Frac f;
    f.num_ = static_cast<std::int64_t>(n);
    f.den_ = static_cast<std::int64_t>(d);
    return f;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Frac: zero denominator");
    if (den_ < 0) {
      if (num_ == INT64_MIN || den_ == INT64_MIN)
        throw std::overflow_error("Frac: 64-bit overflow");
      num_ = -num_; den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace genus
