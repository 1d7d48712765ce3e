#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maxfront {

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates. All operations either return the exact normalized result
// or throw std::overflow_error; nothing is rounded silently.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    normalize_from(n, d);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Renders "7/3", or "7" when the denominator is 1.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  // Integer powers only; rational exponents leave the field.
  Rat pow_int(long long e) const {
    if (e < 0) {
      if (num_ == 0) throw std::domain_error("Rat: 0 to negative power");
      return Rat(1) / pow_int(-e);
    }
    Rat base = *this, acc(1);
    while (e > 0) {
      if (e & 1) acc *= base;
      base = (e >>= 1) ? base * base : base;
    }
    return acc;
  }

  // Parses plain decimal literals: optional sign, digits, optional
  // fraction, optional e/E exponent. "1.5" -> 3/2, "25e-2" -> 1/4.
  static Rat from_decimal(std::string_view s) {
    std::size_t i = 0;
    auto fail = [&] {
      throw std::invalid_argument("Rat: bad decimal literal '" +
                                  std::string(s) + "'");
    };
    if (s.empty()) fail();
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    i128 digits = 0;
    long long frac_len = 0, exp10 = 0;
    bool any = false;
    auto push = [&](char c) {
      digits = digits * 10 + (c - '0');
      if (digits > i128(1) << 100) throw std::overflow_error("Rat: literal too long");
      any = true;
    };
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') push(s[i++]);
    if (i < s.size() && s[i] == '.') {
      ++i;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') push(s[i++]), ++frac_len;
    }
    if (!any) fail();
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
      ++i;
      bool eneg = false;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
      if (i == s.size()) fail();
      long long e = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        e = e * 10 + (s[i++] - '0');
        if (e > 64) throw std::overflow_error("Rat: exponent too large");
      }
      exp10 = eneg ? -e : e;
    }
    if (i != s.size()) fail();
    long long net = exp10 - frac_len;
    i128 num = neg ? -digits : digits, den = 1;
    for (; net > 0; --net) num *= 10;
    for (; net < 0; ++net) den *= 10;
    return make(num, den);
  }

  // Exact conversion of a finite double (every finite double is rational).
  static Rat from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rat: non-finite double");
    if (x == 0.0) return Rat(0);
    int e2 = 0;
    double m = std::frexp(x, &e2);  // x = m * 2^e2, |m| in [0.5, 1)
    i128 num = static_cast<long long>(std::ldexp(m, 53));
    long long shift = e2 - 53;
    i128 den = 1;
    if (shift > 60 || shift < -120) throw std::overflow_error("Rat: double out of range");
    if (shift >= 0)
      num <<= shift;
    else
      den <<= -shift;
    return make(num, den);
  }

private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rat make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lim = i128(INT64_MAX);
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("Rat: 64-bit overflow");
    Rat r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  void normalize_from(long long n, long long d) {
    Rat r = make(n, d);
    num_ = r.num_;
    den_ = r.den_;
  }

  long long num_;
  long long den_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace maxfront
