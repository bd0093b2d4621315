#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ftspan {

struct RationalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational number on 64-bit numerator/denominator, plus a distinct
/// +infinity value (den == 0) that absorbs addition and compares greater
/// than every finite value.  All intermediate products go through 128-bit
/// arithmetic; results that do not fit back into 64 bits throw.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d);

  static Rat infinity() {
    Rat r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  bool is_infinite() const { return den_ == 0; }
  bool is_finite() const { return den_ != 0; }
  long long num() const { return num_; }
  long long den() const { return den_; }

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  /// "p/q", or just "p" when integral, or "inf".
  std::string str() const;
  double to_double() const;

  /// Accepts "p/q", plain integers, and decimals like "2.5".
  static Rat parse(std::string_view text);

 private:
  long long num_;
  long long den_;  // > 0 for finite values, 0 for infinity
};

inline Rat operator*(long long a, const Rat& b) { return Rat(a) * b; }

}  // namespace ftspan
