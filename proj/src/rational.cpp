#include "ftspan/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

namespace ftspan {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw RationalError("rational overflow");
  }
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rat make(i128 n, i128 d) {
  if (d == 0) throw RationalError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rat(narrow(n), narrow(d));
}

}  // namespace

Rat::Rat(long long n, long long d) : num_(n), den_(d) {
  if (d == 0) throw RationalError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::operator+(const Rat& o) const {
  if (is_infinite() || o.is_infinite()) return infinity();
  return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
  if (o.is_infinite()) throw RationalError("cannot subtract infinity");
  if (is_infinite()) return infinity();
  return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
}

Rat Rat::operator*(const Rat& o) const {
  if (is_infinite() || o.is_infinite()) {
    if (num_ == 0 || o.num_ == 0) throw RationalError("0 * infinity undefined");
    return infinity();
  }
  return make(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_infinite()) {
    if (is_infinite()) throw RationalError("infinity / infinity undefined");
    return Rat(0);
  }
  if (o.num_ == 0) throw RationalError("division by zero");
  if (is_infinite()) return infinity();
  return make(i128(num_) * o.den_, i128(den_) * o.num_);
}

bool Rat::operator<(const Rat& o) const {
  if (is_infinite()) return false;
  if (o.is_infinite()) return true;
  return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Rat::str() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rat::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rat Rat::parse(std::string_view text) {
  auto bad = [&] { return RationalError("bad rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (text == "inf") return infinity();

  auto parse_ll = [&](std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw bad();
    return v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long n = parse_ll(text.substr(0, slash));
    long long d = parse_ll(text.substr(slash + 1));
    if (d == 0) throw bad();
    return Rat(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) throw bad();
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg || (!whole.empty() && whole[0] == '+')) whole.remove_prefix(1);
    long long w = whole.empty() ? 0 : parse_ll(whole);
    long long f = parse_ll(frac);
    if (w < 0 || f < 0) throw bad();
    long long scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    i128 n = i128(w) * scale + f;
    if (neg) n = -n;
    return make(n, scale);
  }
  return Rat(parse_ll(text));
}

}  // namespace ftspan
