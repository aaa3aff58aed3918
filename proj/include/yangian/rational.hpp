#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace yangian {

/// Exact arbitrary-precision rational. Canonical form is maintained by GMP:
/// denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(long n) : q_(static_cast<long>(n)) {}
  Rat(int n) : q_(n) {}
  Rat(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "num" or "num/den".
  static Rat parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rat: bad literal '" + text + "'");
    q.canonicalize();
    return Rat(q);
  }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

  Rat pow(unsigned e) const {
    Rat r(1), base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  /// Textual form "num" or "num/den" with den > 0.
  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::string>{}(q_.get_num().get_str());
    h ^= std::hash<std::string>{}(q_.get_den().get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  const mpq_class& raw() const { return q_; }

private:
  mpq_class q_;
};

inline Rat operator*(long a, const Rat& b) { return Rat(a) * b; }

}  // namespace yangian

template <>
struct std::hash<yangian::Rat> {
  std::size_t operator()(const yangian::Rat& q) const { return q.hash(); }
};
