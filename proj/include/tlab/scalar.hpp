#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tlab {

// Exact rational number. Invariants: always reduced to lowest terms,
// denominator > 0. Equality is value equality. All geometry in this
// library runs on Scalar; there is no floating point in any predicate.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(int n) : v_(n) {}
  Scalar(long n) : v_(static_cast<signed long>(n)) {}
  Scalar(long long n) { set_ll(n); }
  Scalar(long long num, long long den);
  explicit Scalar(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Parses "p/q" or "p" (decimal digits, optional sign). Throws on garbage
  // or a zero denominator; the stored value is canonicalized either way.
  static Scalar from_string(const std::string& s);

  // Canonical form: "p/q", or "p" when the denominator is 1; sign on the
  // numerator only.
  std::string str() const { return v_.get_str(); }

  int sign() const { return sgn(v_); }
  Scalar abs() const { return Scalar(::abs(v_)); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }  // rendering only

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

 private:
  void set_ll(long long n);
  mpq_class v_;
};

inline Scalar rat(long long num, long long den = 1) { return Scalar(num, den); }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline const Scalar& min(const Scalar& a, const Scalar& b) { return a < b ? a : b; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace tlab
