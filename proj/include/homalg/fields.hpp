#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homalg {

// Exact rational scalar. Arbitrary-precision, always normalized.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& x) { return x == 0; }
inline std::string to_string(const Rational& x) { return x.str(); }

inline Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

// Prime field F_p with a process-wide modulus. One computation uses one
// field; the CLI and tests set the modulus once before building anything.
class Fp {
 public:
  Fp() = default;
  Fp(long long v) : v_(norm(v)) {}

  static void set_modulus(long long p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("modulus must be prime");
    p_ = p;
  }
  static long long modulus() { return p_; }

  long long value() const { return v_; }

  Fp operator-() const { return Fp(-v_); }
  Fp& operator+=(const Fp& o) { v_ = norm(v_ + o.v_); return *this; }
  Fp& operator-=(const Fp& o) { v_ = norm(v_ - o.v_); return *this; }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<long long>(static_cast<__int128>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0);
  }

  static bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  static long long norm(long long v) {
    v %= p_;
    return v < 0 ? v + p_ : v;
  }
  long long v_ = 0;
  static inline long long p_ = 2;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

// Canonical integer lift of a scalar (the representative in [0, p) for F_p).
inline long long scalar_to_integer(const Fp& x) { return x.value(); }
inline long long scalar_to_integer(const Rational& x) {
  if (boost::multiprecision::denominator(x) != 1)
    throw std::domain_error("non-integral scalar has no integer lift");
  return static_cast<long long>(boost::multiprecision::numerator(x));
}

// Which exact field a workspace runs over.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  long long characteristic = 0;  // 0 for Q, the prime p otherwise

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime_field(long long p) {
    if (!Fp::is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    return {Kind::PrimeField, p};
  }
};

template <class K>
K scalar_from_string(const std::string& s);

template <>
inline Rational scalar_from_string<Rational>(const std::string& s) {
  return rational_from_string(s);
}

template <>
inline Fp scalar_from_string<Fp>(const std::string& s) {
  return Fp(std::stoll(s));
}

}  // namespace homalg
