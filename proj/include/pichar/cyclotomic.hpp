#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pichar/rational.hpp"

namespace pichar {

/// An exact element of the cyclotomic field Q(zeta_n).
///
/// Values are kept in canonical form: coordinates with respect to the power
/// basis 1, zeta, ..., zeta^(phi(n)-1), obtained by reducing modulo the n-th
/// cyclotomic polynomial. Elements that turn out to be rational are stored
/// with conductor 1, so equal field elements of equal conductor compare
/// structurally; mixed conductors are unified to the lcm before comparing.
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_(1, BigRational(0)) {}
  Cyclotomic(const BigRational& value) : conductor_(1), coeffs_(1, value) {}
  Cyclotomic(long long value) : conductor_(1), coeffs_(1, BigRational(value)) {}

  /// Sum of coeff * zeta_conductor^exponent terms; exponents reduced mod n.
  static Cyclotomic from_terms(long long conductor,
                               const std::vector<std::pair<long long, BigRational>>& terms);
  static Cyclotomic root_of_unity(long long n, long long k);

  long long conductor() const { return conductor_; }
  /// Coordinates w.r.t. the power basis of Q(zeta_conductor); size phi(n).
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<BigRational> as_rational() const;
  /// The value as an integer, if it is one.
  std::optional<BigInt> as_integer() const;

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
  Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
  Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

  Cyclotomic scaled(const BigRational& factor) const;

  /// Image under zeta -> zeta^(-1) (complex conjugation).
  Cyclotomic conjugate() const;
  /// this * conjugate(this); totally real and nonnegative.
  Cyclotomic norm_squared() const;
  /// Galois image zeta -> zeta^k; requires gcd(k, conductor) = 1.
  Cyclotomic galois(long long k) const;

  Cyclotomic pow(long long e) const;
  /// Least m >= 1 with this^m = 1, or nullopt if not a root of unity.
  std::optional<long long> multiplicative_order() const;

  /// Rewrites the value with the given conductor (a multiple of the current one).
  Cyclotomic with_conductor(long long n) const;

  bool operator==(const Cyclotomic& rhs) const;
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

  /// Total order used for canonical sorting. Values whose leading power-basis
  /// coordinates are larger come first, so 1 precedes every other root of
  /// unity; the order has no analytic meaning.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  /// "E(n)^k" term syntax with rational coefficients; rationals print bare.
  std::string to_string() const;
  static Cyclotomic parse(const std::string& text);

private:
  Cyclotomic(long long conductor, std::vector<BigRational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}
  void canonicalize();

  long long conductor_;
  std::vector<BigRational> coeffs_;
};

long long euler_phi(long long n);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<BigInt>& cyclotomic_polynomial(long long n);

/// Least prime factor table-free prime test for small n.
bool is_prime(long long n);
std::vector<long long> prime_factors(long long n);

}  // namespace pichar
