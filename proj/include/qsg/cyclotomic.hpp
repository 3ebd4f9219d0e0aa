#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qsg/rational.hpp"

namespace qsg {

// Element of the cyclotomic field Q(zeta_N).  Stored as a length-N vector of
// rational coefficients of 1, zeta, ..., zeta^{N-1}, kept in the canonical
// reduced form modulo the N-th cyclotomic polynomial Phi_N: all coefficients
// at exponents >= deg Phi_N = phi(N) are zero.  Two values of the same order
// are equal iff their coefficient vectors are equal; values of different
// orders are compared after promotion to the lcm order.
class Cyclo {
 public:
  Cyclo() : order_(1), coeffs_(1) {}
  explicit Cyclo(const Rational& r) : order_(1), coeffs_{r} {}
  explicit Cyclo(long n) : order_(1), coeffs_{Rational(n)} {}

  // Canonical reduction of sum_j raw[j] zeta_order^j.  order >= 1,
  // raw.size() == order.
  static Cyclo reduce(unsigned order, std::vector<Rational> raw);

  // zeta_order^exp.
  static Cyclo root_of_unity(unsigned order, long exp);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Valid only when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  Cyclo promoted(unsigned new_order) const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  Cyclo conjugate() const;            // zeta^j -> zeta^{N-j}
  Cyclo galois(unsigned a) const;     // zeta^j -> zeta^{aj}, gcd(a, N) = 1
  Cyclo inverse() const;              // exact; throws on zero
  Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  // Deterministic total order (on promoted coefficient vectors); used for
  // palette sorting and map keys, no arithmetic meaning.
  bool operator<(const Cyclo& o) const;

  std::complex<double> embed() const;

  // Rational values render as "p/q"; other values as a polynomial in zN.
  std::string str() const;

 private:
  Cyclo(unsigned order, std::vector<Rational> reduced)
      : order_(order), coeffs_(std::move(reduced)) {}

  unsigned order_;
  std::vector<Rational> coeffs_;
};

// Coefficients of Phi_N, degree phi(N), monic, index = exponent.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned n);

}  // namespace qsg
