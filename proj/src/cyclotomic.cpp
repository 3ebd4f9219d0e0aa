#include "qsg/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace qsg {

namespace {

// Exact division of polynomials with BigInt coefficients (index = exponent,
// divisor monic up to sign handled by Phi recursion, remainder must be zero).
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<BigInt> quot(dn - dd + 1);
  for (int i = dn - dd; i >= 0; --i) {
    BigInt c = num[i + dd] / den[dd];
    quot[i] = c;
    for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("non-exact polynomial division");
  return quot;
}

std::map<unsigned, std::vector<BigInt>>& phi_cache() {
  static std::map<unsigned, std::vector<BigInt>> cache;
  return cache;
}
std::recursive_mutex phi_mutex;

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.  Caller holds phi_mutex.
const std::vector<BigInt>& compute_phi(unsigned n) {
  auto it = phi_cache().find(n);
  if (it != phi_cache().end()) return it->second;
  std::vector<BigInt> num;
  if (n == 1) {
    num = {BigInt(-1), BigInt(1)};
  } else {
    num.assign(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      num = poly_div_exact(std::move(num), compute_phi(d));
    }
  }
  return phi_cache().emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned n) {
  std::lock_guard<std::recursive_mutex> lock(phi_mutex);
  return compute_phi(n);
}

Cyclo Cyclo::reduce(unsigned order, std::vector<Rational> raw) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
  if (raw.size() != order) throw std::invalid_argument("coefficient vector length must equal the order");
  const auto& phi = cyclotomic_polynomial(order);
  const size_t deg = phi.size() - 1;
  for (size_t j = order; j-- > deg;) {
    if (raw[j] == 0) continue;
    Rational c = raw[j];
    raw[j] = 0;
    for (size_t i = 0; i < deg; ++i) raw[j - deg + i] -= c * Rational(phi[i]);
  }
  return Cyclo(order, std::move(raw));
}

Cyclo Cyclo::root_of_unity(unsigned order, long exp) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
  long e = exp % static_cast<long>(order);
  if (e < 0) e += order;
  std::vector<Rational> raw(order);
  raw[static_cast<size_t>(e)] = 1;
  return reduce(order, std::move(raw));
}

bool Cyclo::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclo::is_rational() const {
  for (size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

Cyclo Cyclo::promoted(unsigned new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw std::invalid_argument("promotion target must be a multiple of the order");
  const unsigned k = new_order / order_;
  std::vector<Rational> raw(new_order);
  for (size_t j = 0; j < coeffs_.size(); ++j) raw[j * k] = coeffs_[j];
  return reduce(new_order, std::move(raw));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  const unsigned n = std::lcm(order_, o.order_);
  Cyclo a = promoted(n), b = o.promoted(n);
  for (size_t j = 0; j < n; ++j) a.coeffs_[j] += b.coeffs_[j];
  return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  const unsigned n = std::lcm(order_, o.order_);
  const Cyclo a = promoted(n), b = o.promoted(n);
  std::vector<Rational> raw(n);
  for (size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return reduce(n, std::move(raw));
}

Cyclo Cyclo::conjugate() const { return galois(order_ - 1 == 0 ? 1 : order_ - 1); }

Cyclo Cyclo::galois(unsigned a) const {
  a %= order_;
  if (std::gcd(a, order_) != 1) throw std::invalid_argument("galois exponent must be coprime to the order");
  std::vector<Rational> raw(order_);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    raw[(j * a) % order_] += coeffs_[j];
  }
  return reduce(order_, std::move(raw));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero cyclotomic");
  if (is_rational()) return Cyclo(Rational(1) / coeffs_[0]);
  // 1/x = (prod of the other Galois conjugates) / Norm(x); the norm is the
  // product of all conjugates and is a nonzero rational.
  Cyclo prod(Rational(1));
  for (unsigned a = 2; a < order_; ++a) {
    if (std::gcd(a, order_) != 1) continue;
    prod *= galois(a);
  }
  Cyclo norm = *this * prod;
  if (!norm.is_rational() || norm.coeffs_[0] == 0) throw std::logic_error("cyclotomic norm must be a nonzero rational");
  const Rational inv_norm = Rational(1) / norm.coeffs_[0];
  for (auto& c : prod.coeffs_) c *= inv_norm;
  return prod;
}

bool Cyclo::operator==(const Cyclo& o) const {
  const unsigned n = std::lcm(order_, o.order_);
  return promoted(n).coeffs_ == o.promoted(n).coeffs_;
}

bool Cyclo::operator<(const Cyclo& o) const {
  const unsigned n = std::lcm(order_, o.order_);
  const Cyclo a = promoted(n), b = o.promoted(n);
  for (size_t j = 0; j < n; ++j) {
    if (a.coeffs_[j] != b.coeffs_[j]) return a.coeffs_[j] < b.coeffs_[j];
  }
  return false;
}

std::complex<double> Cyclo::embed() const {
  std::complex<double> z(0.0, 0.0);
  const double two_pi = 2.0 * M_PI;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const double arg = two_pi * static_cast<double>(j) / static_cast<double>(order_);
    z += to_double(coeffs_[j]) * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return z;
}

std::string Cyclo::str() const {
  if (is_rational()) return format_rational(coeffs_[0]);
  std::string out;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    std::string term = format_rational(coeffs_[j]);
    if (j > 0) {
      if (term == "1")
        term.clear();
      else if (term == "-1")
        term = "-";
      else
        term += "*";
      term += "z" + std::to_string(order_);
      if (j > 1) term += "^" + std::to_string(j);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace qsg
