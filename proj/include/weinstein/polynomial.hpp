#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "weinstein/errors.hpp"

namespace weinstein {

using Rational = boost::multiprecision::cpp_rational;
using MultiIndex = std::vector<int>;

/// Polynomial on R^{d+1} stored as multi-index -> coefficient, even in the last
/// variable (every stored nu has even last entry). Zero coefficients are dropped.
template <class Scalar>
class BasicEvenPolynomial {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  explicit BasicEvenPolynomial(int dims) : dims_(dims) {
    if (dims < 2) throw ValidationError("polynomial needs d+1 >= 2 variables");
  }

  static BasicEvenPolynomial constant(int dims, Scalar c) {
    BasicEvenPolynomial p(dims);
    p.add_term(MultiIndex(static_cast<std::size_t>(dims), 0), c);
    return p;
  }

  int dims() const { return dims_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& nu, const Scalar& c) {
    if (static_cast<int>(nu.size()) != dims_) throw ValidationError("multi-index needs d+1 entries");
    for (int v : nu) {
      if (v < 0) throw ValidationError("multi-index entries must be nonnegative");
    }
    if (nu.back() % 2 != 0) {
      throw ValidationError("odd power of the last variable: polynomial must be even in x_{d+1}");
    }
    Scalar& slot = terms_[nu];
    slot += c;
    if (slot == Scalar(0)) terms_.erase(nu);
  }

  /// Largest |nu|; 0 for the zero polynomial.
  int degree() const {
    int deg = 0;
    for (const auto& [nu, c] : terms_) deg = std::max(deg, total(nu));
    return deg;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int l = total(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [l](const auto& t) { return total(t.first) == l; });
  }

  BasicEvenPolynomial& operator+=(const BasicEvenPolynomial& o) {
    require_same(o);
    for (const auto& [nu, c] : o.terms_) add_term(nu, c);
    return *this;
  }
  BasicEvenPolynomial& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [nu, c] : terms_) c *= s;
    return *this;
  }
  friend BasicEvenPolynomial operator+(BasicEvenPolynomial a, const BasicEvenPolynomial& b) {
    return a += b;
  }
  friend BasicEvenPolynomial operator*(Scalar s, BasicEvenPolynomial a) { return a *= s; }
  friend BasicEvenPolynomial operator-(BasicEvenPolynomial a, const BasicEvenPolynomial& b) {
    return a += Scalar(-1) * b;
  }
  friend bool operator==(const BasicEvenPolynomial& a, const BasicEvenPolynomial& b) {
    return a.dims_ == b.dims_ && a.terms_ == b.terms_;
  }

  static int total(const MultiIndex& nu) {
    int s = 0;
    for (int v : nu) s += v;
    return s;
  }

 private:
  void require_same(const BasicEvenPolynomial& o) const {
    if (o.dims_ != dims_) throw ValidationError("polynomials in different dimensions");
  }

  int dims_;
  Terms terms_;
};

using RationalPolynomial = BasicEvenPolynomial<Rational>;
using RealPolynomial = BasicEvenPolynomial<double>;

/// Delta_d + L_alpha applied termwise:
/// x^nu -> sum_j nu_j (nu_j - 1) x^{nu - 2 e_j} + (2 alpha + 1) nu_{d+1} x^{nu - 2 e_{d+1}}.
template <class Scalar>
BasicEvenPolynomial<Scalar> weinstein_laplacian(const BasicEvenPolynomial<Scalar>& p,
                                                const Scalar& alpha) {
  BasicEvenPolynomial<Scalar> out(p.dims());
  const auto last = static_cast<std::size_t>(p.dims() - 1);
  for (const auto& [nu, c] : p.terms()) {
    for (std::size_t j = 0; j <= last; ++j) {
      if (nu[j] < 2) continue;
      MultiIndex mu = nu;
      mu[j] -= 2;
      Scalar k = Scalar(nu[j]) * Scalar(nu[j] - 1);
      if (j == last) k += (Scalar(2) * alpha + Scalar(1)) * Scalar(nu[j]);
      out.add_term(mu, c * k);
    }
  }
  return out;
}

/// Largest |coefficient|.
double coefficient_norm(const RealPolynomial& p);
double coefficient_norm(const RationalPolynomial& p);

/// Exact decision for rational data.
bool is_generalized_harmonic(const RationalPolynomial& p, const Rational& alpha);
/// Real fallback: every coefficient of Delta_W P within 1e-12 ||P||.
bool is_generalized_harmonic(const RealPolynomial& p, double alpha);

double evaluate(const RealPolynomial& p, std::span<const double> x);
double evaluate(const RationalPolynomial& p, std::span<const double> x);
Rational evaluate_exact(const RationalPolynomial& p, std::span<const Rational> x);

RealPolynomial to_real(const RationalPolynomial& p);

/// "3", "-7/4", "0.125", "1e-3" -> exact rational (decimals are read exactly).
Rational parse_rational(const std::string& s);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace weinstein
