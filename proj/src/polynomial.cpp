#include "weinstein/polynomial.hpp"

#include <cctype>
#include <cstdlib>

namespace weinstein {

namespace {

template <class Scalar, class Pow>
Scalar eval_terms(const BasicEvenPolynomial<Scalar>& p, std::span<const Scalar> x, Pow pw) {
  if (static_cast<int>(x.size()) != p.dims()) throw ValidationError("point needs d+1 coordinates");
  Scalar sum = 0;
  for (const auto& [nu, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t j = 0; j < nu.size(); ++j) t *= pw(x[j], nu[j]);
    sum += t;
  }
  return sum;
}

void require_homogeneous(bool h) {
  if (!h) throw ValidationError("harmonicity is defined for homogeneous polynomials only");
}

}  // namespace

double coefficient_norm(const RealPolynomial& p) {
  double m = 0.0;
  for (const auto& [nu, c] : p.terms()) m = std::max(m, std::abs(c));
  return m;
}

double coefficient_norm(const RationalPolynomial& p) { return coefficient_norm(to_real(p)); }

bool is_generalized_harmonic(const RationalPolynomial& p, const Rational& alpha) {
  require_homogeneous(p.is_homogeneous());
  return weinstein_laplacian(p, alpha).is_zero();
}

bool is_generalized_harmonic(const RealPolynomial& p, double alpha) {
  require_homogeneous(p.is_homogeneous());
  const double tol = 1e-12 * coefficient_norm(p);
  const RealPolynomial lap = weinstein_laplacian(p, alpha);
  for (const auto& [nu, c] : lap.terms()) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

double evaluate(const RealPolynomial& p, std::span<const double> x) {
  return eval_terms<double>(p, x, [](double b, int e) {
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
  });
}

double evaluate(const RationalPolynomial& p, std::span<const double> x) {
  return evaluate(to_real(p), x);
}

Rational evaluate_exact(const RationalPolynomial& p, std::span<const Rational> x) {
  return eval_terms<Rational>(p, x, [](const Rational& b, int e) {
    Rational r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
  });
}

RealPolynomial to_real(const RationalPolynomial& p) {
  RealPolynomial r(p.dims());
  for (const auto& [nu, c] : p.terms()) r.add_term(nu, c.convert_to<double>());
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ValidationError("empty rational literal");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const Rational num = parse_rational(s.substr(0, slash));
    const Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
    return num / den;
  }
  // [sign] digits [. digits] [e [sign] digits]
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  boost::multiprecision::cpp_int mant = 0;
  int scale = 0;
  bool digits = false, dot = false;
  for (; i < s.size(); ++i) {
    const char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mant = mant * 10 + (ch - '0');
      if (dot) --scale;
      digits = true;
    } else if (ch == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) throw ValidationError("not a rational literal: '" + text + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    const std::string ex = s.substr(i + 1);
    char* end = nullptr;
    const long e = std::strtol(ex.c_str(), &end, 10);
    if (ex.empty() || *end != '\0' || std::abs(e) > 400) {
      throw ValidationError("bad exponent in '" + text + "'");
    }
    scale += static_cast<int>(e);
    i = s.size();
  }
  if (i != s.size()) throw ValidationError("not a rational literal: '" + text + "'");
  Rational r(mant);
  const boost::multiprecision::cpp_int ten = boost::multiprecision::pow(
      boost::multiprecision::cpp_int(10), static_cast<unsigned>(std::abs(scale)));
  if (scale >= 0) {
    r *= ten;
  } else {
    r /= ten;
  }
  return neg ? -r : r;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace weinstein
