#ifndef BELTRAMI_POLYNOMIAL_HPP
#define BELTRAMI_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace beltrami {

// Exact rational scalar. All polynomial identities in the library are
// established over Q; doubles appear only at evaluation time.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Dense univariate polynomial with rational coefficients, ascending degree.
// The variable is whatever the caller says it is (z = cos^2 s on the sphere,
// w = 1 - 2z for the Jacobi recurrences).
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial{a}; }
  static Polynomial variable() { return Polynomial{Rational(0), Rational(1)}; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0

  const Rational& coeff(std::size_t k) const {
    static const Rational zero{0};
    return k < c_.size() ? c_[k] : zero;
  }
  const std::vector<Rational>& coeffs() const { return c_; }
  std::vector<double> coeffs_double() const {
    std::vector<double> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = to_double(c_[i]);
    return out;
  }

  Rational eval(const Rational& x) const {
    Rational acc{0};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(i);
    return Polynomial(std::move(d));
  }

  // p(a + b*x): exact affine substitution, used to move between the Jacobi
  // variable w and z via w = 1 - 2z.
  Polynomial compose_affine(const Rational& a, const Rational& b) const {
    Polynomial acc;
    Polynomial aff{a, b};
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * aff + constant(c_[i]);
    return acc;
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
  }
  Polynomial operator-(const Polynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Polynomial(std::move(r));
  }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
  }
  Polynomial operator*(const Rational& a) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= a;
    return Polynomial(std::move(r));
  }
  Polynomial operator-() const { return (*this) * Rational(-1); }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += c_[i].str();
      if (i == 1) s += "*z";
      else if (i > 1) s += "*z^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace beltrami

#endif
