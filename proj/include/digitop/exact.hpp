#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace digitop {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// A real number of the form  c_1*sqrt(s_1) + ... + c_k*sqrt(s_k)  with
/// rational c_i and distinct squarefree radicands s_i, or a floating-point
/// approximation when the value left that field (general l_p metrics).
///
/// Exact values are kept in canonical form (radicands ascending, no zero
/// coefficients), so zero has no terms and equality is structural.  Since
/// square roots of distinct squarefree integers are linearly independent
/// over Q, a nonzero canonical value is never zero and its sign can be found
/// by refining integer square-root brackets until they exclude zero.
///
/// Comparisons involving an approximate operand use an absolute tolerance of
/// kApproxTolerance.
class Real {
 public:
  struct Term {
    Rational coefficient;
    std::uint64_t radicand;  // squarefree, >= 1
  };

  static constexpr long double kApproxTolerance = 1e-9L;

  Real() = default;
  Real(long long n);  // NOLINT(google-explicit-constructor)
  Real(const Rational& q);  // NOLINT(google-explicit-constructor)

  /// sqrt(n), exactly.
  static Real sqrt_of(std::uint64_t n);
  static Real approximate(long double value);

  bool is_exact() const noexcept { return !approx_.has_value(); }
  bool is_zero() const;
  /// -1, 0 or +1.  Exact for exact values; approximate values within the
  /// tolerance of zero report 0.
  int sign() const;
  /// The rational value, if the number has no irrational part.
  std::optional<Rational> as_rational() const;
  long double to_long_double() const;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }

  friend int compare(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }
  friend bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }

  /// "0", "3/2", "2*sqrt(2)", "1 + sqrt(3)/2", or "~1.259921" when approximate.
  std::string to_string() const;

 private:
  void add_term(const Rational& c, std::uint64_t radicand);

  std::vector<Term> terms_;
  std::optional<long double> approx_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

const Real& max(const Real& a, const Real& b);

/// A nonnegative quotient num/den with den > 0, compared by cross
/// multiplication so that no division of surd sums is ever needed.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(Real num, Real den);  // throws std::domain_error unless den > 0
  Ratio(const Real& value) : Ratio(value, Real(1)) {}  // NOLINT
  Ratio(const Rational& value) : Ratio(Real(value), Real(1)) {}  // NOLINT
  Ratio(long long value) : Ratio(Real(value), Real(1)) {}  // NOLINT

  const Real& numerator() const noexcept { return num_; }
  const Real& denominator() const noexcept { return den_; }
  long double to_long_double() const;
  std::string to_string() const;

  friend int compare(const Ratio& a, const Ratio& b);
  friend bool operator==(const Ratio& a, const Ratio& b) { return compare(a, b) == 0; }
  friend bool operator<(const Ratio& a, const Ratio& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Ratio& a, const Ratio& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return compare(a, b) >= 0; }

 private:
  Real num_;
  Real den_;
};

}  // namespace digitop
