#include "digitop/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace digitop {

namespace mp = boost::multiprecision;

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Integer value(std::string(part.substr(start)));
    return part[0] == '-' ? Integer(-value) : value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace {

// n = root^2 * core with core squarefree.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
  std::uint64_t root = 1;
  std::uint64_t core = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= n;
  return {root, core};
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("radicand overflow");
  return a * b;
}

}  // namespace

Real::Real(long long n) : Real(Rational(n)) {}

Real::Real(const Rational& q) {
  if (q != 0) terms_.push_back({q, 1});
}

Real Real::sqrt_of(std::uint64_t n) {
  Real r;
  if (n == 0) return r;
  auto [root, core] = split_square(n);
  r.terms_.push_back({Rational(root), core});
  return r;
}

Real Real::approximate(long double value) {
  Real r;
  r.approx_ = value;
  return r;
}

bool Real::is_zero() const { return sign() == 0; }

void Real::add_term(const Rational& c, std::uint64_t radicand) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                             [](const Term& t, std::uint64_t s) { return t.radicand < s; });
  if (it != terms_.end() && it->radicand == radicand) {
    it->coefficient += c;
    if (it->coefficient == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {c, radicand});
  }
}

int Real::sign() const {
  if (approx_) {
    if (std::fabs(*approx_) <= kApproxTolerance) return 0;
    return *approx_ > 0 ? 1 : -1;
  }
  if (terms_.empty()) return 0;
  bool any_pos = false;
  bool any_neg = false;
  for (const auto& t : terms_) (t.coefficient > 0 ? any_pos : any_neg) = true;
  if (!any_neg) return 1;
  if (!any_pos) return -1;

  // Clear denominators, then bracket each c*sqrt(s)*2^bits between integers.
  Integer common = 1;
  for (const auto& t : terms_) {
    const Integer& d = mp::denominator(t.coefficient);
    common = common / mp::gcd(common, d) * d;
  }
  std::vector<std::pair<Integer, Integer>> scaled;  // (|c|^2 * s, sign)
  scaled.reserve(terms_.size());
  for (const auto& t : terms_) {
    Integer c = mp::numerator(t.coefficient) * (common / mp::denominator(t.coefficient));
    scaled.emplace_back(c * c * Integer(t.radicand), c > 0 ? 1 : -1);
  }
  for (unsigned bits = 32;; bits += 32) {
    Integer lo = 0;
    Integer hi = 0;
    for (const auto& [square, sgn] : scaled) {
      Integer a = mp::sqrt(Integer(square << (2 * bits)));
      if (sgn > 0) {
        lo += a;
        hi += a + 1;
      } else {
        lo -= a + 1;
        hi -= a;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

std::optional<Rational> Real::as_rational() const {
  if (approx_) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].radicand == 1) return terms_[0].coefficient;
  return std::nullopt;
}

long double Real::to_long_double() const {
  if (approx_) return *approx_;
  long double sum = 0;
  for (const auto& t : terms_)
    sum += t.coefficient.convert_to<long double>() * std::sqrt(static_cast<long double>(t.radicand));
  return sum;
}

Real Real::operator-() const {
  Real r = *this;
  if (r.approx_) *r.approx_ = -*r.approx_;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  if (approx_ || rhs.approx_) {
    *this = approximate(to_long_double() + rhs.to_long_double());
    return *this;
  }
  for (const auto& t : rhs.terms_) add_term(t.coefficient, t.radicand);
  return *this;
}

Real& Real::operator-=(const Real& rhs) { return *this += -rhs; }

Real& Real::operator*=(const Real& rhs) {
  if (approx_ || rhs.approx_) {
    *this = approximate(to_long_double() * rhs.to_long_double());
    return *this;
  }
  Real product;
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      // sqrt(s)*sqrt(t) = g*sqrt((s/g)*(t/g)), g = gcd(s,t); the new radicand
      // stays squarefree because s and t are.
      std::uint64_t g = std::gcd(a.radicand, b.radicand);
      product.add_term(a.coefficient * b.coefficient * Rational(g),
                       checked_mul(a.radicand / g, b.radicand / g));
    }
  }
  *this = std::move(product);
  return *this;
}

int compare(const Real& a, const Real& b) {
  if (!a.is_exact() || !b.is_exact()) {
    long double diff = a.to_long_double() - b.to_long_double();
    if (std::fabs(diff) <= Real::kApproxTolerance) return 0;
    return diff < 0 ? -1 : 1;
  }
  return (a - b).sign();
}

std::string Real::to_string() const {
  if (approx_) {
    std::ostringstream os;
    os.precision(12);
    os << '~' << static_cast<double>(*approx_);
    return os.str();
  }
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (!first) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    if (t.radicand == 1) {
      out += digitop::to_string(c);
      continue;
    }
    std::string root = "sqrt(" + std::to_string(t.radicand) + ")";
    const Integer& num = mp::numerator(c);
    const Integer& den = mp::denominator(c);
    if (num == 1) out += root;
    else if (num == -1) out += "-" + root;
    else out += num.str() + "*" + root;
    if (den != 1) out += "/" + den.str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }

Ratio::Ratio(Real num, Real den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.sign() <= 0) throw std::domain_error("ratio denominator must be positive");
  // A single-term denominator c*sqrt(s) inverts exactly to sqrt(s)/(c*s).
  if (den_.is_exact() && den_.terms().size() == 1) {
    const auto& t = den_.terms().front();
    Real inverse = Real::sqrt_of(t.radicand) * Real(Rational(1) / (t.coefficient * Rational(t.radicand)));
    num_ *= inverse;
    den_ = Real(1);
  }
}

long double Ratio::to_long_double() const { return num_.to_long_double() / den_.to_long_double(); }

std::string Ratio::to_string() const {
  if (den_ == Real(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

int compare(const Ratio& a, const Ratio& b) {
  return compare(a.num_ * b.den_, b.num_ * a.den_);
}

}  // namespace digitop
