#include "digitop/contracts.hpp"

#include <algorithm>
#include <stdexcept>

namespace digitop {

namespace {

void require_same_domain(const SelfMap& a, const SelfMap& b, const DigitalMetricSpace& space) {
  if (!(a.domain() == b.domain())) throw std::invalid_argument("maps must share a domain");
  if (!(a.domain() == space.image())) throw std::invalid_argument("map domain differs from the space");
}

void require_domain(const SelfMap& a, const DigitalMetricSpace& space) {
  if (!(a.domain() == space.image())) throw std::invalid_argument("map domain differs from the space");
}

void require_nonnegative(const Ratio& value, const char* name) {
  if (value.numerator().sign() < 0) throw std::invalid_argument(std::string(name) + " must be >= 0");
}

void require_unit_interval(const Rational& value, const char* name) {
  if (value < 0 || value >= 1) throw std::invalid_argument(std::string(name) + " must satisfy 0 <= " + name + " < 1");
}

// Shared driver for inequalities of the form  lhs(x,y) <= param * rhs(x,y)
// over all ordered pairs, tracking the least workable param.
template <typename Lhs, typename Rhs>
ConditionReport check_scaled(const DigitalMetricSpace& space, std::string name, const Ratio& param, Lhs lhs,
                             Rhs rhs) {
  ConditionReport report;
  report.condition = std::move(name);
  MinimalConstant minimal;  // 0 until some pair has a positive left side
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Real left = lhs(i, j);
      const Real right = rhs(i, j);
      if (report.holds && left * param.denominator() > param.numerator() * right) {
        report.holds = false;
        report.witness = std::pair{space.image().point(i), space.image().point(j)};
      }
      if (!minimal.possible() || left.sign() <= 0) continue;
      if (right.sign() <= 0) {
        minimal.status = MinimalConstant::Status::NonePossible;
        continue;
      }
      Ratio needed(left, right);
      if (minimal.value < needed) minimal.value = std::move(needed);
    }
  }
  report.minimal_constant = std::move(minimal);
  return report;
}

}  // namespace

ConditionReport check_banach(const DigitalMetricSpace& space, const SelfMap& f, const Ratio& k) {
  require_domain(f, space);
  require_nonnegative(k, "k");
  return check_scaled(
      space, "banach(k=" + k.to_string() + ")", k,
      [&](std::size_t x, std::size_t y) { return space.distance(f(x), f(y)); },
      [&](std::size_t x, std::size_t y) { return space.distance(x, y); });
}

Ratio lipschitz_min(const DigitalMetricSpace& space, const SelfMap& f) {
  // d(x, y) > 0 off the diagonal, so a minimal constant always exists.
  return check_banach(space, f, Ratio(0)).minimal_constant->value;
}

ConditionReport check_kannan(const DigitalMetricSpace& space, const SelfMap& t, const Rational& a,
                             const Rational& b) {
  require_domain(t, space);
  if (a < 0 || b < 0) throw std::invalid_argument("Kannan coefficients must be >= 0");
  const Real ra(a);
  const Real rb(b);
  return check_scaled(
      space, "kannan(a=" + to_string(a) + ",b=" + to_string(b) + ")", Ratio(1),
      [&](std::size_t x, std::size_t y) { return space.distance(t(x), t(y)); },
      [&](std::size_t x, std::size_t y) {
        return ra * (space.distance(x, t(x)) + space.distance(y, t(y))) +
               rb * (space.distance(x, t(y)) + space.distance(t(x), y));
      });
}

ConditionReport check_quasi(const DigitalMetricSpace& space, const SelfMap& t, const Rational& r) {
  require_domain(t, space);
  require_unit_interval(r, "r");
  return check_scaled(
      space, "quasi(r=" + to_string(r) + ")", Ratio(r),
      [&](std::size_t x, std::size_t y) { return space.distance(t(x), t(y)); },
      [&](std::size_t x, std::size_t y) {
        return max(space.distance(x, y), max(space.distance(x, t(x)), space.distance(y, t(y))));
      });
}

ConditionReport check_ciric5(const DigitalMetricSpace& space, const SelfMap& t, const Rational& r) {
  require_domain(t, space);
  require_unit_interval(r, "r");
  return check_scaled(
      space, "ciric5(r=" + to_string(r) + ")", Ratio(r),
      [&](std::size_t x, std::size_t y) { return space.distance(t(x), t(y)); },
      [&](std::size_t x, std::size_t y) {
        const Real* best = &space.distance(x, y);
        for (const Real* d : {&space.distance(x, t(x)), &space.distance(y, t(y)), &space.distance(x, t(y)),
                              &space.distance(t(x), y)}) {
          if (*best < *d) best = d;
        }
        return *best;
      });
}

DominationReport check_pair_domination(const DigitalMetricSpace& space, const SelfMap& g, const SelfMap& h,
                                       const Rational& rho) {
  require_same_domain(g, h, space);
  require_unit_interval(rho, "rho");
  DominationReport out{check_scaled(
                           space, "pair-domination(rho=" + to_string(rho) + ")", Ratio(rho),
                           [&](std::size_t x, std::size_t y) { return space.distance(h(x), h(y)); },
                           [&](std::size_t x, std::size_t y) { return space.distance(g(x), g(y)); }),
                       true};
  std::vector<bool> in_g(space.size(), false);
  for (auto v : g.table()) in_g[v] = true;
  for (auto v : h.table()) out.range_included = out.range_included && in_g[v];
  return out;
}

SumDominationReport check_saluja(const DigitalMetricSpace& space, const SelfMap& j, const SelfMap& k,
                                 const Rational& xi) {
  require_same_domain(j, k, space);
  require_unit_interval(xi, "xi");
  return {check_scaled(
              space, "sum-domination(xi=" + to_string(xi) + ")", Ratio(xi),
              [&](std::size_t u, std::size_t q) { return space.distance(j(u), j(q)) + space.distance(k(u), k(q)); },
              [&](std::size_t u, std::size_t q) { return space.distance(k(u), k(q)); }),
          j.is_constant() && k.is_constant()};
}

ConditionReport parv_rational_check(const DigitalMetricSpace& space, const SelfMap& t, const SelfMap& s) {
  require_same_domain(t, s, space);
  ConditionReport report;
  report.condition = "rational";
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Real& x_sy = space.distance(x, s(y));
      const Real& y_tx = space.distance(y, t(x));
      const Real denominator = x_sy + y_tx;
      if (denominator.sign() == 0) {
        report.undefined_pairs.emplace_back(space.image().point(x), space.image().point(y));
        continue;
      }
      const Real numerator = space.distance(x, t(x)) * x_sy + space.distance(y, s(y)) * y_tx;
      if (report.holds && space.distance(t(x), s(y)) * denominator > numerator) {
        report.holds = false;
        report.witness = std::pair{space.image().point(x), space.image().point(y)};
      }
    }
  }
  return report;
}

PointwiseVerdict weakly_commutative(const DigitalMetricSpace& space, const SelfMap& s, const SelfMap& t) {
  require_same_domain(s, t, space);
  PointwiseVerdict out{true, std::nullopt, "d(STx, TSx) <= d(Sx, Tx)"};
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (space.distance(s(t(x)), t(s(x))) > space.distance(s(x), t(x))) {
      out.holds = false;
      out.witness = space.image().point(x);
      break;
    }
  }
  return out;
}

PointwiseVerdict compatible(const DigitalMetricSpace& space, const SelfMap& s, const SelfMap& t) {
  require_same_domain(s, t, space);
  // A sequence with S x_n and T x_n sharing a limit is eventually constant at
  // a coincidence point in a finite uniformly discrete space.
  PointwiseVerdict out{true, std::nullopt, "finite-space reduction"};
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (s(x) == t(x) && s(t(x)) != t(s(x))) {
      out.holds = false;
      out.witness = space.image().point(x);
      break;
    }
  }
  return out;
}

}  // namespace digitop
