#include "digitop/fixpoint.hpp"

#include <stdexcept>

namespace digitop {

std::string to_string(TheoremReport::Conclusion c) {
  switch (c) {
    case TheoremReport::Conclusion::ConfirmsTheorem:
      return "confirms-theorem";
    case TheoremReport::Conclusion::RefutesAssertion:
      return "refutes-assertion";
    case TheoremReport::Conclusion::HypothesisFails:
      return "hypothesis-fails";
  }
  return "unknown";
}

namespace {

// Fills fixed points and orbits, then checks that the unique fixed point
// attracts every orbit.  Returns false (with the refutation recorded) on the
// first failure.
bool check_unique_attractor(const SelfMap& f, TheoremReport& report) {
  report.fixed_points = fixed_points(f);
  report.unique = report.fixed_points.size() == 1;
  if (report.unique) report.fixed_point = report.fixed_points.front();
  for (const auto& start : f.domain().points()) report.orbits.push_back(orbit(f, start));

  if (report.fixed_points.empty()) {
    report.refutation = "no fixed point";
    return false;
  }
  if (!report.unique) {
    report.refutation = "fixed point is not unique: " + report.fixed_points[0].to_string() + " and " +
                        report.fixed_points[1].to_string();
    return false;
  }
  for (const auto& o : report.orbits) {
    if (o.kind != OrbitReport::Kind::EventuallyConstant || o.settled_value() != *report.fixed_point) {
      report.refutation_start = o.orbit.front();
      report.refutation = "orbit does not settle at the fixed point: " + o.describe();
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> orbit_indices(const DigitalImage& img, const OrbitReport& o) {
  std::vector<std::size_t> out;
  out.reserve(o.orbit.size());
  for (const auto& p : o.orbit) out.push_back(img.require_index(p));
  return out;
}

}  // namespace

TheoremReport banach_verify(const DigitalMetricSpace& space, const SelfMap& f) {
  TheoremReport report;
  const Ratio k = lipschitz_min(space, f);
  report.hypothesis = check_banach(space, f, k);
  report.hypothesis.condition = "banach(k<1)";
  if (k >= Ratio(1)) {
    // The pair forcing k >= 1 witnesses that no k < 1 works.
    report.hypothesis.holds = false;
    const std::size_t n = space.size();
    for (std::size_t x = 0; x < n && !report.hypothesis.witness; ++x)
      for (std::size_t y = 0; y < n && !report.hypothesis.witness; ++y)
        if (x != y && space.distance(f(x), f(y)) >= space.distance(x, y))
          report.hypothesis.witness = std::pair{space.image().point(x), space.image().point(y)};
  }

  const bool attracts = check_unique_attractor(f, report);
  if (!report.hypothesis.holds) {
    report.conclusion = TheoremReport::Conclusion::HypothesisFails;
    report.refutation.clear();
    report.refutation_start.reset();
    return report;
  }
  if (!attracts) {
    report.conclusion = TheoremReport::Conclusion::RefutesAssertion;
    return report;
  }
  // Descent inequality d(x_{n+1}, x_n) <= k d(x_n, x_{n-1}), termwise.
  for (const auto& o : report.orbits) {
    auto idx = orbit_indices(space.image(), o);
    for (std::size_t n = 1; n + 1 < idx.size(); ++n) {
      const Real& step = space.distance(idx[n + 1], idx[n]);
      const Real& previous = space.distance(idx[n], idx[n - 1]);
      if (step * k.denominator() > k.numerator() * previous) {
        report.conclusion = TheoremReport::Conclusion::RefutesAssertion;
        report.refutation_start = o.orbit.front();
        report.refutation = "descent inequality fails at step " + std::to_string(n);
        return report;
      }
    }
  }
  report.conclusion = TheoremReport::Conclusion::ConfirmsTheorem;
  return report;
}

TheoremReport kannan_verify(const DigitalMetricSpace& space, const SelfMap& t, const Rational& a,
                            const Rational& b) {
  if (a < 0 || b < 0 || a + b >= Rational(1, 2))
    throw std::invalid_argument("Kannan theorem needs a, b >= 0 and a + b < 1/2");
  TheoremReport report;
  report.hypothesis = check_kannan(space, t, a, b);
  const bool attracts = check_unique_attractor(t, report);
  if (!report.hypothesis.holds) {
    report.conclusion = TheoremReport::Conclusion::HypothesisFails;
    report.refutation.clear();
    report.refutation_start.reset();
    return report;
  }
  if (!attracts) {
    report.conclusion = TheoremReport::Conclusion::RefutesAssertion;
    return report;
  }
  const Rational contraction = (a + b) / (1 - (a + b));
  for (const auto& o : report.orbits) {
    auto idx = orbit_indices(space.image(), o);
    if (idx.size() < 2) continue;
    const Real& first_step = space.distance(idx[0], idx[1]);
    Rational power = 1;
    for (std::size_t n = 0; n + 1 < idx.size(); ++n, power *= contraction) {
      if (space.distance(idx[n], idx[n + 1]) > Real(power) * first_step) {
        report.conclusion = TheoremReport::Conclusion::RefutesAssertion;
        report.refutation_start = o.orbit.front();
        report.refutation = "estimate d(x_n, x_n+1) <= A^n d(x_0, x_1) fails at n = " + std::to_string(n);
        return report;
      }
    }
  }
  report.conclusion = TheoremReport::Conclusion::ConfirmsTheorem;
  return report;
}

OrbitReport alternating_orbit(const SelfMap& s, const SelfMap& t, const Point& x0, std::size_t max_steps) {
  if (!(s.domain() == t.domain())) throw std::invalid_argument("maps must share a domain");
  if (s.table() == t.table()) return orbit(t, x0, max_steps);

  const DigitalImage& img = s.domain();
  const std::size_t n = img.size();
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_seen(2 * n, kUnseen);  // state = 2 * point + parity
  std::vector<std::size_t> indices;
  OrbitReport report;
  std::size_t x = img.require_index(x0);
  for (std::size_t step = 0;; ++step) {
    report.orbit.push_back(img.point(x));
    indices.push_back(x);
    const std::size_t state = 2 * x + step % 2;
    if (first_seen[state] != kUnseen) {
      const std::size_t start = first_seen[state];
      const std::size_t cycle = step - start;
      // Least d dividing the state cycle such that the points repeat with period d.
      std::size_t period = cycle;
      for (std::size_t d = 1; d < cycle; ++d) {
        if (cycle % d != 0) continue;
        bool ok = true;
        for (std::size_t i = start; i + d < step && ok; ++i) ok = indices[i] == indices[i + d];
        if (ok) {
          period = d;
          break;
        }
      }
      if (period == 1) {
        report.kind = OrbitReport::Kind::EventuallyConstant;
        report.settle_index = start;
      } else {
        report.kind = OrbitReport::Kind::EventuallyPeriodic;
        report.period = period;
      }
      return report;
    }
    first_seen[state] = step;
    if (step == max_steps) break;
    x = step % 2 == 0 ? t(x) : s(x);
  }
  report.kind = OrbitReport::Kind::Truncated;
  return report;
}

OrbitReport alternating_orbit(const SelfMap& s, const SelfMap& t, const Point& x0) {
  return alternating_orbit(s, t, x0, 2 * s.size() + 1);
}

StabilityVerdict t_stability_verdict(const DigitalMetricSpace& space, const SelfMap& t, const Point& p) {
  if (!(t.domain() == space.image())) throw std::invalid_argument("map domain differs from the space");
  if (t(p) != p) throw std::invalid_argument(p.to_string() + " is not a fixed point");
  StabilityVerdict out{p, true, std::nullopt};
  for (const auto& start : space.image().points()) {
    OrbitReport o = orbit(t, start);
    if (o.kind != OrbitReport::Kind::EventuallyConstant || o.settled_value() != p) {
      out.all_orbits_converge = false;
      out.deviating_orbit = std::move(o);
      break;
    }
  }
  return out;
}

}  // namespace digitop
