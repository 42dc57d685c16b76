#include "digitop/metric.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <stdexcept>

namespace digitop {

MetricSpec MetricSpec::lp(Rational p) {
  if (p < 1) throw std::invalid_argument("l_p metric requires p >= 1, got " + to_string(p));
  return MetricSpec(Kind::Lp, std::move(p));
}

std::string MetricSpec::name() const {
  if (kind_ == Kind::ShortestPath) return "shortest-path";
  return "l" + to_string(p_);
}

Real lp_distance(const Point& x, const Point& y, const Rational& p) {
  if (x.dimension() != y.dimension()) throw std::invalid_argument("distance between points of different dimension");
  std::vector<std::uint64_t> gaps;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    auto g = std::llabs(x[i] - y[i]);
    if (g != 0) gaps.push_back(static_cast<std::uint64_t>(g));
  }
  if (gaps.empty()) return Real(0);
  if (gaps.size() == 1) return Real(static_cast<long long>(gaps[0]));
  if (p == 1) {
    long long sum = 0;
    for (auto g : gaps) sum += static_cast<long long>(g);
    return Real(sum);
  }
  if (p == 2) {
    std::uint64_t sum = 0;
    for (auto g : gaps) sum += g * g;
    return Real::sqrt_of(sum);
  }
  const long double pp = p.convert_to<long double>();
  long double sum = 0;
  for (auto g : gaps) sum += std::pow(static_cast<long double>(g), pp);
  return Real::approximate(std::pow(sum, 1.0L / pp));
}

DigitalMetricSpace::DigitalMetricSpace(std::shared_ptr<const DigitalImage> image, MetricSpec metric)
    : image_(std::move(image)), metric_(std::move(metric)), table_(std::make_shared<Table>()) {
  if (!image_) throw std::invalid_argument("metric space needs an image");
  if (metric_.kind() == MetricSpec::Kind::ShortestPath && !image_->is_connected())
    throw std::invalid_argument("shortest-path metric requires a connected image");
}

void DigitalMetricSpace::build_table() const {
  std::call_once(table_->once, [this] {
    const std::size_t n = image_->size();
    std::vector<Real> values(n * n);
    if (metric_.kind() == MetricSpec::Kind::Lp) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          values[i * n + j] = lp_distance(image_->point(i), image_->point(j), metric_.p());
          values[j * n + i] = values[i * n + j];
        }
    } else {
      std::vector<std::vector<std::size_t>> adj(n);
      for (std::size_t i = 0; i < n; ++i) adj[i] = image_->neighbors(i);
      constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> hops(n, kUnseen);
        hops[s] = 0;
        std::queue<std::size_t> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
          auto i = frontier.front();
          frontier.pop();
          for (auto j : adj[i]) {
            if (hops[j] == kUnseen) {
              hops[j] = hops[i] + 1;
              frontier.push(j);
            }
          }
        }
        for (std::size_t t = 0; t < n; ++t) values[s * n + t] = Real(static_cast<long long>(hops[t]));
      }
    }
    table_->values = std::move(values);
  });
}

const Real& DigitalMetricSpace::distance(std::size_t i, std::size_t j) const {
  const std::size_t n = image_->size();
  if (i >= n || j >= n) throw std::out_of_range("point index outside the space");
  build_table();
  return table_->values[i * n + j];
}

Real DigitalMetricSpace::distance(const Point& x, const Point& y) const {
  return distance(image_->require_index(x), image_->require_index(y));
}

DiscretenessCertificate discreteness_certificate(const DigitalMetricSpace& space) {
  const std::size_t n = space.size();
  if (n == 1) return {Real(1)};
  const Real* best = nullptr;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Real& d = space.distance(i, j);
      if (!best || d < *best) best = &d;
    }
  return {*best};
}

namespace {

// max over a in A of min over b in B of d(a, b)
Real directed(const DigitalMetricSpace& space, const std::vector<std::size_t>& a,
              const std::vector<std::size_t>& b) {
  Real worst(0);
  for (auto i : a) {
    const Real* nearest = nullptr;
    for (auto j : b) {
      const Real& d = space.distance(i, j);
      if (!nearest || d < *nearest) nearest = &d;
    }
    if (worst < *nearest) worst = *nearest;
  }
  return worst;
}

std::vector<std::size_t> indices(const DigitalMetricSpace& space, std::span<const Point> subset) {
  if (subset.empty()) throw std::invalid_argument("Hausdorff distance needs nonempty subsets");
  std::vector<std::size_t> out;
  out.reserve(subset.size());
  for (const auto& p : subset) out.push_back(space.image().require_index(p));
  return out;
}

}  // namespace

Real hausdorff(const DigitalMetricSpace& space, std::span<const Point> a, std::span<const Point> b) {
  auto ia = indices(space, a);
  auto ib = indices(space, b);
  return max(directed(space, ia, ib), directed(space, ib, ia));
}

}  // namespace digitop
