#include "kpzlab/poisson_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "kpzlab/io.hpp"

namespace kpz {

namespace {

bool inside(Region region, double horizon, const Point& p) {
  if (region == Region::UnitSquare) {
    return p.x > 0.0 && p.x < 1.0 && p.y > 0.0 && p.y < 1.0;
  }
  return p.x > 0.0 && p.x < horizon && std::abs(p.y) < p.x;
}

}  // namespace

void PointCloud::validate() const {
  std::unordered_set<double> xs, ys;
  for (const Point& p : points_) {
    if (!inside(region_, horizon_, p)) {
      throw std::invalid_argument("point lies outside the declared region");
    }
    if (!xs.insert(p.x).second || !ys.insert(p.y).second) {
      throw std::invalid_argument("points must have distinct coordinates per axis");
    }
  }
}

PointCloud PointCloud::unit_square(std::vector<Point> points, double intensity) {
  PointCloud c;
  c.region_ = Region::UnitSquare;
  c.intensity_ = intensity;
  c.points_ = std::move(points);
  c.validate();
  return c;
}

PointCloud PointCloud::cone(std::vector<Point> points, double horizon) {
  PointCloud c;
  c.region_ = Region::Cone;
  c.horizon_ = horizon;
  c.points_ = std::move(points);
  c.validate();
  return c;
}

namespace {

// Appends a point with coordinates distinct from everything drawn so far,
// redrawing on exact collision.
template <typename DrawFn>
void push_distinct(std::vector<Point>& pts, std::unordered_set<double>& xs,
                   std::unordered_set<double>& ys, DrawFn draw) {
  for (;;) {
    const Point p = draw();
    if (xs.count(p.x) || ys.count(p.y)) continue;
    xs.insert(p.x);
    ys.insert(p.y);
    pts.push_back(p);
    return;
  }
}

}  // namespace

PointCloud sample_unit_square(double intensity, Philox& rng) {
  if (!(intensity > 0.0)) throw std::domain_error("intensity must be > 0");
  const std::uint64_t n = sample_poisson_count(intensity, rng);
  std::vector<Point> pts;
  pts.reserve(n);
  std::unordered_set<double> xs, ys;
  for (std::uint64_t i = 0; i < n; ++i) {
    push_distinct(pts, xs, ys,
                  [&] { return Point{rng.next_double(), rng.next_double()}; });
  }
  return PointCloud::unit_square(std::move(pts), intensity);
}

PointCloud sample_unit_square(double intensity, RngSpec spec) {
  Philox rng(spec);
  return sample_unit_square(intensity, rng);
}

PointCloud sample_cone(double horizon, Philox& rng) {
  if (!(horizon > 0.0)) throw std::domain_error("horizon must be > 0");
  const std::uint64_t n = sample_poisson_count(horizon * horizon, rng);
  std::vector<Point> pts;
  pts.reserve(n);
  std::unordered_set<double> xs, ys;
  for (std::uint64_t i = 0; i < n; ++i) {
    push_distinct(pts, xs, ys, [&] {
      // rejection from the box (0,horizon) x (-horizon,horizon) into |y| < s
      for (;;) {
        const double s = rng.next_double() * horizon;
        const double y = rng.next_double(-horizon, horizon);
        if (std::abs(y) < s && s > 0.0 && s < horizon) return Point{s, y};
      }
    });
  }
  return PointCloud::cone(std::move(pts), horizon);
}

PointCloud sample_cone(double horizon, RngSpec spec) {
  Philox rng(spec);
  return sample_cone(horizon, rng);
}

Permutation points_to_permutation(const PointCloud& cloud) {
  if (cloud.region() != Region::UnitSquare) {
    throw std::invalid_argument("rank permutation is defined for unit-square clouds");
  }
  const int n = cloud.size();
  if (n == 0) throw std::invalid_argument("cannot rank an empty cloud");
  std::vector<int> by_x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) by_x[static_cast<std::size_t>(i)] = i;
  const auto& pts = cloud.points();
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) {
    return pts[static_cast<std::size_t>(a)].x < pts[static_cast<std::size_t>(b)].x;
  });
  std::vector<int> by_y = by_x;
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) {
    return pts[static_cast<std::size_t>(a)].y < pts[static_cast<std::size_t>(b)].y;
  });
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(by_y[static_cast<std::size_t>(r)])] = r + 1;
  std::vector<int> one_line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    one_line[static_cast<std::size_t>(i)] = rank[static_cast<std::size_t>(by_x[static_cast<std::size_t>(i)])];
  }
  return Permutation(std::move(one_line));
}

namespace {

// Longest strictly-increasing chain of (first, second) pairs, patience piles
// over the second coordinate after sorting by the first.
int chain_length(std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<double> tops;
  for (const auto& [u, v] : pts) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v);
    if (it == tops.end()) {
      tops.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tops.size());
}

}  // namespace

int longest_chain(const PointCloud& cloud) {
  if (cloud.region() != Region::UnitSquare) {
    throw std::invalid_argument("longest_chain expects a unit-square cloud");
  }
  std::vector<std::pair<double, double>> pts;
  pts.reserve(cloud.points().size());
  for (const Point& p : cloud.points()) pts.emplace_back(p.x, p.y);
  return chain_length(std::move(pts));
}

int cone_last_passage(const PointCloud& cloud, double t, double x) {
  if (cloud.region() != Region::Cone) {
    throw std::invalid_argument("cone_last_passage expects a cone cloud");
  }
  if (!(t <= cloud.horizon())) {
    throw std::out_of_range("query time beyond the simulated horizon");
  }
  if (std::abs(x) >= t) return 0;
  const double u_max = t + x;
  const double v_max = t - x;
  std::vector<std::pair<double, double>> pts;
  for (const Point& p : cloud.points()) {
    const double u = p.x + p.y;
    const double v = p.x - p.y;
    if (u < u_max && v < v_max) pts.emplace_back(u, v);
  }
  return chain_length(std::move(pts));
}

void write_csv(const PointCloud& cloud, std::ostream& os) {
  os << (cloud.region() == Region::Cone ? "s,y\n" : "x,y\n");
  for (const Point& p : cloud.points()) {
    os << format_real(p.x) << ',' << format_real(p.y) << '\n';
  }
}

}  // namespace kpz
