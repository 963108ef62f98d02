#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "kpzlab/combinatorics.hpp"
#include "kpzlab/poisson_geometry.hpp"
#include "kpzlab/rng.hpp"
#include "support/oracles.hpp"

using kpz::Philox;
using kpz::Point;
using kpz::PointCloud;

TEST_CASE("cloud invariants are enforced") {
  CHECK_THROWS(PointCloud::unit_square({{0.5, 1.5}}, 1.0));
  CHECK_THROWS(PointCloud::unit_square({{0.2, 0.3}, {0.2, 0.7}}, 1.0));
  CHECK_THROWS(PointCloud::unit_square({{0.2, 0.3}, {0.4, 0.3}}, 1.0));
  CHECK_THROWS(PointCloud::cone({{0.5, 0.6}}, 2.0));  // |y| >= s
  CHECK_THROWS(PointCloud::cone({{3.0, 0.5}}, 2.0));  // beyond horizon
  CHECK(PointCloud::cone({{0.5, 0.2}, {1.5, -0.3}}, 2.0).size() == 2);
}

TEST_CASE("unit square sampling: coordinates inside and distinct") {
  Philox rng({321, 0});
  for (int trial = 0; trial < 20; ++trial) {
    const auto cloud = kpz::sample_unit_square(50.0, rng);
    for (const Point& p : cloud.points()) {
      CHECK(p.x > 0.0);
      CHECK(p.x < 1.0);
      CHECK(p.y > 0.0);
      CHECK(p.y < 1.0);
    }
  }
}

TEST_CASE("unit square count statistics at intensity 100") {
  Philox rng({55, 0});
  const int trials = 10000;
  double sum = 0;
  for (int i = 0; i < trials; ++i) sum += kpz::sample_unit_square(100.0, rng).size();
  const double mean = sum / trials;
  CHECK(std::abs(mean - 100.0) < 3.0 * std::sqrt(100.0 / trials));
}

TEST_CASE("identical spec reproduces identical clouds") {
  const auto a = kpz::sample_unit_square(40.0, kpz::RngSpec{9, 4});
  const auto b = kpz::sample_unit_square(40.0, kpz::RngSpec{9, 4});
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) {
    CHECK(a.points()[static_cast<std::size_t>(i)].x == b.points()[static_cast<std::size_t>(i)].x);
    CHECK(a.points()[static_cast<std::size_t>(i)].y == b.points()[static_cast<std::size_t>(i)].y);
  }
}

TEST_CASE("figure-style six points map to (1,3,6,2,5,4)") {
  // x-order 1..6 with y-ranks 1,3,6,2,5,4
  const std::vector<int> sigma = {1, 3, 6, 2, 5, 4};
  std::vector<Point> pts;
  for (int i = 0; i < 6; ++i) {
    pts.push_back({(i + 1) / 7.0, sigma[static_cast<std::size_t>(i)] / 7.0});
  }
  const auto cloud = PointCloud::unit_square(std::move(pts), 6.0);
  CHECK(kpz::points_to_permutation(cloud).values() == sigma);
  CHECK(kpz::longest_chain(cloud) == 3);
}

TEST_CASE("diagonal and anti-diagonal clouds") {
  std::vector<Point> diag, anti;
  const int n = 8;
  for (int i = 0; i < n; ++i) {
    diag.push_back({(i + 1) / 9.0, (i + 1) / 9.0});
    anti.push_back({(i + 1) / 9.0, (n - i) / 9.0});
  }
  const auto d = PointCloud::unit_square(std::move(diag), 8.0);
  const auto a = PointCloud::unit_square(std::move(anti), 8.0);
  CHECK(kpz::points_to_permutation(d).values() == kpz::Permutation::identity(n).values());
  CHECK(kpz::longest_chain(d) == n);
  CHECK(kpz::longest_chain(a) == 1);
  std::vector<int> rev(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rev[static_cast<std::size_t>(i)] = n - i;
  CHECK(kpz::points_to_permutation(a).values() == rev);
}

TEST_CASE("empty cloud behaviour") {
  const auto empty = PointCloud::unit_square({}, 1.0);
  CHECK(kpz::longest_chain(empty) == 0);
  CHECK_THROWS(kpz::points_to_permutation(empty));
}

TEST_CASE("longest chain equals lis of the rank permutation, random clouds") {
  Philox rng({77, 1});
  for (int trial = 0; trial < 200; ++trial) {
    const auto cloud = kpz::sample_unit_square(20.0, rng);
    if (cloud.size() == 0) continue;
    CHECK(kpz::longest_chain(cloud) ==
          kpz::lis_length(kpz::points_to_permutation(cloud)));
  }
}

TEST_CASE("longest chain matches exhaustive subset search, n <= 10") {
  Philox rng({78, 2});
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(rng.next_below(11));
    std::vector<Point> pts;
    std::vector<std::pair<double, double>> raw;
    for (int i = 0; i < n; ++i) {
      const Point p{rng.next_double(), rng.next_double()};
      pts.push_back(p);
      raw.emplace_back(p.x, p.y);
    }
    const auto cloud = PointCloud::unit_square(std::move(pts), std::max(1, n));
    CHECK(kpz::longest_chain(cloud) == oracle::brute_chain(raw));
  }
}

TEST_CASE("cone last passage: empty cone and single nucleation geometry") {
  const auto empty = PointCloud::cone({}, 5.0);
  for (double t : {0.5, 2.0, 4.9}) {
    CHECK(kpz::cone_last_passage(empty, t, 0.0) == 0);
  }
  // single point at (t0, x0): height 1 exactly on the forward light cone
  const double t0 = 1.0, x0 = 0.25;
  const auto one = PointCloud::cone({{t0, x0}}, 5.0);
  CHECK(kpz::cone_last_passage(one, 1.2, 0.25) == 1);   // inside
  CHECK(kpz::cone_last_passage(one, 1.05, 0.25) == 1);  // barely inside
  CHECK(kpz::cone_last_passage(one, 0.9, 0.25) == 0);   // before nucleation
  CHECK(kpz::cone_last_passage(one, 2.0, 1.3) == 0);    // right of the light cone
  CHECK(kpz::cone_last_passage(one, 2.0, 1.2) == 1);    // inside right edge
  CHECK(kpz::cone_last_passage(one, 2.0, -0.8) == 1);
  CHECK(kpz::cone_last_passage(one, 2.0, -0.8001) == 0);
}

TEST_CASE("cone last passage outside the cone is zero by definition") {
  Philox rng({5, 5});
  const auto cloud = kpz::sample_cone(3.0, rng);
  CHECK(kpz::cone_last_passage(cloud, 1.0, 1.0) == 0);
  CHECK(kpz::cone_last_passage(cloud, 1.0, -2.0) == 0);
  CHECK(kpz::cone_last_passage(cloud, 0.0, 0.0) == 0);
  CHECK_THROWS_AS(kpz::cone_last_passage(cloud, 3.5, 0.0), std::out_of_range);
}

TEST_CASE("cone last passage matches brute-force chains in rotated frame") {
  Philox rng({91, 3});
  for (int trial = 0; trial < 60; ++trial) {
    // small cone clouds, via rejection into the cone with horizon 2
    const int n = static_cast<int>(rng.next_below(13));
    std::vector<Point> pts;
    std::unordered_set<double> xs, ys;
    while (static_cast<int>(pts.size()) < n) {
      const double s = rng.next_double() * 2.0;
      const double y = rng.next_double(-2.0, 2.0);
      if (std::abs(y) >= s) continue;
      if (xs.count(s) || ys.count(y)) continue;
      xs.insert(s);
      ys.insert(y);
      pts.push_back({s, y});
    }
    const auto cloud = PointCloud::cone(std::move(pts), 2.0);
    const double t = 0.2 + 1.8 * rng.next_double();
    const double x = rng.next_double(-t, t);
    std::vector<std::pair<double, double>> rotated;
    for (const Point& p : cloud.points()) {
      const double u = p.x + p.y, v = p.x - p.y;
      if (u < t + x && v < t - x) rotated.emplace_back(u, v);
    }
    CHECK(kpz::cone_last_passage(cloud, t, x) == oracle::brute_chain(rotated));
  }
}

TEST_CASE("cone last passage is monotone in t") {
  Philox rng({14, 8});
  const auto cloud = kpz::sample_cone(4.0, rng);
  for (double x : {-1.0, 0.0, 0.7}) {
    int prev = 0;
    for (double t = 0.1; t <= 4.0; t += 0.13) {
      const int h = kpz::cone_last_passage(cloud, t, x);
      CHECK(h >= prev);
      prev = h;
    }
  }
}

TEST_CASE("poissonized chain histogram matches plancherel mixture") {
  // intensity mu: P(chain = l) = sum_n e^-mu mu^n/n! P(LIS_n = l)
  const double mu = 2.0;
  Philox rng({2718, 0});
  const int samples = 200000;
  std::map<int, int> hist;
  for (int i = 0; i < samples; ++i) {
    hist[kpz::longest_chain(kpz::sample_unit_square(mu, rng))]++;
  }
  // exact mixture, truncated where the Poisson tail is negligible
  std::map<int, double> exact;
  double pn = std::exp(-mu);  // P(N = 0)
  exact[0] += pn;
  for (int n = 1; n <= 25; ++n) {
    pn *= mu / n;
    for (const auto& [l, prob] : kpz::plancherel_pmf(n)) {
      exact[l] += pn * prob.to_double();
    }
  }
  double tv = 0.0;
  for (const auto& [l, p] : exact) {
    const auto it = hist.find(l);
    const double emp = it == hist.end() ? 0.0 : static_cast<double>(it->second) / samples;
    tv += std::abs(emp - p);
  }
  CHECK(tv / 2.0 < 0.01);
}

TEST_CASE("csv serialization headers") {
  std::ostringstream sq, cn;
  kpz::write_csv(PointCloud::unit_square({{0.25, 0.75}}, 1.0), sq);
  CHECK(sq.str() == "x,y\n0.25,0.75\n");
  kpz::write_csv(PointCloud::cone({{1.0, -0.5}}, 2.0), cn);
  CHECK(cn.str() == "s,y\n1,-0.5\n");
}
