#pragma once

#include <iosfwd>
#include <vector>

#include "kpzlab/combinatorics.hpp"
#include "kpzlab/rng.hpp"

namespace kpz {

struct Point {
  double x;  // time coordinate s for cone clouds
  double y;
};

enum class Region { UnitSquare, Cone };

// A finite planar point configuration, strictly inside its region, with no
// repeated coordinate on either axis.
class PointCloud {
 public:
  // Unit-square cloud with the given sampling intensity.
  static PointCloud unit_square(std::vector<Point> points, double intensity);
  // Cone {(s,y): |y| < s < horizon} cloud (intensity 1 by convention).
  static PointCloud cone(std::vector<Point> points, double horizon);

  Region region() const { return region_; }
  double intensity() const { return intensity_; }  // unit square only
  double horizon() const { return horizon_; }      // cone only
  const std::vector<Point>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }

 private:
  PointCloud() = default;
  void validate() const;

  Region region_ = Region::UnitSquare;
  double intensity_ = 0.0;
  double horizon_ = 0.0;
  std::vector<Point> points_;
};

// Poisson(intensity) many i.i.d. uniform points in (0,1)^2. Exact coordinate
// collisions (probability zero in theory) are resolved by redrawing.
PointCloud sample_unit_square(double intensity, RngSpec spec);
PointCloud sample_unit_square(double intensity, Philox& rng);

// Poisson process of intensity 1 on the cone {|y| < s < horizon}: a
// Poisson(horizon^2) count rejection-sampled from the bounding box.
PointCloud sample_cone(double horizon, RngSpec spec);
PointCloud sample_cone(double horizon, Philox& rng);

// Rank permutation "from x order to y order". Errors on an empty cloud.
Permutation points_to_permutation(const PointCloud& cloud);

// Maximum number of points on a chain strictly increasing in both
// coordinates; 0 for an empty cloud. O(n log n).
int longest_chain(const PointCloud& cloud);

// Longest chain in the rotated frame u = s+y, v = s-y among points with
// u < t+x and v < t-x; equals the growth-interface height h(t,x).
// Returns 0 whenever |x| >= t. Requires t <= horizon.
int cone_last_passage(const PointCloud& cloud, double t, double x);

// CSV with header `x,y` (square) or `s,y` (cone), 17 significant digits.
void write_csv(const PointCloud& cloud, std::ostream& os);

}  // namespace kpz
