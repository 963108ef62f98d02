#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kpz {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// p(40) = 37338; exact pmf cost grows with the partition count.
inline constexpr int kPartitionCap = 40;
// Above this size, Schur evaluation switches from tableau summation to a
// Jacobi-Trudi determinant.
inline constexpr int kSchurTableauCutoff = 12;
inline constexpr int kSchurDegreeCap = 200;

// A permutation of {1..N} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  // i is 0-based; the value is 1-based.
  int value(int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<int> values_;
};

// Young diagram: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;  // the empty partition
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }  // sum of the parts
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int first_part() const { return parts_.empty() ? 0 : parts_[0]; }
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// A probability as a reduced fraction. Denominator stays positive and the
// value stays in [0,1]; conversion to double happens only at output.
class ExactProb {
 public:
  ExactProb() = default;
  explicit ExactProb(BigRat value);
  ExactProb(BigInt num, BigInt den);

  const BigRat& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }
  double to_double() const { return value_.convert_to<double>(); }

 private:
  BigRat value_ = 0;
};

// Length of the longest strictly increasing subsequence, O(N log N)
// patience-sorting pile tops.
int lis_length(const Permutation& perm);

// One witness: 1-based indices i_1 < ... < i_k with increasing values and
// k = lis_length(perm). Recovered by back-pointers through the piles.
std::vector<int> lis_witness(const Permutation& perm);

// Every partition of n exactly once, parts in lexicographically decreasing
// order. Throws std::length_error when n exceeds the cap.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn,
                        int cap = kPartitionCap);
std::vector<Partition> enumerate_partitions(int n, int cap = kPartitionCap);

// Number of standard Young tableaux of shape lambda, hook-length formula in
// exact arithmetic.
BigInt dim_partition(const Partition& lambda);

// Exact map l -> P(first part of a Plancherel-random partition of n is l),
// equivalently the distribution of the LIS length of a uniform permutation.
std::map<int, ExactProb> plancherel_pmf(int n, int cap = kPartitionCap);

// Common shape of the RSK insertion/recording tableaux (row insertion).
// Its first part equals lis_length(perm).
Partition rsk_shape(const Permutation& perm);

// Schur polynomial s_lambda(vars). Tableau summation for small shapes,
// Jacobi-Trudi determinant beyond kSchurTableauCutoff. Zero when lambda has
// more rows than there are variables.
double schur_poly(const Partition& lambda, std::span<const double> vars,
                  int degree_cap = kSchurDegreeCap);

// Schur measure weight s_lambda(a) s_lambda(b) prod_{i,j} (1 - a_i b_j).
// Requires a_i, b_j >= 0 and a_i*b_j < 1.
double schur_measure_weight(const Partition& lambda, std::span<const double> a,
                            std::span<const double> b);

// Sum of Schur measure weights over all |lambda| <= size_cap. Converges to 1
// from below as size_cap grows (Cauchy-Littlewood).
double schur_measure_truncated_sum(std::span<const double> a,
                                   std::span<const double> b, int size_cap);

}  // namespace kpz
