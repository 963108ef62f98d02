#include "kpzlab/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kpz {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  const int n = static_cast<int>(values_.size());
  if (n == 0) throw std::invalid_argument("permutation must be nonempty");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument(
          "permutation values must be exactly {1.." + std::to_string(n) +
          "}, each once");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  int prev = INT32_MAX;
  for (int p : parts_) {
    if (p <= 0 || p > prev) {
      throw std::invalid_argument(
          "partition parts must be positive and weakly decreasing");
    }
    prev = p;
    size_ += p;
  }
}

ExactProb::ExactProb(BigRat value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw std::invalid_argument("probability must lie in [0,1]");
  }
}

ExactProb::ExactProb(BigInt num, BigInt den) {
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  value_ = BigRat(std::move(num), std::move(den));
  if (value_ < 0 || value_ > 1) {
    throw std::invalid_argument("probability must lie in [0,1]");
  }
}

int lis_length(const Permutation& perm) {
  std::vector<int> tops;  // smallest tail value of an increasing run per pile
  tops.reserve(perm.values().size());
  for (int v : perm.values()) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v);
    if (it == tops.end()) {
      tops.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tops.size());
}

std::vector<int> lis_witness(const Permutation& perm) {
  const int n = perm.size();
  std::vector<int> tops;           // pile top values
  std::vector<int> top_index;      // 0-based index of each pile top
  std::vector<int> prev(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = perm.value(i);
    const auto it = std::lower_bound(tops.begin(), tops.end(), v);
    const int pile = static_cast<int>(it - tops.begin());
    if (pile > 0) prev[static_cast<std::size_t>(i)] = top_index[static_cast<std::size_t>(pile - 1)];
    if (it == tops.end()) {
      tops.push_back(v);
      top_index.push_back(i);
    } else {
      *it = v;
      top_index[static_cast<std::size_t>(pile)] = i;
    }
  }
  std::vector<int> witness;
  for (int i = top_index.back(); i >= 0; i = prev[static_cast<std::size_t>(i)]) {
    witness.push_back(i + 1);  // 1-based
  }
  std::reverse(witness.begin(), witness.end());
  return witness;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn,
                        int cap) {
  if (n < 1) throw std::invalid_argument("partition size must be >= 1");
  if (n > cap) {
    throw std::length_error("partition enumeration for n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  }
  std::vector<int> acc;
  partitions_rec(n, n, acc, fn);
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

namespace {

std::vector<int> conjugate_parts(const Partition& lambda) {
  std::vector<int> conj(static_cast<std::size_t>(lambda.first_part()), 0);
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) conj[static_cast<std::size_t>(j)]++;
  }
  return conj;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

BigInt dim_partition(const Partition& lambda) {
  if (lambda.size() == 0) return 1;
  const std::vector<int> conj = conjugate_parts(lambda);
  BigInt hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      const int hook = lambda.part(i) - j + conj[static_cast<std::size_t>(j)] - i - 1;
      hooks *= hook;
    }
  }
  return factorial(lambda.size()) / hooks;
}

std::map<int, ExactProb> plancherel_pmf(int n, int cap) {
  std::map<int, BigInt> dim_sq;
  for_each_partition(
      n,
      [&](const Partition& lambda) {
        const BigInt d = dim_partition(lambda);
        dim_sq[lambda.first_part()] += d * d;
      },
      cap);
  const BigInt n_fact = factorial(n);
  std::map<int, ExactProb> pmf;
  for (const auto& [l, w] : dim_sq) pmf.emplace(l, ExactProb(w, n_fact));
  return pmf;
}

Partition rsk_shape(const Permutation& perm) {
  std::vector<std::vector<int>> rows;
  for (int v : perm.values()) {
    int carry = v;
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        carry = 0;
        break;
      }
      std::swap(*it, carry);
    }
    if (carry != 0) rows.push_back({carry});
  }
  std::vector<int> shape;
  shape.reserve(rows.size());
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return Partition(std::move(shape));
}

namespace {

// Sum of monomials over semistandard tableaux of the given shape with
// entries in 1..m: rows weakly increase, columns strictly increase.
double schur_by_tableaux(const Partition& lambda, std::span<const double> vars) {
  const int rows = lambda.rows();
  const int m = static_cast<int>(vars.size());
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    fill[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.part(i)), 0);
  }
  double total = 0.0;
  std::function<void(int, int, double)> rec = [&](int r, int c, double monomial) {
    if (r == rows) {
      total += monomial;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lambda.part(r)) {
      nr = r + 1;
      nc = 0;
    }
    const int left = (c > 0) ? fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] : 1;
    const int above = (r > 0 && c < lambda.part(r - 1))
                          ? fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1
                          : 1;
    for (int e = std::max(left, above); e <= m; ++e) {
      fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = e;
      rec(nr, nc, monomial * vars[static_cast<std::size_t>(e - 1)]);
    }
  };
  rec(0, 0, 1.0);
  return total;
}

// Complete homogeneous symmetric polynomials h_0..h_max at vars.
std::vector<double> complete_homogeneous(std::span<const double> vars, int max_deg) {
  std::vector<double> h(static_cast<std::size_t>(max_deg) + 1, 0.0);
  h[0] = 1.0;
  for (double x : vars) {
    for (int k = 1; k <= max_deg; ++k) {
      h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
    }
  }
  return h;
}

double det_inplace(std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
          std::abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)])) {
        pivot = r;
      }
    }
    if (a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const double d = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= d;
    for (int r = col + 1; r < n; ++r) {
      const double f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / d;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
  }
  return det;
}

// Jacobi-Trudi: s_lambda = det( h_{lambda_i - i + j} ), 1 <= i,j <= rows.
double schur_by_jacobi_trudi(const Partition& lambda, std::span<const double> vars) {
  const int rows = lambda.rows();
  const std::vector<double> h = complete_homogeneous(vars, lambda.first_part() + rows);
  std::vector<std::vector<double>> a(static_cast<std::size_t>(rows),
                                     std::vector<double>(static_cast<std::size_t>(rows)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) {
      const int deg = lambda.part(i) - (i + 1) + (j + 1);
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (deg < 0) ? 0.0 : h[static_cast<std::size_t>(deg)];
    }
  }
  return det_inplace(a);
}

}  // namespace

double schur_poly(const Partition& lambda, std::span<const double> vars,
                  int degree_cap) {
  if (vars.empty()) throw std::invalid_argument("schur_poly needs >= 1 variable");
  for (double x : vars) {
    if (!std::isfinite(x)) throw std::domain_error("schur_poly variables must be finite");
  }
  if (lambda.first_part() > degree_cap) {
    throw std::length_error("schur_poly: first part exceeds degree cap " +
                            std::to_string(degree_cap));
  }
  if (lambda.size() == 0) return 1.0;
  if (lambda.rows() > static_cast<int>(vars.size())) return 0.0;
  if (lambda.size() <= kSchurTableauCutoff) return schur_by_tableaux(lambda, vars);
  return schur_by_jacobi_trudi(lambda, vars);
}

double schur_measure_weight(const Partition& lambda, std::span<const double> a,
                            std::span<const double> b) {
  double norm = 1.0;
  for (double ai : a) {
    if (!(ai >= 0.0)) throw std::domain_error("schur measure needs a_i >= 0");
    for (double bj : b) {
      if (!(bj >= 0.0)) throw std::domain_error("schur measure needs b_j >= 0");
      if (!(ai * bj < 1.0)) {
        throw std::domain_error("schur measure needs a_i*b_j < 1");
      }
      norm *= 1.0 - ai * bj;
    }
  }
  return schur_poly(lambda, a) * schur_poly(lambda, b) * norm;
}

double schur_measure_truncated_sum(std::span<const double> a,
                                   std::span<const double> b, int size_cap) {
  double total = schur_measure_weight(Partition(), a, b);
  const int max_rows = static_cast<int>(std::min(a.size(), b.size()));
  for (int n = 1; n <= size_cap; ++n) {
    for_each_partition(
        n,
        [&](const Partition& lambda) {
          if (lambda.rows() > max_rows) return;  // weight is exactly 0
          total += schur_measure_weight(lambda, a, b);
        },
        std::max(size_cap, kPartitionCap));
  }
  return total;
}

}  // namespace kpz
