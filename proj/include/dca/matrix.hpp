#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dca/field.hpp"

namespace dca {

// Dense matrix over a finite field.  0-row and 0-column matrices are legal
// and compose as expected (an empty product is an identity on nothing).
class Mat {
 public:
  Mat() : F_(nullptr), nr_(0), nc_(0) {}
  Mat(const Gf& F, int nr, int nc) : F_(&F), nr_(nr), nc_(nc), a_(size_t(nr) * nc, 0) {}

  static Mat identity(const Gf& F, int n);
  static Mat zero(const Gf& F, int nr, int nc) { return Mat(F, nr, nc); }
  static Mat from_rows(const Gf& F, const std::vector<std::vector<fel>>& rows, int ncols);

  const Gf& field() const { return *F_; }
  int rows() const { return nr_; }
  int cols() const { return nc_; }
  bool empty_shape() const { return nr_ == 0 || nc_ == 0; }

  fel& at(int i, int j) { return a_[size_t(i) * nc_ + j]; }
  fel at(int i, int j) const { return a_[size_t(i) * nc_ + j]; }

  std::vector<fel> row(int i) const;
  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(fel c) const;
  bool operator==(const Mat& o) const { return nr_ == o.nr_ && nc_ == o.nc_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;

  // Apply to a column vector.
  std::vector<fel> apply(const std::vector<fel>& x) const;

  // In-place row reduction to reduced row-echelon form; returns rank and
  // (optionally) the pivot column of each nonzero row.
  int rref(std::vector<int>* pivots = nullptr);
  int rank() const;

  // Basis of {x : A x = 0}, one kernel vector per row of the result.
  Mat kernel() const;

  // Inverse of a square matrix; throws std::domain_error if singular.
  Mat inverse() const;

  // Horizontal / vertical stacking and block extraction.
  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  Mat block(int i0, int j0, int nr, int nc) const;

  std::string str() const;

  const std::vector<fel>& data() const { return a_; }
  std::vector<fel>& data() { return a_; }

 private:
  const Gf* F_;
  int nr_, nc_;
  std::vector<fel> a_;
};

// Solution of A x = b (b a column vector): a particular solution plus the
// kernel of A, or nullopt if inconsistent.
struct LinSolution {
  std::vector<fel> particular;
  Mat kernel;  // rows span the solution space of A x = 0
};
std::optional<LinSolution> solve_linear(const Mat& A, const std::vector<fel>& b);

// Subspace of F^ambient in canonical form: basis rows in RREF.  Equality of
// canonical bases is equality of subspaces.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  Subspace(const Gf& F, int ambient);                     // zero subspace
  Subspace(const Mat& spanning_rows, int ambient);        // canonicalizes

  static Subspace full(const Gf& F, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }

  bool contains(const std::vector<fel>& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  // Image of this subspace under the linear map given by M (columns = ambient).
  Subspace image_under(const Mat& M) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const;  // for set keys

  std::string str() const;

 private:
  int ambient_;
  Mat basis_;  // RREF, rows = basis
};

// --- Enumeration (all capped; caps raise cap_exceeded, never truncate) ---

// All q^d vectors of F^d.
void enumerate_vectors(const Gf& F, int d, long long cap,
                       const std::function<void(const std::vector<fel>&)>& fn);

// All 1-dimensional subspaces of F^d, each exactly once (canonical first
// nonzero coordinate = 1).
void enumerate_lines(const Gf& F, int d, long long cap,
                     const std::function<void(const Subspace&)>& fn);

// All hyperplanes ((d-1)-dimensional subspaces) of F^d.
void enumerate_hyperplanes(const Gf& F, int d, long long cap,
                           const std::function<void(const Subspace&)>& fn);

// All k-dimensional subspaces of F^d containing `lower` (pass a zero
// subspace for the unconstrained case).
void enumerate_subspaces_over(const Gf& F, int d, int k, const Subspace& lower,
                              long long cap, const std::function<void(const Subspace&)>& fn);

// Counts: q^d and the Gaussian binomial [d choose k]_q as long long
// (throws cap_exceeded on overflow past `cap`).
long long q_pow(int q, int d, long long cap);
long long gauss_binom(int q, int d, int k);

}  // namespace dca
