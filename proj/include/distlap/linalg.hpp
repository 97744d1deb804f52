#pragma once

#include <span>
#include <utility>
#include <vector>

namespace distlap {

/// Dense real symmetric matrix, full square stored row-major. set() writes
/// both mirror entries so symmetry holds exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const noexcept { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
  }
  std::span<const double> data() const { return a_; }

  double trace() const;
  double frobenius_norm() const;
  double inf_norm() const;
  SymMatrix shifted(double c) const;
  SymMatrix principal_submatrix(std::span<const int> idx) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// General dense matrix; used for quotient matrices and determinant checks.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}
  Matrix(int rows, int cols, std::vector<double> data);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

inline constexpr double kGroupingTol = 1e-7;

/// Eigenvalues sorted descending, grouped into multiplicities on demand.
struct Spectrum {
  std::vector<double> values;
  double tol = kGroupingTol;

  int size() const noexcept { return static_cast<int>(values.size()); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
  /// 1-based access matching the usual lambda_1 >= lambda_2 >= ... naming.
  double at(int i) const { return values.at(static_cast<std::size_t>(i) - 1); }
  double sum() const;
  /// (value, multiplicity) runs of values within tol of the run's first entry.
  std::vector<std::pair<double, int>> groups() const;
};

/// Householder tridiagonalization followed by implicit-shift QL.
Spectrum eigenvalues(const SymMatrix& m);

/// Cyclic Jacobi rotations; an independent cross-check of eigenvalues().
Spectrum eigenvalues_jacobi(const SymMatrix& m);

/// Coefficients highest degree first: {1, 0, -4} is x^2 - 4.
using Polynomial = std::vector<double>;

double evaluate(const Polynomial& p, double x);

/// Largest real root in [lo, hi]: scans from hi leftwards for the first sign
/// change, then bisects it down to 1e-11.
double largest_root(const Polynomial& p, double lo, double hi);

/// Determinant by partial-pivot LU.
double determinant(const Matrix& m);

}  // namespace distlap
