#include "distlap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "distlap/error.hpp"

namespace distlap {

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::inf_norm() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

SymMatrix SymMatrix::shifted(double c) const {
  SymMatrix out = *this;
  for (int i = 0; i < n_; ++i) out.set(i, i, (*this)(i, i) + c);
  return out;
}

SymMatrix SymMatrix::principal_submatrix(std::span<const int> idx) const {
  SymMatrix out(static_cast<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i; j < idx.size(); ++j) {
      out.set(static_cast<int>(i), static_cast<int>(j), (*this)(idx[i], idx[j]));
    }
  }
  return out;
}

Matrix::Matrix(int rows, int cols, std::vector<double> data) : rows_(rows), cols_(cols), a_(std::move(data)) {
  if (a_.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorKind::DimensionMismatch, "matrix data does not match its shape");
  }
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

std::vector<std::pair<double, int>> Spectrum::groups() const {
  std::vector<std::pair<double, int>> out;
  for (double v : values) {
    if (!out.empty() && std::abs(out.back().first - v) <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

namespace {

Spectrum sorted_spectrum(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum{std::move(values), kGroupingTol};
}

// Reduces a (row-major, n*n, overwritten) to tridiagonal form: diagonal in
// d, subdiagonal in e[1..n-1].
void householder_tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                                std::vector<double>& e) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit-shift QL on the symmetric tridiagonal (d, e); eigenvalues land in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, int n) {
  constexpr int kMaxIterations = 30;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxIterations) {
          throw Error(ErrorKind::NoConvergence, "QL iteration exceeded 30 sweeps");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          const double f = s * e[i];
          const double b = c * e[i];
          e[i + 1] = r = std::hypot(f, g);
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

Spectrum eigenvalues(const SymMatrix& m) {
  const int n = m.size();
  if (n < 1) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> d(n, 0.0);
  std::vector<double> e(n, 0.0);
  householder_tridiagonalize(a, n, d, e);
  tridiagonal_ql(d, e, n);
  return sorted_spectrum(std::move(d));
}

Spectrum eigenvalues_jacobi(const SymMatrix& m) {
  constexpr int kMaxSweeps = 100;
  const int n = m.size();
  if (n < 1) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  const double threshold = 1e-12 * m.frobenius_norm();

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) s += at(i, j) * at(i, j);
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() >= threshold && threshold > 0.0) {
    if (sweep++ == kMaxSweeps) throw Error(ErrorKind::NoConvergence, "Jacobi exceeded 100 sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
      }
    }
  }

  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
  return sorted_spectrum(std::move(d));
}

double evaluate(const Polynomial& p, double x) {
  double acc = 0.0;
  for (double c : p) acc = acc * x + c;
  return acc;
}

double largest_root(const Polynomial& p, double lo, double hi) {
  constexpr int kScanSteps = 1 << 14;
  constexpr double kTol = 1e-11;
  if (p.empty() || !(lo < hi)) throw Error(ErrorKind::NoRootInBracket, "empty polynomial or bracket");

  const double step = (hi - lo) / kScanSteps;
  double right = hi;
  double f_right = evaluate(p, right);
  if (f_right == 0.0) return right;
  for (int k = 1; k <= kScanSteps; ++k) {
    const double left = k == kScanSteps ? lo : hi - k * step;
    const double f_left = evaluate(p, left);
    if (f_left == 0.0) return left;
    if ((f_left < 0.0) != (f_right < 0.0)) {
      double a = left;
      double b = right;
      const bool a_negative = f_left < 0.0;
      while (b - a > kTol) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = evaluate(p, mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == a_negative) {
          a = mid;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    right = left;
    f_right = f_left;
  }
  throw Error(ErrorKind::NoRootInBracket, "no sign change in bracket");
}

double determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const int n = m.rows();
  Matrix a = m;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (a(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

}  // namespace distlap
