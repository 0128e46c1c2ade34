#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace minkcell {

inline constexpr int kMaxDim = 4;

// Point/vector with runtime dimension 2..kMaxDim, stored inline.
struct Vec {
  double c[kMaxDim] = {0.0, 0.0, 0.0, 0.0};
  int dim = 2;

  Vec() = default;
  Vec(double x, double y) : c{x, y, 0.0, 0.0}, dim(2) {}
  Vec(double x, double y, double z) : c{x, y, z, 0.0}, dim(3) {}

  static Vec zero(int n) {
    Vec v;
    v.dim = n;
    return v;
  }

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }
  double x() const { return c[0]; }
  double y() const { return c[1]; }
  double z() const { return c[2]; }
};

inline void check_dim(int n, const char* where) {
  if (n < 2 || n > kMaxDim)
    throw std::invalid_argument(std::string(where) + ": dimension must be in [2, " +
                                std::to_string(kMaxDim) + "], got " + std::to_string(n));
}

inline void check_same_dim(const Vec& a, const Vec& b, const char* where) {
  if (a.dim != b.dim)
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.dim) + " vs " + std::to_string(b.dim) + ")");
}

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r.c[i] += b.c[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r.c[i] -= b.c[i];
  return r;
}

inline Vec operator-(const Vec& a) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r.c[i] = -r.c[i];
  return r;
}

inline Vec operator*(double s, const Vec& a) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r.c[i] *= s;
  return r;
}

inline Vec operator*(const Vec& a, double s) { return s * a; }

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i) s += a.c[i] * b.c[i];
  return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec normalized(const Vec& a) {
  double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  return (1.0 / n) * a;
}

// 2D cross product (z component).
inline double cross2(const Vec& a, const Vec& b) { return a.c[0] * b.c[1] - a.c[1] * b.c[0]; }

// 2D counterclockwise quarter turn.
inline Vec rot90(const Vec& a) { return Vec(-a.c[1], a.c[0]); }

inline Vec cross3(const Vec& a, const Vec& b) {
  Vec r = Vec::zero(3);
  r.c[0] = a.c[1] * b.c[2] - a.c[2] * b.c[1];
  r.c[1] = a.c[2] * b.c[0] - a.c[0] * b.c[2];
  r.c[2] = a.c[0] * b.c[1] - a.c[1] * b.c[0];
  return r;
}

inline bool close(const Vec& a, const Vec& b, double eps) {
  for (int i = 0; i < a.dim; ++i)
    if (std::abs(a.c[i] - b.c[i]) > eps) return false;
  return true;
}

// Square matrix with runtime dimension; columns are the stored vectors.
struct Mat {
  double m[kMaxDim][kMaxDim] = {};  // m[row][col]
  int n = 2;

  static Mat identity(int n) {
    Mat r;
    r.n = n;
    for (int i = 0; i < n; ++i) r.m[i][i] = 1.0;
    return r;
  }

  Vec col(int j) const {
    Vec v = Vec::zero(n);
    for (int i = 0; i < n; ++i) v.c[i] = m[i][j];
    return v;
  }

  void set_col(int j, const Vec& v) {
    for (int i = 0; i < n; ++i) m[i][j] = v.c[i];
  }

  Vec row(int i) const {
    Vec v = Vec::zero(n);
    for (int j = 0; j < n; ++j) v.c[j] = m[i][j];
    return v;
  }

  Vec apply(const Vec& v) const {
    Vec r = Vec::zero(n);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += m[i][j] * v.c[j];
      r.c[i] = s;
    }
    return r;
  }
};

// Determinant by Gaussian elimination with partial pivoting.
inline double det(const Mat& a) {
  double w[kMaxDim][kMaxDim];
  int n = a.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = a.m[i][j];
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(w[i][k]) > std::abs(w[piv][k])) piv = i;
    if (w[piv][k] == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(w[piv][j], w[k][j]);
      d = -d;
    }
    d *= w[k][k];
    for (int i = k + 1; i < n; ++i) {
      double f = w[i][k] / w[k][k];
      for (int j = k; j < n; ++j) w[i][j] -= f * w[k][j];
    }
  }
  return d;
}

// Inverse by Gauss-Jordan; throws on (numerically) singular input.
inline Mat inverse(const Mat& a) {
  int n = a.n;
  double w[kMaxDim][2 * kMaxDim];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = a.m[i][j];
    for (int j = 0; j < n; ++j) w[i][n + j] = (i == j) ? 1.0 : 0.0;
  }
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(w[i][k]) > std::abs(w[piv][k])) piv = i;
    if (std::abs(w[piv][k]) < 1e-300) throw std::invalid_argument("inverse: singular matrix");
    if (piv != k)
      for (int j = 0; j < 2 * n; ++j) std::swap(w[piv][j], w[k][j]);
    double f = w[k][k];
    for (int j = 0; j < 2 * n; ++j) w[k][j] /= f;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      double g = w[i][k];
      if (g == 0.0) continue;
      for (int j = 0; j < 2 * n; ++j) w[i][j] -= g * w[k][j];
    }
  }
  Mat r;
  r.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.m[i][j] = w[i][n + j];
  return r;
}

}  // namespace minkcell
