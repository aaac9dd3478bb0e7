#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace hypwalk {

/// A point x + iy of the upper half-plane, y > 0.
struct PlanePoint {
  double x = 0.0;
  double y = 1.0;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Hyperbolic distance d(z,w) = arccosh(1 + |z-w|^2 / (2 Im z Im w)).
double plane_distance(const PlanePoint& p, const PlanePoint& q);

/// arccosh with the log form for large arguments, so distances between far
/// apart points do not overflow.
double robust_acosh(double x);

/// The point at hyperbolic polar coordinates (r, theta) around i.
PlanePoint plane_from_polar(double r, double theta);

/// Exact integer 2x2 matrix with determinant 1.
struct Mat2i {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t trace() const { return a + d; }
  /// Checked product; nullopt on int64 overflow.
  static std::optional<Mat2i> multiply(const Mat2i& l, const Mat2i& r);
  Mat2i inverse() const { return {d, -b, -c, a}; }

  friend bool operator==(const Mat2i&, const Mat2i&) = default;
};

/// A real 2x2 matrix of determinant 1 acting on the upper half-plane by
/// z -> (az+b)/(cz+d). Matrices with integer entries additionally carry an
/// exact copy, so traces and short products stay exact; the exact part is
/// dropped silently if a product overflows int64.
class Moebius {
 public:
  Moebius() = default;  // identity

  /// Any finite entries with positive determinant; rescaled to det 1.
  static Moebius from_entries(double a, double b, double c, double d);

  /// Integer entries, determinant exactly 1.
  static Moebius from_integers(std::int64_t a, std::int64_t b, std::int64_t c,
                               std::int64_t d);

  static Moebius identity() { return Moebius{}; }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  const std::optional<Mat2i>& exact() const { return exact_; }

  double trace() const { return a_ + d_; }

  Moebius operator*(const Moebius& rhs) const;
  Moebius inverse() const;
  Moebius power(int exponent) const;

  PlanePoint apply(const PlanePoint& p) const;

  /// True for +-identity (the transformations coincide).
  bool is_identity() const;

  /// Sign-canonicalized entries (first significant entry positive), for
  /// ordering and deduplication: M and -M are the same transformation.
  std::array<double, 4> canonical_entries() const;

  std::string str() const;

 private:
  double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
  std::optional<Mat2i> exact_ = Mat2i{};
};

enum class IsometryClass { elliptic, parabolic, loxodromic };

struct IsometryType {
  IsometryClass cls = IsometryClass::elliptic;
  double translation_length = 0.0;
};

/// Trace classification: |tr| > 2 loxodromic with translation length
/// 2 arccosh(|tr|/2); |tr| = 2 parabolic; |tr| < 2 elliptic. Exact when
/// integer entries are available; otherwise a float trace within kGeomTol
/// of 2 is an indeterminate-classification error.
IsometryType classify_isometry(const Moebius& m);

const char* to_string(IsometryClass cls);

}  // namespace hypwalk
