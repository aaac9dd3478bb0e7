#include "hypwalk/halfplane.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

#include "hypwalk/errors.hpp"
#include "hypwalk/tolerances.hpp"

namespace hypwalk {

double robust_acosh(double x) {
  if (!std::isfinite(x)) throw NumericError("non-finite argument in distance");
  if (x <= 1.0) return 0.0;  // identical points up to roundoff
  if (x > 1e8) return std::log(2.0 * x);
  return std::acosh(x);
}

double plane_distance(const PlanePoint& p, const PlanePoint& q) {
  if (!(p.y > 0.0) || !(q.y > 0.0))
    throw UsageError("plane point outside the upper half-plane");
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return robust_acosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

PlanePoint plane_from_polar(double r, double theta) {
  // Disk model around 0, then the Cayley map w -> i(1+w)/(1-w) to the
  // half-plane; r is the hyperbolic radius.
  const std::complex<double> w = std::tanh(r / 2.0) * std::polar(1.0, theta);
  const std::complex<double> z =
      std::complex<double>(0.0, 1.0) * (1.0 + w) / (1.0 - w);
  return {z.real(), z.imag()};
}

std::optional<Mat2i> Mat2i::multiply(const Mat2i& l, const Mat2i& r) {
  auto mul_add = [](std::int64_t x1, std::int64_t y1, std::int64_t x2,
                    std::int64_t y2, std::int64_t* out) {
    std::int64_t p1, p2;
    if (__builtin_mul_overflow(x1, y1, &p1)) return false;
    if (__builtin_mul_overflow(x2, y2, &p2)) return false;
    return !__builtin_add_overflow(p1, p2, out);
  };
  Mat2i m;
  if (!mul_add(l.a, r.a, l.b, r.c, &m.a)) return std::nullopt;
  if (!mul_add(l.a, r.b, l.b, r.d, &m.b)) return std::nullopt;
  if (!mul_add(l.c, r.a, l.d, r.c, &m.c)) return std::nullopt;
  if (!mul_add(l.c, r.b, l.d, r.d, &m.d)) return std::nullopt;
  return m;
}

Moebius Moebius::from_entries(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
    throw UsageError("matrix entries must be finite");
  const double det = a * d - b * c;
  if (!(det > 0.0))
    throw UsageError("matrix must have positive determinant");
  Moebius m;
  const double s = std::sqrt(det);
  m.a_ = a / s;
  m.b_ = b / s;
  m.c_ = c / s;
  m.d_ = d / s;
  m.exact_.reset();
  auto integral = [](double v) {
    return std::rint(v) == v && std::abs(v) < 9.0e18;
  };
  if (integral(a) && integral(b) && integral(c) && integral(d) &&
      std::abs(det - 1.0) == 0.0) {
    m.exact_ = Mat2i{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                     static_cast<std::int64_t>(c), static_cast<std::int64_t>(d)};
  }
  return m;
}

Moebius Moebius::from_integers(std::int64_t a, std::int64_t b, std::int64_t c,
                               std::int64_t d) {
  std::int64_t ad, bc, det;
  if (__builtin_mul_overflow(a, d, &ad) || __builtin_mul_overflow(b, c, &bc) ||
      __builtin_sub_overflow(ad, bc, &det))
    throw UsageError("integer matrix entries too large");
  if (det != 1) throw UsageError("integer matrix must have determinant 1");
  Moebius m;
  m.a_ = static_cast<double>(a);
  m.b_ = static_cast<double>(b);
  m.c_ = static_cast<double>(c);
  m.d_ = static_cast<double>(d);
  m.exact_ = Mat2i{a, b, c, d};
  return m;
}

Moebius Moebius::operator*(const Moebius& rhs) const {
  Moebius m;
  m.a_ = a_ * rhs.a_ + b_ * rhs.c_;
  m.b_ = a_ * rhs.b_ + b_ * rhs.d_;
  m.c_ = c_ * rhs.a_ + d_ * rhs.c_;
  m.d_ = c_ * rhs.b_ + d_ * rhs.d_;
  const double det = m.a_ * m.d_ - m.b_ * m.c_;
  if (!std::isfinite(det) || std::abs(det - 1.0) > kDetDriftMax)
    throw NumericError("determinant drifted beyond 1e-6; matrix product degraded");
  const double s = std::sqrt(det);
  m.a_ /= s;
  m.b_ /= s;
  m.c_ /= s;
  m.d_ /= s;
  m.exact_.reset();
  if (exact_ && rhs.exact_) m.exact_ = Mat2i::multiply(*exact_, *rhs.exact_);
  return m;
}

Moebius Moebius::inverse() const {
  Moebius m;
  m.a_ = d_;
  m.b_ = -b_;
  m.c_ = -c_;
  m.d_ = a_;
  m.exact_.reset();
  if (exact_) m.exact_ = exact_->inverse();
  return m;
}

Moebius Moebius::power(int exponent) const {
  Moebius base = exponent < 0 ? inverse() : *this;
  int e = exponent < 0 ? -exponent : exponent;
  Moebius out;
  while (e > 0) {
    if (e & 1) out = out * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return out;
}

PlanePoint Moebius::apply(const PlanePoint& p) const {
  if (!(p.y > 0.0)) throw UsageError("plane point outside the upper half-plane");
  const std::complex<double> z(p.x, p.y);
  const std::complex<double> w = (a_ * z + b_) / (c_ * z + d_);
  if (!std::isfinite(w.real()) || !(w.imag() > 0.0))
    throw NumericError("image left the upper half-plane; numeric corruption");
  return {w.real(), w.imag()};
}

bool Moebius::is_identity() const {
  if (exact_)
    return (exact_->b == 0 && exact_->c == 0) &&
           ((exact_->a == 1 && exact_->d == 1) || (exact_->a == -1 && exact_->d == -1));
  auto near = [](double u, double v) { return std::abs(u - v) <= kElementEqTol; };
  return (near(b_, 0) && near(c_, 0)) &&
         ((near(a_, 1) && near(d_, 1)) || (near(a_, -1) && near(d_, -1)));
}

std::array<double, 4> Moebius::canonical_entries() const {
  std::array<double, 4> e{a_, b_, c_, d_};
  for (double v : e) {
    if (std::abs(v) > kElementEqTol) {
      if (v < 0)
        for (double& x : e) x = -x;
      break;
    }
  }
  return e;
}

std::string Moebius::str() const {
  char buf[128];
  if (exact_) {
    std::snprintf(buf, sizeof buf, "%lld %lld %lld %lld",
                  static_cast<long long>(exact_->a), static_cast<long long>(exact_->b),
                  static_cast<long long>(exact_->c), static_cast<long long>(exact_->d));
  } else {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g", a_, b_, c_, d_);
  }
  return buf;
}

IsometryType classify_isometry(const Moebius& m) {
  double abs_tr;
  bool boundary;
  if (m.exact()) {
    const std::int64_t t = m.exact()->trace();
    abs_tr = static_cast<double>(t < 0 ? -t : t);
    boundary = (t == 2 || t == -2);
  } else {
    abs_tr = std::abs(m.trace());
    if (std::abs(abs_tr - 2.0) <= kGeomTol)
      throw NumericError(
          "trace within tolerance of 2 and no exact entries: classification "
          "indeterminate");
    boundary = false;
  }
  if (boundary || abs_tr == 2.0) return {IsometryClass::parabolic, 0.0};
  if (abs_tr > 2.0)
    return {IsometryClass::loxodromic, 2.0 * std::acosh(abs_tr / 2.0)};
  return {IsometryClass::elliptic, 0.0};
}

const char* to_string(IsometryClass cls) {
  switch (cls) {
    case IsometryClass::elliptic: return "elliptic";
    case IsometryClass::parabolic: return "parabolic";
    case IsometryClass::loxodromic: return "loxodromic";
  }
  return "?";
}

}  // namespace hypwalk
