#pragma once

// Hyperboloid-model plane geometry.
//
// Points of the hyperbolic plane live on the future sheet x^2 + y^2 - t^2 = -1.
// Orientation-preserving isometries are 3x3 matrices preserving the form
// J = diag(1, 1, -1). The Klein chart (x/t, y/t) is used only for orientation
// tests and drawing.

#include <array>
#include <cstddef>
#include <vector>

namespace hob {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.t + b.t}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.t - b.t}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.t}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.t}; }
};

double minkowski_inner(const Vec3& u, const Vec3& v) noexcept;

// Point on the future sheet.
class HPoint {
 public:
  HPoint() : v_{0.0, 0.0, 1.0} {}

  // Scales a timelike vector with t > 0 back onto the sheet. Vectors whose
  // norm is within kSheetSnap of -1 keep (x, y) and have t recomputed. Throws
  // InvalidArgument for anything else.
  static HPoint project(const Vec3& v);

  static constexpr double kSheetSnap = 1e-3;

  // Lifts a point of the open unit disk through the Klein chart.
  static HPoint from_chart(double u, double w);

  // Point at hyperbolic distance r from the origin in direction phi.
  static HPoint polar(double r, double phi);

  static HPoint origin() { return HPoint{}; }

  const Vec3& vec() const noexcept { return v_; }
  double x() const noexcept { return v_.x; }
  double y() const noexcept { return v_.y; }
  double t() const noexcept { return v_.t; }

  // |<p,p> + 1|
  double norm_residual() const noexcept;

 private:
  explicit HPoint(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

// Boundary point, canonical angle in [0, 2pi).
class IdealPoint {
 public:
  explicit IdealPoint(double theta);

  double theta() const noexcept { return theta_; }
  Vec3 null_vector() const noexcept;

 private:
  double theta_;
};

double reduce_angle(double theta) noexcept;

double distance(const HPoint& a, const HPoint& b) noexcept;

// Hyperbolic midpoint of the geodesic segment [a, b].
HPoint midpoint(const HPoint& a, const HPoint& b);

// Relative coordinate closeness used for point identification: the (x, y)
// difference measured against max(1, t). The (x, y) projection never shrinks
// hyperbolic distances, so distinct tiling points stay well separated.
bool same_point(const Vec3& a, const Vec3& b, double rel_tol) noexcept;

class Isometry {
 public:
  Isometry();  // identity

  static Isometry from_rows(const std::array<double, 9>& rows);

  // Rotation about the origin by phi (counterclockwise in the chart).
  static Isometry rotation(double phi);

  // Pure boost taking the origin to p.
  static Isometry boost_to(const HPoint& p);

  // Rotation by phi about p.
  static Isometry rotation_about(const HPoint& p, double phi);

  Vec3 apply(const Vec3& v) const noexcept;
  HPoint apply(const HPoint& p) const;
  HPoint operator()(const HPoint& p) const { return apply(p); }

  // Composition (*this after other). Results that have been through more
  // than kReprojectAfter compositions are re-orthonormalized.
  Isometry operator*(const Isometry& other) const;

  // Inverse via J m^T J.
  Isometry inverse() const;

  // max |m^T J m - J| entrywise.
  double lorentz_residual() const noexcept;

  // Max entrywise difference.
  double distance_to(const Isometry& other) const noexcept;

  double operator()(std::size_t r, std::size_t c) const noexcept { return m_[3 * r + c]; }

  // Lorentz Gram-Schmidt on the columns, time column first.
  Isometry reorthonormalized() const;

  int compositions() const noexcept { return compositions_; }

  static constexpr int kReprojectAfter = 32;

 private:
  std::array<double, 9> m_;
  int compositions_ = 0;
};

// Point reflection x -> -x - 2<x,p> p.
Isometry half_turn(const HPoint& p);

struct ChartPoint {
  double u = 0.0;
  double v = 0.0;
};

ChartPoint chart(const HPoint& p) noexcept;
ChartPoint chart(const IdealPoint& p) noexcept;
ChartPoint chart(const Vec3& v) noexcept;  // any vector with t != 0

// Signed doubled area of (a, b, c).
double orientation_value(const ChartPoint& a, const ChartPoint& b, const ChartPoint& c) noexcept;

// Sign of orientation_value, with |det| below kOrientationEps reported as 0.
int orientation(const ChartPoint& a, const ChartPoint& b, const ChartPoint& c) noexcept;

inline constexpr double kOrientationEps = 1e-12;

struct Polygon {
  std::vector<HPoint> vertices;  // counterclockwise in the chart
  HPoint center;
};

// Regular polygon centered at the origin, first vertex at angle `phase`.
Polygon regular_polygon(int sides, double circumradius, double phase = 0.0);

struct TableGeometry {
  int m = 0;
  int n = 0;
  double alpha = 0.0;  // interior angle of the M-gon
  double beta = 0.0;   // interior angle of the N-gon
  double edge_len = 0.0;
  double circumradius_m = 0.0;
  double circumradius_n = 0.0;
  double inradius_m = 0.0;
  double inradius_n = 0.0;
  Polygon table;

  int sides(bool n_gon) const noexcept { return n_gon ? n : m; }
};

// Throws DegenerateGeometry unless 1/M + 1/N < 1/2 (and InvalidArgument for
// M or N below 3).
TableGeometry mn_geometry(int m, int n);

bool is_hyperbolic_pair(int m, int n) noexcept;

}  // namespace hob
