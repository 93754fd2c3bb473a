#include "hob/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hob/error.hpp"

namespace hob {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 column(const std::array<double, 9>& m, int c) { return {m[c], m[3 + c], m[6 + c]}; }

}  // namespace

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DegenerateGeometry: return "DegenerateGeometry";
    case Errc::Unsupported: return "Unsupported";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::EmptyLayer: return "EmptyLayer";
    case Errc::LayerOutOfRange: return "LayerOutOfRange";
    case Errc::AmbiguousSupport: return "AmbiguousSupport";
    case Errc::InsideTable: return "InsideTable";
    case Errc::ImageOutsideAtlas: return "ImageOutsideAtlas";
    case Errc::CenterMismatch: return "CenterMismatch";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::Overflow: return "Overflow";
    case Errc::Parse: return "Parse";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

double minkowski_inner(const Vec3& u, const Vec3& v) noexcept {
  return u.x * v.x + u.y * v.y - u.t * v.t;
}

HPoint HPoint::project(const Vec3& v) {
  using L = long double;
  const L x = v.x, y = v.y, t = v.t;
  const L q = t * t - x * x - y * y;
  if (!(q > 0) || !(v.t > 0.0)) {
    throw Error(Errc::InvalidArgument, "vector is not future timelike");
  }
  // Near-sheet vectors keep (x, y) and get t recomputed. Their norm deviation
  // is cancellation noise that grows with the magnitudes involved, and
  // dividing by it would move the point radially.
  const L s = std::abs(q - 1) <= kSheetSnap ? L{1} : 1 / std::sqrt(q);
  const L xs = s * x, ys = s * y;
  const L ts = std::sqrt(1 + xs * xs + ys * ys);
  return HPoint(Vec3{static_cast<double>(xs), static_cast<double>(ys), static_cast<double>(ts)});
}

HPoint HPoint::from_chart(double u, double w) {
  const double r2 = u * u + w * w;
  if (!(r2 < 1.0)) {
    throw Error(Errc::InvalidArgument, "chart point outside the open unit disk");
  }
  const double t = 1.0 / std::sqrt(1.0 - r2);
  return HPoint(Vec3{u * t, w * t, t});
}

HPoint HPoint::polar(double r, double phi) {
  const double s = std::sinh(r);
  return HPoint(Vec3{s * std::cos(phi), s * std::sin(phi), std::cosh(r)});
}

double HPoint::norm_residual() const noexcept { return std::abs(minkowski_inner(v_, v_) + 1.0); }

double reduce_angle(double theta) noexcept {
  double r = std::fmod(theta, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

IdealPoint::IdealPoint(double theta) : theta_(reduce_angle(theta)) {}

Vec3 IdealPoint::null_vector() const noexcept { return {std::cos(theta_), std::sin(theta_), 1.0}; }

double distance(const HPoint& a, const HPoint& b) noexcept {
  const double c = -minkowski_inner(a.vec(), b.vec());
  if (c > 2.0) return std::acosh(c);
  // chord form; acosh loses half the digits near 1
  const Vec3 d = a.vec() - b.vec();
  const double chord = std::sqrt(std::max(0.0, minkowski_inner(d, d)));
  return 2.0 * std::asinh(0.5 * chord);
}

HPoint midpoint(const HPoint& a, const HPoint& b) { return HPoint::project(a.vec() + b.vec()); }

bool same_point(const Vec3& a, const Vec3& b, double rel_tol) noexcept {
  const double scale = std::max({1.0, std::abs(a.t), std::abs(b.t)});
  return std::abs(a.x - b.x) <= rel_tol * scale && std::abs(a.y - b.y) <= rel_tol * scale &&
         std::abs(a.t - b.t) <= rel_tol * scale;
}

Isometry::Isometry() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

Isometry Isometry::from_rows(const std::array<double, 9>& rows) {
  Isometry g;
  g.m_ = rows;
  return g;
}

Isometry Isometry::rotation(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return from_rows({c, -s, 0, s, c, 0, 0, 0, 1});
}

Isometry Isometry::boost_to(const HPoint& p) {
  const double x = p.x();
  const double y = p.y();
  const double t = p.t();
  const double k = 1.0 / (1.0 + t);
  return from_rows({1.0 + k * x * x, k * x * y, x,  //
                    k * x * y, 1.0 + k * y * y, y,  //
                    x, y, t});
}

Isometry Isometry::rotation_about(const HPoint& p, double phi) {
  const Isometry b = boost_to(p);
  return b * rotation(phi) * b.inverse();
}

Vec3 Isometry::apply(const Vec3& v) const noexcept {
  return {m_[0] * v.x + m_[1] * v.y + m_[2] * v.t,  //
          m_[3] * v.x + m_[4] * v.y + m_[5] * v.t,  //
          m_[6] * v.x + m_[7] * v.y + m_[8] * v.t};
}

HPoint Isometry::apply(const HPoint& p) const { return HPoint::project(apply(p.vec())); }

Isometry Isometry::operator*(const Isometry& other) const {
  Isometry r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[3 * i + k] * other.m_[3 * k + j];
      r.m_[3 * i + j] = s;
    }
  }
  r.compositions_ = compositions_ + other.compositions_ + 1;
  if (r.compositions_ > kReprojectAfter) {
    r = r.reorthonormalized();
  }
  return r;
}

Isometry Isometry::inverse() const {
  // J m^T J: flips the sign of the mixed space/time entries of the transpose.
  const auto& m = m_;
  Isometry r = from_rows({m[0], m[3], -m[6],  //
                          m[1], m[4], -m[7],  //
                          -m[2], -m[5], m[8]});
  r.compositions_ = compositions_;
  return r;
}

double Isometry::lorentz_residual() const noexcept {
  constexpr std::array<double, 3> J{1.0, 1.0, -1.0};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[3 * k + i] * J[k] * m_[3 * k + j];
      const double target = i == j ? J[i] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  }
  return worst;
}

double Isometry::distance_to(const Isometry& other) const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < 9; ++i) worst = std::max(worst, std::abs(m_[i] - other.m_[i]));
  return worst;
}

Isometry Isometry::reorthonormalized() const {
  Vec3 et = column(m_, 2);
  et = (1.0 / std::sqrt(-minkowski_inner(et, et))) * et;
  if (et.t < 0.0) et = -et;

  auto orthogonalize = [&](Vec3 v, const std::vector<std::pair<Vec3, double>>& basis) {
    for (const auto& [b, sign] : basis) v = v - (sign * minkowski_inner(v, b)) * b;
    return (1.0 / std::sqrt(minkowski_inner(v, v))) * v;
  };
  const Vec3 ex = orthogonalize(column(m_, 0), {{et, -1.0}});
  const Vec3 ey = orthogonalize(column(m_, 1), {{et, -1.0}, {ex, 1.0}});

  Isometry r = from_rows({ex.x, ey.x, et.x, ex.y, ey.y, et.y, ex.t, ey.t, et.t});
  r.compositions_ = 0;
  return r;
}

Isometry half_turn(const HPoint& p) {
  // x -> -x - 2<x,p>p, i.e. m = -I - 2 p (Jp)^T
  const Vec3& v = p.vec();
  const std::array<double, 3> pv{v.x, v.y, v.t};
  const std::array<double, 3> jp{v.x, v.y, -v.t};
  std::array<double, 9> rows{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      rows[3 * i + j] = (i == j ? -1.0 : 0.0) - 2.0 * pv[i] * jp[j];
    }
  }
  return Isometry::from_rows(rows);
}

ChartPoint chart(const Vec3& v) noexcept { return {v.x / v.t, v.y / v.t}; }

ChartPoint chart(const HPoint& p) noexcept { return chart(p.vec()); }

ChartPoint chart(const IdealPoint& p) noexcept { return {std::cos(p.theta()), std::sin(p.theta())}; }

double orientation_value(const ChartPoint& a, const ChartPoint& b, const ChartPoint& c) noexcept {
  return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
}

int orientation(const ChartPoint& a, const ChartPoint& b, const ChartPoint& c) noexcept {
  const double d = orientation_value(a, b, c);
  if (std::abs(d) < kOrientationEps) return 0;
  return d > 0.0 ? 1 : -1;
}

Polygon regular_polygon(int sides, double circumradius, double phase) {
  Polygon poly;
  poly.vertices.reserve(static_cast<std::size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    poly.vertices.push_back(HPoint::polar(circumradius, phase + 2.0 * kPi * i / sides));
  }
  return poly;
}

bool is_hyperbolic_pair(int m, int n) noexcept {
  // 1/m + 1/n < 1/2  <=>  2(m + n) < m n
  return m >= 3 && n >= 3 && 2 * (m + n) < m * n;
}

TableGeometry mn_geometry(int m, int n) {
  if (m < 3 || n < 3) {
    std::ostringstream os;
    os << "polygons need at least 3 sides, got (" << m << "," << n << ")";
    throw Error(Errc::InvalidArgument, os.str());
  }
  if (!is_hyperbolic_pair(m, n)) {
    std::ostringstream os;
    os << "degenerate (" << (2 * (m + n) == m * n ? "Euclidean" : "spherical") << ") pair (" << m
       << "," << n << "): 1/M + 1/N must be below 1/2";
    throw Error(Errc::DegenerateGeometry, os.str());
  }

  TableGeometry g;
  g.m = m;
  g.n = n;
  const double cm = std::cos(kPi / m);
  const double cn = std::cos(kPi / n);
  g.alpha = 2.0 * std::atan(cm / cn);
  g.beta = kPi - g.alpha;
  g.edge_len = 2.0 * std::acosh(cm / std::sin(g.alpha / 2.0));
  g.circumradius_m = std::acosh(1.0 / (std::tan(kPi / m) * std::tan(g.alpha / 2.0)));
  g.circumradius_n = std::acosh(1.0 / (std::tan(kPi / n) * std::tan(g.beta / 2.0)));
  g.inradius_m = std::acosh(std::cos(g.alpha / 2.0) / std::sin(kPi / m));
  g.inradius_n = std::acosh(std::cos(g.beta / 2.0) / std::sin(kPi / n));
  g.table = regular_polygon(m, g.circumradius_m);
  return g;
}

}  // namespace hob
