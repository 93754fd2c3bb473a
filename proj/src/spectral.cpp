#include "hob/spectral.hpp"

#include <cmath>
#include <sstream>

#include "hob/error.hpp"
#include "hob/geometry.hpp"

namespace hob {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in layer recurrence");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in layer recurrence");
  return r;
}

std::string repeat(std::string_view s, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += s;
  return out;
}

void require_pair(int m, int n) {
  if (m < 3 || n < 3) {
    std::ostringstream os;
    os << "polygons need at least 3 sides, got (" << m << "," << n << ")";
    throw Error(Errc::InvalidArgument, os.str());
  }
  if (!is_hyperbolic_pair(m, n)) {
    std::ostringstream os;
    os << "degenerate (" << (2 * (m + n) == m * n ? "Euclidean" : "spherical") << ") pair (" << m << "," << n
       << ")";
    throw Error(Errc::DegenerateGeometry, os.str());
  }
  if (m >= 4 && n == 3) {
    std::ostringstream os;
    os << "no substitution rules for a triangle layer around a " << m << "-gon table";
    throw Error(Errc::Unsupported, os.str());
  }
}

Real ipow(Real x, int e) {
  if (e < 0) return 1.0L / ipow(x, -e);
  Real r = 1.0L;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

std::int64_t exact_div(std::int64_t a, int m) {
  if (a % m != 0) throw Error(Errc::Internal, "layer count not divisible by the table symmetry");
  return a / m;
}

}  // namespace

SubstitutionRules rules_for(int m, int n) {
  require_pair(m, n);
  SubstitutionRules r;
  if (m == 3) {
    r.alphabet = "XY";
    r.rules['X'] = "X" + std::string(static_cast<std::size_t>(n - 6), 'Y');
    r.rules['Y'] = "X" + std::string(static_cast<std::size_t>(n - 5), 'Y');
  } else {
    const std::string block = "Y" + std::string(static_cast<std::size_t>(m - 3), 'Z');
    const std::string tail = "Y" + std::string(static_cast<std::size_t>(m - 4), 'Z');
    r.alphabet = "YZ";
    r.rules['Y'] = repeat(block, n - 4) + tail;
    r.rules['Z'] = repeat(block, n - 3) + tail;
  }
  return r;
}

std::string expand(const SubstitutionRules& rules, std::string_view word, int steps, std::size_t max_length) {
  if (steps < 0) throw Error(Errc::InvalidArgument, "negative step count");
  std::string cur(word);
  for (char c : cur) {
    if (!rules.rules.contains(c)) throw Error(Errc::InvalidArgument, std::string("letter outside alphabet: ") + c);
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t next_len = 0;
    for (char c : cur) next_len += rules.rules.at(c).size();
    if (next_len > max_length) {
      std::ostringstream os;
      os << "expanded word would have " << next_len << " letters (cap " << max_length << ")";
      throw Error(Errc::CapExceeded, os.str());
    }
    std::string next;
    next.reserve(next_len);
    for (char c : cur) next += rules.rules.at(c);
    cur = std::move(next);
  }
  return cur;
}

IntVec2 letter_counts(const SubstitutionRules& rules, std::string_view word) {
  IntVec2 out{0, 0};
  for (char c : word) {
    if (c == rules.alphabet[0]) {
      ++out[0];
    } else if (c == rules.alphabet[1]) {
      ++out[1];
    } else {
      throw Error(Errc::InvalidArgument, std::string("letter outside alphabet: ") + c);
    }
  }
  return out;
}

IntVec2 IntMat2::operator*(const IntVec2& v) const {
  return {checked_add(checked_mul(a, v[0]), checked_mul(b, v[1])),
          checked_add(checked_mul(c, v[0]), checked_mul(d, v[1]))};
}

IntMat2 IntMat2::operator*(const IntMat2& o) const {
  return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)), checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
          checked_add(checked_mul(c, o.a), checked_mul(d, o.c)), checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
}

std::int64_t IntMat2::det() const { return checked_add(checked_mul(a, d), -checked_mul(b, c)); }

GrowthModel growth_model(int m, int n) {
  const SubstitutionRules rules = rules_for(m, n);
  GrowthModel g;
  g.m = m;
  g.n = n;
  const IntVec2 c0 = letter_counts(rules, rules.rules.at(rules.alphabet[0]));
  const IntVec2 c1 = letter_counts(rules, rules.rules.at(rules.alphabet[1]));
  g.a = {c0[0], c1[0], c0[1], c1[1]};
  if (m == 3) {
    g.init = {3, 3 * (n - 4)};
    g.init_layer = 2;
    g.cone_init = {1, 0};
    g.mgon_weights = {n - 4, n - 3};
  } else {
    g.init = {0, m};
    g.init_layer = 1;
    g.cone_init = {2, m - 4};
    g.mgon_weights = {n - 3, n - 2};
  }
  return g;
}

IntVec2 layer_vector(const GrowthModel& model, int k) {
  if (k < model.init_layer) {
    std::ostringstream os;
    os << "layer " << k << " is below the recurrence base " << model.init_layer;
    throw Error(Errc::LayerOutOfRange, os.str());
  }
  IntVec2 v = model.init;
  for (int i = model.init_layer; i < k; ++i) v = model.a * v;
  return v;
}

IntVec2 cone_vector(const GrowthModel& model, int k) {
  if (k < 2) throw Error(Errc::LayerOutOfRange, "cone sums start at layer 2");
  IntVec2 sum{0, 0};
  IntVec2 term = model.cone_init;
  for (int i = 0; i <= k - 2; ++i) {
    sum = {checked_add(sum[0], term[0]), checked_add(sum[1], term[1])};
    term = model.a * term;
  }
  return sum;
}

ExactLayer exact_layer(const GrowthModel& model, int k) {
  if (k < 1) throw Error(Errc::LayerOutOfRange, "layers start at 1");
  ExactLayer e;
  e.k = k;
  const auto& w = model.mgon_weights;
  if (k < model.init_layer) {
    // Rank-1 N-gons around a triangle: one per side, none with parents, each
    // producing as many M-gons as a Z-type tile.
    e.zero = model.m;
    e.q = model.m;
    e.l = checked_mul(model.m, model.n - 2);
  } else {
    e.types = layer_vector(model, k);
    e.q = checked_add(e.types[0], e.types[1]);
    e.l = checked_add(checked_mul(w[0], e.types[0]), checked_mul(w[1], e.types[1]));
  }
  const IntVec2 cone = k >= 2 ? cone_vector(model, k) : IntVec2{0, 0};
  e.s = checked_add(cone[0], cone[1]);
  e.p = checked_add(exact_div(e.q, model.m), e.s);
  e.j = checked_add(checked_add(exact_div(e.l, model.m), checked_add(checked_mul(w[0], cone[0]), checked_mul(w[1], cone[1]))),
                    1);
  return e;
}

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::SingleShape: return "single";
    case Family::Triangle: return "triangle";
    case Family::General: return "general";
  }
  return "general";
}

ClosedFormParams closed_form_params(int m, int n) {
  require_pair(m, n);
  ClosedFormParams p;
  p.m = m;
  p.n = n;
  if (m == 3) {
    p.family = Family::Triangle;
    const Real r6 = std::sqrt(static_cast<Real>(n - 6));
    const Real r2 = std::sqrt(static_cast<Real>(n - 2));
    p.e1 = (r6 + r2) / 2;
    p.e2 = (r6 - r2) / 2;
  } else {
    p.family = Family::General;
    p.b = static_cast<Real>((m - 2) * (n - 2) - 2);
    const Real rm = std::sqrt(p.b - 2);
    const Real rp = std::sqrt(p.b + 2);
    p.e1 = (rm + rp) / 2;
    p.e2 = (rm - rp) / 2;
  }
  return p;
}

ClosedFormParams single_shape_params(int n) {
  require_pair(n, n);
  ClosedFormParams p;
  p.family = Family::SingleShape;
  p.m = n;
  p.n = n;
  const Real disc = std::sqrt(static_cast<Real>(n) * (n - 4));
  p.e1 = (n - 2 + disc) / 2;
  p.e2 = (n - 2 - disc) / 2;
  return p;
}

std::array<Real, 2> characteristic_sum_product(const ClosedFormParams& params) {
  switch (params.family) {
    case Family::SingleShape: return {static_cast<Real>(params.n - 2), 1.0L};
    case Family::Triangle: return {std::sqrt(static_cast<Real>(params.n - 6)), -1.0L};
    case Family::General: return {std::sqrt(params.b - 2), -1.0L};
  }
  return {0, 0};
}

ClosedFormValues closed_forms(const ClosedFormParams& params, int k) {
  ClosedFormValues v;
  v.family = params.family;
  v.m = params.m;
  v.n = params.n;
  v.k = k;
  const Real e1 = params.e1;
  const Real e2 = params.e2;
  auto diff = [&](int e) { return ipow(e1, e) - ipow(e2, e); };
  auto sum = [&](int e) { return ipow(e1, e) + ipow(e2, e); };

  switch (params.family) {
    case Family::SingleShape: {
      if (k < 1) throw Error(Errc::LayerOutOfRange, "ranks start at 1");
      const Real u_k = diff(k) / (e1 - e2);
      const Real u_prev = diff(k - 1) / (e1 - e2);
      v.has_mgons = false;
      v.q = params.n * u_k;
      v.s = u_prev;
      v.p = u_prev + u_k;
      v.l = v.j = std::nanl("");
      v.q_printed = v.q;
      v.s_printed = v.s;
      v.p_printed = v.p;
      v.l_printed = v.j_printed = v.l;
      break;
    }
    case Family::Triangle: {
      if (k < 2) throw Error(Errc::LayerOutOfRange, "triangle-family counts start at N-gon layer 2");
      const int n = params.n;
      const Real r6 = std::sqrt(static_cast<Real>(n - 6));
      const Real r2 = std::sqrt(static_cast<Real>(n - 2));
      const Real xs = diff(2 * k - 4) / (r6 * r2);  // x^s - 1
      const Real ys = diff(2 * k - 3) / r2;         // y^s + 1
      v.q_printed = sum(2 * k - 3) / r6 + sum(2 * k - 2);
      v.l_printed = (n - 4) * sum(2 * k - 3) / r6 + (n - 3) * sum(2 * k - 2);
      v.s_printed = xs + ys;
      v.p_printed = v.q_printed / 3 + v.s_printed;
      const Real cone_j = (n - 4) * xs + (n - 3) * ys;
      v.j_printed = v.l_printed / 3 + cone_j;
      v.q = 3 * v.q_printed;
      v.l = 3 * v.l_printed;
      v.s = v.s_printed;
      v.p = v.q / 3 + v.s;
      v.j = v.l / 3 + cone_j;
      break;
    }
    case Family::General: {
      if (k < 1) throw Error(Errc::LayerOutOfRange, "layers start at 1");
      const int m = params.m;
      const int n = params.n;
      const Real b = params.b;
      const Real root = std::sqrt(b * b - 4);
      const Real cone_scale = 1.0L / ((b - 2) * std::sqrt(b + 2));
      v.q = m / root * ((b + 1) * diff(2 * k - 2) - diff(2 * k - 4));
      v.l = m * (n - 2) / root * (b * diff(2 * k - 2) - diff(2 * k - 4));
      v.s = (m - 2) * cone_scale * ((b - 1) * diff(2 * k - 3) - diff(2 * k - 5));
      v.p = v.q / m + v.s;
      v.j = v.l / m + cone_scale * ((b * b - 2) * diff(2 * k - 3) - b * diff(2 * k - 5));
      v.q_printed = v.q;
      v.l_printed = v.l;
      v.s_printed = (m - 2) * cone_scale * ((b - 1) * sum(2 * k - 3) - diff(2 * k - 5));
      v.p_printed = v.p;
      v.j_printed = v.j;
      break;
    }
  }
  return v;
}

Real rotation_number_closed(const ClosedFormParams& params) {
  switch (params.family) {
    case Family::SingleShape: {
      const Real n = params.n;
      return (n - std::sqrt(n * (n - 4))) / (2 * n);
    }
    case Family::Triangle:
      return 1.0L / 3 + 1.0L / (3 * std::sqrt(static_cast<Real>(params.n - 2)) * params.e1);
    case Family::General: {
      const Real m = params.m;
      const Real b = params.b;
      const Real a2 = params.e1 * params.e1;
      return 1 / m + (m - 2) / (m * std::sqrt(b - 2) * params.e1) * (((b - 1) * a2 - 1) / ((b + 1) * a2 - 1));
    }
  }
  return 0;
}

Real rotation_number_closed_alt(const ClosedFormParams& params) {
  if (params.family != Family::Triangle) {
    throw Error(Errc::InvalidArgument, "alternate rotation-number form exists for the triangle family only");
  }
  return 1.0L / 3 + 1.0L / (3 * (1 + params.e1 * params.e1));
}

Real phi_from_rotation_number(int n, Real rho) {
  return 1.0L / (3 * std::sqrt(static_cast<Real>(n - 2)) * (rho - 1.0L / 3));
}

}  // namespace hob
