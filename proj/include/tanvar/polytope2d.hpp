#pragma once

// Lattice polygons in the plane: Newton polygons, Minkowski sums, areas,
// mixed volumes and face-system checks for two polynomials in two variables.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "univariate.hpp"

namespace tanvar {

struct LatticePoint {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

inline long long cross(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }
inline long long dot(const LatticePoint& a, const LatticePoint& b) { return a.x * b.x + a.y * b.y; }

/// Convex lattice polygon, vertices counter-clockwise from the lexicographic
/// minimum with collinear points dropped. Points and segments are allowed.
class Polygon {
 public:
  Polygon() = default;

  /// Convex hull (monotone chain).
  static Polygon hull(std::vector<LatticePoint> pts) {
    require(!pts.empty(), "polygon needs at least one point");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Polygon out;
    if (pts.size() <= 2) {
      out.v_ = pts;
      return out;
    }
    std::vector<LatticePoint> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
      while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
      h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
      h[k++] = pts[i];
    }
    h.resize(k - 1);
    out.v_ = std::move(h);
    return out;
  }

  const std::vector<LatticePoint>& vertices() const { return v_; }
  bool is_point() const { return v_.size() == 1; }
  bool is_segment() const { return v_.size() == 2; }

  /// Boundary edge vectors in counter-clockwise order. A segment has two
  /// opposite edges, a point none.
  std::vector<LatticePoint> edges() const {
    std::vector<LatticePoint> e;
    if (v_.size() < 2) return e;
    for (std::size_t i = 0; i < v_.size(); ++i) e.push_back(v_[(i + 1) % v_.size()] - v_[i]);
    return e;
  }

  Polygon dilate(long long k) const {
    require(k >= 0, "dilation factor must be non-negative");
    std::vector<LatticePoint> pts;
    for (const auto& p : v_) pts.push_back({k * p.x, k * p.y});
    return hull(std::move(pts));
  }

  Polygon translate(const LatticePoint& t) const {
    Polygon out = *this;
    for (auto& p : out.v_) p = p + t;
    return out;
  }

  friend bool operator==(const Polygon&, const Polygon&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < v_.size(); ++i)
      s += (i ? ", (" : "(") + std::to_string(v_[i].x) + "," + std::to_string(v_[i].y) + ")";
    return s + "]";
  }

 private:
  std::vector<LatticePoint> v_;
};

namespace detail {

// Directions ordered by angle measured counter-clockwise from (0,-1), with
// (0,-1) itself last. This is the order of edges leaving the lexicographic
// minimum of a counter-clockwise polygon.
inline int direction_half(const LatticePoint& d) { return (d.x > 0 || (d.x == 0 && d.y > 0)) ? 0 : 1; }

inline bool direction_before(const LatticePoint& a, const LatticePoint& b) {
  int ha = direction_half(a), hb = direction_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

}  // namespace detail

/// Minkowski sum by merging the two edge sequences.
inline Polygon minkowski_sum(const Polygon& p, const Polygon& q) {
  const auto ep = p.edges(), eq = q.edges();
  LatticePoint cur = p.vertices().front() + q.vertices().front();
  std::vector<LatticePoint> pts{cur};
  std::size_t i = 0, j = 0;
  while (i < ep.size() || j < eq.size()) {
    LatticePoint step;
    if (j == eq.size() || (i < ep.size() && !detail::direction_before(eq[j], ep[i])))
      step = ep[i++];
    else
      step = eq[j++];
    cur = cur + step;
    pts.push_back(cur);
  }
  return Polygon::hull(std::move(pts));
}

/// Twice the area, an integer for lattice polygons.
inline long long twice_area(const Polygon& p) {
  const auto& v = p.vertices();
  long long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return s;
}

inline mpq_class area(const Polygon& p) {
  mpq_class a(static_cast<long>(twice_area(p)), 2);
  a.canonicalize();
  return a;
}

inline mpq_class mixed_volume_2d(const Polygon& p, const Polygon& q) {
  mpq_class mv = area(minkowski_sum(p, q)) - area(p) - area(q);
  mv.canonicalize();
  return mv;
}

/// Primitive inner normals of the edges of p, in edge order.
inline std::vector<LatticePoint> inner_normals(const Polygon& p) {
  std::vector<LatticePoint> out;
  for (const auto& e : p.edges()) {
    long long g = std::gcd(e.x, e.y);
    LatticePoint n{-e.y / g, e.x / g};
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  return out;
}

/// Standard simplex scaled by m: (0,0), (m,0), (0,m).
inline Polygon simplex2(long long m) { return Polygon::hull({{0, 0}, {m, 0}, {0, m}}); }

/// Trapezoid with vertices (m-1,0), (m,0), (0,m), (0,m-1).
inline Polygon tangency_trapezoid(long long m) { return Polygon::hull({{m - 1, 0}, {m, 0}, {0, m}, {0, m - 1}}); }

template <CoefficientField F>
std::vector<LatticePoint> exponent_points(const Polynomial<F>& f) {
  require(f.num_vars() == 2, "expected a polynomial in two variables");
  std::vector<LatticePoint> pts;
  for (const auto& t : f.terms()) pts.push_back({t.mono[0], t.mono[1]});
  return pts;
}

template <CoefficientField F>
Polygon newton_polygon(const Polynomial<F>& f) {
  require(!f.is_zero(), "Newton polygon of the zero polynomial");
  return Polygon::hull(exponent_points(f));
}

template <CoefficientField F>
struct FaceData {
  LatticePoint direction;
  long long m_v = 0;
  std::vector<LatticePoint> support_face;
  Polynomial<F> restricted;
};

/// m_v = min over the support of alpha . v, A_v the minimizers, f_v the
/// corresponding part of f.
template <CoefficientField F>
FaceData<F> face_restriction(const Polynomial<F>& f, const LatticePoint& v) {
  require(!f.is_zero(), "face restriction of the zero polynomial");
  require(v.x != 0 || v.y != 0, "face direction must be nonzero");
  const auto pts = exponent_points(f);
  long long m = dot(pts.front(), v);
  for (const auto& a : pts) m = std::min(m, dot(a, v));
  FaceData<F> out{v, m, {}, Polynomial<F>(f.field(), 2)};
  std::vector<Term<F>> terms;
  for (const auto& t : f.terms()) {
    LatticePoint a{t.mono[0], t.mono[1]};
    if (dot(a, v) != m) continue;
    out.support_face.push_back(a);
    terms.push_back(t);
  }
  std::sort(out.support_face.begin(), out.support_face.end());
  out.restricted = Polynomial<F>::from_terms(f.field(), 2, std::move(terms));
  return out;
}

enum class Attainment { Attained, NotAttained, Inconclusive };

inline std::string to_string(Attainment a) {
  switch (a) {
    case Attainment::Attained: return "attained";
    case Attainment::NotAttained: return "not-attained";
    case Attainment::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct BkkVerdict {
  mpq_class bound;
  Attainment attained = Attainment::Inconclusive;
  std::optional<LatticePoint> witness;  // direction whose face system has a torus zero
};

namespace detail {

// f_v supported on a line perpendicular to v: write it as x^a0 * h(x^e) with e
// the primitive edge direction; h is univariate with nonzero constant term.
template <CoefficientField F>
std::optional<UPoly<F>> face_univariate(const FaceData<F>& face, const LatticePoint& e) {
  if (face.support_face.size() < 2) return std::nullopt;  // a monomial has no torus zeros
  const LatticePoint base = face.support_face.front();
  std::vector<std::pair<long long, typename F::Element>> steps;
  long long lo = 0, hi = 0;
  bool first = true;
  for (const auto& t : face.restricted.terms()) {
    LatticePoint d = LatticePoint{t.mono[0], t.mono[1]} - base;
    long long k = e.x != 0 ? d.x / e.x : d.y / e.y;
    steps.push_back({k, t.coeff});
    lo = first ? k : std::min(lo, k);
    hi = first ? k : std::max(hi, k);
    first = false;
  }
  const F& field = face.restricted.field();
  std::vector<typename F::Element> c(static_cast<std::size_t>(hi - lo + 1), field.zero());
  for (const auto& [k, coeff] : steps) c[static_cast<std::size_t>(k - lo)] = coeff;
  return UPoly<F>(field, std::move(c));
}

}  // namespace detail

/// Mixed-volume bound for the torus roots of {f = g = 0} and whether it is
/// attained, decided by the face systems along every edge normal of N(f)+N(g).
/// Directions that are not edge normals of the sum give a monomial face on at
/// least one side and so never carry torus zeros.
template <CoefficientField F>
BkkVerdict bkk_check_2d(const Polynomial<F>& f, const Polynomial<F>& g) {
  require(!f.is_zero() && !g.is_zero(), "BKK check needs nonzero polynomials");
  const Polygon pf = newton_polygon(f), pg = newton_polygon(g);
  BkkVerdict out;
  out.bound = mixed_volume_2d(pf, pg);
  for (const auto& v : inner_normals(minkowski_sum(pf, pg))) {
    const auto ff = face_restriction(f, v), gf = face_restriction(g, v);
    const LatticePoint e{v.y, -v.x};  // primitive, perpendicular to v
    auto hf = detail::face_univariate(ff, e), hg = detail::face_univariate(gf, e);
    if (!hf || !hg) continue;
    if (UPoly<F>::gcd(*hf, *hg).degree() > 0) {
      out.attained = Attainment::NotAttained;
      out.witness = v;
      return out;
    }
  }
  out.attained = Attainment::Attained;
  return out;
}

}  // namespace tanvar
