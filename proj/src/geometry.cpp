#include "tricover/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tricover {

namespace {

// Twice the signed area of (a, b, c); positive iff counterclockwise.
Rat orientation(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

HTriangle::HTriangle(Rat base_y, Rat base_x_left, Rat base_len, Rat apex_x,
                     Rat apex_y)
    : base_y_(std::move(base_y)),
      base_x_left_(std::move(base_x_left)),
      base_len_(std::move(base_len)),
      apex_x_(std::move(apex_x)),
      apex_y_(std::move(apex_y)) {
  if (base_len_.sign() <= 0)
    throw std::invalid_argument("HTriangle: base_len must be positive");
  if (apex_y_ == base_y_)
    throw std::invalid_argument("HTriangle: apex on the base line");
}

HTriangle HTriangle::unit_up(const Rat& base_x_left, const Rat& base_y) {
  return equilateral_up(Rat(1), base_x_left, base_y);
}

HTriangle HTriangle::unit_down(const Rat& base_x_left, const Rat& base_y) {
  return equilateral_down(Rat(1), base_x_left, base_y);
}

HTriangle HTriangle::equilateral_up(const Rat& side, const Rat& base_x_left,
                                    const Rat& base_y) {
  return HTriangle(base_y, base_x_left, side, base_x_left + side / Rat(2),
                   base_y + side);
}

HTriangle HTriangle::equilateral_down(const Rat& side, const Rat& base_x_left,
                                      const Rat& base_y) {
  return HTriangle(base_y, base_x_left, side, base_x_left + side / Rat(2),
                   base_y - side);
}

std::array<Point, 3> HTriangle::vertices() const {
  return {Point{base_x_left_, base_y_}, Point{base_x_right(), base_y_},
          Point{apex_x_, apex_y_}};
}

std::optional<Interval> HTriangle::cross_section(const Rat& y) const {
  if (y < y_low() || y > y_high()) return std::nullopt;
  // Interpolate both slanted edges from the base towards the apex.
  Rat s = (y - base_y_) / (apex_y_ - base_y_);  // in [0, 1]
  Rat xl = base_x_left_ + (apex_x_ - base_x_left_) * s;
  Rat xr = base_x_right() + (apex_x_ - base_x_right()) * s;
  return Interval{std::move(xl), std::move(xr)};
}

bool HTriangle::contains(const Point& p) const {
  auto v = vertices();
  int s = points_up() ? 1 : -1;  // vertex order is CCW iff pointing up
  Rat flip(s);
  return (flip * orientation(v[0], v[1], p)).sign() >= 0 &&
         (flip * orientation(v[1], v[2], p)).sign() >= 0 &&
         (flip * orientation(v[2], v[0], p)).sign() >= 0;
}

bool operator==(const HTriangle& a, const HTriangle& b) {
  return a.base_y_ == b.base_y_ && a.base_x_left_ == b.base_x_left_ &&
         a.base_len_ == b.base_len_ && a.apex_x_ == b.apex_x_ &&
         a.apex_y_ == b.apex_y_;
}

std::array<SlantEdge, 2> slant_edges(const HTriangle& tri) {
  Rat dy = tri.apex_y() - tri.base_y();
  auto make = [&](const Rat& base_x) {
    SlantEdge e;
    if (tri.points_up()) {
      e.y_lo = tri.base_y();
      e.y_hi = tri.apex_y();
      e.x_at_y_lo = base_x;
      e.dx_dy = (tri.apex_x() - base_x) / dy;
    } else {
      e.y_lo = tri.apex_y();
      e.y_hi = tri.base_y();
      e.x_at_y_lo = tri.apex_x();
      e.dx_dy = (base_x - tri.apex_x()) / (tri.base_y() - tri.apex_y());
    }
    return e;
  };
  return {make(tri.base_x_left()), make(tri.base_x_right())};
}

bool interiors_intersect(const HTriangle& a, const HTriangle& b) {
  Rat lo = max(a.y_low(), b.y_low());
  Rat hi = min(a.y_high(), b.y_high());
  if (lo >= hi) return false;

  // Candidate heights: common span ends plus every crossing of an edge line
  // of a with an edge line of b inside [lo, hi]. Between consecutive
  // candidates the overlap width is affine, so its maximum over the span is
  // attained at a candidate.
  std::vector<Rat> ys = {lo, hi};
  auto ea = slant_edges(a);
  auto eb = slant_edges(b);
  for (const SlantEdge& e : ea) {
    for (const SlantEdge& f : eb) {
      if (e.dx_dy == f.dx_dy) continue;
      // e.x_at(y) == f.x_at(y)
      Rat y = (f.x_at_y_lo - f.dx_dy * f.y_lo - e.x_at_y_lo + e.dx_dy * e.y_lo) /
              (e.dx_dy - f.dx_dy);
      if (y > lo && y < hi) ys.push_back(std::move(y));
    }
  }

  for (const Rat& y : ys) {
    auto ca = a.cross_section(y);
    auto cb = b.cross_section(y);
    Rat width = min(ca->hi, cb->hi) - max(ca->lo, cb->lo);
    if (width.sign() > 0) return true;
  }
  return false;
}

Region::Region(std::vector<HTriangle> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Region: no parts");
}

Rat Region::y_low() const {
  Rat lo = parts_.front().y_low();
  for (const HTriangle& t : parts_) lo = min(lo, t.y_low());
  return lo;
}

Rat Region::y_high() const {
  Rat hi = parts_.front().y_high();
  for (const HTriangle& t : parts_) hi = max(hi, t.y_high());
  return hi;
}

bool Region::interiors_disjoint() const {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    for (std::size_t j = i + 1; j < parts_.size(); ++j)
      if (interiors_intersect(parts_[i], parts_[j])) return false;
  return true;
}

bool Region::contains(const Point& p) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const HTriangle& t) { return t.contains(p); });
}

Covering::Covering(Region target, std::vector<HTriangle> pieces,
                   std::string label)
    : target_(std::move(target)),
      pieces_(std::move(pieces)),
      label_(std::move(label)) {
  if (pieces_.empty()) throw std::invalid_argument("Covering: no pieces");
}

}  // namespace tricover
