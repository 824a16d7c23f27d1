#ifndef TRICOVER_GEOMETRY_HPP
#define TRICOVER_GEOMETRY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tricover/rat.hpp"

namespace tricover {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Closed x-interval, lo <= hi (degenerate when lo == hi).
struct Interval {
  Rat lo;
  Rat hi;

  Rat width() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// A triangle with one horizontal side (its base). Orientation is derived:
/// pointing up iff the apex lies above the base line. The whole library works
/// in stretched coordinates where a unit equilateral triangle has base 1 and
/// height 1; coverage is invariant under that affine map, so everything stays
/// rational. Triangles are closed sets throughout.
class HTriangle {
 public:
  /// Throws std::invalid_argument on a degenerate triangle
  /// (base_len <= 0 or apex_y == base_y).
  HTriangle(Rat base_y, Rat base_x_left, Rat base_len, Rat apex_x, Rat apex_y);

  /// Stretched image of a unit equilateral triangle: base 1, height 1,
  /// apex centered. `up` variants have the base at y, apex at y+1; `down`
  /// variants have the base at y, apex at y-1.
  static HTriangle unit_up(const Rat& base_x_left, const Rat& base_y);
  static HTriangle unit_down(const Rat& base_x_left, const Rat& base_y);
  static HTriangle equilateral_up(const Rat& side, const Rat& base_x_left,
                                  const Rat& base_y);
  static HTriangle equilateral_down(const Rat& side, const Rat& base_x_left,
                                    const Rat& base_y);

  const Rat& base_y() const { return base_y_; }
  const Rat& base_x_left() const { return base_x_left_; }
  const Rat& base_len() const { return base_len_; }
  const Rat& apex_x() const { return apex_x_; }
  const Rat& apex_y() const { return apex_y_; }

  bool points_up() const { return apex_y_ > base_y_; }
  Rat height() const { return (apex_y_ - base_y_).abs(); }
  Rat base_x_right() const { return base_x_left_ + base_len_; }
  Rat y_low() const { return min(base_y_, apex_y_); }
  Rat y_high() const { return max(base_y_, apex_y_); }
  bool is_unit() const { return base_len_ == Rat(1) && height() == Rat(1); }

  /// Base-left, base-right, apex.
  std::array<Point, 3> vertices() const;

  /// The closed segment tri ∩ {y = given}, absent when the line misses the
  /// triangle. Width varies linearly between the base and the apex; at the
  /// base line the full base is returned for either orientation (set
  /// semantics — the right-continuity convention lives in the projection
  /// layer, not here).
  std::optional<Interval> cross_section(const Rat& y) const;

  /// Closed-set membership, decided by exact sign tests on cross products.
  bool contains(const Point& p) const;

  friend bool operator==(const HTriangle& a, const HTriangle& b);

 private:
  Rat base_y_;
  Rat base_x_left_;
  Rat base_len_;
  Rat apex_x_;
  Rat apex_y_;
};

/// One non-horizontal edge of an HTriangle, parameterized as x(y).
/// Slanted edges of an H-triangle are never horizontal, so x(y) is affine
/// over the closed span [y_lo, y_hi].
struct SlantEdge {
  Rat y_lo;
  Rat y_hi;
  Rat x_at_y_lo;
  Rat dx_dy;

  Rat x_at(const Rat& y) const { return x_at_y_lo + dx_dy * (y - y_lo); }
};

std::array<SlantEdge, 2> slant_edges(const HTriangle& tri);

/// True iff the open interiors of the two triangles meet. Exact: interiors
/// meet iff at some height inside both y-spans the cross sections overlap
/// with positive width, and that overlap width is piecewise affine in y with
/// breakpoints only at edge-line crossings, so checking the finitely many
/// candidate heights decides it.
bool interiors_intersect(const HTriangle& a, const HTriangle& b);

/// A nonempty union of H-triangles (the covering target).
class Region {
 public:
  explicit Region(std::vector<HTriangle> parts);

  const std::vector<HTriangle>& parts() const { return parts_; }
  Rat y_low() const;
  Rat y_high() const;

  /// True iff all pairs of parts have disjoint interiors (computed on
  /// demand; Theorem-2-style targets require it).
  bool interiors_disjoint() const;

  bool contains(const Point& p) const;

 private:
  std::vector<HTriangle> parts_;
};

/// A target region together with the candidate covering pieces; the unit of
/// JSON interchange. Covering means: closed target contained in the union of
/// the closed pieces.
class Covering {
 public:
  Covering(Region target, std::vector<HTriangle> pieces, std::string label);

  const Region& target() const { return target_; }
  const std::vector<HTriangle>& pieces() const { return pieces_; }
  const std::string& label() const { return label_; }

 private:
  Region target_;
  std::vector<HTriangle> pieces_;
  std::string label_;
};

}  // namespace tricover

#endif  // TRICOVER_GEOMETRY_HPP
