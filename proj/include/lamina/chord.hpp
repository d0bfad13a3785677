#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "lamina/angle.hpp"

namespace lamina {

// An unordered pair of distinct circle points, stored smaller-first.
class Chord {
 public:
  Chord(const Angle& x, const Angle& y);

  const Angle& a() const { return a_; }
  const Angle& b() const { return b_; }
  bool has_endpoint(const Angle& p) const { return p == a_ || p == b_; }

  // "p/q r/s", smaller endpoint first.
  std::string str() const;
  static Chord parse(const std::string& text);

  friend bool operator==(const Chord&, const Chord&) = default;
  friend std::strong_ordering operator<=>(const Chord&, const Chord&) = default;

 private:
  Angle a_, b_;
};

std::ostream& operator<<(std::ostream& os, const Chord& chord);

// Image of a chord under sigma: a chord, or a point when both endpoints collide.
class ChordOrPoint {
 public:
  explicit ChordOrPoint(const Angle& point) : v_(point) {}
  explicit ChordOrPoint(const Chord& chord) : v_(chord) {}

  bool is_point() const { return std::holds_alternative<Angle>(v_); }
  bool is_chord() const { return std::holds_alternative<Chord>(v_); }
  const Angle& point() const { return std::get<Angle>(v_); }
  const Chord& chord() const { return std::get<Chord>(v_); }

  std::string str() const;

  friend bool operator==(const ChordOrPoint&, const ChordOrPoint&) = default;

 private:
  std::variant<Angle, Chord> v_;
};

std::ostream& operator<<(std::ostream& os, const ChordOrPoint& value);

ChordOrPoint chord_image(int degree, const Chord& chord);
bool is_critical(int degree, const Chord& chord);

// True iff the endpoint pairs strictly interleave; a shared endpoint never crosses.
bool crosses(const Chord& c1, const Chord& c2);

// True iff sigma maps the disjoint sets A and B one-to-one onto a common image
// and the matching a -> sibling -> image preserves circular order.
bool same_orientation(int degree, const std::vector<Angle>& a_set,
                      const std::vector<Angle>& b_set);

}  // namespace lamina
