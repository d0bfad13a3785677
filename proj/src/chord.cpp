#include "lamina/chord.hpp"

#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace lamina {

namespace {

bool cyclically_increasing(const std::vector<Angle>& seq) {
  int descents = 0;
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i)
    if (seq[(i + 1) % n] < seq[i]) ++descents;
  return descents <= 1;
}

}  // namespace

Chord::Chord(const Angle& x, const Angle& y) {
  if (x == y) throw std::invalid_argument("degenerate chord: " + x.str());
  a_ = std::min(x, y);
  b_ = std::max(x, y);
}

std::string Chord::str() const { return a_.str() + " " + b_.str(); }

Chord Chord::parse(const std::string& text) {
  std::istringstream in(text);
  std::string first, second, extra;
  if (!(in >> first >> second) || (in >> extra))
    throw std::invalid_argument("bad chord: '" + text + "'");
  return Chord(Angle::parse(first), Angle::parse(second));
}

std::ostream& operator<<(std::ostream& os, const Chord& chord) {
  return os << chord.str();
}

std::string ChordOrPoint::str() const {
  return is_point() ? point().str() : chord().str();
}

std::ostream& operator<<(std::ostream& os, const ChordOrPoint& value) {
  return os << value.str();
}

ChordOrPoint chord_image(int degree, const Chord& chord) {
  const Angle x = sigma(degree, chord.a());
  const Angle y = sigma(degree, chord.b());
  if (x == y) return ChordOrPoint(x);
  return ChordOrPoint(Chord(x, y));
}

bool is_critical(int degree, const Chord& chord) {
  return chord_image(degree, chord).is_point();
}

bool crosses(const Chord& c1, const Chord& c2) {
  if (c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b())) return false;
  return in_cyclic_order(c1.a(), c2.a(), c1.b()) !=
         in_cyclic_order(c1.a(), c2.b(), c1.b());
}

bool same_orientation(int degree, const std::vector<Angle>& a_set,
                      const std::vector<Angle>& b_set) {
  check_degree(degree);
  const std::set<Angle> a_pts(a_set.begin(), a_set.end());
  const std::set<Angle> b_pts(b_set.begin(), b_set.end());
  const auto invalid = [] { return std::invalid_argument("invalid sibling pair"); };
  if (a_pts.size() != a_set.size() || b_pts.size() != b_set.size()) throw invalid();
  if (a_pts.size() != b_pts.size()) throw invalid();
  for (const Angle& a : a_pts)
    if (b_pts.count(a)) throw invalid();

  std::map<Angle, Angle> sibling_of_image;
  for (const Angle& b : b_pts)
    if (!sibling_of_image.emplace(sigma(degree, b), b).second) throw invalid();

  std::vector<Angle> siblings, images;
  std::set<Angle> image_set;
  for (const Angle& a : a_pts) {
    const Angle image = sigma(degree, a);
    if (!image_set.insert(image).second) throw invalid();
    const auto it = sibling_of_image.find(image);
    if (it == sibling_of_image.end()) throw invalid();
    siblings.push_back(it->second);
    images.push_back(image);
  }
  return cyclically_increasing(siblings) && cyclically_increasing(images);
}

}  // namespace lamina
