#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamina {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline void check_degree(int degree) {
  if (degree < 2) throw std::invalid_argument("degree must be at least 2");
}

// A point of the unit circle R/Z, stored as an exact rational in [0, 1).
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Rational& value) : v_(wrap(value)) {}
  Angle(const Int& num, const Int& den);

  const Rational& value() const { return v_; }
  Int num() const;
  Int den() const;

  // "p/q" reduced, or "0".
  std::string str() const;
  // Accepts "p/q" or a bare integer, wrapping mod 1.
  static Angle parse(const std::string& text);

  friend bool operator==(const Angle& a, const Angle& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

 private:
  static Rational wrap(Rational value);

  Rational v_;
};

std::ostream& operator<<(std::ostream& os, const Angle& angle);

// Counterclockwise arc length from `from` to `to`, in [0, 1).
Rational ccw_dist(const Angle& from, const Angle& to);
// Shorter-arc distance, in [0, 1/2].
Rational circle_dist(const Angle& a, const Angle& b);

// The angle d-tupling map x -> d*x mod 1.
Angle sigma(int degree, const Angle& angle);
// The d preimages of `angle` under sigma, ascending.
std::vector<Angle> preimages(int degree, const Angle& angle);
// True when b lies strictly inside the counterclockwise arc from a to c.
bool in_cyclic_order(const Angle& a, const Angle& b, const Angle& c);

struct OrbitInfo {
  long long preperiod = 0;
  long long period = 1;
  friend bool operator==(const OrbitInfo&, const OrbitInfo&) = default;
};

// Preperiod and eventual period of `angle` under sigma.
OrbitInfo orbit_info(int degree, const Angle& angle);

}  // namespace lamina
