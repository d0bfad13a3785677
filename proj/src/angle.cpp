#include "lamina/angle.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace lamina {

namespace {

bool is_int_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string trimmed(const std::string& s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  auto b = std::find_if_not(s.begin(), s.end(), is_space);
  auto e = std::find_if_not(s.rbegin(), s.rend(), is_space).base();
  return b < e ? std::string(b, e) : std::string();
}

}  // namespace

Rational Angle::wrap(Rational value) {
  Int n = numerator(value);
  Int d = denominator(value);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return value - q;
}

Angle::Angle(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  v_ = den < 0 ? wrap(Rational(-num, -den)) : wrap(Rational(num, den));
}

Int Angle::num() const { return numerator(v_); }

Int Angle::den() const { return denominator(v_); }

std::string Angle::str() const {
  if (v_ == 0) return "0";
  return num().str() + "/" + den().str();
}

Angle Angle::parse(const std::string& text) {
  const std::string s = trimmed(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int_literal(s)) throw std::invalid_argument("bad angle: '" + text + "'");
    return Angle(Rational(Int(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_int_literal(num) || !is_int_literal(den))
    throw std::invalid_argument("bad angle: '" + text + "'");
  return Angle(Int(num), Int(den));
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  if (a.v_ < b.v_) return std::strong_ordering::less;
  if (b.v_ < a.v_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Angle& angle) {
  return os << angle.str();
}

Rational ccw_dist(const Angle& from, const Angle& to) {
  Rational r = to.value() - from.value();
  if (r < 0) r += 1;
  return r;
}

Rational circle_dist(const Angle& a, const Angle& b) {
  Rational r = ccw_dist(a, b);
  return std::min(r, Rational(1) - r);
}

Angle sigma(int degree, const Angle& angle) {
  check_degree(degree);
  return Angle(angle.value() * degree);
}

std::vector<Angle> preimages(int degree, const Angle& angle) {
  check_degree(degree);
  std::vector<Angle> out;
  out.reserve(degree);
  for (int k = 0; k < degree; ++k)
    out.emplace_back((angle.value() + k) / degree);
  return out;
}

bool in_cyclic_order(const Angle& a, const Angle& b, const Angle& c) {
  if (a == b || b == c || a == c) return false;
  return ccw_dist(a, b) < ccw_dist(a, c);
}

OrbitInfo orbit_info(int degree, const Angle& angle) {
  check_degree(degree);
  OrbitInfo info;
  Angle cur = angle;
  while (gcd(cur.den(), Int(degree)) != 1) {
    cur = sigma(degree, cur);
    ++info.preperiod;
  }
  const Int m = cur.den();
  info.period = 1;
  if (m > 1) {
    Int x = Int(degree) % m;
    while (x != 1) {
      x = x * degree % m;
      ++info.period;
    }
  }
  return info;
}

}  // namespace lamina
