#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "lamina/lamination.hpp"

namespace testutil {

inline lamina::Angle ang(long long num, long long den) {
  return lamina::Angle(lamina::Int(num), lamina::Int(den));
}

inline lamina::Chord chord(long long an, long long ad, long long bn, long long bd) {
  return lamina::Chord(ang(an, ad), ang(bn, bd));
}

inline std::vector<lamina::Angle> angle_pool(long long max_den) {
  std::vector<lamina::Angle> pool;
  for (long long q = 2; q <= max_den; ++q)
    for (long long p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1) pool.push_back(ang(p, q));
  return pool;
}

// Rejection sampling of pairwise non-crossing chords.
inline lamina::Lamination random_lamination(std::mt19937& rng, int degree,
                                            int max_leaves, long long max_den) {
  static const std::vector<lamina::Angle> pool = angle_pool(120);
  std::vector<lamina::Angle> usable;
  for (const lamina::Angle& a : pool)
    if (a.den() <= max_den) usable.push_back(a);
  std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
  std::vector<lamina::Chord> leaves;
  int attempts = 0;
  while (static_cast<int>(leaves.size()) < max_leaves && attempts < 40 * max_leaves) {
    ++attempts;
    const lamina::Angle a = usable[pick(rng)];
    const lamina::Angle b = usable[pick(rng)];
    if (a == b) continue;
    const lamina::Chord candidate(a, b);
    bool ok = true;
    for (const lamina::Chord& c : leaves)
      if (lamina::crosses(c, candidate)) {
        ok = false;
        break;
      }
    if (ok) leaves.push_back(candidate);
  }
  return lamina::Lamination(degree, leaves);
}

}  // namespace testutil
