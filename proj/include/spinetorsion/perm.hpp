#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace spinetorsion {

/// Permutation of the four corner labels {0,1,2,3} of a tetrahedron.
class Perm4 {
 public:
  constexpr Perm4() : img_{0, 1, 2, 3} {}
  constexpr Perm4(int a, int b, int c, int d)
      : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
             static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

  constexpr int operator[](int i) const { return img_[i]; }

  constexpr Perm4 inverse() const {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  /// (this * other)(i) = this(other(i)).
  constexpr Perm4 operator*(const Perm4& other) const {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r.img_[i] = img_[other.img_[i]];
    return r;
  }

  constexpr int sign() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (img_[i] > img_[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
  }

  constexpr bool is_valid() const {
    int seen = 0;
    for (auto v : img_) {
      if (v > 3) return false;
      seen |= 1 << v;
    }
    return seen == 0xF;
  }

  constexpr bool operator==(const Perm4&) const = default;

 private:
  std::array<std::uint8_t, 4> img_;
};

/// Sign of the permutation sending position i to values[i] (values a permutation of 0..n-1).
template <class Range>
int permutation_sign(const Range& values) {
  int inversions = 0;
  const auto n = std::size(values);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (values[i] > values[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Tetrahedron edges in the fixed order 01,02,03,12,13,23.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int tet_edge_index(int a, int b) {
  if (a > b) {
    int t = a;
    a = b;
    b = t;
  }
  for (int i = 0; i < 6; ++i)
    if (kTetEdges[i][0] == a && kTetEdges[i][1] == b) return i;
  return -1;
}

/// The three corners of face f (the face opposite vertex f), increasing.
constexpr std::array<int, 3> face_corners(int f) {
  std::array<int, 3> r{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != f) r[k++] = v;
  return r;
}

}  // namespace spinetorsion
