#pragma once
#include <cstdint>
#include <numeric>
#include <string>

namespace ambi {

struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;

  std::int64_t det() const { return a * d - b * c; }
  std::int64_t trace() const { return a + d; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  // inverse of a determinant-one matrix
  Mat2 inv() const { return {d, -b, -c, a}; }
  Mat2 mod(std::int64_t n) const {
    auto r = [n](std::int64_t x) { return ((x % n) + n) % n; };
    return {r(a), r(b), r(c), r(d)};
  }
  std::string str() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
           std::to_string(d) + "]]";
  }
};

inline const Mat2 kS{0, -1, 1, 0};
inline const Mat2 kT{1, 1, 0, 1};

}  // namespace ambi
