#pragma once

// Lattice geometry: sites, unit arrows, rectangular windows, walk records.
// Coordinates are 64-bit and all site arithmetic is overflow-checked; a
// silent wrap in a long orbit would quietly corrupt every density statistic
// downstream, so it is an error instead.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrowlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;

class ArithmeticOverflowError : public std::runtime_error {
 public:
  ArithmeticOverflowError() : std::runtime_error("lattice arithmetic overflow") {}
};

class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

inline u64 checked_mul_u(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflowError();
  return r;
}

// Unit lattice step +/-e_axis.
struct Direction {
  std::uint8_t axis = 0;
  std::int8_t sign = +1;

  bool operator==(const Direction&) const = default;

  static Direction e(int axis, int sign = +1) {
    return Direction{static_cast<std::uint8_t>(axis),
                     static_cast<std::int8_t>(sign)};
  }

  // d=2 compass encoding used by the ARROWS text format.
  char code2d() const {
    if (axis == 0) return sign > 0 ? 'E' : 'W';
    return sign > 0 ? 'N' : 'S';
  }
  static Direction from_code2d(char c) {
    switch (c) {
      case 'E': return e(0, +1);
      case 'W': return e(0, -1);
      case 'N': return e(1, +1);
      case 'S': return e(1, -1);
    }
    throw DomainError(std::string("bad arrow character '") + c + "'");
  }
};

struct Site {
  int dim = 2;
  std::array<i64, 3> c{0, 0, 0};

  static Site xy(i64 x, i64 y) { return Site{2, {x, y, 0}}; }
  static Site xyz(i64 x, i64 y, i64 z) { return Site{3, {x, y, z}}; }

  bool operator==(const Site& o) const {
    if (dim != o.dim) return false;
    for (int i = 0; i < dim; ++i)
      if (c[i] != o.c[i]) return false;
    return true;
  }
  bool operator!=(const Site& o) const { return !(*this == o); }

  i64 x() const { return c[0]; }
  i64 y() const { return c[1]; }
  i64 z() const { return c[2]; }

  Site stepped(const Direction& d) const {
    if (d.axis >= dim) throw DomainError("direction axis out of range");
    Site s = *this;
    s.c[d.axis] = checked_add(s.c[d.axis], d.sign);
    return s;
  }

  // Anti-diagonal level; for directed walks this advances by 1 per step.
  i64 level() const {
    i64 s = 0;
    for (int i = 0; i < dim; ++i) s = checked_add(s, c[i]);
    return s;
  }

  i64 l1_dist(const Site& o) const {
    i64 s = 0;
    for (int i = 0; i < dim; ++i) {
      i64 d = checked_sub(c[i], o.c[i]);
      s = checked_add(s, d < 0 ? -d : d);
    }
    return s;
  }

  std::string to_string() const;
};

// Axis-aligned box: center plus per-axis halfwidths (>= 1). Covers both
// Rect_x(N) and the anisotropic Rect_x(n, m+n) shapes.
struct Window {
  Site center;
  std::array<i64, 3> halfw{1, 1, 1};

  static Window cube(const Site& center, i64 halfwidth);
  static Window rect2(const Site& center, i64 hx, i64 hy);

  int dim() const { return center.dim; }
  i64 lo(int axis) const { return checked_sub(center.c[axis], halfw[axis]); }
  i64 hi(int axis) const { return checked_add(center.c[axis], halfw[axis]); }
  i64 side(int axis) const { return 2 * halfw[axis] + 1; }

  bool contains(const Site& s) const {
    if (s.dim != dim()) return false;
    for (int i = 0; i < dim(); ++i)
      if (s.c[i] < lo(i) || s.c[i] > hi(i)) return false;
    return true;
  }

  // Points of the window with a nearest neighbor outside it.
  bool on_boundary(const Site& s) const {
    if (!contains(s)) return false;
    for (int i = 0; i < dim(); ++i)
      if (s.c[i] == lo(i) || s.c[i] == hi(i)) return true;
    return false;
  }

  u64 volume() const {
    u64 v = 1;
    for (int i = 0; i < dim(); ++i)
      v = checked_mul_u(v, static_cast<u64>(side(i)));
    return v;
  }

  // Row-major iteration (last axis fastest), fixed order for reproducibility.
  void for_each(const std::function<void(const Site&)>& fn) const;

  // Dense row-major index of an in-window site.
  u64 index_of(const Site& s) const;
  Site site_at(u64 index) const;
};

// A finite walk: start site plus the arrow taken at each visited site.
struct Trajectory {
  Site start;
  std::vector<Direction> steps;

  u64 length() const { return steps.size(); }

  Site site_at(u64 k) const {
    Site s = start;
    for (u64 i = 0; i < k; ++i) s = s.stepped(steps[i]);
    return s;
  }
  Site end() const { return site_at(steps.size()); }

  // X(n) - X(0) componentwise.
  std::array<i64, 3> displacement(u64 n) const {
    std::array<i64, 3> d{0, 0, 0};
    for (u64 i = 0; i < n && i < steps.size(); ++i)
      d[steps[i].axis] = checked_add(d[steps[i].axis], steps[i].sign);
    return d;
  }
};

}  // namespace arrowlab
