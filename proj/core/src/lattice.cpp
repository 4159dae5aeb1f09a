#include "arrowlab/lattice.hpp"

#include <sstream>

namespace arrowlab {

std::string Site::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim; ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

Window Window::cube(const Site& center, i64 halfwidth) {
  if (halfwidth < 1) throw DomainError("window halfwidth must be >= 1");
  Window w;
  w.center = center;
  for (int i = 0; i < center.dim; ++i) w.halfw[i] = halfwidth;
  return w;
}

Window Window::rect2(const Site& center, i64 hx, i64 hy) {
  if (center.dim != 2) throw DomainError("rect2 needs a 2-d center");
  if (hx < 1 || hy < 1) throw DomainError("window halfwidth must be >= 1");
  Window w;
  w.center = center;
  w.halfw = {hx, hy, 1};
  return w;
}

void Window::for_each(const std::function<void(const Site&)>& fn) const {
  Site s = center;
  if (dim() == 2) {
    for (i64 x = lo(0); x <= hi(0); ++x)
      for (i64 y = lo(1); y <= hi(1); ++y) {
        s.c = {x, y, 0};
        fn(s);
      }
    return;
  }
  for (i64 x = lo(0); x <= hi(0); ++x)
    for (i64 y = lo(1); y <= hi(1); ++y)
      for (i64 z = lo(2); z <= hi(2); ++z) {
        s.c = {x, y, z};
        fn(s);
      }
}

u64 Window::index_of(const Site& s) const {
  if (!contains(s)) throw DomainError("site outside window: " + s.to_string());
  u64 idx = 0;
  for (int i = 0; i < dim(); ++i)
    idx = idx * static_cast<u64>(side(i)) + static_cast<u64>(s.c[i] - lo(i));
  return idx;
}

Site Window::site_at(u64 index) const {
  Site s = center;
  for (int i = dim() - 1; i >= 0; --i) {
    u64 w = static_cast<u64>(side(i));
    s.c[i] = lo(i) + static_cast<i64>(index % w);
    index /= w;
  }
  return s;
}

}  // namespace arrowlab
