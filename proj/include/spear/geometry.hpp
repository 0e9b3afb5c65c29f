#pragma once

#include <algorithm>
#include <cmath>

namespace spear {

struct Point {
  int x = 0;
  int y = 0;
  bool operator==(const Point&) const = default;
};

// Pixel rectangle [x1,y1,x2,y2] with x1 < x2, y1 < y2.
struct Rect {
  int x1 = 0;
  int y1 = 0;
  int x2 = 0;
  int y2 = 0;

  bool operator==(const Rect&) const = default;

  int width() const { return x2 - x1; }
  int height() const { return y2 - y1; }
  bool valid() const { return x1 < x2 && y1 < y2; }

  bool contains(Point p) const {
    return p.x >= x1 && p.x <= x2 && p.y >= y1 && p.y <= y2;
  }

  bool contains(const Rect& o) const {
    return o.x1 >= x1 && o.y1 >= y1 && o.x2 <= x2 && o.y2 <= y2;
  }

  bool intersects(const Rect& o) const {
    return x1 < o.x2 && o.x1 < x2 && y1 < o.y2 && o.y1 < y2;
  }

  Rect translated(int dx, int dy) const { return {x1 + dx, y1 + dy, x2 + dx, y2 + dy}; }
};

inline double distance(Point a, Point b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace spear
