#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace goodsg::oracle {

std::vector<Point> brute_closure(std::vector<Point> const& g, Point const& c) {
  std::size_t const n = c.dim();
  // A truncated sum is already reached with at most sum(C_k) nonzero
  // summands: per coordinate, the summands that matter before it saturates.
  Coord depth = 0;
  for (std::size_t k = 0; k < n; ++k) {
    depth += c[k];
  }
  std::vector<Point> gens;
  for (auto const& x : g) {
    if (!x.is_zero()) {
      gens.push_back(x);
    }
  }
  std::set<Point> seen{Point::zero(n)};
  std::set<Point> truncs{meet(Point::zero(n), c)};
  std::deque<std::pair<Point, Coord>> queue{{Point::zero(n), 0}};
  while (!queue.empty()) {
    auto [p, used] = queue.front();
    queue.pop_front();
    if (used == depth || leq(c, p)) {
      continue;
    }
    for (auto const& x : gens) {
      Point q = p + x;
      if (seen.insert(q).second) {
        truncs.insert(meet(q, c));
        queue.emplace_back(q, used + 1);
      }
    }
  }
  // n-fold meets.
  std::set<Point> level(truncs.begin(), truncs.end());
  for (std::size_t round = 1; round < n; ++round) {
    std::set<Point> next = level;
    for (auto const& a : level) {
      for (auto const& b : truncs) {
        next.insert(meet(a, b));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

bool brute_member(GoodSemigroup const& s, Point const& p) {
  if (!p.is_nonnegative()) {
    return false;
  }
  Point const& c = s.conductor();
  for (auto const& a : s.small_elements()) {
    bool ok = true;
    for (std::size_t k = 0; k < p.dim() && ok; ++k) {
      ok = a[k] == c[k] ? p[k] >= a[k] : p[k] == a[k];
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

bool brute_fiber(GoodSemigroup const& s, Point const& x, std::size_t i) {
  std::size_t const j = 1 - i;
  if (x[i] < 0) {
    return false;
  }
  Coord const hi = std::max(x[j] + 1, s.conductor()[j]) + 1;
  for (Coord y = std::max<Coord>(x[j] + 1, 0); y <= hi; ++y) {
    if (brute_member(s, x.with(j, y))) {
      return true;
    }
  }
  return false;
}

std::vector<Point> brute_canonical(GoodSemigroup const& s) {
  Point const& c = s.conductor();
  Point const gamma{c[0] - 1, c[1] - 1};
  std::vector<Point> out;
  for (Coord a0 = 0; a0 <= c[0]; ++a0) {
    for (Coord a1 = 0; a1 <= c[1]; ++a1) {
      Point const x{gamma[0] - a0, gamma[1] - a1};
      if (!brute_fiber(s, x, 0) && !brute_fiber(s, x, 1)) {
        out.push_back(Point{a0, a1});
      }
    }
  }
  return out;
}

bool brute_arf_check(GoodSemigroup const& s, Point const& box) {
  std::vector<Point> pts;
  for (Coord x = 0; x <= box[0]; ++x) {
    for (Coord y = 0; y <= box[1]; ++y) {
      if (brute_member(s, Point{x, y})) {
        pts.push_back(Point{x, y});
      }
    }
  }
  for (auto const& a : pts) {
    for (auto const& b : pts) {
      if (!leq(a, b)) {
        continue;
      }
      for (auto const& c : pts) {
        if (leq(a, c) && !brute_member(s, b + c - a)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Point> brute_arf_closure(GoodSemigroup const& s, Point const& box) {
  std::set<Point> in;
  for (Coord x = 0; x <= box[0]; ++x) {
    for (Coord y = 0; y <= box[1]; ++y) {
      if (brute_member(s, Point{x, y})) {
        in.insert(Point{x, y});
      }
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Point> const pts(in.begin(), in.end());
    for (auto const& a : pts) {
      for (auto const& b : pts) {
        if (in.insert(meet(a, b)).second) {
          grew = true;
        }
        if (!leq(a, b)) {
          continue;
        }
        for (auto const& c : pts) {
          if (!leq(a, c)) {
            continue;
          }
          Point r = b + c - a;
          if (leq(r, box) && in.insert(r).second) {
            grew = true;
          }
        }
      }
    }
  }
  return {in.begin(), in.end()};
}

std::vector<Coord> brute_numerical(std::vector<Coord> const& gens,
                                   Coord limit) {
  std::set<Coord> in{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (Coord x : std::vector<Coord>(in.begin(), in.end())) {
      for (Coord g : gens) {
        if (x + g <= limit && in.insert(x + g).second) {
          grew = true;
        }
      }
    }
  }
  return {in.begin(), in.end()};
}

}  // namespace goodsg::oracle
