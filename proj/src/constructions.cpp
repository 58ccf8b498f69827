#include "goodsg/constructions.hpp"

#include <algorithm>
#include <set>

#include "box.hpp"

namespace goodsg {

namespace {

// E is a subset of S and E + S ⊆ E.  Both are periodic past their
// conductors, so checking x <= c(E) + c(S) is enough.
void require_ideal_inside(NumericalIdeal const& e, NumericalSemigroup const& s,
                          char const* what) {
  Coord const limit = e.conductor() + s.conductor();
  for (Coord x = 0; x <= limit; ++x) {
    if (!e.contains(x)) {
      continue;
    }
    if (!s.contains(x)) {
      throw InvalidArgument(std::string(what) + ": ideal element " +
                            std::to_string(x) + " is not in the semigroup");
    }
    for (Coord y : s.small_elements()) {
      if (!e.contains(x + y)) {
        throw InvalidArgument(std::string(what) + ": " + std::to_string(x) +
                              " + " + std::to_string(y) +
                              " is missing from the ideal");
      }
    }
  }
}

GoodSemigroup finish(std::set<Point> const& pts, Point top) {
  SmallSet raw(std::vector<Point>(pts.begin(), pts.end()), std::move(top));
  return GoodSemigroup::from_small(normalize_conductor(raw));
}

}  // namespace

GoodSemigroup duplication(NumericalSemigroup const& s, NumericalIdeal const& e) {
  require_ideal_inside(e, s, "duplication");
  Coord const c = e.conductor();
  Point const top{c, c};
  // c(S) <= c(E) because E ⊆ S, so truncating every coordinate at c keeps it
  // inside S and E respectively.
  std::vector<Coord> sv;
  std::vector<Coord> ev;
  for (Coord x = 0; x <= c; ++x) {
    if (s.contains(x)) {
      sv.push_back(x);
    }
    if (e.contains(x)) {
      ev.push_back(x);
    }
  }
  std::set<Point> pts;
  for (Coord x : sv) {
    pts.insert(Point{x, x});
  }
  for (Coord a : ev) {
    for (Coord b : ev) {
      pts.insert(Point{a, b});
      for (Coord x : sv) {
        pts.insert(Point{std::min(x, a), std::min(x, b)});
      }
    }
  }
  return finish(pts, top);
}

GoodSemigroup amalgamation(NumericalSemigroup const& s,
                           NumericalSemigroup const& t,
                           NumericalIdeal const& e, Coord k) {
  if (k < 1) {
    throw InvalidArgument("amalgamation: the factor must be positive");
  }
  for (Coord g : s.generators()) {
    if (!t.contains(k * g)) {
      throw InvalidArgument("amalgamation: " + std::to_string(k) + " * " +
                            std::to_string(g) + " is not in the target");
    }
  }
  require_ideal_inside(e, t, "amalgamation");
  NumericalIdeal const pre = preimage_under_scaling(e, k, s);
  Coord const c1 = pre.conductor();
  Coord const c2 = e.conductor();
  Point const top{c1, c2};

  std::vector<Point> diag;
  Coord const last = std::max(c1, (c2 + k - 1) / k) + 1;
  for (Coord x = 0; x <= last; ++x) {
    if (s.contains(x)) {
      diag.push_back(meet(Point{x, k * x}, top));
    }
  }
  std::vector<Point> rect;
  for (Coord a = 0; a <= c1; ++a) {
    if (!pre.contains(a)) {
      continue;
    }
    for (Coord b = 0; b <= c2; ++b) {
      if (e.contains(b)) {
        rect.push_back(Point{a, b});
      }
    }
  }
  std::set<Point> pts(diag.begin(), diag.end());
  for (auto const& r : rect) {
    pts.insert(r);
    for (auto const& d : diag) {
      pts.insert(meet(d, r));
    }
  }
  pts.insert(top);
  return finish(pts, top);
}

GoodSemigroup cartesian(NumericalSemigroup const& s1,
                        NumericalSemigroup const& s2) {
  std::vector<Point> pts;
  for (Coord x : s1.small_elements()) {
    for (Coord y : s2.small_elements()) {
      pts.push_back(Point{x, y});
    }
  }
  return GoodSemigroup::from_small(
      SmallSet(std::move(pts), Point{s1.conductor(), s2.conductor()}));
}

GoodSemigroup from_maximal_elements(NumericalSemigroup const& s1,
                                    NumericalSemigroup const& s2,
                                    std::vector<Point> const& maximal) {
  Coord b1 = s1.conductor();
  Coord b2 = s2.conductor();
  for (auto const& a : maximal) {
    if (a.dim() != 2) {
      throw DimensionMismatch(a.dim(), 2);
    }
    if (!s1.contains(a[0]) || !s2.contains(a[1])) {
      throw InvalidArgument("maximal element " + a.to_string() +
                            " is not in S1 x S2");
    }
    b1 = std::max(b1, a[0] + 1);
    b2 = std::max(b2, a[1] + 1);
  }
  // Past the box every coordinate exceeds all of M, so membership only
  // depends on the truncation.
  auto in_some_delta = [&](Point const& p) {
    return std::any_of(maximal.begin(), maximal.end(), [&](Point const& a) {
      return (p[0] == a[0] && p[1] > a[1]) || (p[1] == a[1] && p[0] > a[0]);
    });
  };
  std::set<Point> pts;
  detail::Box box(Point{0, 0}, Point{b1, b2});
  box.for_each([&](Point const& p) {
    if (s1.contains(p[0]) && s2.contains(p[1]) && !in_some_delta(p)) {
      pts.insert(p);
    }
  });
  return finish(pts, Point{b1, b2});
}

}  // namespace goodsg
