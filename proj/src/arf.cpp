#include "goodsg/arf.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "box.hpp"
#include "goodsg/constructions.hpp"
#include "goodsg/ideals.hpp"

namespace goodsg {

namespace {

void require_plane(std::size_t dim, char const* op) {
  if (dim != 2) {
    throw UnsupportedDimension(op, dim);
  }
}

}  // namespace

bool is_arf(GoodSemigroup const& s) {
  require_plane(s.dim(), "is_arf");
  auto const& pts = s.small_elements();
  for (auto const& a : pts) {
    for (auto const& b : pts) {
      if (!leq(a, b)) {
        continue;
      }
      for (auto const& c : pts) {
        if (c < b || !leq(a, c)) {
          continue;
        }
        if (!s.contains(b + c - a)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_arf_via_stability(GoodSemigroup const& s) {
  require_plane(s.dim(), "is_arf_via_stability");
  // For a <= C outside S, S(a) = S(m) with m = min S(a), a small element.
  return std::all_of(
      s.small_elements().begin(), s.small_elements().end(),
      [&](Point const& a) { return is_stable(tail_ideal(s, a)); });
}

namespace {

// Raw membership in the set T^(level), level >= 1, whether or not it is a
// semigroup.
bool in_chain_level(NumericalSemigroup const& t1, NumericalSemigroup const& t2,
                    std::size_t level, Point const& p) {
  for (std::size_t k = 0; k < level; ++k) {
    if (p[0] == t1.element_at(k) && p[1] == t2.element_at(k)) {
      return true;
    }
  }
  return p[0] >= t1.element_at(level) && p[1] >= t2.element_at(level) &&
         t1.contains(p[0]) && t2.contains(p[1]);
}

// Past both conductors membership in S and in T^(level) only depends on the
// other coordinate, so one extra step around the box decides containment.
bool contained_in_level(GoodSemigroup const& s, NumericalSemigroup const& t1,
                        NumericalSemigroup const& t2, std::size_t level) {
  Point const hi{std::max({s.conductor()[0], t1.element_at(level),
                           t1.conductor()}) + 1,
                 std::max({s.conductor()[1], t2.element_at(level),
                           t2.conductor()}) + 1};
  bool inside = true;
  detail::Box(Point{0, 0}, hi).for_each([&](Point const& p) {
    if (inside && s.contains(p) && !in_chain_level(t1, t2, level, p)) {
      inside = false;
    }
  });
  return inside;
}

std::vector<Point> chain_level_points(NumericalSemigroup const& t1,
                                      NumericalSemigroup const& t2,
                                      std::size_t level, Point const& top) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < level; ++k) {
    pts.push_back(Point{t1.element_at(k), t2.element_at(k)});
  }
  for (Coord x = t1.element_at(level); x <= top[0]; ++x) {
    for (Coord y = t2.element_at(level); y <= top[1]; ++y) {
      if (t1.contains(x) && t2.contains(y)) {
        pts.push_back(Point{x, y});
      }
    }
  }
  return pts;
}

Point chain_level_top(NumericalSemigroup const& t1,
                      NumericalSemigroup const& t2, std::size_t level) {
  return Point{std::max(t1.element_at(level), t1.conductor()),
               std::max(t2.element_at(level), t2.conductor())};
}

}  // namespace

bool chain_level_is_good(NumericalSemigroup const& t1,
                         NumericalSemigroup const& t2, std::size_t level) {
  if (level == 0) {
    return true;
  }
  Point const top = chain_level_top(t1, t2, level);
  SmallSet const x =
      normalize_conductor(SmallSet(chain_level_points(t1, t2, level, top), top));
  return validate_small_set(x).ok();
}

GoodSemigroup build_chain_level(NumericalSemigroup const& t1,
                                NumericalSemigroup const& t2,
                                std::size_t level) {
  if (!t1.is_arf() || !t2.is_arf()) {
    throw InvalidArgument("chain levels need Arf numerical semigroups");
  }
  if (level == 0) {
    return cartesian(t1, t2);
  }
  if (!chain_level_is_good(t1, t2, level)) {
    throw InvalidArgument("T^(" + std::to_string(level) +
                          ") is not a good semigroup for these projections");
  }
  Point const top = chain_level_top(t1, t2, level);
  return GoodSemigroup::from_small(normalize_conductor(
      SmallSet(chain_level_points(t1, t2, level, top), top)));
}

ArfChain arf_closure_chain(GoodSemigroup const& s) {
  require_plane(s.dim(), "arf_closure");
  NumericalSemigroup t1 = arf_closure(projection(s, 0));
  NumericalSemigroup t2 = arf_closure(projection(s, 1));
  if (!is_local(s)) {
    // A non-local planar good semigroup is the product of its projections.
    return ArfChain{std::move(t1), std::move(t2), 0};
  }
  if (!contained_in_level(s, t1, t2, 1)) {
    throw InternalMismatch("local semigroup not contained in T^(1)");
  }
  // Once s_i passes C(S)_1 the corner T1(s_i) x T2(u_i) no longer covers
  // C(S) + N^2, so the scan stops before that.
  std::size_t cap = 1;
  while (t1.element_at(cap) <= s.conductor()[0]) {
    ++cap;
  }
  std::size_t level = 1;
  while (contained_in_level(s, t1, t2, level + 1)) {
    ++level;
    if (level >= cap) {
      throw InternalMismatch("Arf closure scan ran past its bound");
    }
  }
  // The sets T^(i) shrink as i grows but not every one of them is closed
  // under addition; the closure is the last one that is a good semigroup.
  while (!chain_level_is_good(t1, t2, level)) {
    --level;
  }
  return ArfChain{std::move(t1), std::move(t2), level};
}

GoodSemigroup arf_closure(GoodSemigroup const& s) {
  ArfChain const chain = arf_closure_chain(s);
  return build_chain_level(chain.t1, chain.t2, chain.level);
}

std::vector<Point> arf_saturation(GoodSemigroup const& s, Point const& box_cap) {
  require_plane(s.dim(), "arf_saturation");
  require_same_dim(box_cap, s.conductor());
  // b + c - a dominates b and c, so nothing outside the box can produce a
  // point inside it.
  detail::BoxSet in(detail::Box(Point{0, 0}, box_cap));
  std::vector<Point> pts;
  in.box().for_each([&](Point const& p) {
    if (s.contains(p)) {
      in.insert(p);
      pts.push_back(p);
    }
  });
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t const n = pts.size();
    for (std::size_t ia = 0; ia < n; ++ia) {
      for (std::size_t ib = 0; ib < n; ++ib) {
        if (!leq(pts[ia], pts[ib])) {
          continue;
        }
        for (std::size_t ic = ib; ic < n; ++ic) {
          if (!leq(pts[ia], pts[ic])) {
            continue;
          }
          Point r = pts[ib] + pts[ic] - pts[ia];
          if (leq(r, box_cap) && in.insert(r)) {
            pts.push_back(std::move(r));
            changed = true;
          }
        }
      }
    }
  }
  return in.points();
}

std::vector<Point> saturation_infima_closure(GoodSemigroup const& s,
                                             Point const& box_cap) {
  std::vector<Point> pts = arf_saturation(s, box_cap);
  std::set<Point> closed(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Point m = meet(pts[i], pts[j]);
      if (closed.insert(m).second) {
        pts.push_back(std::move(m));
      }
    }
  }
  return {closed.begin(), closed.end()};
}

}  // namespace goodsg
