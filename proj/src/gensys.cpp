#include "goodsg/gensys.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace goodsg {

GenSystem::GenSystem(std::vector<Point> pts, Point target_conductor)
    : conductor(std::move(target_conductor)) {
  for (auto& p : pts) {
    require_same_dim(p, conductor);
    if (!p.is_nonnegative()) {
      throw InvalidArgument("generators must lie in N^n, got " + p.to_string());
    }
    p = meet(p, conductor);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  points = std::move(pts);
}

namespace {

void require_plane(std::size_t dim, char const* op) {
  if (dim != 2) {
    throw UnsupportedDimension(op, dim);
  }
}

using Reach = std::function<bool(std::vector<Point> const&, std::size_t,
                                 Point const&)>;

// Can a be dropped from rest ∪ {a} without changing what it generates?
// Off the border a single reachable fibre suffices; on a J-border every
// fibre off J has to be reached.
bool removable(Point const& a, std::vector<Point> const& rest, Point const& top,
               Reach const& reach) {
  if (a == top) {
    return !rest.empty();
  }
  IndexSet const j = border_indices(a, top);
  if (j.empty()) {
    return reach(rest, 0, a) || reach(rest, 1, a);
  }
  for (std::size_t i : j.complement(a.dim()).elements(a.dim())) {
    if (!reach(rest, i, a)) {
      return false;
    }
  }
  return true;
}

std::vector<Point> without(std::vector<Point> const& pts, Point const& a) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (auto const& p : pts) {
    if (p != a) {
      out.push_back(p);
    }
  }
  return out;
}

// Removing an element only shrinks what the others can reach, so anything
// kept once stays irremovable and a single pass is enough.
std::vector<Point> eliminate(std::vector<Point> const& candidates,
                             std::span<const Point> order, Point const& top,
                             Reach const& reach) {
  std::set<Point> const cand(candidates.begin(), candidates.end());
  std::set<Point> const ord(order.begin(), order.end());
  if (ord != cand || order.size() != candidates.size()) {
    throw InvalidArgument(
        "elimination order must be a permutation of the candidates");
  }
  if (candidates.empty()) {
    return {top};
  }
  std::set<Point> current = cand;
  for (auto const& a : order) {
    std::vector<Point> rest;
    for (auto const& p : current) {
      if (p != a) {
        rest.push_back(p);
      }
    }
    if (removable(a, rest, top, reach)) {
      current.erase(a);
    }
  }
  return {current.begin(), current.end()};
}

}  // namespace

bool monoid_fiber_reach(std::vector<Point> const& g, std::size_t axis,
                        Point const& a) {
  require_plane(a.dim(), "monoid_fiber_reach");
  if (axis > 1) {
    throw InvalidArgument("axis must be 0 or 1");
  }
  std::size_t const i = axis;
  std::size_t const j = 1 - axis;
  std::vector<Point> gens;
  for (auto const& p : g) {
    require_same_dim(p, a);
    if (p.is_zero()) {
      continue;
    }
    if (p.on_axes() || !p.is_nonnegative()) {
      throw NonLocal("monoid_fiber_reach");
    }
    gens.push_back(p);
  }
  if (a[i] < 0) {
    return false;
  }
  // f[v]: the largest j-coordinate (capped at a_j) of a sum whose
  // i-coordinate is exactly v.
  constexpr Coord kNone = std::numeric_limits<Coord>::min();
  std::vector<Coord> f(static_cast<std::size_t>(a[i]) + 1, kNone);
  f[0] = std::min<Coord>(0, a[j]);
  for (Coord v = 1; v <= a[i]; ++v) {
    Coord best = kNone;
    for (auto const& p : gens) {
      if (p[i] > v) {
        continue;
      }
      Coord const prev = f[static_cast<std::size_t>(v - p[i])];
      if (prev != kNone) {
        best = std::max(best, std::min(a[j], prev + p[j]));
      }
    }
    f[static_cast<std::size_t>(v)] = best;
  }
  Coord const last = f[static_cast<std::size_t>(a[i])];
  return last != kNone && last >= a[j];
}

bool membership_in_closure(GenSystem const& g, Point const& a) {
  require_plane(a.dim(), "membership_in_closure");
  Point const& d = g.conductor;
  if (!a.is_nonnegative() || !leq(a, d)) {
    throw InvalidArgument(a.to_string() + " is not in the box B(" +
                          d.to_string() + ")");
  }
  if (a == d) {
    return true;
  }
  IndexSet const j = border_indices(a, d);
  for (std::size_t i : j.complement(2).elements(2)) {
    if (!monoid_fiber_reach(g.points, i, a)) {
      return false;
    }
  }
  return true;
}

bool is_minimal_system(GenSystem const& g, GoodSemigroup const& s) {
  require_plane(s.dim(), "is_minimal_system");
  if (!is_local(s)) {
    throw NonLocal("is_minimal_system");
  }
  require_same_dim(g.conductor, s.conductor());
  if (!(closure_small(g.points, s.conductor()) == s.small())) {
    throw NotAGeneratingSystem("the given points do not generate Small(S)");
  }
  for (auto const& a : g.points) {
    if (removable(a, without(g.points, a), s.conductor(), monoid_fiber_reach)) {
      return false;
    }
  }
  return true;
}

std::vector<Point> elimination_candidates(GoodSemigroup const& s) {
  std::vector<Point> out;
  for (auto const& a : s.small_elements()) {
    if (!a.is_zero() && a != s.conductor()) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<Point> minimal_generating_system(GoodSemigroup const& s,
                                             std::span<const Point> order) {
  require_plane(s.dim(), "minimal_generating_system");
  if (!is_local(s)) {
    throw NonLocal("minimal_generating_system");
  }
  return eliminate(elimination_candidates(s), order, s.conductor(),
                   monoid_fiber_reach);
}

std::vector<Point> minimal_generating_system(GoodSemigroup const& s) {
  std::vector<Point> const cand = elimination_candidates(s);
  return minimal_generating_system(s, cand);
}

bool ideal_fiber_reach(std::vector<Point> const& h, GoodSemigroup const& s,
                       std::size_t axis, Point const& a) {
  require_plane(s.dim(), "ideal_fiber_reach");
  if (axis > 1) {
    throw InvalidArgument("axis must be 0 or 1");
  }
  std::size_t const i = axis;
  std::size_t const j = 1 - axis;
  Point const& c = s.conductor();
  for (auto const& g : h) {
    require_same_dim(g, a);
    Coord const ti = a[i] - g[i];
    Coord const tj = a[j] - g[j];
    if (ti < 0) {
      continue;
    }
    if (ti >= c[i]) {
      return true;
    }
    for (auto const& x : s.small_elements()) {
      if (x[i] == ti && (x[j] >= tj || x[j] == c[j])) {
        return true;
      }
    }
  }
  return false;
}

namespace {

std::vector<Point> ideal_candidates(GoodRelativeIdeal const& e) {
  return without(e.small_elements(), e.conductor());
}

}  // namespace

std::vector<Point> minimal_ideal_generating_system(GoodRelativeIdeal const& e,
                                                   std::span<const Point> order) {
  require_plane(e.dim(), "minimal_ideal_generating_system");
  if (!is_local(e.ambient())) {
    throw NonLocal("minimal_ideal_generating_system");
  }
  GoodSemigroup const& s = e.ambient();
  Reach reach = [&s](std::vector<Point> const& h, std::size_t i,
                     Point const& a) { return ideal_fiber_reach(h, s, i, a); };
  return eliminate(ideal_candidates(e), order, e.conductor(), reach);
}

std::vector<Point> minimal_ideal_generating_system(GoodRelativeIdeal const& e) {
  std::vector<Point> const cand = ideal_candidates(e);
  return minimal_ideal_generating_system(e, cand);
}

}  // namespace goodsg
