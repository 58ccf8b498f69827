#include "goodsg/good_semigroup.hpp"

#include <algorithm>

#include "box.hpp"

namespace goodsg {

NotGoodSemigroup::NotGoodSemigroup(ValidationReport report,
                                   std::vector<Point> candidate)
    : Error("not a good semigroup (" + to_string(report.violated) +
            "): " + report.message),
      report_(std::move(report)),
      candidate_(std::move(candidate)) {}

GoodSemigroup GoodSemigroup::from_small(SmallSet x) {
  ValidationReport report = validate_small_set(x);
  if (!report.ok()) {
    throw NotGoodSemigroup(std::move(report), x.points());
  }
  return GoodSemigroup(std::move(x));
}

SmallSet closure_small(std::vector<Point> const& generators,
                       Point const& conductor) {
  if (!conductor.is_nonnegative()) {
    throw InvalidArgument("conductor must lie in N^n, got " +
                          conductor.to_string());
  }
  std::size_t const n = conductor.dim();
  detail::BoxSet in(detail::Box(Point::zero(n), conductor));
  std::vector<Point> members;
  std::vector<Point> pending;
  auto push = [&](Point p) {
    if (in.insert(p)) {
      pending.push_back(std::move(p));
    }
  };
  push(Point::zero(n));
  push(conductor);
  for (auto const& g : generators) {
    require_same_dim(g, conductor);
    if (!g.is_nonnegative()) {
      throw InvalidArgument("generators must lie in N^n, got " + g.to_string());
    }
    push(meet(g, conductor));
  }
  // Every new point is combined with everything seen so far, including
  // itself, so each pair is visited once.
  while (!pending.empty()) {
    Point p = std::move(pending.back());
    pending.pop_back();
    members.push_back(p);
    for (std::size_t i = 0; i < members.size(); ++i) {
      Point const& q = members[i];
      Point m = meet(p, q);
      Point s = add_trunc(p, q, conductor);
      push(std::move(m));
      push(std::move(s));
    }
  }
  return SmallSet(in.points(), conductor);
}

SmallSet normalize_conductor(SmallSet const& x) {
  Point const& top = x.top();
  std::size_t const n = x.dim();
  detail::Box box(Point::zero(n), top);
  // full[i]: the whole box [p, top] lies in X.  Filled from the top down.
  std::vector<char> full(box.size(), 0);
  for (std::size_t idx = box.size(); idx-- > 0;) {
    Point const p = box.at(idx);
    if (!x.holds(p)) {
      continue;
    }
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      if (p[k] < top[k]) {
        ok = full[box.index(p.with(k, p[k] + 1))] != 0;
      }
    }
    full[idx] = ok ? 1 : 0;
  }
  Point m = top;
  for (auto const& a : x.points()) {
    if (full[box.index(a)] != 0) {
      m = meet(m, a);
    }
  }
  if (m == top || full[box.index(m)] == 0) {
    return x;
  }
  std::vector<Point> pts;
  pts.reserve(x.size());
  for (auto const& a : x.points()) {
    pts.push_back(meet(a, m));
  }
  return SmallSet(std::move(pts), m);
}

ValidationReport validate_small_set(SmallSet const& x) {
  if (!x.holds(Point::zero(x.dim()))) {
    return ValidationReport{Axiom::kZero, {}, "0 is not an element"};
  }
  if (auto r = check_meet_closed(x)) {
    return *r;
  }
  // (a + b) meet C only depends on a meet C and b meet C.
  auto const& pts = x.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      Point const s = add_trunc(pts[i], pts[j], x.top());
      if (!x.holds(s)) {
        return ValidationReport{Axiom::kAddition,
                                {pts[i], pts[j]},
                                "sum " + (pts[i] + pts[j]).to_string() +
                                    " is missing"};
      }
    }
  }
  if (auto r = check_lifting(x)) {
    return *r;
  }
  if (auto r = check_conductor_minimal(x)) {
    return *r;
  }
  return {};
}

GoodSemigroup good_semigroup_from_generators(std::vector<Point> const& generators,
                                             Point const& conductor) {
  SmallSet raw = closure_small(generators, conductor);
  SmallSet x = normalize_conductor(raw);
  ValidationReport report = validate_small_set(x);
  if (!report.ok()) {
    throw NotGoodSemigroup(std::move(report), raw.points());
  }
  return GoodSemigroup::from_small(std::move(x));
}

std::optional<Point> subset_witness(GoodSemigroup const& s,
                                    GoodSemigroup const& t) {
  require_same_dim(s.conductor(), t.conductor());
  // Membership in either set is decided by p meet (C(S) join C(T)), and the
  // truncation of a witness is a lexicographically smaller witness.
  detail::Box box(Point::zero(s.dim()), join(s.conductor(), t.conductor()));
  for (std::size_t i = 0; i < box.size(); ++i) {
    Point p = box.at(i);
    if (s.contains(p) && !t.contains(p)) {
      return p;
    }
  }
  return std::nullopt;
}

bool is_subset(GoodSemigroup const& s, GoodSemigroup const& t) {
  return !subset_witness(s, t).has_value();
}

IndexSet border_indices(Point const& a, Point const& conductor) {
  require_same_dim(a, conductor);
  IndexSet j;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a[k] == conductor[k]) {
      j.insert(k);
    }
  }
  return j;
}

std::vector<Point> border(GoodSemigroup const& s, IndexSet j) {
  Point const& c = s.conductor();
  std::vector<Point> out;
  for (auto const& a : s.small_elements()) {
    bool on = true;
    for (std::size_t k : j.elements(s.dim())) {
      on = on && a[k] == c[k];
    }
    if (on) {
      out.push_back(a);
    }
  }
  return out;
}

bool is_local(GoodSemigroup const& s) {
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (s.conductor()[k] == 0) {
      return false;
    }
  }
  return std::none_of(
      s.small_elements().begin(), s.small_elements().end(),
      [](Point const& a) { return !a.is_zero() && a.on_axes(); });
}

namespace {

void require_plane(GoodSemigroup const& s, char const* op) {
  if (s.dim() != 2) {
    throw UnsupportedDimension(op, s.dim());
  }
}

}  // namespace

bool delta_fiber_nonempty(GoodSemigroup const& s, Point const& x,
                          std::size_t axis) {
  require_plane(s, "delta_fiber_nonempty");
  require_same_dim(x, s.conductor());
  if (axis > 1) {
    throw InvalidArgument("axis must be 0 or 1");
  }
  std::size_t const i = axis;
  std::size_t const j = 1 - axis;
  Point const& c = s.conductor();
  if (x[i] < 0) {
    return false;
  }
  if (x[i] >= c[i]) {
    return true;
  }
  // Below the conductor on axis i, an element with s_i = x_i truncates to a
  // small element with the same i-coordinate; its j-coordinate may still be
  // lifted freely if it sits on C_j.
  return std::any_of(s.small_elements().begin(), s.small_elements().end(),
                     [&](Point const& a) {
                       return a[i] == x[i] && (a[j] > x[j] || a[j] == c[j]);
                     });
}

std::vector<Point> maximal_elements(GoodSemigroup const& s) {
  require_plane(s, "maximal_elements");
  std::vector<Point> out;
  for (auto const& a : s.small_elements()) {
    if (!delta_fiber_nonempty(s, a, 0) && !delta_fiber_nonempty(s, a, 1)) {
      out.push_back(a);
    }
  }
  return out;
}

NumericalSemigroup projection(GoodSemigroup const& s, std::size_t axis) {
  require_plane(s, "projection");
  if (axis > 1) {
    throw InvalidArgument("axis must be 0 or 1");
  }
  Coord const c = s.conductor()[axis];
  std::vector<char> seen(static_cast<std::size_t>(c) + 1, 0);
  for (auto const& a : s.small_elements()) {
    seen[static_cast<std::size_t>(a[axis])] = 1;
  }
  return NumericalSemigroup::from_membership(
      [&](Coord x) { return x <= c && seen[static_cast<std::size_t>(x)] != 0; },
      c);
}

}  // namespace goodsg
