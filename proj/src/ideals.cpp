#include "goodsg/ideals.hpp"

#include <algorithm>
#include <set>

#include "box.hpp"

namespace goodsg {

namespace {

// S meet cap, for cap >= C(S): every truncation of an element of S.
std::vector<Point> truncated_members(GoodSemigroup const& s, Point const& cap) {
  std::vector<Point> out;
  detail::Box(Point::zero(s.dim()), cap).for_each([&](Point const& p) {
    if (s.contains(p)) {
      out.push_back(p);
    }
  });
  return out;
}

void require_plane_local(GoodSemigroup const& s, char const* op) {
  if (s.dim() != 2) {
    throw UnsupportedDimension(op, s.dim());
  }
  if (!is_local(s)) {
    throw NonLocal(op);
  }
}

}  // namespace

ValidationReport validate_ideal_small_set(GoodSemigroup const& s,
                                          SmallSet const& x) {
  require_same_dim(s.conductor(), x.top());
  if (auto r = check_meet_closed(x)) {
    return *r;
  }
  // (e + t) meet C(E) only depends on t meet C(E), and those truncations
  // are exactly the truncations of S meet (C(E) join C(S)).
  Point const& top = x.top();
  std::set<Point> shifts;
  for (auto const& t : truncated_members(s, join(top, s.conductor()))) {
    shifts.insert(meet(t, top));
  }
  for (auto const& e : x.points()) {
    for (auto const& t : shifts) {
      if (!x.holds(add_trunc(e, t, top))) {
        return ValidationReport{Axiom::kIdealClosure,
                                {e, t},
                                (e + t).to_string() + " is missing"};
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

GoodRelativeIdeal GoodRelativeIdeal::from_small(GoodSemigroup ambient,
                                                SmallSet x) {
  ValidationReport report = validate_ideal_small_set(ambient, x);
  if (!report.ok()) {
    throw NotGoodSemigroup(std::move(report), x.points());
  }
  return GoodRelativeIdeal(std::move(ambient), std::move(x));
}

namespace {

void require_generators(GoodSemigroup const& s, std::vector<Point> const& h) {
  if (h.empty()) {
    throw InvalidArgument("an ideal needs at least one generator");
  }
  for (auto const& g : h) {
    require_same_dim(g, s.conductor());
    if (!g.is_nonnegative()) {
      throw InvalidArgument("ideal generators must lie in N^n, got " +
                            g.to_string());
    }
  }
}

// d meet [H] for d >= C(S): truncating commutes with sums and meets, so
// the closure can be run inside B(d).
std::vector<Point> truncated_closure(GoodSemigroup const& s,
                                     std::vector<Point> const& h,
                                     Point const& d) {
  std::vector<Point> const shifts = truncated_members(s, join(d, s.conductor()));
  std::set<Point> steps;
  for (auto const& t : shifts) {
    steps.insert(meet(t, d));
  }
  detail::BoxSet in(detail::Box(Point::zero(s.dim()), d));
  std::vector<Point> members;
  std::vector<Point> pending;
  auto push = [&](Point p) {
    if (in.insert(p)) {
      pending.push_back(std::move(p));
    }
  };
  push(d);
  for (auto const& g : h) {
    push(meet(g, d));
  }
  while (!pending.empty()) {
    Point p = std::move(pending.back());
    pending.pop_back();
    members.push_back(p);
    for (auto const& t : steps) {
      push(add_trunc(p, t, d));
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      push(meet(p, members[i]));
    }
  }
  return in.points();
}

}  // namespace

SmallSet ideal_closure_small(GoodSemigroup const& s, std::vector<Point> const& h,
                             Point const& d) {
  require_generators(s, h);
  require_same_dim(d, s.conductor());
  if (!d.is_nonnegative()) {
    throw InvalidArgument("truncation point must lie in N^n, got " +
                          d.to_string());
  }
  return SmallSet(truncated_closure(s, h, d), d);
}

GoodRelativeIdeal gi_from_generators(GoodSemigroup const& s,
                                     std::vector<Point> const& h) {
  require_generators(s, h);
  // Every h + C(S) lies in H + S, so their meet belongs to [H], and past it
  // [H] is everything.
  Point cap = h.front() + s.conductor();
  for (auto const& g : h) {
    cap = meet(cap, g + s.conductor());
  }
  SmallSet x = normalize_conductor(SmallSet(truncated_closure(s, h, cap), cap));
  return GoodRelativeIdeal::from_small(s, std::move(x));
}

GoodRelativeIdeal as_ideal(GoodSemigroup const& s) {
  return GoodRelativeIdeal::from_small(s, s.small());
}

GoodRelativeIdeal tail_ideal(GoodSemigroup const& s, Point const& a) {
  require_same_dim(a, s.conductor());
  if (!a.is_nonnegative()) {
    throw InvalidArgument("tail base must lie in N^n, got " + a.to_string());
  }
  Point const top = join(s.conductor(), a);
  std::vector<Point> pts;
  detail::Box(a, top).for_each([&](Point const& p) {
    if (s.contains(p)) {
      pts.push_back(p);
    }
  });
  return GoodRelativeIdeal::from_small(
      s, normalize_conductor(SmallSet(std::move(pts), top)));
}

bool is_stable(GoodRelativeIdeal const& e) {
  // E + E ⊆ m + E always holds the other way round, so stability is
  // x + y - m in E for x, y in E; truncating x or y at C(E) first does not
  // change (x + y - m) meet C(E).
  Point const& m = e.min_element();
  auto const& pts = e.small_elements();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      if (!e.contains(pts[i] + pts[j] - m)) {
        return false;
      }
    }
  }
  return true;
}

GoodRelativeIdeal sum_ideals(GoodRelativeIdeal const& e,
                             GoodRelativeIdeal const& f) {
  if (!(e.ambient() == f.ambient())) {
    throw InvalidArgument("sum of ideals over different semigroups");
  }
  Point const cap = e.conductor() + f.conductor();
  std::vector<Point> ev;
  std::vector<Point> fv;
  detail::Box(Point::zero(e.dim()), cap).for_each([&](Point const& p) {
    if (e.contains(p)) {
      ev.push_back(p);
    }
    if (f.contains(p)) {
      fv.push_back(p);
    }
  });
  std::set<Point> sums;
  for (auto const& x : ev) {
    for (auto const& y : fv) {
      sums.insert(add_trunc(x, y, cap));
    }
  }
  std::vector<Point> pts(sums.begin(), sums.end());
  std::set<Point> closed(sums);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Point m = meet(pts[i], pts[j]);
      if (closed.insert(m).second) {
        pts.push_back(std::move(m));
      }
    }
  }
  SmallSet x(std::vector<Point>(closed.begin(), closed.end()), cap);
  return GoodRelativeIdeal::from_small(e.ambient(), normalize_conductor(x));
}

std::vector<Point> canonical_generators(GoodSemigroup const& s) {
  require_plane_local(s, "canonical_generators");
  Point const& c = s.conductor();
  Point const gamma{c[0] - 1, c[1] - 1};
  NumericalSemigroup const s1 = projection(s, 0);
  NumericalSemigroup const s2 = projection(s, 1);
  std::set<Point> gens;
  for (Coord x = 0; x <= gamma[0]; ++x) {
    if (!s1.contains(x)) {
      gens.insert(Point{gamma[0] - x, c[1]});
    }
  }
  for (Coord x = 0; x <= gamma[1]; ++x) {
    if (!s2.contains(x)) {
      gens.insert(Point{c[0], gamma[1] - x});
    }
  }
  for (auto const& alpha : maximal_elements(s)) {
    gens.insert(gamma - alpha);
  }
  return {gens.begin(), gens.end()};
}

namespace {

SmallSet canonical_by_definition(GoodSemigroup const& s) {
  Point const& c = s.conductor();
  Point const gamma{c[0] - 1, c[1] - 1};
  std::vector<Point> pts;
  detail::Box(Point{0, 0}, c).for_each([&](Point const& a) {
    Point const x = gamma - a;
    if (!delta_fiber_nonempty(s, x, 0) && !delta_fiber_nonempty(s, x, 1)) {
      pts.push_back(a);
    }
  });
  return SmallSet(std::move(pts), c);
}

}  // namespace

GoodRelativeIdeal canonical_ideal(GoodSemigroup const& s) {
  GoodRelativeIdeal k = gi_from_generators(s, canonical_generators(s));
  SmallSet const direct = canonical_by_definition(s);
  if (!(k.small() == direct)) {
    throw InternalMismatch(
        "canonical ideal: generators and definition disagree for conductor " +
        s.conductor().to_string());
  }
  return k;
}

bool is_symmetric(GoodSemigroup const& s) {
  return canonical_ideal(s).small() == s.small();
}

}  // namespace goodsg
