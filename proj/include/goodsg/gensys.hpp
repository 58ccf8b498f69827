#ifndef GOODSG_GENSYS_HPP_
#define GOODSG_GENSYS_HPP_

// Good generating systems of planar local good semigroups and their ideals.
// G generates S when C meet [G] = Small(S), [G] being the least superset of G
// closed under sums and meets.

#include <span>
#include <vector>

#include "goodsg/good_semigroup.hpp"
#include "goodsg/ideals.hpp"

namespace goodsg {

//! A candidate generating set, truncated into the box B(conductor).
struct GenSystem {
  GenSystem(std::vector<Point> pts, Point target_conductor);

  std::vector<Point> points;  // sorted, deduplicated
  Point conductor;
};

//! Is there a sum of elements of G with i-th coordinate a_i and the other
//! coordinate >= a_j?  Throws NonLocal if a nonzero generator touches an
//! axis.  n = 2.
bool monoid_fiber_reach(std::vector<Point> const& g, std::size_t axis,
                        Point const& a);

//! a in C meet [G], for a in B(C).  The conductor itself always counts as a
//! member, as in closure_small().  n = 2, G local.
bool membership_in_closure(GenSystem const& g, Point const& a);

//! G regenerates Small(S) and no element of G can be dropped.  Throws
//! NonLocal, or NotAGeneratingSystem if G does not regenerate S.
bool is_minimal_system(GenSystem const& g, GoodSemigroup const& s);

//! Small(S) minus 0 and C: the starting set for elimination.
std::vector<Point> elimination_candidates(GoodSemigroup const& s);

//! The unique minimal good generating system of a local S, sorted.
std::vector<Point> minimal_generating_system(GoodSemigroup const& s);
//! Same, eliminating in the given order (a permutation of
//! elimination_candidates(s)).
std::vector<Point> minimal_generating_system(GoodSemigroup const& s,
                                             std::span<const Point> order);

//! Is there h in H and s in S with h_i + s_i = a_i, h_j + s_j >= a_j?
//! n = 2.
bool ideal_fiber_reach(std::vector<Point> const& h, GoodSemigroup const& s,
                       std::size_t axis, Point const& a);

//! The unique minimal good generating system of E over a local S, sorted:
//! the least H with C(E) meet [H] = Small(E).  [H] itself need not be good.
std::vector<Point> minimal_ideal_generating_system(GoodRelativeIdeal const& e);
std::vector<Point> minimal_ideal_generating_system(GoodRelativeIdeal const& e,
                                                   std::span<const Point> order);

}  // namespace goodsg

#endif  // GOODSG_GENSYS_HPP_
