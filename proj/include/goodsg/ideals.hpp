#ifndef GOODSG_IDEALS_HPP_
#define GOODSG_IDEALS_HPP_

// Good relative ideals E ⊆ N^n of a good semigroup S, stored like semigroups
// through Small(E) with top C(E).

#include <vector>

#include "goodsg/good_semigroup.hpp"

namespace goodsg {

class GoodRelativeIdeal {
 public:
  //! Throws NotGoodSemigroup if x is not a good relative ideal of ambient.
  static GoodRelativeIdeal from_small(GoodSemigroup ambient, SmallSet x);

  std::size_t dim() const noexcept { return small_.dim(); }
  GoodSemigroup const& ambient() const noexcept { return ambient_; }
  SmallSet const& small() const noexcept { return small_; }
  std::vector<Point> const& small_elements() const noexcept {
    return small_.points();
  }
  Point const& conductor() const noexcept { return small_.top(); }
  //! m(E), the meet of all elements.
  Point const& min_element() const noexcept { return small_.points().front(); }

  bool contains(Point const& a) const { return small_.reconstructs(a); }

  friend bool operator==(GoodRelativeIdeal const&,
                         GoodRelativeIdeal const&) = default;

 private:
  GoodRelativeIdeal(GoodSemigroup ambient, SmallSet x)
      : ambient_(std::move(ambient)), small_(std::move(x)) {}

  GoodSemigroup ambient_;
  SmallSet small_;
};

//! G1, G2, minimality of x.top() as conductor and E + S ⊆ E.
ValidationReport validate_ideal_small_set(GoodSemigroup const& s,
                                          SmallSet const& x);

//! [H], the least relative ideal containing H closed under meets.
GoodRelativeIdeal gi_from_generators(GoodSemigroup const& s,
                                     std::vector<Point> const& h);

//! d meet [H].  d itself is always included, as in closure_small().
SmallSet ideal_closure_small(GoodSemigroup const& s, std::vector<Point> const& h,
                             Point const& d);

inline bool gi_contains(GoodRelativeIdeal const& e, Point const& a) {
  return e.contains(a);
}

//! S itself, as an ideal over S.
GoodRelativeIdeal as_ideal(GoodSemigroup const& s);

//! S(a) = { b in S : b >= a }.
GoodRelativeIdeal tail_ideal(GoodSemigroup const& s, Point const& a);

//! E + E = m(E) + E.
bool is_stable(GoodRelativeIdeal const& e);

//! The meet closure of E + F.  Throws InvalidArgument for different
//! ambients.
GoodRelativeIdeal sum_ideals(GoodRelativeIdeal const& e,
                             GoodRelativeIdeal const& f);

//! The three families (γ1 - x1, C2) for x1 not in S1, (C1, γ2 - x2) for x2
//! not in S2, and γ - α for α maximal.  Sorted.  n = 2, S local.
std::vector<Point> canonical_generators(GoodSemigroup const& s);

//! K(S) = { a : Delta^S(γ - a) is empty }, γ = C - 1.  Built from
//! canonical_generators() and checked against a direct scan of the
//! definition; throws InternalMismatch if they differ.  n = 2, S local.
GoodRelativeIdeal canonical_ideal(GoodSemigroup const& s);

//! K(S) = S.  n = 2, S local.
bool is_symmetric(GoodSemigroup const& s);

}  // namespace goodsg

#endif  // GOODSG_IDEALS_HPP_
