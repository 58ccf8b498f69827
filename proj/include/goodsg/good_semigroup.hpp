#ifndef GOODSG_GOOD_SEMIGROUP_HPP_
#define GOODSG_GOOD_SEMIGROUP_HPP_

#include <optional>
#include <vector>

#include "goodsg/errors.hpp"
#include "goodsg/lattice.hpp"
#include "goodsg/numerical.hpp"
#include "goodsg/small_set.hpp"

namespace goodsg {

//! Thrown when a candidate small set fails validation.  Carries the report
//! and the candidate set that was checked.
class NotGoodSemigroup : public Error {
 public:
  NotGoodSemigroup(ValidationReport report, std::vector<Point> candidate);

  ValidationReport const& report() const noexcept { return report_; }
  std::vector<Point> const& candidate() const noexcept { return candidate_; }

 private:
  ValidationReport report_;
  std::vector<Point> candidate_;
};

//! A good semigroup of N^n, stored as Small(S) with top = conductor.
//! Immutable; every instance has passed validate_small_set().
class GoodSemigroup {
 public:
  //! Throws NotGoodSemigroup if x fails validation.
  static GoodSemigroup from_small(SmallSet x);

  std::size_t dim() const noexcept { return small_.dim(); }
  SmallSet const& small() const noexcept { return small_; }
  std::vector<Point> const& small_elements() const noexcept {
    return small_.points();
  }
  Point const& conductor() const noexcept { return small_.top(); }

  //! Membership: a in S iff a meet C is a small element.  Points with a
  //! negative coordinate are never members.
  bool contains(Point const& a) const { return small_.reconstructs(a); }

  friend bool operator==(GoodSemigroup const&, GoodSemigroup const&) = default;

 private:
  explicit GoodSemigroup(SmallSet x) : small_(std::move(x)) {}

  SmallSet small_;
};

//! C meet [G]: the least set containing (C meet G), 0 and C that is closed
//! under meets and under sums truncated at C.
SmallSet closure_small(std::vector<Point> const& generators,
                       Point const& conductor);

//! Lowers the top of x to the true conductor of R(x) and re-truncates the
//! points there.  Leaves x unchanged if no unique smaller conductor exists.
SmallSet normalize_conductor(SmallSet const& x);

//! Checks that R(x) is a good semigroup with conductor x.top(): 0 is small,
//! closure under meets and sums, (G2), and minimality of the conductor.
ValidationReport validate_small_set(SmallSet const& x);

//! normalize_conductor(closure_small(G, C)), validated.  Throws
//! NotGoodSemigroup whose candidate() is the raw closure C meet [G].
GoodSemigroup good_semigroup_from_generators(std::vector<Point> const& generators,
                                             Point const& conductor);

//! S subset of T.
bool is_subset(GoodSemigroup const& s, GoodSemigroup const& t);
//! Lexicographically smallest element of S missing from T, if any.
std::optional<Point> subset_witness(GoodSemigroup const& s,
                                    GoodSemigroup const& t);

//! The J-border: small elements agreeing with C on every coordinate of J.
std::vector<Point> border(GoodSemigroup const& s, IndexSet j);

//! { j : a_j = C_j }, the largest J with a in the J-border.
IndexSet border_indices(Point const& a, Point const& conductor);

//! Only 0 lies on the coordinate axes.  C itself must be positive, since
//! otherwise C + N^n reaches an axis.
bool is_local(GoodSemigroup const& s);

//! Is there s in S with s_i = x_i and s_j > x_j (j the other axis)?  n = 2.
bool delta_fiber_nonempty(GoodSemigroup const& s, Point const& x,
                          std::size_t axis);

//! Small elements a with Delta^S(a) empty, lexicographically sorted.  n = 2.
std::vector<Point> maximal_elements(GoodSemigroup const& s);

//! pi_i(S) as a numerical semigroup.  n = 2.
NumericalSemigroup projection(GoodSemigroup const& s, std::size_t axis);

}  // namespace goodsg

#endif  // GOODSG_GOOD_SEMIGROUP_HPP_
