#ifndef GOODSG_SMALL_SET_HPP_
#define GOODSG_SMALL_SET_HPP_

#include <optional>
#include <string>
#include <vector>

#include "goodsg/lattice.hpp"

namespace goodsg {

//! A finite, sorted, duplicate-free set of points of N^n together with a
//! distinguished top element that belongs to the set and dominates every
//! member.  It stands for the (infinite) set
//!
//!   R(X) = { p in N^n : p meet top in X },
//!
//! i.e. X plus the rays a + H_J out of every a on the J-border plus
//! top + N^n.  Algebraic conditions (meet closure, G2, ...) are not enforced
//! here; see validate_small_set().
class SmallSet {
 public:
  //! Throws InvalidArgument if points is empty, mixes dimensions, has a
  //! negative coordinate, or if top is not a member dominating all points.
  SmallSet(std::vector<Point> points, Point top);
  //! Same, with top the coordinatewise maximum of points.
  explicit SmallSet(std::vector<Point> points);

  std::size_t dim() const noexcept { return top_.dim(); }
  Point const& top() const noexcept { return top_; }
  std::vector<Point> const& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  //! Membership in the finite set itself.
  bool holds(Point const& p) const;
  //! Membership in R(X).
  bool reconstructs(Point const& p) const;

  friend bool operator==(SmallSet const&, SmallSet const&) = default;

 private:
  std::vector<Point> points_;
  Point top_;
};

enum class Axiom {
  kNone,
  kZero,           // 0 must be a small element of a semigroup
  kMeet,           // (G1)
  kAddition,       // closure under +
  kLifting,        // (G2)
  kConductor,      // top is not the minimal conductor
  kIdealClosure,   // E + S not contained in E
};

std::string to_string(Axiom axiom);

struct ValidationReport {
  Axiom violated = Axiom::kNone;
  //! Points exhibiting the failure (a pair for G1/G2/addition, the smaller
  //! conductor candidate for kConductor, ...).
  std::vector<Point> witness;
  std::string message;

  bool ok() const noexcept { return violated == Axiom::kNone; }
};

// Checks shared by semigroups and ideals.  Each is exact for R(X): the
// reconstruction only depends on p meet top, so pairs of small elements and
// witnesses lifted along the border rays cover every case.
std::optional<ValidationReport> check_meet_closed(SmallSet const& x);
std::optional<ValidationReport> check_lifting(SmallSet const& x);
std::optional<ValidationReport> check_conductor_minimal(SmallSet const& x);

}  // namespace goodsg

#endif  // GOODSG_SMALL_SET_HPP_
