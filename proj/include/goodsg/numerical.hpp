#ifndef GOODSG_NUMERICAL_HPP_
#define GOODSG_NUMERICAL_HPP_

// Numerical semigroups (cofinite submonoids of N) and their relative ideals
// contained in N.  Both are stored through their small elements: every
// member up to and including the conductor, after which everything belongs.

#include <cstddef>
#include <functional>
#include <vector>

#include "goodsg/lattice.hpp"

namespace goodsg {

class NumericalSemigroup {
 public:
  //! <gens>.  Throws InvalidArgument if gens is empty, has a non-positive
  //! entry, or gcd(gens) != 1.
  static NumericalSemigroup from_generators(std::vector<Coord> gens);

  //! The set { x in N : member(x) }, where every x >= bound is assumed to be
  //! a member.  Throws InvalidArgument unless the set is a monoid.
  static NumericalSemigroup from_membership(std::function<bool(Coord)> member,
                                            Coord bound);

  //! N itself.
  static NumericalSemigroup naturals() { return from_generators({1}); }

  std::vector<Coord> const& generators() const noexcept { return gens_; }
  std::vector<Coord> const& small_elements() const noexcept { return small_; }
  Coord conductor() const noexcept { return small_.back(); }
  //! Smallest nonzero element (1 for N).
  Coord multiplicity() const noexcept;

  bool contains(Coord x) const;
  //! The i-th smallest element, counting 0 as element 0.
  Coord element_at(std::size_t i) const;
  //! b + c - a in S whenever a <= b, a <= c are in S.
  bool is_arf() const;

  friend bool operator==(NumericalSemigroup const& a,
                         NumericalSemigroup const& b) {
    return a.small_ == b.small_;
  }

 private:
  explicit NumericalSemigroup(std::vector<Coord> small);

  std::vector<Coord> small_;
  std::vector<Coord> gens_;
};

//! A relative ideal E of S with E a subset of N.
class NumericalIdeal {
 public:
  //! gens + S.  Throws InvalidArgument for an empty or negative generator set.
  static NumericalIdeal from_generators(NumericalSemigroup const& ambient,
                                        std::vector<Coord> gens);

  //! { x in N : member(x) } as an ideal of ambient; every x >= bound must be
  //! a member.  Throws InvalidArgument if the set is empty or not closed
  //! under adding elements of ambient.
  static NumericalIdeal from_membership(NumericalSemigroup const& ambient,
                                        std::function<bool(Coord)> member,
                                        Coord bound);

  NumericalSemigroup const& ambient() const noexcept { return ambient_; }
  //! Minimal generators: members not of the form e + s, s != 0.
  std::vector<Coord> const& generators() const noexcept { return gens_; }
  std::vector<Coord> const& small_elements() const noexcept { return small_; }
  Coord conductor() const noexcept { return small_.back(); }
  Coord min_element() const noexcept { return small_.front(); }

  bool contains(Coord x) const;

  friend bool operator==(NumericalIdeal const& a, NumericalIdeal const& b) {
    return a.ambient_ == b.ambient_ && a.small_ == b.small_;
  }

 private:
  NumericalIdeal(NumericalSemigroup ambient, std::vector<Coord> small);

  NumericalSemigroup ambient_;
  std::vector<Coord> small_;
  std::vector<Coord> gens_;
};

//! { s in S : k*s in E }, an ideal of S.  E lives in a numerical semigroup T
//! and k*S must map into T (not checked here; see amalgamation()).
NumericalIdeal preimage_under_scaling(NumericalIdeal const& ideal, Coord k,
                                      NumericalSemigroup const& source);

//! The smallest Arf numerical semigroup containing S.
NumericalSemigroup arf_closure(NumericalSemigroup const& s);

//! S(a) = { b in S : b >= a }.
NumericalIdeal tail(NumericalSemigroup const& s, Coord a);

}  // namespace goodsg

#endif  // GOODSG_NUMERICAL_HPP_
