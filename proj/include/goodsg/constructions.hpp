#ifndef GOODSG_CONSTRUCTIONS_HPP_
#define GOODSG_CONSTRUCTIONS_HPP_

// Factories for planar good semigroups built from numerical data.  Each one
// enumerates its defining formula on a finite box, truncates, normalizes the
// conductor and validates.

#include <vector>

#include "goodsg/good_semigroup.hpp"
#include "goodsg/numerical.hpp"

namespace goodsg {

//! S ⋈ E = D ∪ (E x E) ∪ { a meet b : a in D, b in E x E }, D the diagonal.
//! Throws InvalidArgument unless E is an ideal of S contained in S.
GoodSemigroup duplication(NumericalSemigroup const& s, NumericalIdeal const& e);

//! The amalgamation of S with T along E, for g = multiplication by k:
//! { (s, ks) } ∪ (g^-1(E) x E) ∪ meets.  Throws InvalidArgument unless
//! k*S ⊆ T and E is an ideal of T inside T.
GoodSemigroup amalgamation(NumericalSemigroup const& s,
                           NumericalSemigroup const& t,
                           NumericalIdeal const& e, Coord k);

//! S1 x S2.
GoodSemigroup cartesian(NumericalSemigroup const& s1,
                        NumericalSemigroup const& s2);

//! { (x, y) in S1 x S2 : (x, y) not in Delta(a) for every a in M }.
//! Throws InvalidArgument if M is not inside S1 x S2, NotGoodSemigroup if the
//! resulting set is not good.
GoodSemigroup from_maximal_elements(NumericalSemigroup const& s1,
                                    NumericalSemigroup const& s2,
                                    std::vector<Point> const& maximal);

}  // namespace goodsg

#endif  // GOODSG_CONSTRUCTIONS_HPP_
