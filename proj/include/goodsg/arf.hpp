#ifndef GOODSG_ARF_HPP_
#define GOODSG_ARF_HPP_

// The Arf property for planar good semigroups and the Arf closure, computed
// from the Arf closures T1, T2 of the two projections.  With
// T1 = {0 = s0 < s1 < ...} and T2 = {0 = u0 < u1 < ...} the candidates are
//
//   T^(i) = { (s0,u0), ..., (s_{i-1},u_{i-1}) } ∪ T1(s_i) x T2(u_i),
//
// and the closure is the last T^(i) still containing S that is a good
// semigroup.  Some T^(i) are not closed under addition, e.g. for
// T1 = <3,4,5>, T2 = N and i = 3, where (3,1) + (3,1) = (6,2) is missing.

#include <cstddef>
#include <vector>

#include "goodsg/good_semigroup.hpp"
#include "goodsg/numerical.hpp"

namespace goodsg {

//! A level of the T^(i) chain.  Level 0 stands for the product T1 x T2,
//! the closure of a non-local semigroup.
struct ArfChain {
  NumericalSemigroup t1;
  NumericalSemigroup t2;
  std::size_t level;
};

//! b + c - a in S for all small a <= b, a <= c.  n = 2.
bool is_arf(GoodSemigroup const& s);

//! Every tail S(a), a small, is a stable ideal.  n = 2.
bool is_arf_via_stability(GoodSemigroup const& s);

//! Is T^(level) a good semigroup?  Always true for levels 0 and 1.
bool chain_level_is_good(NumericalSemigroup const& t1,
                         NumericalSemigroup const& t2, std::size_t level);

//! T^(level) for Arf numerical semigroups t1, t2 (the product for level 0).
//! Throws InvalidArgument if t1 or t2 is not Arf or T^(level) is not a good
//! semigroup.
GoodSemigroup build_chain_level(NumericalSemigroup const& t1,
                                NumericalSemigroup const& t2,
                                std::size_t level);

//! The chain data of the Arf closure of S.  n = 2.
ArfChain arf_closure_chain(GoodSemigroup const& s);

//! The smallest Arf good semigroup containing S.  n = 2.
GoodSemigroup arf_closure(GoodSemigroup const& s);

//! U meet-free: S ∩ [0, box_cap] saturated under b + c - a (a <= b, a <= c)
//! inside the box.  Sorted.  n = 2.
std::vector<Point> arf_saturation(GoodSemigroup const& s, Point const& box_cap);

//! arf_saturation() closed under meets.  Sorted.  n = 2.
std::vector<Point> saturation_infima_closure(GoodSemigroup const& s,
                                             Point const& box_cap);

}  // namespace goodsg

#endif  // GOODSG_ARF_HPP_
