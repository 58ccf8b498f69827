#ifndef GOODSG_PLOT_HPP_
#define GOODSG_PLOT_HPP_

// Pictures of planar small sets in the style of the usual lattice figures:
// dots for small elements, dotted rays a + H_J out of the border elements
// and a hatched square at C + N^2.  Output depends only on the input.

#include <string>

#include "goodsg/small_set.hpp"

namespace goodsg {

//! SVG, 20 user units per lattice step.  Throws UnsupportedDimension
//! unless n = 2.
std::string render_svg(SmallSet const& x);

//! One character per lattice point: 'o' small element, '|' and '-' rays,
//! '+' where rays cross, '#' the conductor region, '.' anything else.
//! Ends with a legend.  n = 2.
std::string render_ascii(SmallSet const& x);

}  // namespace goodsg

#endif  // GOODSG_PLOT_HPP_
