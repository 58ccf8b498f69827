#ifndef GOODSG_LATTICE_HPP_
#define GOODSG_LATTICE_HPP_

// Points of Z^n with the product order, meets, truncated sums and the
// Delta-regions used to talk about fibres of good semigroups.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace goodsg {

using Coord = std::int64_t;

//! An element of Z^n.  Immutable value type; the dimension travels with the
//! object and every binary operation checks it.
//!
//! Comparison operators give the lexicographic order (used for sorting and
//! for deterministic output); the product partial order is leq().
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Coord>(dim, 0)); }
  static Point filled(std::size_t dim, Coord value) {
    return Point(std::vector<Coord>(dim, value));
  }
  //! The i-th unit vector e_i (0-based i).
  static Point unit(std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const noexcept { return coords_; }

  //! Copy with coordinate i replaced.
  Point with(std::size_t i, Coord value) const;

  bool is_nonnegative() const noexcept;
  bool is_zero() const noexcept;
  //! True when some coordinate is 0 (the point lies on a coordinate axis or
  //! hyperplane).  The origin counts.
  bool on_axes() const noexcept;

  friend auto operator<=>(Point const&, Point const&) = default;
  friend bool operator==(Point const&, Point const&) = default;

  std::string to_string() const;

 private:
  std::vector<Coord> coords_;
};

std::ostream& operator<<(std::ostream& os, Point const& p);

//! Throws DimensionMismatch unless a and b have the same dimension.
void require_same_dim(Point const& a, Point const& b);

//! Coordinatewise minimum.
Point meet(Point const& a, Point const& b);
//! Coordinatewise maximum.
Point join(Point const& a, Point const& b);
//! The product order: a_i <= b_i for every i.
bool leq(Point const& a, Point const& b);
//! a <= b and a != b.
bool less(Point const& a, Point const& b);

Point operator+(Point const& a, Point const& b);
Point operator-(Point const& a, Point const& b);

//! (a + b) meet cap.
Point add_trunc(Point const& a, Point const& b, Point const& cap);

//! A subset J of {0, ..., n-1}, stored as a bit mask (n <= 64).
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices);

  static IndexSet all(std::size_t dim);
  static IndexSet single(std::size_t i) { return IndexSet{i}; }

  bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  bool empty() const noexcept { return bits_ == 0; }
  IndexSet complement(std::size_t dim) const;
  IndexSet& insert(std::size_t i);
  std::vector<std::size_t> elements(std::size_t dim) const;

  friend bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

enum class RegionKind {
  kDeltaJ,       // b_j = a_j on J, b_i > a_i off J
  kDeltaBarJ,    // b_j = a_j on J, b_i >= a_i off J
  kDelta,        // union over i of Delta_{i}(a)
  kDeltaBar,     // union over i of DeltaBar_{i}(a)
  kHTranslate,   // a + H_J: b_j >= a_j on J, b_i = a_i off J
};

struct Region {
  RegionKind kind;
  Point base;
  IndexSet indices;  // ignored for the union kinds
};

bool in_region(Point const& p, Region const& r);

}  // namespace goodsg

#endif  // GOODSG_LATTICE_HPP_
