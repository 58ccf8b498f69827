#ifndef GOODSG_SRC_BOX_HPP_
#define GOODSG_SRC_BOX_HPP_

// Dense indexing of an integer box [lo, hi].  Index order is lexicographic
// (first coordinate most significant), so walking indices upward visits the
// points in the same order Point's operator< sorts them.

#include <cstddef>
#include <vector>

#include "goodsg/errors.hpp"
#include "goodsg/lattice.hpp"

namespace goodsg::detail {

class Box {
 public:
  Box(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    require_same_dim(lo_, hi_);
    std::size_t const n = lo_.dim();
    strides_.assign(n, 1);
    size_ = 1;
    for (std::size_t k = n; k-- > 0;) {
      if (hi_[k] < lo_[k]) {
        size_ = 0;
        return;
      }
      strides_[k] = size_;
      size_ *= static_cast<std::size_t>(hi_[k] - lo_[k] + 1);
      if (size_ > kMaxCells) {
        throw InvalidArgument("lattice box " + lo_.to_string() + ".." +
                              hi_.to_string() + " is too large");
      }
    }
  }

  std::size_t size() const noexcept { return size_; }
  Point const& lo() const noexcept { return lo_; }
  Point const& hi() const noexcept { return hi_; }

  bool inside(Point const& p) const {
    require_same_dim(p, lo_);
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (p[k] < lo_[k] || p[k] > hi_[k]) {
        return false;
      }
    }
    return size_ != 0;
  }

  std::size_t index(Point const& p) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < p.dim(); ++k) {
      idx += static_cast<std::size_t>(p[k] - lo_[k]) * strides_[k];
    }
    return idx;
  }

  Point at(std::size_t idx) const {
    std::vector<Coord> c(lo_.dim());
    for (std::size_t k = 0; k < c.size(); ++k) {
      c[k] = lo_[k] + static_cast<Coord>(idx / strides_[k]);
      idx %= strides_[k];
    }
    return Point(std::move(c));
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < size_; ++i) {
      f(at(i));
    }
  }

 private:
  static constexpr std::size_t kMaxCells = std::size_t{1} << 26;

  Point lo_;
  Point hi_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

//! A subset of a box, as a bitmap.
class BoxSet {
 public:
  explicit BoxSet(Box box) : box_(std::move(box)), bits_(box_.size(), 0) {}

  Box const& box() const noexcept { return box_; }

  bool contains(Point const& p) const {
    return box_.inside(p) && bits_[box_.index(p)] != 0;
  }

  //! Returns true if p was newly added.  p must lie in the box.
  bool insert(Point const& p) {
    auto& bit = bits_[box_.index(p)];
    if (bit != 0) {
      return false;
    }
    bit = 1;
    return true;
  }

  //! Members in lexicographic order.
  std::vector<Point> points() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] != 0) {
        out.push_back(box_.at(i));
      }
    }
    return out;
  }

 private:
  Box box_;
  std::vector<char> bits_;
};

}  // namespace goodsg::detail

#endif  // GOODSG_SRC_BOX_HPP_
