#include "goodsg/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "goodsg/errors.hpp"

namespace goodsg {

Point Point::unit(std::size_t dim, std::size_t i) {
  std::vector<Coord> c(dim, 0);
  c.at(i) = 1;
  return Point(std::move(c));
}

Point Point::with(std::size_t i, Coord value) const {
  std::vector<Coord> c = coords_;
  c.at(i) = value;
  return Point(std::move(c));
}

bool Point::is_nonnegative() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Coord x) { return x >= 0; });
}

bool Point::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Coord x) { return x == 0; });
}

bool Point::on_axes() const noexcept {
  return std::any_of(coords_.begin(), coords_.end(),
                     [](Coord x) { return x == 0; });
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Point const& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i != 0) {
      os << ',';
    }
    os << p[i];
  }
  return os << ')';
}

void require_same_dim(Point const& a, Point const& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(a.dim(), b.dim());
  }
}

namespace {

template <typename Op>
Point zip(Point const& a, Point const& b, Op op) {
  require_same_dim(a, b);
  std::vector<Coord> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    c[i] = op(a[i], b[i]);
  }
  return Point(std::move(c));
}

}  // namespace

Point meet(Point const& a, Point const& b) {
  return zip(a, b, [](Coord x, Coord y) { return std::min(x, y); });
}

Point join(Point const& a, Point const& b) {
  return zip(a, b, [](Coord x, Coord y) { return std::max(x, y); });
}

bool leq(Point const& a, Point const& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
  }
  return true;
}

bool less(Point const& a, Point const& b) { return leq(a, b) && a != b; }

Point operator+(Point const& a, Point const& b) {
  return zip(a, b, [](Coord x, Coord y) { return x + y; });
}

Point operator-(Point const& a, Point const& b) {
  return zip(a, b, [](Coord x, Coord y) { return x - y; });
}

Point add_trunc(Point const& a, Point const& b, Point const& cap) {
  require_same_dim(a, b);
  require_same_dim(a, cap);
  std::vector<Coord> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    c[i] = std::min(a[i] + b[i], cap[i]);
  }
  return Point(std::move(c));
}

IndexSet::IndexSet(std::initializer_list<std::size_t> indices) {
  for (auto i : indices) {
    insert(i);
  }
}

IndexSet IndexSet::all(std::size_t dim) {
  IndexSet s;
  for (std::size_t i = 0; i < dim; ++i) {
    s.insert(i);
  }
  return s;
}

IndexSet IndexSet::complement(std::size_t dim) const {
  IndexSet s;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!contains(i)) {
      s.insert(i);
    }
  }
  return s;
}

IndexSet& IndexSet::insert(std::size_t i) {
  if (i >= 64) {
    throw InvalidArgument("index sets support at most 64 coordinates");
  }
  bits_ |= std::uint64_t{1} << i;
  return *this;
}

std::vector<std::size_t> IndexSet::elements(std::size_t dim) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim; ++i) {
    if (contains(i)) {
      out.push_back(i);
    }
  }
  return out;
}

namespace {

// Equality on J; strict (or weak) inequality elsewhere.
bool in_delta(Point const& p, Point const& a, IndexSet j, bool strict) {
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (j.contains(i)) {
      if (p[i] != a[i]) {
        return false;
      }
    } else if (strict ? p[i] <= a[i] : p[i] < a[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool in_region(Point const& p, Region const& r) {
  require_same_dim(p, r.base);
  std::size_t const n = p.dim();
  switch (r.kind) {
    case RegionKind::kDeltaJ:
      return in_delta(p, r.base, r.indices, true);
    case RegionKind::kDeltaBarJ:
      return in_delta(p, r.base, r.indices, false);
    case RegionKind::kDelta:
    case RegionKind::kDeltaBar: {
      bool const strict = r.kind == RegionKind::kDelta;
      for (std::size_t i = 0; i < n; ++i) {
        if (in_delta(p, r.base, IndexSet::single(i), strict)) {
          return true;
        }
      }
      return false;
    }
    case RegionKind::kHTranslate:
      for (std::size_t i = 0; i < n; ++i) {
        if (r.indices.contains(i) ? p[i] < r.base[i] : p[i] != r.base[i]) {
          return false;
        }
      }
      return true;
  }
  return false;
}

}  // namespace goodsg
