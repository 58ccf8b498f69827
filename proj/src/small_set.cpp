#include "goodsg/small_set.hpp"

#include <algorithm>

#include "goodsg/errors.hpp"

namespace goodsg {

SmallSet::SmallSet(std::vector<Point> points, Point top)
    : points_(std::move(points)), top_(std::move(top)) {
  if (points_.empty()) {
    throw InvalidArgument("a small set cannot be empty");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (auto const& p : points_) {
    require_same_dim(p, top_);
    if (!p.is_nonnegative()) {
      throw InvalidArgument("small elements must lie in N^n, got " +
                            p.to_string());
    }
    if (!leq(p, top_)) {
      throw InvalidArgument(p.to_string() + " is not below the top " +
                            top_.to_string());
    }
  }
  if (!holds(top_)) {
    throw InvalidArgument("the top " + top_.to_string() +
                          " must be one of the points");
  }
}

namespace {

Point coordinatewise_max(std::vector<Point> const& points) {
  if (points.empty()) {
    throw InvalidArgument("a small set cannot be empty");
  }
  Point top = points.front();
  for (auto const& p : points) {
    top = join(top, p);
  }
  return top;
}

}  // namespace

SmallSet::SmallSet(std::vector<Point> points)
    : SmallSet(points, coordinatewise_max(points)) {}

bool SmallSet::holds(Point const& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool SmallSet::reconstructs(Point const& p) const {
  require_same_dim(p, top_);
  return p.is_nonnegative() && holds(meet(p, top_));
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kNone:
      return "none";
    case Axiom::kZero:
      return "zero";
    case Axiom::kMeet:
      return "G1";
    case Axiom::kAddition:
      return "addition";
    case Axiom::kLifting:
      return "G2";
    case Axiom::kConductor:
      return "conductor";
    case Axiom::kIdealClosure:
      return "ideal";
  }
  return "unknown";
}

std::optional<ValidationReport> check_meet_closed(SmallSet const& x) {
  auto const& pts = x.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!x.holds(meet(pts[i], pts[j]))) {
        return ValidationReport{Axiom::kMeet,
                                {pts[i], pts[j]},
                                "meet " + meet(pts[i], pts[j]).to_string() +
                                    " is missing"};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Is there c in R(X) with c_k > a_k, c_j = min(a_j, b_j) where a and b
// differ, and c_j >= a_j where they agree?  Candidates are small elements;
// a coordinate equal to top_j may be lifted along the border ray.
bool has_lifting_witness(SmallSet const& x, Point const& a, Point const& b,
                         std::size_t k) {
  Point const& top = x.top();
  for (auto const& z : x.points()) {
    if (z[k] <= a[k]) {
      continue;
    }
    bool ok = true;
    for (std::size_t j = 0; j < a.dim() && ok; ++j) {
      if (j == k) {
        continue;
      }
      if (a[j] != b[j]) {
        ok = z[j] == std::min(a[j], b[j]);
      } else {
        ok = z[j] >= a[j] || z[j] == top[j];
      }
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<ValidationReport> check_lifting(SmallSet const& x) {
  auto const& pts = x.points();
  Point const& top = x.top();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = 0; k < x.dim(); ++k) {
        // Shared coordinates on the conductor are lifted for free.
        if (pts[i][k] != pts[j][k] || pts[i][k] >= top[k]) {
          continue;
        }
        if (!has_lifting_witness(x, pts[i], pts[j], k)) {
          return ValidationReport{
              Axiom::kLifting,
              {pts[i], pts[j]},
              pts[i].to_string() + " and " + pts[j].to_string() +
                  " share coordinate " + std::to_string(k + 1) +
                  " but nothing lies strictly above them on that fibre"};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ValidationReport> check_conductor_minimal(SmallSet const& x) {
  Point const& top = x.top();
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (top[i] == 0) {
      continue;
    }
    Point const below = top.with(i, top[i] - 1);
    if (x.holds(below)) {
      return ValidationReport{Axiom::kConductor,
                              {below},
                              below.to_string() +
                                  " is a member, so the conductor is smaller "
                                  "than " +
                                  top.to_string()};
    }
  }
  return std::nullopt;
}

}  // namespace goodsg
