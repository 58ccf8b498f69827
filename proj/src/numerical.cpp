#include "goodsg/numerical.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "goodsg/errors.hpp"

namespace goodsg {

namespace {

// Smallest c <= bound such that member(x) holds on [c, bound].
Coord stable_start(std::function<bool(Coord)> const& member, Coord bound) {
  Coord c = bound;
  while (c > 0 && member(c - 1)) {
    --c;
  }
  return c;
}

std::vector<Coord> members_up_to(std::function<bool(Coord)> const& member,
                                 Coord last) {
  std::vector<Coord> out;
  for (Coord x = 0; x <= last; ++x) {
    if (member(x)) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Coord> small)
    : small_(std::move(small)) {
  Coord const m = multiplicity();
  Coord const c = conductor();
  // Minimal generators are all below c + m (c + m itself for N).
  for (Coord x = 1; x <= c + m; ++x) {
    if (!contains(x)) {
      continue;
    }
    bool decomposable = false;
    for (Coord y = 1; y <= x / 2 && !decomposable; ++y) {
      decomposable = contains(y) && contains(x - y);
    }
    if (!decomposable) {
      gens_.push_back(x);
    }
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Coord> gens) {
  if (gens.empty()) {
    throw InvalidArgument("a numerical semigroup needs at least one generator");
  }
  Coord g = 0;
  for (Coord x : gens) {
    if (x <= 0) {
      throw InvalidArgument("numerical semigroup generators must be positive");
    }
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw InvalidArgument("generators have gcd " + std::to_string(g) +
                          ", not a numerical semigroup");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // The Frobenius number is below (min - 1)(max - 1), so min * max is a safe
  // horizon past which every integer is reachable.
  Coord const bound = gens.front() * gens.back();
  std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
  reach[0] = 1;
  for (Coord v = 1; v <= bound; ++v) {
    for (Coord x : gens) {
      if (x <= v && reach[static_cast<std::size_t>(v - x)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  auto member = [&](Coord x) {
    return x >= 0 && (x > bound || reach[static_cast<std::size_t>(x)] != 0);
  };
  Coord const c = stable_start(member, bound);
  return NumericalSemigroup(members_up_to(member, c));
}

NumericalSemigroup NumericalSemigroup::from_membership(
    std::function<bool(Coord)> member, Coord bound) {
  bound = std::max<Coord>(bound, 0);
  auto in = [&](Coord x) { return x >= 0 && (x >= bound || member(x)); };
  if (!in(0)) {
    throw InvalidArgument("a numerical semigroup must contain 0");
  }
  Coord const c = stable_start(in, bound);
  std::vector<Coord> small = members_up_to(in, c);
  for (Coord x : small) {
    for (Coord y : small) {
      if (x + y <= c && !in(x + y)) {
        throw InvalidArgument("set is not closed under addition: " +
                              std::to_string(x) + " + " + std::to_string(y));
      }
    }
  }
  return NumericalSemigroup(std::move(small));
}

Coord NumericalSemigroup::multiplicity() const noexcept {
  return small_.size() > 1 ? small_[1] : 1;
}

bool NumericalSemigroup::contains(Coord x) const {
  if (x < 0) {
    return false;
  }
  if (x >= conductor()) {
    return true;
  }
  return std::binary_search(small_.begin(), small_.end(), x);
}

Coord NumericalSemigroup::element_at(std::size_t i) const {
  if (i < small_.size()) {
    return small_[i];
  }
  return conductor() + static_cast<Coord>(i - (small_.size() - 1));
}

bool NumericalSemigroup::is_arf() const {
  // Triples with b or c above the conductor always land in S.
  for (std::size_t ia = 0; ia < small_.size(); ++ia) {
    for (std::size_t ib = ia; ib < small_.size(); ++ib) {
      for (std::size_t ic = ib; ic < small_.size(); ++ic) {
        if (!contains(small_[ib] + small_[ic] - small_[ia])) {
          return false;
        }
      }
    }
  }
  return true;
}

NumericalIdeal::NumericalIdeal(NumericalSemigroup ambient,
                               std::vector<Coord> small)
    : ambient_(std::move(ambient)), small_(std::move(small)) {
  Coord const limit = conductor() + ambient_.multiplicity();
  for (Coord x = min_element(); x < limit; ++x) {
    if (!contains(x)) {
      continue;
    }
    bool generated = false;
    for (Coord y = min_element(); y < x && !generated; ++y) {
      generated = contains(y) && ambient_.contains(x - y);
    }
    if (!generated) {
      gens_.push_back(x);
    }
  }
}

NumericalIdeal NumericalIdeal::from_generators(
    NumericalSemigroup const& ambient, std::vector<Coord> gens) {
  if (gens.empty()) {
    throw InvalidArgument("an ideal needs at least one generator");
  }
  for (Coord g : gens) {
    if (g < 0) {
      throw InvalidArgument("ideal generators must be nonnegative");
    }
  }
  Coord const bound =
      *std::min_element(gens.begin(), gens.end()) + ambient.conductor();
  auto member = [&](Coord x) {
    return std::any_of(gens.begin(), gens.end(),
                       [&](Coord g) { return ambient.contains(x - g); });
  };
  return from_membership(ambient, member, bound);
}

NumericalIdeal NumericalIdeal::from_membership(
    NumericalSemigroup const& ambient, std::function<bool(Coord)> member,
    Coord bound) {
  bound = std::max<Coord>(bound, 0);
  auto in = [&](Coord x) { return x >= 0 && (x >= bound || member(x)); };
  Coord const c = stable_start(in, bound);
  std::vector<Coord> small = members_up_to(in, c);
  for (Coord x : small) {
    for (Coord s = 0; x + s <= c; ++s) {
      if (ambient.contains(s) && !in(x + s)) {
        throw InvalidArgument("set is not an ideal: " + std::to_string(x) +
                              " + " + std::to_string(s) + " missing");
      }
    }
  }
  return NumericalIdeal(ambient, std::move(small));
}

bool NumericalIdeal::contains(Coord x) const {
  if (x >= conductor()) {
    return true;
  }
  return std::binary_search(small_.begin(), small_.end(), x);
}

NumericalIdeal preimage_under_scaling(NumericalIdeal const& ideal, Coord k,
                                      NumericalSemigroup const& source) {
  if (k < 1) {
    throw InvalidArgument("scaling factor must be positive");
  }
  Coord const bound = std::max(source.conductor(),
                               (ideal.conductor() + k - 1) / k);
  auto member = [&](Coord s) {
    return source.contains(s) && ideal.contains(k * s);
  };
  return NumericalIdeal::from_membership(source, member, bound);
}

NumericalSemigroup arf_closure(NumericalSemigroup const& s) {
  // Saturate under b + c - a inside [0, conductor]; everything above the
  // conductor is already present and only produces larger values.
  Coord const c = s.conductor();
  std::vector<char> in(static_cast<std::size_t>(c) + 1, 0);
  for (Coord x : s.small_elements()) {
    in[static_cast<std::size_t>(x)] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Coord a = 0; a <= c; ++a) {
      if (!in[static_cast<std::size_t>(a)]) {
        continue;
      }
      for (Coord b = a; b <= c; ++b) {
        if (!in[static_cast<std::size_t>(b)]) {
          continue;
        }
        for (Coord d = b; b + d - a <= c; ++d) {
          auto const r = static_cast<std::size_t>(b + d - a);
          if (in[static_cast<std::size_t>(d)] && !in[r]) {
            in[r] = 1;
            changed = true;
          }
        }
      }
    }
  }
  return NumericalSemigroup::from_membership(
      [&](Coord x) { return x <= c && in[static_cast<std::size_t>(x)] != 0; },
      c);
}

NumericalIdeal tail(NumericalSemigroup const& s, Coord a) {
  return NumericalIdeal::from_membership(
      s, [&](Coord x) { return x >= a && s.contains(x); },
      std::max(a, s.conductor()));
}

}  // namespace goodsg
