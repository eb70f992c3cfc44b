#include "pihall/perm_group.hpp"

#include <algorithm>

#include "pihall/error.hpp"

namespace pihall {

struct PermGroup::Impl {
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<Level> levels;
  Order order = 1;
};

namespace {

void recompute_orbit(PermGroup::Level& lv, int degree) {
  lv.orbit.clear();
  lv.transversal.clear();
  lv.slot.assign(static_cast<std::size_t>(degree), -1);
  lv.orbit.push_back(lv.base);
  lv.transversal.push_back(Perm::identity(degree));
  lv.slot[static_cast<std::size_t>(lv.base)] = 0;
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    Point p = lv.orbit[head];
    for (const Perm& s : lv.gens) {
      Point q = s[p];
      if (lv.slot[static_cast<std::size_t>(q)] < 0) {
        lv.slot[static_cast<std::size_t>(q)] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal.push_back(lv.transversal[head] * s);
      }
    }
  }
}

// Strip g through levels [from, end). Returns the residue and the level at
// which stripping stopped (levels.size() if it ran off the end).
std::pair<Perm, std::size_t> strip(const std::vector<PermGroup::Level>& levels, std::size_t from, Perm g) {
  for (std::size_t i = from; i < levels.size(); ++i) {
    Point p = g[levels[i].base];
    int s = levels[i].slot[static_cast<std::size_t>(p)];
    if (s < 0) return {std::move(g), i};
    g = g * levels[i].transversal[static_cast<std::size_t>(s)].inverse();
  }
  return {std::move(g), levels.size()};
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  if (degree < 1) fail(Errc::invalid_argument, "degree must be positive");
  for (auto& g : generators) {
    if (g.degree() != degree) fail(Errc::degree_mismatch, "generator degree mismatch");
    if (!g.is_identity()) impl->gens.push_back(std::move(g));
  }

  auto& levels = impl->levels;
  auto new_level = [&](const Perm& witness) {
    Level lv;
    lv.base = witness.min_moved_point();
    levels.push_back(std::move(lv));
  };

  if (!impl->gens.empty()) {
    // Deterministic base seed: smallest point moved by any generator.
    Point b = impl->degree;
    for (const auto& g : impl->gens) b = std::min(b, g.min_moved_point());
    Level lv;
    lv.base = b;
    lv.gens = impl->gens;
    levels.push_back(std::move(lv));
    recompute_orbit(levels[0], degree);

    // Schreier-Sims: process levels bottom-up, testing Schreier generators.
    std::size_t i = levels.size();
    while (i >= 1) {
      std::size_t lev = i - 1;
      bool restarted = false;
      for (std::size_t oi = 0; oi < levels[lev].orbit.size() && !restarted; ++oi) {
        for (std::size_t si = 0; si < levels[lev].gens.size() && !restarted; ++si) {
          const Perm& u = levels[lev].transversal[oi];
          const Perm& s = levels[lev].gens[si];
          Point target = s[levels[lev].orbit[oi]];
          int tslot = levels[lev].slot[static_cast<std::size_t>(target)];
          Perm schreier = u * s * levels[lev].transversal[static_cast<std::size_t>(tslot)].inverse();
          if (schreier.is_identity()) continue;
          auto [h, j] = strip(levels, lev + 1, std::move(schreier));
          if (h.is_identity() && j == levels.size()) continue;
          if (j == levels.size()) new_level(h);
          for (std::size_t l = lev + 1; l <= j; ++l) {
            levels[l].gens.push_back(h);
            recompute_orbit(levels[l], degree);
          }
          i = j + 1;  // resume from the deepest changed level
          restarted = true;
        }
      }
      if (!restarted) --i;
    }
  }

  impl->order = 1;
  for (const auto& lv : impl->levels) impl->order *= static_cast<Order>(lv.orbit.size());
  impl_ = std::move(impl);
}

int PermGroup::degree() const { return impl_ ? impl_->degree : 0; }
Order PermGroup::order() const { return impl_ ? impl_->order : 1; }

const std::vector<Perm>& PermGroup::generators() const {
  static const std::vector<Perm> kEmpty;
  return impl_ ? impl_->gens : kEmpty;
}

const std::vector<PermGroup::Level>& PermGroup::chain() const {
  static const std::vector<Level> kEmpty;
  return impl_ ? impl_->levels : kEmpty;
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& lv : chain()) b.push_back(lv.base);
  return b;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree()) return false;
  auto [h, j] = strip(chain(), 0, g);
  return h.is_identity() && j == chain().size();
}

bool PermGroup::is_abelian() const {
  const auto& gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!(gs[i] * gs[j] == gs[j] * gs[i])) return false;
  return true;
}

bool PermGroup::contains_group(const PermGroup& other) const {
  if (other.degree() != degree()) return false;
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order() == other.order() && contains_group(other);
}

std::vector<Perm> PermGroup::elements(Order limit) const {
  if (limit == 0) limit = bounds().max_brute_order;
  if (order() > limit)
    fail(Errc::bound_exceeded,
         "element enumeration: order " + std::to_string(order()) + " exceeds limit " + std::to_string(limit));
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order()));
  out.push_back(Perm::identity(degree()));
  // Multiply transversals from the deepest level outwards.
  for (std::size_t i = chain().size(); i-- > 0;) {
    const auto& lv = chain()[i];
    std::vector<Perm> next;
    next.reserve(out.size() * lv.transversal.size());
    for (const auto& h : out)
      for (const auto& u : lv.transversal) next.push_back(h * u);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(static_cast<std::size_t>(degree()), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Point> orb{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const auto& g : generators()) {
        Point q = g[orb[head]];
        if (!seen[static_cast<std::size_t>(q)]) {
          seen[static_cast<std::size_t>(q)] = true;
          orb.push_back(q);
        }
      }
    if (orb.size() > 1) {
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
  }
  return out;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<Point>& points) const {
  // Rebuild a chain whose base starts with the given points; the stabilizer
  // is then generated by the strong generators fixing all of them.
  std::vector<Perm> gens = generators();
  std::vector<Perm> stab_gens;
  std::vector<Level> levels;
  for (Point p : points) {
    if (p < 0 || p >= degree()) fail(Errc::invalid_argument, "pointwise_stabilizer: point out of range");
    // Orbit of p under current gens, with transversal; Schreier generators
    // of the stabilizer of p become the new generating set.
    Level lv;
    lv.base = p;
    lv.gens = gens;
    recompute_orbit(lv, degree());
    std::vector<Perm> next;
    for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi)
      for (const auto& s : lv.gens) {
        Point q = s[lv.orbit[oi]];
        Perm sch = lv.transversal[oi] * s * lv.transversal[static_cast<std::size_t>(lv.slot[static_cast<std::size_t>(q)])].inverse();
        if (!sch.is_identity()) next.push_back(sch);
      }
    // Prune: keep only generators that actually grow the group, otherwise
    // the Schreier generator count compounds across points.
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<Perm> reduced;
    PermGroup acc = PermGroup::trivial(degree());
    for (auto& g : next) {
      if (!acc.contains(g)) {
        reduced.push_back(std::move(g));
        acc = PermGroup(degree(), reduced);
      }
    }
    gens = std::move(reduced);
  }
  return PermGroup(degree(), gens);
}

}  // namespace pihall
