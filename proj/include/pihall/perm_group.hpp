#ifndef PIHALL_PERM_GROUP_HPP_
#define PIHALL_PERM_GROUP_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "pihall/perm.hpp"

namespace pihall {

// A finitely generated permutation group with a stabilizer chain
// (base, basic orbits, transversals, strong generators).
//
// Construction is deterministic: base points are chosen as the smallest
// point moved by the relevant generators, orbits are extended in BFS order
// with generators in a fixed order. Immutable after construction and safe
// to share across threads; copies share the underlying chain.
class PermGroup {
 public:
  struct Level {
    Point base = -1;
    std::vector<Perm> gens;          // generators of this stabilizer subgroup
    std::vector<Point> orbit;        // orbit[0] == base, BFS discovery order
    std::vector<int> slot;           // point -> index into orbit, or -1
    std::vector<Perm> transversal;   // transversal[i] maps base to orbit[i]
  };

  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators);
  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const;
  Order order() const;
  const std::vector<Perm>& generators() const;  // the defining generators, identity dropped
  const std::vector<Level>& chain() const;
  std::vector<Point> base() const;

  bool contains(const Perm& g) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  // Containment/equality as subgroups of Sym(degree).
  bool contains_group(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;

  // All elements, sorted lexicographically by image vector. Throws
  // bound_exceeded when order() > limit (0 means bounds().max_brute_order).
  std::vector<Perm> elements(Order limit = 0) const;

  // Orbits of the natural action on 0..degree-1, each sorted ascending,
  // ordered by smallest point; fixed points excluded.
  std::vector<std::vector<Point>> orbits() const;

  // Pointwise stabilizer of a set of points, as a group on the same degree.
  PermGroup pointwise_stabilizer(const std::vector<Point>& points) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace pihall

#endif  // PIHALL_PERM_GROUP_HPP_
