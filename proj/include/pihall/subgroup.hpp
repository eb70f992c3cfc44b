#ifndef PIHALL_SUBGROUP_HPP_
#define PIHALL_SUBGROUP_HPP_

#include <vector>

#include "pihall/perm_group.hpp"

namespace pihall {

// A subgroup given inside a parent group. Construction verifies that every
// generator is a member of the parent (Lagrange then holds automatically).
struct Subgroup {
  PermGroup parent;
  PermGroup group;

  Subgroup() = default;
  Subgroup(PermGroup parent_group, PermGroup sub);

  Order order() const { return group.order(); }
  Order index() const { return parent.order() / group.order(); }
};

// A conjugacy class of subgroups with a canonical representative.
struct SubgroupClass {
  Subgroup representative;
  Order class_size = 1;
};

}  // namespace pihall

#endif  // PIHALL_SUBGROUP_HPP_
