#ifndef PIHALL_GROUP_OPS_HPP_
#define PIHALL_GROUP_OPS_HPP_

#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pihall/perm_group.hpp"
#include "pihall/subgroup.hpp"

namespace pihall {

// Exact operations on subgroups of a common ambient group. All element-scan
// routines are bounded by bounds().max_brute_order and throw bound_exceeded
// beyond it; everything here is deterministic.

// Group generated by the given permutations inside parent (membership checked).
Subgroup generated_subgroup(const PermGroup& parent, std::vector<Perm> gens);

// H ∩ K on the same point set (scans the smaller group's elements).
PermGroup group_intersection(const PermGroup& h, const PermGroup& k);

// |H·K| = |H|·|K| / |H∩K|; no group structure assumed on the product set.
Order product_order(const PermGroup& h, const PermGroup& k);

// One representative per right coset of H in G, identity first,
// in a deterministic order.
std::vector<Perm> right_transversal(const PermGroup& g, const PermGroup& h);

// N_G(H): computed by testing right-coset representatives of H in G.
Subgroup normalizer(const PermGroup& g, const PermGroup& h);

// C_G(H): element scan.
Subgroup centralizer(const PermGroup& g, const PermGroup& h);

// Some x in `ambient` with H^x = K, if one exists. Fast rejection on
// order / orbit-signature / element-order-signature mismatch first.
std::optional<Perm> conjugacy_witness(const PermGroup& ambient, const PermGroup& h, const PermGroup& k);

// Smallest normal subgroup of G containing S.
Subgroup normal_closure(const PermGroup& g, const PermGroup& s);

bool is_normal(const PermGroup& g, const PermGroup& n);
bool is_subnormal(const PermGroup& g, const PermGroup& s);

// One representative per conjugacy class of elements, sorted lexicographically;
// the identity class comes first.
std::vector<Perm> element_class_reps(const PermGroup& g);

// All minimal normal subgroups, deterministic order (ascending order, then
// lexicographic element list).
std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g);

// For A minimal normal in G: the simple subnormal components whose direct
// product is A (nonabelian case), or A itself as the single factor when A is
// elementary abelian.
std::vector<Subgroup> socle_components(const PermGroup& g, const PermGroup& a);

// The action of G on the right cosets of a normal subgroup N: a faithful,
// regular realization of G/N together with the epimorphism.
struct QuotientAction {
  PermGroup image;                 // degree = |G : N|
  std::vector<Perm> transversal;   // transversal[0] = identity
  PermGroup kernel;                // N
  std::unordered_map<Perm, int, PermHash> coset_index;  // canonical coset rep -> index
  // Coset permutation induced by an arbitrary g in G.
  Perm map(const Perm& g) const;
  // Some preimage of q in G (exact: the image acts regularly on cosets).
  Perm lift(const Perm& q) const;
  // Image of a subgroup of G.
  PermGroup map_subgroup(const PermGroup& s) const;
  // Full preimage of a subgroup of the image.
  PermGroup lift_subgroup(const PermGroup& s) const;
};
QuotientAction quotient_action(const PermGroup& g, const PermGroup& n);

// Aut_G(S): the conjugation action of N_G(S) on the nonidentity elements
// of S, realized as a permutation group, with the inducing map.
struct InducedAut {
  PermGroup image;                 // degree = |S| - 1
  std::vector<Perm> s_elements;    // nonidentity elements of S, sorted
  Subgroup norm;                   // N_G(S)
  Subgroup cent;                   // C_G(S)
  Perm act(const Perm& n) const;   // image of n in Aut_G(S); n must normalize S
};
InducedAut induced_aut_group(const PermGroup& g, const PermGroup& s);

bool is_solvable(const PermGroup& g);
bool is_simple(const PermGroup& g);

// Derived subgroup [G,G].
Subgroup derived_subgroup(const PermGroup& g);

// H^x as a group (generators conjugated).
PermGroup conjugate_group(const PermGroup& h, const Perm& x);

// Split G into direct factors supported on disjoint orbit blocks: returns the
// factors when G is their internal direct product, otherwise empty.
std::vector<PermGroup> direct_factor_split(const PermGroup& g);

}  // namespace pihall

#endif  // PIHALL_GROUP_OPS_HPP_
