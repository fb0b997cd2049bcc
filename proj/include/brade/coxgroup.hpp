#pragma once

/* Weyl groups and their subgroups as permutation groups on the signed roots.
   Orders come from a deterministic Schreier-Sims stabilizer chain and are
   exact arbitrary-precision integers; nothing is ever estimated.  Also here:
   recognition of induced subdiagrams (every induced subgraph of an ADE
   diagram is a disjoint union of ADE diagrams, anything else is a hard
   error), standard order formulas, and centralizer node sets. */

#include <vector>

#include "brade/rootsys.hpp"

namespace brade {

using Perm = std::vector<int>;  // images; (a*b)(x) = a[b[x]]

Perm perm_identity(int degree);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);

class PermutationGroup {
public:
  static PermutationGroup generated_by(std::vector<Perm> gens, int degree);

  const Int& order() const { return order_; }
  bool contains(const Perm& p) const;
  int degree() const { return degree_; }
  const std::vector<int>& base() const { return base_; }

private:
  int degree_ = 0;
  Int order_ = 1;
  std::vector<int> base_;
  std::vector<std::vector<Perm>> gens_;            // per level
  std::vector<std::vector<int>> orbit_;            // per level, in BFS order
  std::vector<std::vector<int>> trans_idx_;        // point -> transversal slot
  std::vector<std::vector<Perm>> trans_;           // per level, by slot

  void rebuild_level(size_t l);
  Perm sift(Perm p, size_t from, size_t* stuck) const;
  void schreier_sims();
  void append_base_point(const std::vector<Perm>& gens);
};

// The full Weyl group acting on the 2N signed roots.
PermutationGroup weyl_group(const RootSystem& sys);

// Subgroup generated by the simple reflections at the given nodes (1-based).
PermutationGroup parabolic(const RootSystem& sys, const std::vector<int>& nodes);

// Nodes whose simple root is orthogonal to every root in X (root indices).
std::vector<int> centralizer_nodes(const RootSystem& sys,
                                   const std::vector<int>& X);

struct TypeLabel {
  Family family;
  int rank;
  std::string str() const;
  bool operator==(const TypeLabel&) const = default;
};

// Connected components of the induced subdiagram on `nodes`, classified and
// sorted by (family letter, rank); throws TheoremViolation on a non-ADE shape.
std::vector<TypeLabel> identify_components(const DiagramSpec& spec,
                                           const std::vector<int>& nodes);

Int standard_order(const TypeLabel& t);  // A: (k+1)!, D: 2^(k-1) k!, E: table

// |W| / orbit_size, with exact divisibility enforced.
Int stabilizer_order(const Int& group_order, const Int& orbit_size);

}  // namespace brade
