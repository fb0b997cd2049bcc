#pragma once

/* Sets of mutually orthogonal positive roots: admissibility (two equivalent
   definitions), admissible closure, Weyl-group orbits, and the monoidal
   poset on each orbit with its unique maximal element.  A root set is a
   strictly ascending vector of positive-root indices; the canonical root
   order sorts by height first, so index order doubles as the height order
   the covering moves refer to. */

#include <map>
#include <utility>
#include <vector>

#include "brade/rootsys.hpp"

namespace brade {

using RootSet = std::vector<int>;  // distinct positive root indices, ascending

bool mutually_orthogonal(const RootSystem& sys, const RootSet& B);

// Simple reflection r_i, images normalized back into the positive roots.
RootSet r_action(const RootSystem& sys, int node, const RootSet& B);

// Reflection in an arbitrary positive root, normalized the same way.
RootSet reflect_set(const RootSystem& sys, int gamma, const RootSet& B);

// Temperley-Lieb generator at the action level: alpha_i in B fixes B, an
// orthogonal alpha_i is adjoined and closed, otherwise R_beta R_i B for the
// lowest beta in B not orthogonal to alpha_i (the choice does not matter,
// which the tests verify).
RootSet e_action(const RootSystem& sys, int node, const RootSet& B);

// Word of simple-reflection nodes, rightmost symbol acting first.
RootSet w_action(const RootSystem& sys, const std::vector<int>& word,
                 const RootSet& B);

// Least admissible superset: adjoin 2g + a + b + c over triples a, b, c in
// the current set and roots g of either sign meeting all three in -1, until
// nothing new appears.
RootSet closure(const RootSystem& sys, const RootSet& X);

enum class AdmissibleVariant { OrbitLocal, ClosureRule };

// Non-orthogonal sets are never admissible.  OrbitLocal quantifies over the
// whole Weyl orbit; checking the defining condition at a single member is
// genuinely weaker (a rank-4 counterexample lives in the tests).
bool is_admissible(const RootSystem& sys, const RootSet& B,
                   AdmissibleVariant v);

struct AdmissibleOrbit {
  RootSet representative;             // members[0], the lexicographic minimum
  std::vector<RootSet> members;       // sorted lexicographically
  std::vector<std::vector<int>> action_edges;    // [member][node-1] -> member
  std::vector<std::pair<int, int>> cover_edges;  // (lower, upper), deduped
  int maximal = -1;                   // index into members
  long orbit_size() const { return (long)members.size(); }
};

// Breadth-first closure of the seed under all R_i; rejects seeds that are
// not admissible.  Does not fill the poset fields.
AdmissibleOrbit enumerate_orbit(const RootSystem& sys, const RootSet& seed);

// Covering moves: when R_iB != B, look at the moved roots of minimal height.
// A descending witness there (beta - alpha_i positive) lowers B; if every
// minimal-height moved root ascends, R_i raises B.  Fills cover_edges and
// maximal; a cycle among the covers or more than one maximal member is a
// hard error.
void build_poset(const RootSystem& sys, AdmissibleOrbit& orbit);

// Everything reachable from the empty set under all E_i and R_i, with the
// image of every generator on every reached set.
struct ActionTables {
  std::vector<RootSet> sets;            // discovery order from the empty set
  std::map<RootSet, int> index;
  std::vector<std::vector<int>> r_img;  // [node-1][set] -> set
  std::vector<std::vector<int>> e_img;
};

// Rank guard: A and D up to rank 8 and E_6/E_7 run unconditionally; E_8 asks
// for the opt-in flag.
ActionTables enumerate_action_tables(const RootSystem& sys,
                                     bool opt_in_e8 = false);

// The reached sets partitioned into R-orbits, each with its poset built,
// ordered by (representative size, representative).
std::vector<AdmissibleOrbit> enumerate_all_orbits(const RootSystem& sys,
                                                  bool opt_in_e8 = false);

// Classical representative families, used by tests as cross-checks only;
// enumeration never trusts them.
RootSet rep_A(const RootSystem& sys, int t);        // {alpha_1, alpha_3, ...}
RootSet rep_D_bare(const RootSystem& sys, int t);   // Y(t), descending simples
RootSet rep_D_frame(const RootSystem& sys, int t);  // Y(t) with its stars
RootSet rep_D_even_extra(const RootSystem& sys);    // alpha_1 variant, n even
std::vector<RootSet> classical_representatives(const RootSystem& sys);

}  // namespace brade
