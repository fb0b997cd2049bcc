#pragma once

/* The Brauer monoid acting on admissible root sets.  R_i acts through the
   simple reflection, E_i through a three way case split: absorb when
   alpha_i is already present, grow by closure when alpha_i is orthogonal
   to the set, otherwise deflect through a non-orthogonal member.  The
   conjugate generators R_beta, E_beta for an arbitrary positive root beta
   are realized by witness words beta = w alpha_i, found once per diagram
   by breadth-first search and then reused.  Products carry no delta
   bookkeeping here: delta acts as the identity at this level. */

#include <string>
#include <vector>

#include "brade/admissible.hpp"

namespace brade {

enum class GenKind { R, E };

struct GeneratorSymbol {
  GenKind kind = GenKind::R;
  int node = 1;  // 1-based diagram node

  bool operator==(const GeneratorSymbol& o) const {
    return kind == o.kind && node == o.node;
  }
};

/* Words list the leftmost factor first, so "R1 E2" is the product R_1 E_2
   and the rightmost factor acts first, as in function composition. */
using MonoidWord = std::vector<GeneratorSymbol>;

MonoidWord parse_word(const std::string& text, int rank);

RootSet act(const RootSystem& sys, GeneratorSymbol g, const RootSet& B);
RootSet act_word(const RootSystem& sys, const MonoidWord& w, const RootSet& B);

/* beta = w alpha_{node}; the word lists the nodes of w's simple
   reflections leftmost first, so the rightmost entry hits alpha_{node}
   first. */
struct Witness {
  int node = 1;
  std::vector<int> word;
};

const Witness& witness_for(const RootSystem& sys, int beta);

// R_beta B and E_beta B computed as w R_i w^{-1} B and w E_i w^{-1} B.
RootSet conjugate_action(const RootSystem& sys, int beta, GenKind kind,
                         const RootSet& B);

struct RelationReport {
  std::string label;  // the identity checked, e.g. "R_i R_i = 1"
  bool holds = true;
  int i = 0;  // witness nodes when the identity fails; j = 0 for unary laws
  int j = 0;
  RootSet counterexample;
};

/* Sweeps every defining relation of the monoid over the whole action
   domain of the given diagram.  Failures are report content, never
   exceptions. */
std::vector<RelationReport> check_relations(const RootSystem& sys,
                                            bool opt_in_e8 = false);
bool all_hold(const std::vector<RelationReport>& reports);

}  // namespace brade
