#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brade/admissible.hpp"
#include "brade/coxgroup.hpp"
#include "brade/laurent.hpp"

/* Morita-style block data for the generic algebras.  Each R-orbit of
   admissible sets contributes one block; the block's group is the Weyl
   group of the centralizer taken at the orbit's unique maximal member.
   The Brauer and BMW variants share all numerics and differ only in the
   descriptor attached to the block (group algebra versus Hecke algebra
   of the same type). */

namespace brade {

enum class AlgebraKind { Brauer, BMW };

struct MoritaBlock {
  int orbit_id = 0;                        // position in enumerate_all_orbits
  RootSet representative;
  long orbit_size = 0;                     // |B|, the orbit cardinality
  RootSet maximal_element;                 // the unique poset-maximal member
  std::vector<int> centralizer;            // nodes orthogonal to the maximum
  std::vector<TypeLabel> centralizer_types;
  Int group_order;                         // |W(C)| for that node set
  std::string algebra_descriptor;          // "group-algebra" or "hecke-algebra"

  Int contribution() const;                // |B|^2 * |W(C)|
};

// One block per orbit, in enumerate_all_orbits order.  E8 sits behind the
// same opt-in flag as the enumerator.
std::vector<MoritaBlock> blocks(const RootSystem& sys, AlgebraKind kind,
                                bool opt_in_e8 = false);

struct RankReport {
  std::vector<MoritaBlock> blocks;
  Int total;                        // sum of block contributions
  std::optional<Int> oracle_total;  // family A only: (2m - 1)!! for m = n + 1
  bool match = true;                // total == oracle whenever one exists
};

// Sums the block contributions and, for family A, insists the total equals
// the Brauer diagram count; a mismatch is a hard error.
RankReport rank_check(const RootSystem& sys, bool opt_in_e8 = false);

struct WedderburnBlock {
  int orbit_id = 0;
  bool sizes_available = false;  // true when every centralizer part is type A
  std::vector<Int> sizes;        // |B| * dim(tau), tau over W(C) irreducibles
  Int sum_squares;               // |B|^2 * |W(C)| in every case
};

// Matrix block sizes per orbit.  For a centralizer whose components are all
// of family A the sizes come from hook lengths, and their squares are checked
// to sum to |B|^2 * |W(C)|; other centralizers report sizes unavailable.
std::vector<WedderburnBlock> wedderburn_sizes(const RootSystem& sys,
                                              bool opt_in_e8 = false);

// All partitions of k, parts descending, in reverse lexicographic order.
std::vector<std::vector<int>> partitions(int k);

// Dimension of the symmetric group irreducible for the partition, by the
// hook length formula.
Int hook_dim(const std::vector<int>& lam);

/* Cell poset for type D_n.  Labels are t (plain) or (t, theta); smaller t
   sits higher, and a plain t dominates (s, theta) exactly when t <= s.  The
   stored edges are the drawn diagram: the plain chain, the drops t -> (t,
   theta) together with 0 -> (1, theta), and the theta chain; reachability
   along them reproduces the order relation. */

struct CellLabel {
  int t = 0;
  bool theta = false;
  std::string str() const;  // "2" or "(2,theta)"
  bool operator==(const CellLabel&) const = default;
};

struct CellPosetD {
  int n = 0;
  std::vector<CellLabel> lambda1;  // t = 0 .. floor(n/2)
  std::vector<CellLabel> lambda2;  // (t, theta), t = 1 .. floor((n+1)/2)
  std::vector<std::pair<CellLabel, CellLabel>> hasse_edges;  // higher first

  std::vector<CellLabel> elements() const;    // lambda1 then lambda2
  bool greater(CellLabel a, CellLabel b) const;
};

CellPosetD cell_poset_D(int n);  // n >= 4

struct QuasiHereditaryReport {
  int m = 0;
  std::optional<Rat> x;              // empty means generic delta
  bool quasi_hereditary = false;     // every layer determinant nonzero
  std::vector<std::pair<int, LaurentPoly>> generic_dets;  // t -> det(m, t)
  std::vector<std::pair<int, Rat>> values;                // t -> det at x
  std::vector<int> failing;                               // offending t
};

// Layer determinant survey for the type A algebra on m points: generically
// when x is absent, or specialised at delta = x.
QuasiHereditaryReport quasi_hereditary_report(int m,
                                              std::optional<Rat> x = {});

// Characteristics the block decomposition avoids: none for family A, 2 for
// D, {2, 3} for E6 and E7, {2, 3, 5} for E8.  p is 0 or a prime.
bool char_condition(const DiagramSpec& spec, int p);

}  // namespace brade
