#pragma once

/* The classical Brauer diagram algebra on m strands over Z[delta, delta^-1]:
   perfect-matching diagrams with loop-counting composition, the generator
   images, products of commuting cup-cap idempotents, the layer cell
   structure with Gram matrices over group algebras of free-point
   permutations, and the semisimplicity queries built on those forms. */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brade/admissible.hpp"
#include "brade/coxgroup.hpp"
#include "brade/laurent.hpp"

#include <map>

namespace brade {

/* Perfect matching on the 2m boundary points of a rectangle: 0..m-1 run
   left to right along the top edge, m..2m-1 along the bottom. */
class BrauerDiagram {
 public:
  static BrauerDiagram identity(int m);
  static BrauerDiagram from_pairs(int m,
                                  const std::vector<std::pair<int, int>>& ps);

  int strands() const { return m_; }
  int partner(int p) const { return pair_.at(p); }
  const std::vector<int>& pairing() const { return pair_; }

  bool operator==(const BrauerDiagram& o) const { return pair_ == o.pair_; }
  bool operator!=(const BrauerDiagram& o) const { return pair_ != o.pair_; }
  bool operator<(const BrauerDiagram& o) const { return pair_ < o.pair_; }

  /* *this stacked above other; middle points cancel and closed circles
     are counted separately. */
  std::pair<BrauerDiagram, int> compose(const BrauerDiagram& other) const;

  std::string str() const;  // pairs like "1-2 1'-2'", bottom points primed

 private:
  int m_ = 0;
  std::vector<int> pair_;
};

std::vector<BrauerDiagram> all_diagrams(int m);
Int double_factorial_odd(int m);  // (2m - 1)!!, the diagram count

/* A formal Z[delta, delta^-1] combination of diagrams on a fixed strand
   count.  Zero keeps the strand count and an empty term map. */
struct AlgebraElement {
  int strands = 0;
  std::map<BrauerDiagram, LaurentPoly> terms;  // no zero coefficients kept

  bool operator==(const AlgebraElement& o) const {
    return strands == o.strands && terms == o.terms;
  }
};

AlgebraElement algebra_zero(int m);
AlgebraElement algebra_one(int m);
AlgebraElement gen_R(int i, int m);  // crossing of strands i, i+1, 1-based
AlgebraElement gen_E(int i, int m);  // cup-cap on strands i, i+1

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const LaurentPoly& c, const AlgebraElement& a);
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

/* The product of the commuting idempotent lifts E_beta over beta in X,
   with X mutually orthogonal in a type A system on strands-1 nodes.  Each
   factor is assembled from a witness word as a genuine algebra product. */
AlgebraElement e_B(const RootSystem& sys, const RootSet& X);

/* t disjoint arcs on m points; the m - 2t uncovered points are free and
   always listed ascending. */
struct HalfDiagram {
  int strands = 0;
  std::vector<std::pair<int, int>> arcs;  // each (a, b) with a < b, sorted

  std::vector<int> free_points() const;

  bool operator==(const HalfDiagram& o) const {
    return strands == o.strands && arcs == o.arcs;
  }
  bool operator<(const HalfDiagram& o) const { return arcs < o.arcs; }
};

std::vector<HalfDiagram> all_half_diagrams(int m, int t);

/* Elements of the group algebra of permutations of the free points, with
   Laurent polynomial coefficients. */
using GroupAlgebraElt = std::map<Perm, LaurentPoly>;

struct CellDatum {
  int m = 0;
  int t = 0;
  std::vector<HalfDiagram> basis;
  std::vector<std::vector<GroupAlgebraElt>> gram;
  std::vector<std::vector<LaurentPoly>> scalar_gram;  // left regular blow-up
  LaurentPoly det;
};

/* The layer form: gram(h, h') glues the two half diagrams along their
   points; closed circles contribute delta each, through paths the induced
   permutation of free points, and any gluing that closes extra arcs falls
   to a deeper layer and contributes zero.  Desk bound m <= 6. */
CellDatum cell_gram(int m, int t);
LaurentPoly gram_det(int m, int t);

struct CellValue {
  int t = 0;
  Rat value;  // the layer determinant evaluated at the query point
};

struct SemisimpleVerdict {
  int m = 0;
  Rat x;
  bool semisimple = false;  // every layer form is non-singular at x
  std::vector<CellValue> cells;
  std::vector<int> vanishing;  // the t with value 0
};

SemisimpleVerdict semisimple_at(int m, const Rat& x);

// {i | 4-2n <= i <= n-2} minus the odd i with 4-2n <= i <= 3-n, ascending.
std::vector<int> z_set(int n);

/* One-directional non-semisimplicity criteria for the type D algebra at
   delta = x: in characteristic zero the algebra is not semisimple when
   x^2 lies in z_set(n) with x nonzero, or x = 0 with n outside {1,3,5};
   in characteristic e both clauses additionally need e not dividing n!.
   When no clause fires the report says so without claiming the converse. */
struct DnVerdict {
  int n = 0;
  Rat x;
  std::optional<int> char_e;
  bool not_semisimple = false;
  std::string reason;
};

DnVerdict d_semisimplicity_report(int n, const Rat& x,
                                  std::optional<int> char_e = std::nullopt);

/* The type D middle layer reuses the type A forms with delta replaced by
   delta^2; this is exactly that substitution applied to gram_det(n, t). */
LaurentPoly lambda2_gram_D(int n, int t);

}  // namespace brade
