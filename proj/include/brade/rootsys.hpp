#pragma once

/* Simply laced (ADE) root systems, realized as integer coefficient vectors
   over the simple roots.  The bilinear form is the one with (a,a) = 2 on
   simple roots and (a,b) = -1 exactly on diagram edges.  Positive roots are
   kept in a fixed canonical order: height ascending, ties broken
   lexicographically on the coefficient vector; every index-based API below
   refers to that order.

   Signed indices: a value s in [0, 2N) denotes +positive[s] for s < N and
   -positive[s - N] otherwise.  Reflections act on signed indices so that
   permutation-group code can run on the full root set. */

#include <string>
#include <vector>

#include "brade/laurent.hpp"

namespace brade {

enum class Family { A, D, E };

struct DiagramSpec {
  Family family;
  int rank;

  static DiagramSpec parse(const std::string& s);  // "A2", "D4", "E6", ...
  std::string str() const;

  bool adjacent(int i, int j) const;                // nodes are 1-based
  std::vector<std::pair<int, int>> edges() const;   // i < j, sorted
};

using Coeffs = std::vector<int>;

class RootSystem {
public:
  static RootSystem build(const DiagramSpec& spec);

  const DiagramSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  int count() const { return (int)positive_.size(); }

  const std::vector<Coeffs>& positive() const { return positive_; }
  const Coeffs& root(int r) const { return positive_.at(r); }
  int simple(int i) const;                 // index of alpha_i, i 1-based
  int height(int r) const { return height_.at(r); }
  int highest() const { return highest_; }

  int index_of(const Coeffs& c) const;     // positive roots only; -1 if absent
  int signed_index(const Coeffs& c) const; // either sign; -1 if not a root

  int inner(int a, int b) const { return dots_[a][b]; }  // positive indices
  int inner(const Coeffs& a, const Coeffs& b) const;

  // signed -> signed
  int reflect_simple(int i, int s) const { return refl_[i - 1][s]; }
  int reflect_by(int gamma, int s) const;

  // Type D only: the epsilon-coordinate involution e_j +- e_i -> e_j -+ e_i
  // on positive roots.
  int star(int r) const;
  std::vector<int> to_eps(int r) const;    // type D only, length = rank

private:
  DiagramSpec spec_{Family::A, 1};
  std::vector<Coeffs> positive_;
  std::vector<int> height_;
  std::vector<int> simple_idx_;            // [node-1] -> root index
  int highest_ = -1;
  std::vector<std::vector<int>> gram_;     // rank x rank form matrix
  std::vector<std::vector<signed char>> dots_;
  std::vector<std::vector<int>> refl_;     // [node-1][signed] -> signed
  std::vector<int> star_;                  // type D; else empty

  Coeffs reflect_coeffs(int node, const Coeffs& c) const;
  int lookup_signed(const Coeffs& c) const;
  std::vector<int> to_eps_impl(int r) const;
};

}  // namespace brade
