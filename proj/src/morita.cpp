#include "brade/morita.hpp"

#include <algorithm>
#include <stdexcept>

#include "brade/diagA.hpp"

namespace brade {

Int MoritaBlock::contribution() const {
  Int b(orbit_size);
  return b * b * group_order;
}

std::vector<MoritaBlock> blocks(const RootSystem& sys, AlgebraKind kind,
                                bool opt_in_e8) {
  const char* descriptor =
      kind == AlgebraKind::BMW ? "hecke-algebra" : "group-algebra";
  std::vector<MoritaBlock> out;
  auto orbits = enumerate_all_orbits(sys, opt_in_e8);
  for (size_t id = 0; id < orbits.size(); ++id) {
    const AdmissibleOrbit& orbit = orbits[id];
    MoritaBlock blk;
    blk.orbit_id = (int)id;
    blk.representative = orbit.representative;
    blk.orbit_size = orbit.orbit_size();
    blk.maximal_element = orbit.members[orbit.maximal];
    blk.centralizer = centralizer_nodes(sys, blk.maximal_element);
    blk.centralizer_types = identify_components(sys.spec(), blk.centralizer);
    blk.group_order = parabolic(sys, blk.centralizer).order();
    blk.algebra_descriptor = descriptor;
    out.push_back(std::move(blk));
  }
  return out;
}

RankReport rank_check(const RootSystem& sys, bool opt_in_e8) {
  RankReport rep;
  rep.blocks = blocks(sys, AlgebraKind::Brauer, opt_in_e8);
  rep.total = 0;
  for (const MoritaBlock& blk : rep.blocks) rep.total += blk.contribution();
  if (sys.spec().family == Family::A)
    rep.oracle_total = double_factorial_odd(sys.rank() + 1);
  rep.match = !rep.oracle_total || rep.total == *rep.oracle_total;
  if (!rep.match)
    throw TheoremViolation("block contributions miss the diagram count");
  return rep;
}

std::vector<std::vector<int>> partitions(int k) {
  if (k < 0) throw std::invalid_argument("partitions need k >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Parts descend; choosing the largest first part first gives reverse
  // lexicographic order.
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

Int hook_dim(const std::vector<int>& lam) {
  int k = 0;
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] <= 0) throw std::invalid_argument("partition parts are positive");
    if (i + 1 < lam.size() && lam[i] < lam[i + 1])
      throw std::invalid_argument("partition parts must descend");
    k += lam[i];
  }
  Int hooks = 1;
  for (size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      int col = 0;  // cells below (i, j) in the same column
      for (size_t r = i + 1; r < lam.size() && lam[r] > j; ++r) ++col;
      hooks *= lam[i] - j + col;
    }
  Int fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  if (fact % hooks != 0)
    throw TheoremViolation("hook product does not divide the factorial");
  return fact / hooks;
}

std::vector<WedderburnBlock> wedderburn_sizes(const RootSystem& sys,
                                              bool opt_in_e8) {
  std::vector<WedderburnBlock> out;
  for (const MoritaBlock& blk : blocks(sys, AlgebraKind::Brauer, opt_in_e8)) {
    WedderburnBlock w;
    w.orbit_id = blk.orbit_id;
    w.sum_squares = blk.contribution();
    w.sizes_available =
        std::all_of(blk.centralizer_types.begin(), blk.centralizer_types.end(),
                    [](const TypeLabel& t) { return t.family == Family::A; });
    if (w.sizes_available) {
      // W(C) is a product of symmetric groups S_(k+1), one per component;
      // its irreducibles are tuples of partitions with product dimensions.
      std::vector<Int> dims{1};
      for (const TypeLabel& t : blk.centralizer_types) {
        std::vector<Int> part_dims;
        for (const auto& lam : partitions(t.rank + 1))
          part_dims.push_back(hook_dim(lam));
        std::vector<Int> next;
        for (const Int& d : dims)
          for (const Int& p : part_dims) next.push_back(d * p);
        dims = std::move(next);
      }
      Int burnside = 0;
      for (const Int& d : dims) {
        burnside += d * d;
        w.sizes.push_back(Int(blk.orbit_size) * d);
      }
      if (burnside != blk.group_order)
        throw TheoremViolation("squared dimensions miss the group order");
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string CellLabel::str() const {
  std::string s = std::to_string(t);
  return theta ? "(" + s + ",theta)" : s;
}

std::vector<CellLabel> CellPosetD::elements() const {
  std::vector<CellLabel> out = lambda1;
  out.insert(out.end(), lambda2.begin(), lambda2.end());
  return out;
}

bool CellPosetD::greater(CellLabel a, CellLabel b) const {
  if (!a.theta && !b.theta) return a.t < b.t;
  if (a.theta && b.theta) return a.t < b.t;
  if (!a.theta && b.theta) return a.t <= b.t;
  return false;  // a theta label never dominates a plain one
}

CellPosetD cell_poset_D(int n) {
  if (n < 4) throw std::invalid_argument("the cell poset needs rank >= 4");
  CellPosetD pos;
  pos.n = n;
  int top = n / 2, bottom = (n + 1) / 2;
  for (int t = 0; t <= top; ++t) pos.lambda1.push_back({t, false});
  for (int t = 1; t <= bottom; ++t) pos.lambda2.push_back({t, true});
  for (int t = 0; t < top; ++t)
    pos.hasse_edges.push_back({{t, false}, {t + 1, false}});
  pos.hasse_edges.push_back({{0, false}, {1, true}});
  for (int t = 1; t <= top; ++t)
    pos.hasse_edges.push_back({{t, false}, {t, true}});
  for (int t = 1; t < bottom; ++t)
    pos.hasse_edges.push_back({{t, true}, {t + 1, true}});

  // The drawn edges must reproduce the order: a > b exactly when a directed
  // path leads from a to b.
  auto all = pos.elements();
  for (const CellLabel& a : all) {
    std::vector<CellLabel> reach{a};
    for (size_t k = 0; k < reach.size(); ++k)
      for (const auto& e : pos.hasse_edges)
        if (e.first == reach[k] &&
            std::find(reach.begin(), reach.end(), e.second) == reach.end())
          reach.push_back(e.second);
    for (const CellLabel& b : all) {
      bool path = !(b == a) &&
                  std::find(reach.begin(), reach.end(), b) != reach.end();
      if (path != pos.greater(a, b))
        throw TheoremViolation("cell poset edges disagree with the order");
    }
  }
  return pos;
}

QuasiHereditaryReport quasi_hereditary_report(int m, std::optional<Rat> x) {
  if (m < 1 || m > 6)
    throw std::invalid_argument("cell forms are bounded to 6 strands");
  QuasiHereditaryReport rep;
  rep.m = m;
  rep.x = x;
  if (!x) {
    for (int t = 0; 2 * t <= m; ++t) {
      LaurentPoly d = gram_det(m, t);
      if (d.is_zero()) rep.failing.push_back(t);
      rep.generic_dets.push_back({t, std::move(d)});
    }
  } else {
    SemisimpleVerdict v = semisimple_at(m, *x);
    rep.x = v.x;
    for (const CellValue& c : v.cells) rep.values.push_back({c.t, c.value});
    rep.failing = v.vanishing;
  }
  rep.quasi_hereditary = rep.failing.empty();
  return rep;
}

bool char_condition(const DiagramSpec& spec, int p) {
  auto is_prime = [](int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) return false;
    return true;
  };
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("characteristic must be zero or a prime");
  switch (spec.family) {
    case Family::A:
      return true;
    case Family::D:
      return p != 2;
    case Family::E:
      if (p == 2 || p == 3) return false;
      return spec.rank != 8 || p != 5;
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace brade
