#include "brade/coxgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace brade {

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = i;
  return r;
}

namespace {

bool is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != (int)i) return false;
  return true;
}

}  // namespace

void PermutationGroup::append_base_point(const std::vector<Perm>& gens) {
  // Greedy base choice: among moved points, take the one with the largest
  // orbit under the generators that will sit at this level.
  std::vector<char> seen(degree_, 0);
  int best = -1;
  long best_len = 0;
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    bool moved = false;
    for (const Perm& g : gens)
      if (g[p] != p) { moved = true; break; }
    if (!moved) continue;
    std::vector<int> orb = {p};
    seen[p] = 1;
    for (size_t k = 0; k < orb.size(); ++k)
      for (const Perm& g : gens) {
        int q = g[orb[k]];
        if (!seen[q]) { seen[q] = 1; orb.push_back(q); }
      }
    if ((long)orb.size() > best_len) { best_len = (long)orb.size(); best = p; }
  }
  if (best < 0) best = 0;  // all generators trivial; degenerate level
  base_.push_back(best);
  gens_.push_back({});
  orbit_.push_back({});
  trans_idx_.push_back(std::vector<int>(degree_, -1));
  trans_.push_back({});
}

void PermutationGroup::rebuild_level(size_t l) {
  // The group at level l is generated by the entries stored at every level
  // >= l (an element stored at level m fixes the first m base points, hence
  // lies in all shallower stabilizers).  Extend-only: existing transversal
  // entries are never replaced, so an element that once sifted to the
  // identity keeps doing so.
  if (orbit_[l].empty()) {
    int b = base_[l];
    orbit_[l].push_back(b);
    trans_idx_[l][b] = 0;
    trans_[l].push_back(perm_identity(degree_));
  }
  for (size_t k = 0; k < orbit_[l].size(); ++k) {
    int x = orbit_[l][k];
    for (size_t m = l; m < gens_.size(); ++m)
      for (const Perm& g : gens_[m]) {
        int y = g[x];
        if (trans_idx_[l][y] < 0) {
          trans_idx_[l][y] = (int)orbit_[l].size();
          orbit_[l].push_back(y);
          trans_[l].push_back(perm_mul(g, trans_[l][k]));
        }
      }
  }
}

Perm PermutationGroup::sift(Perm p, size_t from, size_t* stuck) const {
  for (size_t l = from; l < base_.size(); ++l) {
    int x = p[base_[l]];
    int slot = trans_idx_[l][x];
    if (slot < 0) {
      if (stuck) *stuck = l;
      return p;
    }
    p = perm_mul(perm_inv(trans_[l][slot]), p);
  }
  if (stuck) *stuck = base_.size();
  return p;
}

void PermutationGroup::schreier_sims() {
  // Bottom-up verification: a level is scanned only when every deeper level
  // is already verified, so sifting a Schreier generator through the deeper
  // levels gives an honest membership test.  A nonzero residue becomes a new
  // strong generator at the level where sifting got stuck; verification then
  // resumes from that level.  Index-based access throughout: appending a
  // base level reallocates the per-level containers, so references held
  // across a placement would dangle.
  if (base_.empty()) return;
  size_t i = base_.size() - 1;
  while (true) {
    rebuild_level(i);
    bool placed = false;
    size_t placed_at = 0;
    for (size_t k = 0; k < orbit_[i].size() && !placed; ++k) {
      int x = orbit_[i][k];
      for (size_t m = i; m < gens_.size() && !placed; ++m) {
        for (size_t gi = 0; gi < gens_[m].size() && !placed; ++gi) {
          Perm g = gens_[m][gi];
          int slot = trans_idx_[i][g[x]];
          Perm schreier = perm_mul(perm_inv(trans_[i][slot]),
                                   perm_mul(g, trans_[i][k]));
          size_t stuck = 0;
          Perm res = sift(std::move(schreier), i + 1, &stuck);
          if (is_identity(res)) continue;
          if (stuck == base_.size()) append_base_point({res});
          gens_[stuck].push_back(std::move(res));
          placed = true;
          placed_at = stuck;
        }
      }
    }
    if (placed) {
      i = placed_at;
    } else if (i == 0) {
      break;
    } else {
      --i;
    }
  }
}

PermutationGroup PermutationGroup::generated_by(std::vector<Perm> gens,
                                                int degree) {
  PermutationGroup g;
  g.degree_ = degree;
  for (const Perm& p : gens)
    if ((int)p.size() != degree)
      throw std::invalid_argument("generator degree mismatch");
  std::vector<Perm> nontrivial;
  for (Perm& p : gens)
    if (!is_identity(p)) nontrivial.push_back(std::move(p));
  if (!nontrivial.empty()) {
    g.append_base_point(nontrivial);
    g.gens_[0] = nontrivial;
    // later levels receive their generators as sift residues
    g.schreier_sims();
  }
  g.order_ = 1;
  for (size_t l = 0; l < g.base_.size(); ++l) g.order_ *= (long)g.orbit_[l].size();
  return g;
}

bool PermutationGroup::contains(const Perm& p) const {
  if ((int)p.size() != degree_) return false;
  if (base_.empty()) return is_identity(p);
  return is_identity(sift(p, 0, nullptr));
}

namespace {

Perm simple_reflection_perm(const RootSystem& sys, int node) {
  int N = sys.count();
  Perm p(2 * N);
  for (int s = 0; s < 2 * N; ++s) p[s] = sys.reflect_simple(node, s);
  return p;
}

}  // namespace

PermutationGroup weyl_group(const RootSystem& sys) {
  std::vector<Perm> gens;
  for (int i = 1; i <= sys.rank(); ++i)
    gens.push_back(simple_reflection_perm(sys, i));
  return PermutationGroup::generated_by(std::move(gens), 2 * sys.count());
}

PermutationGroup parabolic(const RootSystem& sys, const std::vector<int>& nodes) {
  std::vector<Perm> gens;
  for (int i : nodes) {
    if (i < 1 || i > sys.rank())
      throw std::invalid_argument("node out of range");
    gens.push_back(simple_reflection_perm(sys, i));
  }
  return PermutationGroup::generated_by(std::move(gens), 2 * sys.count());
}

std::vector<int> centralizer_nodes(const RootSystem& sys,
                                   const std::vector<int>& X) {
  std::vector<int> nodes;
  for (int i = 1; i <= sys.rank(); ++i) {
    bool perp = true;
    for (int r : X)
      if (sys.inner(sys.simple(i), r) != 0) { perp = false; break; }
    if (perp) nodes.push_back(i);
  }
  return nodes;
}

std::string TypeLabel::str() const {
  char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return f + std::to_string(rank);
}

std::vector<TypeLabel> identify_components(const DiagramSpec& spec,
                                           const std::vector<int>& nodes) {
  std::set<int> in(nodes.begin(), nodes.end());
  for (int i : in)
    if (i < 1 || i > spec.rank)
      throw std::invalid_argument("node out of range");

  std::vector<TypeLabel> out;
  std::set<int> todo = in;
  while (!todo.empty()) {
    // collect one component
    std::vector<int> comp = {*todo.begin()};
    todo.erase(todo.begin());
    for (size_t k = 0; k < comp.size(); ++k)
      for (auto it = todo.begin(); it != todo.end();)
        if (spec.adjacent(comp[k], *it)) {
          comp.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }

    auto degree = [&](int v) {
      int d = 0;
      for (int w : comp)
        if (spec.adjacent(v, w)) ++d;
      return d;
    };
    int branch = -1, nbranch = 0;
    for (int v : comp) {
      int d = degree(v);
      if (d > 3) throw TheoremViolation("node of degree > 3 in subdiagram");
      if (d == 3) { branch = v; ++nbranch; }
    }
    if (nbranch > 1) throw TheoremViolation("two branch nodes in subdiagram");

    TypeLabel label{Family::A, (int)comp.size()};
    if (nbranch == 1) {
      // leg lengths from the branch node determine D vs E
      std::vector<int> legs;
      for (int v : comp)
        if (v != branch && spec.adjacent(v, branch)) {
          int len = 1, prev = branch, cur = v;
          while (true) {
            int next = -1;
            for (int w : comp)
              if (w != prev && spec.adjacent(cur, w)) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
          }
          legs.push_back(len);
        }
      std::sort(legs.begin(), legs.end());
      if (legs.size() != 3) throw TheoremViolation("malformed branch");
      if (legs[0] == 1 && legs[1] == 1)
        label = {Family::D, legs[2] + 3};
      else if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
        label = {Family::E, legs[2] + 4};
      else
        throw TheoremViolation("subdiagram is not of ADE shape");
    } else {
      // must be a path: exactly two endpoints unless a single node
      int ends = 0;
      for (int v : comp)
        if (degree(v) <= 1) ++ends;
      if (comp.size() > 1 && ends != 2)
        throw TheoremViolation("subdiagram component is not a path");
    }
    out.push_back(label);
  }
  std::sort(out.begin(), out.end(), [](const TypeLabel& a, const TypeLabel& b) {
    if (a.family != b.family) return (int)a.family < (int)b.family;
    return a.rank < b.rank;
  });
  return out;
}

Int standard_order(const TypeLabel& t) {
  Int r = 1;
  switch (t.family) {
    case Family::A:
      for (int k = 2; k <= t.rank + 1; ++k) r *= k;
      return r;
    case Family::D:
      for (int k = 2; k <= t.rank; ++k) r *= k;
      for (int k = 1; k < t.rank; ++k) r *= 2;
      return r;
    case Family::E:
      if (t.rank == 6) return 51840;
      if (t.rank == 7) return 2903040;
      return 696729600;
  }
  throw std::logic_error("unreachable");
}

Int stabilizer_order(const Int& group_order, const Int& orbit_size) {
  if (orbit_size == 0 || group_order % orbit_size != 0)
    throw TheoremViolation("orbit size does not divide the group order");
  return group_order / orbit_size;
}

}  // namespace brade
