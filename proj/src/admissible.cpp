#include "brade/admissible.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace brade {

bool mutually_orthogonal(const RootSystem& sys, const RootSet& B) {
  for (size_t a = 0; a < B.size(); ++a)
    for (size_t b = a + 1; b < B.size(); ++b)
      if (sys.inner(B[a], B[b]) != 0) return false;
  return true;
}

namespace {

void check_set(const RootSystem& sys, const RootSet& B) {
  for (size_t k = 0; k < B.size(); ++k) {
    if (B[k] < 0 || B[k] >= sys.count())
      throw std::invalid_argument("root index out of range");
    if (k > 0 && B[k] <= B[k - 1])
      throw std::invalid_argument("root set not strictly ascending");
  }
}

void check_node(const RootSystem& sys, int node) {
  if (node < 1 || node > sys.rank())
    throw std::invalid_argument("node out of range");
}

int positive_part(const RootSystem& sys, int s) {
  return s < sys.count() ? s : s - sys.count();
}

}  // namespace

RootSet r_action(const RootSystem& sys, int node, const RootSet& B) {
  check_node(sys, node);
  RootSet out;
  out.reserve(B.size());
  for (int r : B) out.push_back(positive_part(sys, sys.reflect_simple(node, r)));
  std::sort(out.begin(), out.end());
  return out;
}

RootSet reflect_set(const RootSystem& sys, int gamma, const RootSet& B) {
  RootSet out;
  out.reserve(B.size());
  for (int r : B) out.push_back(positive_part(sys, sys.reflect_by(gamma, r)));
  std::sort(out.begin(), out.end());
  return out;
}

RootSet w_action(const RootSystem& sys, const std::vector<int>& word,
                 const RootSet& B) {
  check_set(sys, B);
  RootSet cur = B;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = r_action(sys, *it, cur);
  return cur;
}

RootSet closure(const RootSystem& sys, const RootSet& X) {
  check_set(sys, X);
  if (!mutually_orthogonal(sys, X))
    throw std::invalid_argument("closure input is not mutually orthogonal");
  std::set<int> cur(X.begin(), X.end());
  // A root g of either sign meeting three members in -1 each yields the
  // norm-2 vector 2g + a + b + c (8 + 6 - 12 = 2), hence another root to
  // adjoin.  Everything in cur stays mutually orthogonal, so triples need no
  // separate orthogonality filter.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> mem(cur.begin(), cur.end());
    for (size_t ia = 0; ia < mem.size() && !grew; ++ia)
      for (size_t ib = ia + 1; ib < mem.size() && !grew; ++ib)
        for (size_t ic = ib + 1; ic < mem.size() && !grew; ++ic)
          for (int g = 0; g < sys.count() && !grew; ++g)
            for (int sign : {1, -1}) {
              if (sign * sys.inner(g, mem[ia]) != -1 ||
                  sign * sys.inner(g, mem[ib]) != -1 ||
                  sign * sys.inner(g, mem[ic]) != -1)
                continue;
              Coeffs cand = sys.root(g);
              for (int& c : cand) c *= 2 * sign;
              for (int m : {mem[ia], mem[ib], mem[ic]}) {
                const Coeffs& rm = sys.root(m);
                for (size_t k = 0; k < cand.size(); ++k) cand[k] += rm[k];
              }
              int si = sys.signed_index(cand);
              if (si < 0)
                throw TheoremViolation("closure adjunction left the root system");
              int idx = positive_part(sys, si);
              if (cur.count(idx)) continue;
              for (int m : cur)
                if (sys.inner(idx, m) != 0)
                  throw TheoremViolation("closure adjunction broke orthogonality");
              cur.insert(idx);
              grew = true;
              break;
            }
  }
  return RootSet(cur.begin(), cur.end());
}

namespace {

// The member-level condition: whenever gamma and gamma - alpha_i + alpha_j
// both lie in B for non-adjacent i != j, the reflected sets agree.
bool locally_admissible(const RootSystem& sys, const RootSet& B) {
  for (int i = 1; i <= sys.rank(); ++i)
    for (int j = 1; j <= sys.rank(); ++j) {
      if (i == j || sys.spec().adjacent(i, j)) continue;
      bool trigger = false;
      for (int r : B) {
        Coeffs c = sys.root(r);
        c[i - 1] -= 1;
        c[j - 1] += 1;
        int idx = sys.index_of(c);
        if (idx >= 0 && std::binary_search(B.begin(), B.end(), idx)) {
          trigger = true;
          break;
        }
      }
      if (trigger && r_action(sys, i, B) != r_action(sys, j, B)) return false;
    }
  return true;
}

std::vector<RootSet> weyl_orbit_of_set(const RootSystem& sys, const RootSet& B) {
  std::set<RootSet> seen = {B};
  std::vector<RootSet> queue = {B};
  while (!queue.empty()) {
    RootSet cur = std::move(queue.back());
    queue.pop_back();
    for (int i = 1; i <= sys.rank(); ++i) {
      RootSet img = r_action(sys, i, cur);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return std::vector<RootSet>(seen.begin(), seen.end());
}

}  // namespace

bool is_admissible(const RootSystem& sys, const RootSet& B,
                   AdmissibleVariant v) {
  check_set(sys, B);
  if (!mutually_orthogonal(sys, B)) return false;
  if (v == AdmissibleVariant::ClosureRule) return closure(sys, B) == B;
  for (const RootSet& member : weyl_orbit_of_set(sys, B))
    if (!locally_admissible(sys, member)) return false;
  return true;
}

RootSet e_action(const RootSystem& sys, int node, const RootSet& B) {
  check_node(sys, node);
  int ai = sys.simple(node);
  if (std::binary_search(B.begin(), B.end(), ai)) return B;
  int beta = -1;
  for (int r : B)
    if (sys.inner(ai, r) != 0) {
      beta = r;
      break;
    }
  if (beta < 0) {
    RootSet grown = B;
    grown.insert(std::lower_bound(grown.begin(), grown.end(), ai), ai);
    return closure(sys, grown);
  }
  return reflect_set(sys, beta, r_action(sys, node, B));
}

AdmissibleOrbit enumerate_orbit(const RootSystem& sys, const RootSet& seed) {
  check_set(sys, seed);
  if (!is_admissible(sys, seed, AdmissibleVariant::ClosureRule))
    throw std::invalid_argument("orbit seed is not admissible");
  AdmissibleOrbit orbit;
  std::set<RootSet> members;
  for (RootSet& m : weyl_orbit_of_set(sys, seed)) members.insert(std::move(m));
  orbit.members.assign(members.begin(), members.end());
  std::map<RootSet, int> index;
  for (size_t k = 0; k < orbit.members.size(); ++k)
    index[orbit.members[k]] = (int)k;
  orbit.representative = orbit.members.front();
  orbit.action_edges.resize(orbit.members.size(),
                            std::vector<int>(sys.rank(), -1));
  for (size_t k = 0; k < orbit.members.size(); ++k)
    for (int i = 1; i <= sys.rank(); ++i)
      orbit.action_edges[k][i - 1] = index.at(r_action(sys, i, orbit.members[k]));
  return orbit;
}

void build_poset(const RootSystem& sys, AdmissibleOrbit& orbit) {
  std::set<std::pair<int, int>> edges;
  for (size_t k = 0; k < orbit.members.size(); ++k)
    for (int i = 1; i <= sys.rank(); ++i) {
      int img = orbit.action_edges[k][i - 1];
      if (img == (int)k) continue;
      // Every moved member root steps by exactly one alpha_i, either down
      // (beta - alpha_i positive) or up (beta + alpha_i positive).  The
      // direction of the move is read off the moved roots of minimal
      // height: a descending witness there lowers B, otherwise all of them
      // ascend and R_i raises B.  Ties at minimal height can mix both
      // directions, and only this precedence keeps the order acyclic.
      std::vector<int> moved;
      for (int r : orbit.members[k])
        if (positive_part(sys, sys.reflect_simple(i, r)) != r) moved.push_back(r);
      if (moved.empty()) throw TheoremViolation("changed set with no moved root");
      int min_height = sys.height(moved.front());
      for (int r : moved) min_height = std::min(min_height, sys.height(r));
      bool lowered = false;
      for (int r : moved) {
        if (sys.height(r) != min_height) continue;
        Coeffs step = sys.root(r);
        step[i - 1] -= 1;
        if (sys.index_of(step) >= 0) {
          lowered = true;
          break;
        }
        step[i - 1] += 2;
        if (sys.index_of(step) < 0)
          throw TheoremViolation("moved root with no height step");
      }
      if (lowered)
        edges.insert({img, (int)k});  // R_i lowered B
      else
        edges.insert({(int)k, img});  // R_i raised B
    }
  orbit.cover_edges.assign(edges.begin(), edges.end());

  // Kahn's algorithm: the covers must form a DAG, else "maximal" means
  // nothing.
  std::vector<int> indeg(orbit.members.size(), 0);
  for (const auto& e : orbit.cover_edges) ++indeg[e.second];
  std::vector<int> ready;
  for (size_t k = 0; k < orbit.members.size(); ++k)
    if (indeg[k] == 0) ready.push_back((int)k);
  size_t done = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++done;
    for (const auto& e : orbit.cover_edges)
      if (e.first == v && --indeg[e.second] == 0) ready.push_back(e.second);
  }
  if (done != orbit.members.size())
    throw TheoremViolation("covering moves contain a cycle");

  std::vector<char> has_upper(orbit.members.size(), 0);
  for (const auto& e : orbit.cover_edges) has_upper[e.first] = 1;
  orbit.maximal = -1;
  for (size_t k = 0; k < orbit.members.size(); ++k) {
    if (has_upper[k]) continue;
    if (orbit.maximal >= 0)
      throw TheoremViolation("maximal element is not unique");
    orbit.maximal = (int)k;
  }
  if (orbit.maximal < 0)
    throw TheoremViolation("orbit has no maximal element");
}

ActionTables enumerate_action_tables(const RootSystem& sys, bool opt_in_e8) {
  const DiagramSpec& spec = sys.spec();
  if ((spec.family == Family::A || spec.family == Family::D) && spec.rank > 8)
    throw std::invalid_argument("enumeration is limited to rank 8");
  if (spec.family == Family::E && spec.rank == 8 && !opt_in_e8)
    throw std::invalid_argument("rank 8 exceptional enumeration is opt-in");

  ActionTables t;
  t.r_img.resize(sys.rank());
  t.e_img.resize(sys.rank());
  t.sets.push_back({});
  t.index[{}] = 0;
  for (size_t k = 0; k < t.sets.size(); ++k)
    for (int i = 1; i <= sys.rank(); ++i) {
      for (int which : {0, 1}) {
        RootSet img = which == 0 ? r_action(sys, i, t.sets[k])
                                 : e_action(sys, i, t.sets[k]);
        auto it = t.index.find(img);
        int id;
        if (it == t.index.end()) {
          id = (int)t.sets.size();
          t.index.emplace(img, id);
          t.sets.push_back(std::move(img));
        } else {
          id = it->second;
        }
        (which == 0 ? t.r_img : t.e_img)[i - 1].push_back(id);
      }
    }
  return t;
}

std::vector<AdmissibleOrbit> enumerate_all_orbits(const RootSystem& sys,
                                                  bool opt_in_e8) {
  ActionTables t = enumerate_action_tables(sys, opt_in_e8);
  std::vector<char> visited(t.sets.size(), 0);
  std::vector<AdmissibleOrbit> orbits;
  for (size_t k = 0; k < t.sets.size(); ++k) {
    if (visited[k]) continue;
    std::vector<int> queue = {(int)k};
    visited[k] = 1;
    RootSet least = t.sets[k];
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      if (t.sets[cur] < least) least = t.sets[cur];
      for (int i = 0; i < sys.rank(); ++i) {
        int img = t.r_img[i][cur];
        if (!visited[img]) {
          visited[img] = 1;
          queue.push_back(img);
        }
      }
    }
    AdmissibleOrbit orbit = enumerate_orbit(sys, least);
    build_poset(sys, orbit);
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const AdmissibleOrbit& a, const AdmissibleOrbit& b) {
              if (a.representative.size() != b.representative.size())
                return a.representative.size() < b.representative.size();
              return a.representative < b.representative;
            });
  return orbits;
}

RootSet rep_A(const RootSystem& sys, int t) {
  if (sys.spec().family != Family::A)
    throw std::invalid_argument("representative family mismatch");
  if (t < 0 || 2 * t - 1 > sys.rank())
    throw std::invalid_argument("coclique size out of range");
  RootSet out;
  for (int k = 1; k <= t; ++k) out.push_back(sys.simple(2 * k - 1));
  std::sort(out.begin(), out.end());
  return out;
}

RootSet rep_D_bare(const RootSystem& sys, int t) {
  if (sys.spec().family != Family::D)
    throw std::invalid_argument("representative family mismatch");
  int n = sys.rank();
  if (t < 0 || 2 * t > n) throw std::invalid_argument("coclique size out of range");
  RootSet out;
  for (int k = 1; k <= t; ++k) out.push_back(sys.simple(n + 2 - 2 * k));
  std::sort(out.begin(), out.end());
  return out;
}

RootSet rep_D_frame(const RootSystem& sys, int t) {
  RootSet bare = rep_D_bare(sys, t);
  RootSet out = bare;
  for (int r : bare) out.push_back(sys.star(r));
  std::sort(out.begin(), out.end());
  return out;
}

RootSet rep_D_even_extra(const RootSystem& sys) {
  if (sys.spec().family != Family::D || sys.rank() % 2 != 0)
    throw std::invalid_argument("variant representative needs even rank");
  RootSet out;
  for (int node = sys.rank(); node >= 4; node -= 2) out.push_back(sys.simple(node));
  out.push_back(sys.simple(1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootSet> classical_representatives(const RootSystem& sys) {
  std::vector<RootSet> reps;
  int n = sys.rank();
  switch (sys.spec().family) {
    case Family::A:
      for (int t = 0; 2 * t - 1 <= n; ++t) reps.push_back(rep_A(sys, t));
      break;
    case Family::D:
      for (int t = 0; 2 * t <= n; ++t) reps.push_back(rep_D_bare(sys, t));
      if (n % 2 == 0) reps.push_back(rep_D_even_extra(sys));
      for (int t = 1; 2 * t <= n; ++t) reps.push_back(rep_D_frame(sys, t));
      break;
    case Family::E: {
      auto simples = [&](std::vector<int> nodes) {
        RootSet out;
        for (int i : nodes) out.push_back(sys.simple(i));
        std::sort(out.begin(), out.end());
        return out;
      };
      reps.push_back({});
      reps.push_back(simples({n}));
      if (n == 6) {
        reps.push_back(simples({6, 4}));
        reps.push_back(closure(sys, simples({6, 2, 3})));
      } else if (n == 7) {
        reps.push_back(simples({7, 5}));
        reps.push_back(simples({7, 5, 2}));
        reps.push_back(closure(sys, simples({7, 2, 3})));
        reps.push_back(closure(sys, simples({7, 5, 2, 3})));
      } else {
        reps.push_back(simples({8, 6}));
        reps.push_back(closure(sys, simples({8, 2, 3})));
        reps.push_back(closure(sys, simples({8, 5, 2, 3})));
      }
      break;
    }
  }
  return reps;
}

}  // namespace brade
