#include "brade/braction.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <utility>

namespace brade {

MonoidWord parse_word(const std::string& text, int rank) {
  MonoidWord out;
  size_t p = 0;
  while (p < text.size()) {
    if (std::isspace((unsigned char)text[p])) {
      ++p;
      continue;
    }
    GenKind kind;
    if (text[p] == 'R')
      kind = GenKind::R;
    else if (text[p] == 'E')
      kind = GenKind::E;
    else
      throw std::invalid_argument("word symbol must start with R or E");
    ++p;
    size_t q = p;
    while (q < text.size() && std::isdigit((unsigned char)text[q])) ++q;
    if (q == p) throw std::invalid_argument("word symbol lacks a node number");
    int node = std::stoi(text.substr(p, q - p));
    if (node < 1 || node > rank)
      throw std::invalid_argument("word symbol node out of range");
    out.push_back({kind, node});
    p = q;
  }
  return out;
}

RootSet act(const RootSystem& sys, GeneratorSymbol g, const RootSet& B) {
  return g.kind == GenKind::R ? r_action(sys, g.node, B)
                              : e_action(sys, g.node, B);
}

RootSet act_word(const RootSystem& sys, const MonoidWord& w, const RootSet& B) {
  RootSet cur = B;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act(sys, *it, cur);
  return cur;
}

namespace {

/* Multi-source breadth-first search from the simple roots through simple
   reflections.  Every positive root of a connected diagram is reached
   without leaving the positive side: any root of height above one drops
   by some adjacent simple reflection. */
std::vector<Witness> build_witnesses(const RootSystem& sys) {
  int n = sys.count();
  std::vector<Witness> table(n);
  std::vector<char> seen(n, 0);
  std::queue<int> queue;
  for (int i = 1; i <= sys.rank(); ++i) {
    int s = sys.simple(i);
    table[s] = {i, {}};
    seen[s] = 1;
    queue.push(s);
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop();
    for (int j = 1; j <= sys.rank(); ++j) {
      int t = sys.reflect_simple(j, s);
      if (t >= n || seen[t]) continue;
      table[t].node = table[s].node;
      table[t].word.reserve(table[s].word.size() + 1);
      table[t].word.push_back(j);
      table[t].word.insert(table[t].word.end(), table[s].word.begin(),
                           table[s].word.end());
      seen[t] = 1;
      queue.push(t);
    }
  }
  for (int r = 0; r < n; ++r)
    if (!seen[r]) throw TheoremViolation("root unreachable from the simples");
  return table;
}

const std::vector<Witness>& witness_table(const RootSystem& sys) {
  static std::mutex lock;
  static std::map<std::pair<Family, int>, std::vector<Witness>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto key = std::make_pair(sys.spec().family, sys.spec().rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_witnesses(sys)).first;
  return it->second;
}

}  // namespace

const Witness& witness_for(const RootSystem& sys, int beta) {
  if (beta < 0 || beta >= sys.count())
    throw std::invalid_argument("witness requested for a non-positive root");
  return witness_table(sys)[beta];
}

RootSet conjugate_action(const RootSystem& sys, int beta, GenKind kind,
                         const RootSet& B) {
  const Witness& wit = witness_for(sys, beta);
  RootSet cur = B;
  // w^{-1} reverses the word; each factor is an involution, so the
  // leftmost node of w acts first here.
  for (int j : wit.word) cur = r_action(sys, j, cur);
  cur = act(sys, {kind, wit.node}, cur);
  for (auto it = wit.word.rbegin(); it != wit.word.rend(); ++it)
    cur = r_action(sys, *it, cur);
  return cur;
}

namespace {

struct Sweep {
  const RootSystem& sys;
  const ActionTables& t;

  int r(int i, int b) const { return t.r_img[i - 1][b]; }
  int e(int i, int b) const { return t.e_img[i - 1][b]; }

  /* check(i, j, b) returns true when the identity holds at that point;
     j ranges over 0 for laws in one node. */
  template <typename F>
  RelationReport run(std::string label, bool pairs, bool adjacent,
                     F check) const {
    RelationReport rep;
    rep.label = std::move(label);
    int n = sys.rank();
    for (int i = 1; i <= n; ++i)
      for (int j = pairs ? 1 : 0; j <= (pairs ? n : 0); ++j) {
        if (pairs && (j == i || sys.spec().adjacent(i, j) != adjacent))
          continue;
        for (size_t b = 0; b < t.sets.size(); ++b)
          if (!check(i, j, (int)b)) {
            rep.holds = false;
            rep.i = i;
            rep.j = j;
            rep.counterexample = t.sets[b];
            return rep;
          }
      }
    return rep;
  }
};

}  // namespace

std::vector<RelationReport> check_relations(const RootSystem& sys,
                                            bool opt_in_e8) {
  ActionTables tables = enumerate_action_tables(sys, opt_in_e8);
  Sweep s{sys, tables};
  std::vector<RelationReport> out;

  // delta and delta^{-1} are excluded from the action alphabet, so their
  // product is the identity transformation by construction.
  RelationReport delta;
  delta.label = "delta delta^{-1} = 1 (delta acts as the identity)";
  out.push_back(delta);

  out.push_back(s.run("R_i R_i = 1", false, false, [&](int i, int, int b) {
    return s.r(i, s.r(i, b)) == b;
  }));
  out.push_back(s.run("R_i E_i = E_i R_i = E_i", false, false,
                      [&](int i, int, int b) {
                        int eb = s.e(i, b);
                        return s.r(i, eb) == eb && s.e(i, s.r(i, b)) == eb;
                      }));
  out.push_back(s.run("E_i E_i = E_i (delta suppressed)", false, false,
                      [&](int i, int, int b) {
                        int eb = s.e(i, b);
                        return s.e(i, eb) == eb;
                      }));
  out.push_back(s.run("R_i R_j = R_j R_i for non-adjacent i, j", true, false,
                      [&](int i, int j, int b) {
                        return s.r(i, s.r(j, b)) == s.r(j, s.r(i, b));
                      }));
  out.push_back(s.run("E_i R_j = R_j E_i for non-adjacent i, j", true, false,
                      [&](int i, int j, int b) {
                        return s.e(i, s.r(j, b)) == s.r(j, s.e(i, b));
                      }));
  out.push_back(s.run("E_i E_j = E_j E_i for non-adjacent i, j", true, false,
                      [&](int i, int j, int b) {
                        return s.e(i, s.e(j, b)) == s.e(j, s.e(i, b));
                      }));
  out.push_back(s.run("R_i R_j R_i = R_j R_i R_j for adjacent i, j", true,
                      true, [&](int i, int j, int b) {
                        return s.r(i, s.r(j, s.r(i, b))) ==
                               s.r(j, s.r(i, s.r(j, b)));
                      }));
  out.push_back(s.run("R_j R_i E_j = E_i E_j for adjacent i, j", true, true,
                      [&](int i, int j, int b) {
                        return s.r(j, s.r(i, s.e(j, b))) ==
                               s.e(i, s.e(j, b));
                      }));
  out.push_back(s.run("R_i E_j R_i = R_j E_i R_j for adjacent i, j", true,
                      true, [&](int i, int j, int b) {
                        return s.r(i, s.e(j, s.r(i, b))) ==
                               s.r(j, s.e(i, s.r(j, b)));
                      }));
  return out;
}

bool all_hold(const std::vector<RelationReport>& reports) {
  for (const RelationReport& r : reports)
    if (!r.holds) return false;
  return true;
}

}  // namespace brade
