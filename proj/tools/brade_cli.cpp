#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "brade/admissible.hpp"
#include "brade/braction.hpp"
#include "brade/coxgroup.hpp"
#include "brade/diagA.hpp"
#include "brade/morita.hpp"
#include "brade/rootsys.hpp"

/* Batch front end.  Every subcommand prints one JSON document (or a DOT
   digraph where --dot applies) on stdout; diagnostics go to stderr.  Exit
   codes: 0 success, 1 bad input, 2 a computation contradicted a structural
   theorem. */

using json = nlohmann::ordered_json;
using namespace brade;

namespace {

json coeffs_json(const Coeffs& c) { return json(c); }

json roots_json(const RootSystem& sys, const RootSet& set) {
  json arr = json::array();
  for (int r : set) arr.push_back(coeffs_json(sys.root(r)));
  return arr;
}

std::string int_str(const Int& v) { return v.get_str(); }

std::string rat_str(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  return c.get_str();
}

// Ascending [exponent, coefficient] pairs; coefficients as decimal strings.
json poly_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [exp, coeff] : p.terms())
    arr.push_back(json::array({exp, coeff.get_str()}));
  return arr;
}

Rat parse_rat(const std::string& text) {
  Rat x;
  if (x.set_str(text, 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + text);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator");
  x.canonicalize();
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace((unsigned char)ch)) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

/* Root-set grammar: "-" or "" is the empty set; with a semicolon the input
   is coefficient vectors ("0,1,1;1,1,0", trailing semicolon allowed to
   force this route); otherwise a comma list of node numbers naming simple
   roots ("1,3"). */
RootSet parse_root_set(const RootSystem& sys, const std::string& text) {
  RootSet set;
  if (text.empty() || text == "-") return set;
  auto add = [&](int idx) {
    if (idx < 0) throw std::invalid_argument("not a positive root");
    for (int r : set)
      if (r == idx) return;
    set.push_back(idx);
  };
  if (text.find(';') != std::string::npos) {
    for (const std::string& part : split(text, ';')) {
      if (part.empty()) continue;
      Coeffs c;
      for (const std::string& tok : split(part, ','))
        c.push_back(std::stoi(tok));
      if ((int)c.size() != sys.rank())
        throw std::invalid_argument("coefficient vector has wrong length");
      add(sys.index_of(c));
    }
  } else {
    bool all_nodes = true;
    std::vector<int> vals;
    for (const std::string& tok : split(text, ',')) {
      vals.push_back(std::stoi(tok));
      if (vals.back() < 1 || vals.back() > sys.rank()) all_nodes = false;
    }
    if (all_nodes) {
      for (int node : vals) add((int)sys.simple(node));
    } else if ((int)vals.size() == sys.rank()) {
      Coeffs c(vals.begin(), vals.end());
      add(sys.index_of(c));
    } else {
      throw std::invalid_argument("root set matches neither grammar route");
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact engine for the simply-laced Brauer algebras"};
  app.require_subcommand(1);

  std::string type_s, roots_s, set_s, word_s, delta_s = "0";
  int orbit_k = 0, strands = 0, arcs = 0, nn = 0, char_e = -1;
  bool dot = false, bmw = false, opt_e8 = false, json_flag = false;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("type", type_s, "diagram type, e.g. A3 or D4")->required();
  };

  CLI::App* roots = app.add_subcommand("roots", "positive roots in order");
  add_type(roots);

  CLI::App* orbits = app.add_subcommand("orbits", "admissible set orbits");
  add_type(orbits);
  orbits->add_flag("--opt-in-e8", opt_e8);

  CLI::App* poset = app.add_subcommand("poset", "one orbit's covering order");
  add_type(poset);
  poset->add_option("--orbit", orbit_k, "orbit index")->required();
  poset->add_flag("--dot", dot);
  poset->add_flag("--opt-in-e8", opt_e8);

  CLI::App* closure = app.add_subcommand("closure", "admissible closure");
  add_type(closure);
  closure->add_option("--roots", roots_s)->required();

  CLI::App* act = app.add_subcommand("act", "apply a word to a root set");
  add_type(act);
  act->add_option("--word", word_s, "e.g. \"E1 R2 E3\"")->required();
  act->add_option("--set", set_s)->required();

  CLI::App* relations = app.add_subcommand("relations", "defining relations");
  add_type(relations);
  relations->add_flag("--opt-in-e8", opt_e8);

  CLI::App* morita = app.add_subcommand("morita", "block decomposition");
  add_type(morita);
  morita->add_flag("--bmw", bmw);
  morita->add_flag("--opt-in-e8", opt_e8);

  CLI::App* wedder = app.add_subcommand("wedderburn", "matrix block sizes");
  add_type(wedder);
  wedder->add_flag("--opt-in-e8", opt_e8);

  CLI::App* gram = app.add_subcommand("gram", "cell Gram determinant");
  gram->add_option("--strands", strands)->required();
  gram->add_option("--arcs", arcs)->required();

  CLI::App* semis = app.add_subcommand("semisimple", "layer forms at a point");
  semis->add_option("--strands", strands)->required();
  semis->add_option("--delta", delta_s)->required();

  CLI::App* dnss = app.add_subcommand("dnss", "type D semisimplicity report");
  dnss->add_option("n", nn)->required();
  dnss->add_option("--delta", delta_s)->required();
  dnss->add_option("--char", char_e);

  CLI::App* zset = app.add_subcommand("zset", "the integer set Z(n)");
  zset->add_option("n", nn)->required();

  CLI::App* cellp = app.add_subcommand("cellposet-d", "type D cell poset");
  cellp->add_option("n", nn)->required();
  cellp->add_flag("--dot", dot);

  for (CLI::App* sub : app.get_subcommands(nullptr))
    sub->add_flag("--json", json_flag, "JSON output (the default)");

  CLI11_PARSE(app, argc, argv);
  json out;

  if (roots->parsed()) {
    auto sys = RootSystem::build(DiagramSpec::parse(type_s));
    out["family"] = std::string(1, "ADE"[(int)sys.spec().family]);
    out["rank"] = sys.rank();
    out["count"] = sys.count();
    json arr = json::array();
    for (const Coeffs& c : sys.positive()) arr.push_back(coeffs_json(c));
    out["positive_roots"] = arr;
  } else if (orbits->parsed()) {
    auto sys = RootSystem::build(DiagramSpec::parse(type_s));
    auto all = enumerate_all_orbits(sys, opt_e8);
    out["type"] = sys.spec().str();
    out["orbit_count"] = all.size();
    json arr = json::array();
    for (const AdmissibleOrbit& orb : all) {
      json o;
      o["representative"] = roots_json(sys, orb.representative);
      o["size"] = orb.orbit_size();
      o["maximal"] = roots_json(sys, orb.members[orb.maximal]);
      o["poset_edge_count"] = orb.cover_edges.size();
      arr.push_back(o);
    }
    out["orbits"] = arr;
  } else if (poset->parsed()) {
    auto sys = RootSystem::build(DiagramSpec::parse(type_s));
    auto all = enumerate_all_orbits(sys, opt_e8);
    if (orbit_k < 0 || orbit_k >= (int)all.size())
      throw std::invalid_argument("orbit index out of range");
    const AdmissibleOrbit& orb = all[orbit_k];
    auto label = [&](int member) {
      std::string s = "{";
      for (size_t i = 0; i < orb.members[member].size(); ++i) {
        if (i) s += ", ";
        for (int c : sys.root(orb.members[member][i])) s += ('0' + c);
      }
      return s + "}";
    };
    if (dot) {
      std::ostringstream os;
      os << "digraph poset {\n  rankdir=TB;\n";
      for (size_t k = 0; k < orb.members.size(); ++k)
        os << "  n" << k << " [label=\"" << label((int)k) << "\"];\n";
      for (const auto& [lower, upper] : orb.cover_edges)
        os << "  n" << upper << " -> n" << lower << ";\n";
      os << "}\n";
      std::cout << os.str();
      return 0;
    }
    out["type"] = sys.spec().str();
    out["orbit"] = orbit_k;
    json mem = json::array();
    for (size_t k = 0; k < orb.members.size(); ++k)
      mem.push_back(roots_json(sys, orb.members[k]));
    out["members"] = mem;
    json edges = json::array();
    for (const auto& [lower, upper] : orb.cover_edges)
      edges.push_back(json::array({lower, upper}));
    out["cover_edges"] = edges;
    out["maximal"] = orb.maximal;
  } else if (closure->parsed()) {
    auto sys = RootSystem::build(DiagramSpec::parse(type_s));
    RootSet cl = brade::closure(sys, parse_root_set(sys, roots_s));
    out["type"] = sys.spec().str();
    out["indices"] = json(cl);
    out["roots"] = roots_json(sys, cl);
  } else if (act->parsed()) {
    auto sys = RootSystem::build(DiagramSpec::parse(type_s));
    MonoidWord w = parse_word(word_s, sys.rank());
    RootSet img = act_word(sys, w, parse_root_set(sys, set_s));
    out["type"] = sys.spec().str();
    out["indices"] = json(img);
    out["roots"] = roots_json(sys, img);
  } else if (relations->parsed()) {
    auto sys = RootSystem::build(DiagramSpec::parse(type_s));
    auto reports = check_relations(sys, opt_e8);
    out["type"] = sys.spec().str();
    json arr = json::array();
    for (const RelationReport& r : reports) {
      json o;
      o["relation"] = r.label;
      o["holds"] = r.holds;
      if (!r.holds) {
        o["nodes"] = json::array({r.i, r.j});
        o["counterexample"] = roots_json(sys, r.counterexample);
      }
      arr.push_back(o);
    }
    out["reports"] = arr;
    out["all_hold"] = all_hold(reports);
  } else if (morita->parsed()) {
    auto sys = RootSystem::build(DiagramSpec::parse(type_s));
    auto kind = bmw ? AlgebraKind::BMW : AlgebraKind::Brauer;
    auto bl = blocks(sys, kind, opt_e8);
    out["type"] = sys.spec().str();
    out["algebra"] = bmw ? "bmw" : "brauer";
    json arr = json::array();
    Int total = 0;
    for (const MoritaBlock& b : bl) {
      json o;
      o["orbit_id"] = b.orbit_id;
      o["representative"] = roots_json(sys, b.representative);
      o["orbit_size"] = b.orbit_size;
      o["maximal"] = roots_json(sys, b.maximal_element);
      o["centralizer_nodes"] = json(b.centralizer);
      json types = json::array();
      for (const TypeLabel& t : b.centralizer_types) types.push_back(t.str());
      o["centralizer_types"] = types;
      o["group_order"] = int_str(b.group_order);
      o["descriptor"] = b.algebra_descriptor;
      o["contribution"] = int_str(b.contribution());
      arr.push_back(o);
      total += b.contribution();
    }
    out["blocks"] = arr;
    out["total_rank"] = int_str(total);
    if (sys.spec().family == Family::A) {
      Int oracle = double_factorial_odd(sys.rank() + 1);
      out["oracle"] = int_str(oracle);
      out["match"] = total == oracle;
      if (total != oracle)
        throw TheoremViolation("block contributions miss the diagram count");
    } else {
      out["oracle"] = nullptr;
      out["match"] = true;
    }
  } else if (wedder->parsed()) {
    auto sys = RootSystem::build(DiagramSpec::parse(type_s));
    out["type"] = sys.spec().str();
    json arr = json::array();
    for (const WedderburnBlock& w : wedderburn_sizes(sys, opt_e8)) {
      json o;
      o["orbit_id"] = w.orbit_id;
      o["sizes_available"] = w.sizes_available;
      json sizes = json::array();
      for (const Int& s : w.sizes) sizes.push_back(int_str(s));
      o["sizes"] = sizes;
      o["sum_squares"] = int_str(w.sum_squares);
      arr.push_back(o);
    }
    out["blocks"] = arr;
  } else if (gram->parsed()) {
    LaurentPoly det = gram_det(strands, arcs);
    out["strands"] = strands;
    out["arcs"] = arcs;
    out["det"] = poly_json(det);
    json rr = json::array();
    for (const Rat& r : det.rational_roots()) rr.push_back(rat_str(r));
    out["rational_roots"] = rr;
  } else if (semis->parsed()) {
    SemisimpleVerdict v = semisimple_at(strands, parse_rat(delta_s));
    out["strands"] = v.m;
    out["delta"] = rat_str(v.x);
    out["semisimple"] = v.semisimple;
    json cells = json::array();
    for (const CellValue& c : v.cells)
      cells.push_back(json{{"arcs", c.t}, {"value", rat_str(c.value)}});
    out["cells"] = cells;
    out["vanishing"] = json(v.vanishing);
  } else if (dnss->parsed()) {
    std::optional<int> ce;
    if (char_e >= 0) ce = char_e;
    DnVerdict v = d_semisimplicity_report(nn, parse_rat(delta_s), ce);
    out["n"] = v.n;
    out["delta"] = rat_str(v.x);
    if (v.char_e)
      out["char"] = *v.char_e;
    else
      out["char"] = nullptr;
    out["not_semisimple"] = v.not_semisimple;
    out["reason"] = v.reason;
  } else if (zset->parsed()) {
    out["n"] = nn;
    out["z"] = json(z_set(nn));
  } else if (cellp->parsed()) {
    CellPosetD pos = cell_poset_D(nn);
    if (dot) {
      std::ostringstream os;
      os << "digraph cellposet {\n  rankdir=TB;\n";
      for (const CellLabel& c : pos.elements())
        os << "  \"" << c.str() << "\";\n";
      for (const auto& [hi, lo] : pos.hasse_edges)
        os << "  \"" << hi.str() << "\" -> \"" << lo.str() << "\";\n";
      os << "}\n";
      std::cout << os.str();
      return 0;
    }
    out["n"] = pos.n;
    json l1 = json::array(), l2 = json::array(), edges = json::array();
    for (const CellLabel& c : pos.lambda1) l1.push_back(c.str());
    for (const CellLabel& c : pos.lambda2) l2.push_back(c.str());
    for (const auto& [hi, lo] : pos.hasse_edges)
      edges.push_back(json::array({hi.str(), lo.str()}));
    out["lambda1"] = l1;
    out["lambda2"] = l2;
    out["hasse_edges"] = edges;
  }

  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
