#include "brade/diagA.hpp"

#include <algorithm>
#include <stdexcept>

#include "brade/braction.hpp"

namespace brade {

BrauerDiagram BrauerDiagram::identity(int m) {
  BrauerDiagram d;
  d.m_ = m;
  d.pair_.resize(2 * m);
  for (int p = 0; p < m; ++p) {
    d.pair_[p] = p + m;
    d.pair_[p + m] = p;
  }
  return d;
}

BrauerDiagram BrauerDiagram::from_pairs(
    int m, const std::vector<std::pair<int, int>>& ps) {
  if ((int)ps.size() != m)
    throw std::invalid_argument("a diagram on m strands needs m pairs");
  BrauerDiagram d;
  d.m_ = m;
  d.pair_.assign(2 * m, -1);
  for (const auto& [a, b] : ps) {
    if (a < 0 || b < 0 || a >= 2 * m || b >= 2 * m || a == b ||
        d.pair_[a] != -1 || d.pair_[b] != -1)
      throw std::invalid_argument("pairs must form a perfect matching");
    d.pair_[a] = b;
    d.pair_[b] = a;
  }
  return d;
}

std::pair<BrauerDiagram, int> BrauerDiagram::compose(
    const BrauerDiagram& other) const {
  if (m_ != other.m_)
    throw std::invalid_argument("strand counts differ in composition");
  const int m = m_;
  /* The middle row glues this diagram's bottom points to other's top
     points.  Walk from every outer boundary point to its partner, then
     count the all-middle circles. */
  BrauerDiagram out;
  out.m_ = m;
  out.pair_.assign(2 * m, -1);
  std::vector<char> mid_seen(m, 0);

  // A top outer point enters the upper diagram, a bottom one the lower;
  // crossings through the glued middle row are marked as they happen.
  auto trace = [&](int start) {
    bool in_upper = start < m;
    int q = in_upper ? pair_[start] : other.pair_[start];
    while (true) {
      if (in_upper) {
        if (q < m) return q;  // surfaced on the top boundary
        mid_seen[q - m] = 1;
        in_upper = false;
        q = other.pair_[q - m];
      } else {
        if (q >= m) return q;  // surfaced on the bottom boundary
        mid_seen[q] = 1;
        in_upper = true;
        q = pair_[q + m];
      }
    }
  };

  for (int p = 0; p < 2 * m; ++p) {
    if (out.pair_[p] != -1) continue;
    int q = trace(p);
    out.pair_[p] = q;
    out.pair_[q] = p;
  }

  int loops = 0;
  for (int s = 0; s < m; ++s) {
    if (mid_seen[s]) continue;
    // a circle alternates upper and lower arcs without touching either
    // boundary, else the boundary walks would have marked it
    int cur = s;
    while (!mid_seen[cur]) {
      mid_seen[cur] = 1;
      int up = pair_[cur + m];
      if (up < m) throw TheoremViolation("middle circle escaped upward");
      mid_seen[up - m] = 1;
      cur = other.pair_[up - m];
      if (cur >= m) throw TheoremViolation("middle circle escaped downward");
    }
    ++loops;
  }
  return {out, loops};
}

std::string BrauerDiagram::str() const {
  std::string s;
  auto name = [&](int p) {
    return p < m_ ? std::to_string(p + 1) : std::to_string(p - m_ + 1) + "'";
  };
  for (int p = 0; p < 2 * m_; ++p) {
    int q = pair_[p];
    if (q < p) continue;
    if (!s.empty()) s += ' ';
    s += name(p) + "-" + name(q);
  }
  return s;
}

namespace {

void diagrams_rec(int m, std::vector<int>& pair, std::vector<BrauerDiagram>& out) {
  int a = -1;
  for (int p = 0; p < 2 * m; ++p)
    if (pair[p] == -1) {
      a = p;
      break;
    }
  if (a == -1) {
    std::vector<std::pair<int, int>> ps;
    for (int p = 0; p < 2 * m; ++p)
      if (pair[p] > p) ps.push_back({p, pair[p]});
    out.push_back(BrauerDiagram::from_pairs(m, ps));
    return;
  }
  for (int b = a + 1; b < 2 * m; ++b) {
    if (pair[b] != -1) continue;
    pair[a] = b;
    pair[b] = a;
    diagrams_rec(m, pair, out);
    pair[a] = -1;
    pair[b] = -1;
  }
}

}  // namespace

std::vector<BrauerDiagram> all_diagrams(int m) {
  std::vector<int> pair(2 * m, -1);
  std::vector<BrauerDiagram> out;
  diagrams_rec(m, pair, out);
  return out;
}

Int double_factorial_odd(int m) {
  Int v = 1;
  for (int k = 1; k <= 2 * m - 1; k += 2) v *= k;
  return v;
}

AlgebraElement algebra_zero(int m) { return {m, {}}; }

AlgebraElement algebra_one(int m) {
  AlgebraElement a{m, {}};
  a.terms[BrauerDiagram::identity(m)] = LaurentPoly(1);
  return a;
}

namespace {

void check_gen(int i, int m) {
  if (i < 1 || i >= m)
    throw std::invalid_argument("generator index out of range");
}

}  // namespace

AlgebraElement gen_R(int i, int m) {
  check_gen(i, m);
  std::vector<std::pair<int, int>> ps;
  for (int p = 0; p < m; ++p) {
    int q = p;
    if (p == i - 1) q = i;
    else if (p == i) q = i - 1;
    ps.push_back({p, q + m});
  }
  AlgebraElement a{m, {}};
  a.terms[BrauerDiagram::from_pairs(m, ps)] = LaurentPoly(1);
  return a;
}

AlgebraElement gen_E(int i, int m) {
  check_gen(i, m);
  std::vector<std::pair<int, int>> ps = {{i - 1, i}, {i - 1 + m, i + m}};
  for (int p = 0; p < m; ++p)
    if (p != i - 1 && p != i) ps.push_back({p, p + m});
  AlgebraElement a{m, {}};
  a.terms[BrauerDiagram::from_pairs(m, ps)] = LaurentPoly(1);
  return a;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("strand counts differ in addition");
  AlgebraElement out = a;
  for (const auto& [d, c] : b.terms) {
    LaurentPoly& slot = out.terms[d];
    slot += c;
    if (slot.is_zero()) out.terms.erase(d);
  }
  return out;
}

AlgebraElement scale(const LaurentPoly& c, const AlgebraElement& a) {
  AlgebraElement out{a.strands, {}};
  if (c.is_zero()) return out;
  for (const auto& [d, v] : a.terms) out.terms[d] = c * v;
  return out;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("strand counts differ in multiplication");
  AlgebraElement out{a.strands, {}};
  for (const auto& [da, ca] : a.terms)
    for (const auto& [db, cb] : b.terms) {
      auto [d, loops] = da.compose(db);
      LaurentPoly& slot = out.terms[d];
      slot += ca * cb * LaurentPoly::delta(loops);
      if (slot.is_zero()) out.terms.erase(d);
    }
  return out;
}

AlgebraElement e_B(const RootSystem& sys, const RootSet& X) {
  if (sys.spec().family != Family::A)
    throw std::invalid_argument("diagram algebra idempotents live in type A");
  if (!mutually_orthogonal(sys, X))
    throw std::invalid_argument("idempotent product needs orthogonal roots");
  int m = sys.rank() + 1;
  AlgebraElement out = algebra_one(m);
  for (int beta : X) {
    const Witness& wit = witness_for(sys, beta);
    AlgebraElement factor = gen_E(wit.node, m);
    // wrap outward: the leftmost reflection of the witness word is the
    // outermost conjugating factor
    for (auto it = wit.word.rbegin(); it != wit.word.rend(); ++it)
      factor = mul(gen_R(*it, m), mul(factor, gen_R(*it, m)));
    out = mul(out, factor);
  }
  return out;
}

std::vector<int> HalfDiagram::free_points() const {
  std::vector<char> used(strands, 0);
  for (const auto& [a, b] : arcs) used[a] = used[b] = 1;
  std::vector<int> out;
  for (int p = 0; p < strands; ++p)
    if (!used[p]) out.push_back(p);
  return out;
}

namespace {

void half_rec(int m, int t, int p, std::vector<std::pair<int, int>>& cur,
              std::vector<char>& used, std::vector<HalfDiagram>& out) {
  if ((int)cur.size() == t) {
    out.push_back({m, cur});
    return;
  }
  if (p >= m) return;
  if (used[p]) {
    half_rec(m, t, p + 1, cur, used, out);
    return;
  }
  // p stays free, or anchors an arc to some later unused point
  half_rec(m, t, p + 1, cur, used, out);
  for (int b = p + 1; b < m; ++b) {
    if (used[b]) continue;
    used[p] = used[b] = 1;
    cur.push_back({p, b});
    half_rec(m, t, p + 1, cur, used, out);
    cur.pop_back();
    used[p] = used[b] = 0;
  }
}

}  // namespace

std::vector<HalfDiagram> all_half_diagrams(int m, int t) {
  if (t < 0 || 2 * t > m)
    throw std::invalid_argument("arc count out of range");
  std::vector<std::pair<int, int>> cur;
  std::vector<char> used(m, 0);
  std::vector<HalfDiagram> out;
  half_rec(m, t, 0, cur, used, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/* Glue h (from above) to hp (from below): each point has an up side (an
   arc of h or the top boundary) and a down side (an arc of hp or the
   bottom boundary).  Full circles give delta factors, through paths give
   the free-point permutation, and a path returning to the same boundary
   drops the composite into a deeper layer: the form reports that as
   absent. */
bool glue(const HalfDiagram& h, const HalfDiagram& hp, Perm& sigma,
          int& circles) {
  int m = h.strands;
  std::vector<int> up(m, -1), down(m, -1);  // arc partners per side
  for (const auto& [a, b] : h.arcs) {
    up[a] = b;
    up[b] = a;
  }
  for (const auto& [a, b] : hp.arcs) {
    down[a] = b;
    down[b] = a;
  }
  std::vector<int> slot_h(m, -1), slot_hp(m, -1);
  std::vector<int> free_h = h.free_points(), free_hp = hp.free_points();
  for (size_t k = 0; k < free_h.size(); ++k) slot_h[free_h[k]] = (int)k;
  for (size_t k = 0; k < free_hp.size(); ++k) slot_hp[free_hp[k]] = (int)k;

  std::vector<char> seen(m, 0);
  sigma.assign(free_h.size(), -1);
  for (int p : free_h) {
    // enter at p from the top, leave through the down side
    int cur = p;
    seen[cur] = 1;
    while (true) {
      if (down[cur] == -1) {
        sigma[slot_h[p]] = slot_hp[cur];
        break;
      }
      cur = down[cur];
      seen[cur] = 1;
      if (up[cur] == -1) return false;  // resurfaced on the top boundary
      cur = up[cur];
      seen[cur] = 1;
    }
  }
  circles = 0;
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      int q = up[cur];
      if (q == -1 || down[q] == -1)
        throw TheoremViolation("gluing left an unbalanced open path");
      seen[q] = 1;
      cur = down[q];
    }
    ++circles;
  }
  return true;
}

std::vector<Perm> all_perms(int f) {
  Perm p = perm_identity(f);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CellDatum cell_core(int m, int t) {
  if (m < 1 || m > 6)
    throw std::invalid_argument("cell forms are bounded to 6 strands");
  if (t < 0 || 2 * t > m)
    throw std::invalid_argument("arc count out of range");
  CellDatum cell;
  cell.m = m;
  cell.t = t;
  cell.basis = all_half_diagrams(m, t);
  int nb = (int)cell.basis.size();
  int f = m - 2 * t;
  cell.gram.assign(nb, std::vector<GroupAlgebraElt>(nb));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      Perm sigma;
      int circles = 0;
      if (glue(cell.basis[i], cell.basis[j], sigma, circles))
        cell.gram[i][j][sigma] = LaurentPoly::delta(circles);
    }

  std::vector<Perm> group = all_perms(f);
  std::map<Perm, int> gid;
  for (size_t k = 0; k < group.size(); ++k) gid[group[k]] = (int)k;
  int fs = (int)group.size();
  cell.scalar_gram.assign(nb * fs, std::vector<LaurentPoly>(nb * fs));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      for (const auto& [pi, c] : cell.gram[i][j])
        // left regular representation: basis vector tau maps to pi tau
        for (int tau = 0; tau < fs; ++tau) {
          int row = gid.at(perm_mul(pi, group[tau]));
          cell.scalar_gram[i * fs + row][j * fs + tau] = c;
        }
  return cell;
}

}  // namespace

CellDatum cell_gram(int m, int t) {
  CellDatum cell = cell_core(m, t);
  cell.det = det(cell.scalar_gram);
  return cell;
}

LaurentPoly gram_det(int m, int t) { return cell_gram(m, t).det; }

namespace {

Rat rat_det(std::vector<std::vector<Rat>> a) {
  int n = (int)a.size();
  Rat detv = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == -1) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      detv = -detv;
    }
    detv *= a[col][col];
    Rat inv = 1 / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  detv.canonicalize();
  return detv;
}

}  // namespace

SemisimpleVerdict semisimple_at(int m, const Rat& x) {
  SemisimpleVerdict v;
  v.m = m;
  v.x = x;
  v.x.canonicalize();
  v.semisimple = true;
  for (int t = 0; 2 * t <= m; ++t) {
    CellDatum cell = cell_core(m, t);
    int n = (int)cell.scalar_gram.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = cell.scalar_gram[i][j].eval(v.x);
    Rat d = rat_det(a);
    v.cells.push_back({t, d});
    if (d == 0) {
      v.semisimple = false;
      v.vanishing.push_back(t);
    }
  }
  return v;
}

std::vector<int> z_set(int n) {
  if (n < 1) throw std::invalid_argument("z_set needs n >= 1");
  std::vector<int> out;
  for (int i = 4 - 2 * n; i <= n - 2; ++i) {
    bool removed = 4 - 2 * n <= i && i <= 3 - n && (i % 2 != 0);
    if (!removed) out.push_back(i);
  }
  return out;
}

DnVerdict d_semisimplicity_report(int n, const Rat& x,
                                  std::optional<int> char_e) {
  if (n < 2) throw std::invalid_argument("the type D report needs n >= 2");
  if (char_e && *char_e < 1)
    throw std::invalid_argument("characteristic must be positive");
  DnVerdict v;
  v.n = n;
  v.x = x;
  v.x.canonicalize();
  v.char_e = char_e;

  bool char_ok = true;  // the characteristic clause e not dividing n!
  if (char_e) {
    Int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    char_ok = fact % *char_e != 0;
  }

  bool square_in_z = false;
  if (v.x != 0 && v.x.get_den() == 1) {
    Int sq = v.x.get_num() * v.x.get_num();
    for (int z : z_set(n))
      if (sq == z) square_in_z = true;
  }
  bool zero_clause = v.x == 0 && n != 1 && n != 3 && n != 5;

  if (square_in_z && char_ok) {
    v.not_semisimple = true;
    v.reason = "delta^2 lies in Z(n) with delta nonzero";
  } else if (zero_clause && char_ok) {
    v.not_semisimple = true;
    v.reason = "delta = 0 and n is outside {1, 3, 5}";
  } else {
    v.not_semisimple = false;
    v.reason =
        "the one-directional criteria do not apply; no conclusion either way";
  }
  if (v.not_semisimple && char_e)
    v.reason += ", and the characteristic does not divide n!";
  return v;
}

LaurentPoly lambda2_gram_D(int n, int t) {
  return gram_det(n, t).substitute_square();
}

}  // namespace brade
