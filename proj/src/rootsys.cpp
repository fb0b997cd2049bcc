#include "brade/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace brade {

DiagramSpec DiagramSpec::parse(const std::string& s) {
  if (s.size() < 2)
    throw std::invalid_argument("bad type spec '" + s + "'");
  char f = (char)std::toupper((unsigned char)s[0]);
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit((unsigned char)s[i]))
      throw std::invalid_argument("bad type spec '" + s + "'");
  int rank = std::stoi(s.substr(1));
  DiagramSpec d;
  d.rank = rank;
  switch (f) {
    case 'A':
      d.family = Family::A;
      if (rank < 1) throw std::invalid_argument("A requires rank >= 1");
      break;
    case 'D':
      d.family = Family::D;
      if (rank < 4) throw std::invalid_argument("D requires rank >= 4");
      break;
    case 'E':
      d.family = Family::E;
      if (rank < 6 || rank > 8)
        throw std::invalid_argument("E requires rank 6, 7 or 8");
      break;
    default:
      throw std::invalid_argument("bad type spec '" + s + "'");
  }
  return d;
}

std::string DiagramSpec::str() const {
  char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return f + std::to_string(rank);
}

bool DiagramSpec::adjacent(int i, int j) const {
  if (i < 1 || j < 1 || i > rank || j > rank || i == j) return false;
  if (i > j) std::swap(i, j);
  switch (family) {
    case Family::A:
      return j == i + 1;
    case Family::D:
      // nodes 1 and 2 both hang off node 3, then a chain 3-4-...-n
      if (j == 3) return i == 1 || i == 2;
      return i >= 3 && j == i + 1;
    case Family::E:
      // chain 1-3-4-5-...-n with node 2 attached to node 4
      if (i == 1) return j == 3;
      if (i == 2) return j == 4;
      return j == i + 1 && i >= 3;
  }
  return false;
}

std::vector<std::pair<int, int>> DiagramSpec::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j)
      if (adjacent(i, j)) e.push_back({i, j});
  return e;
}

Coeffs RootSystem::reflect_coeffs(int node, const Coeffs& c) const {
  int ip = 0;
  for (int k = 0; k < rank(); ++k) ip += gram_[node - 1][k] * c[k];
  Coeffs r = c;
  r[node - 1] -= ip;
  return r;
}

RootSystem RootSystem::build(const DiagramSpec& spec) {
  RootSystem sys;
  sys.spec_ = spec;
  int n = spec.rank;
  sys.gram_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sys.gram_[i][j] = i == j ? 2 : (spec.adjacent(i + 1, j + 1) ? -1 : 0);

  // Closure of the simple roots under simple reflections.
  std::set<Coeffs> all;
  std::vector<Coeffs> queue;
  for (int i = 0; i < n; ++i) {
    Coeffs a(n, 0);
    a[i] = 1;
    all.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Coeffs c = queue.back();
    queue.pop_back();
    for (int i = 1; i <= n; ++i) {
      Coeffs r = sys.reflect_coeffs(i, c);
      if (all.insert(r).second) queue.push_back(r);
    }
  }
  for (const Coeffs& c : all) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
    if (nonneg) sys.positive_.push_back(c);
  }
  auto ht = [](const Coeffs& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(sys.positive_.begin(), sys.positive_.end(),
            [&](const Coeffs& a, const Coeffs& b) {
              int ha = ht(a), hb = ht(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });

  int N = (int)sys.positive_.size();
  sys.height_.resize(N);
  for (int r = 0; r < N; ++r) sys.height_[r] = ht(sys.positive_[r]);
  sys.highest_ = N - 1;
  if (N >= 2 && sys.height_[N - 1] == sys.height_[N - 2])
    throw TheoremViolation("highest root is not unique");

  sys.simple_idx_.assign(n, -1);
  for (int r = 0; r < N; ++r)
    if (sys.height_[r] == 1)
      for (int k = 0; k < n; ++k)
        if (sys.positive_[r][k] == 1) sys.simple_idx_[k] = r;

  sys.dots_.assign(N, std::vector<signed char>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      sys.dots_[a][b] = (signed char)sys.inner(sys.positive_[a], sys.positive_[b]);

  sys.refl_.assign(n, std::vector<int>(2 * N));
  for (int i = 1; i <= n; ++i)
    for (int r = 0; r < N; ++r) {
      Coeffs im = sys.reflect_coeffs(i, sys.positive_[r]);
      int s = sys.lookup_signed(im);
      if (s < 0) throw TheoremViolation("reflection left the root set");
      sys.refl_[i - 1][r] = s;
      sys.refl_[i - 1][s] = r;  // reflections are involutions, signs flip together
      sys.refl_[i - 1][(s + N) % (2 * N)] = (r + N) % (2 * N);
      sys.refl_[i - 1][r + N] = (s + N) % (2 * N);
    }

  if (spec.family == Family::D) {
    // epsilon realization: a1 = e2-e1, a2 = e2+e1, ai = ei-e(i-1) for i >= 3
    std::map<std::vector<int>, int> eps_index;
    for (int r = 0; r < N; ++r) eps_index[sys.to_eps_impl(r)] = r;
    sys.star_.resize(N);
    for (int r = 0; r < N; ++r) {
      std::vector<int> e = sys.to_eps_impl(r);
      int lo = -1;
      for (int k = 0; k < n; ++k)
        if (e[k] != 0) { lo = k; break; }
      e[lo] = -e[lo];
      auto it = eps_index.find(e);
      if (it == eps_index.end())
        throw TheoremViolation("star image is not a positive root");
      sys.star_[r] = it->second;
    }
  }
  return sys;
}

int RootSystem::simple(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("node out of range");
  return simple_idx_[i - 1];
}

int RootSystem::index_of(const Coeffs& c) const {
  if ((int)c.size() != rank()) throw std::invalid_argument("bad coefficient length");
  auto it = std::lower_bound(
      positive_.begin(), positive_.end(), c, [&](const Coeffs& a, const Coeffs& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
      });
  if (it != positive_.end() && *it == c) return (int)(it - positive_.begin());
  return -1;
}

int RootSystem::lookup_signed(const Coeffs& c) const {
  int p = index_of(c);
  if (p >= 0) return p;
  Coeffs neg(c.size());
  for (size_t k = 0; k < c.size(); ++k) neg[k] = -c[k];
  p = index_of(neg);
  if (p >= 0) return p + count();
  return -1;
}

int RootSystem::signed_index(const Coeffs& c) const { return lookup_signed(c); }

int RootSystem::inner(const Coeffs& a, const Coeffs& b) const {
  if ((int)a.size() != rank() || (int)b.size() != rank())
    throw std::invalid_argument("bad coefficient length");
  long long acc = 0;
  for (int i = 0; i < rank(); ++i) {
    long long row = 0;
    for (int j = 0; j < rank(); ++j) row += (long long)gram_[i][j] * b[j];
    acc += (long long)a[i] * row;
  }
  return (int)acc;
}

int RootSystem::reflect_by(int gamma, int s) const {
  int N = count();
  int base = s % N;
  int d = dots_[base][gamma];
  if (s >= N) d = -d;
  if (d == 0) return s;
  Coeffs c = positive_[base];
  if (s >= N)
    for (int& v : c) v = -v;
  for (int k = 0; k < rank(); ++k) c[k] -= d * positive_[gamma][k];
  int r = lookup_signed(c);
  if (r < 0) throw TheoremViolation("reflection left the root set");
  return r;
}

std::vector<int> RootSystem::to_eps_impl(int r) const {
  int n = rank();
  const Coeffs& c = positive_[r];
  std::vector<int> e(n, 0);
  e[0] = c[1] - c[0];
  e[1] = c[0] + c[1] - (n >= 3 ? c[2] : 0);
  for (int k = 3; k <= n - 1; ++k) e[k - 1] = c[k - 1] - c[k];
  e[n - 1] = c[n - 1];
  return e;
}

std::vector<int> RootSystem::to_eps(int r) const {
  if (spec_.family != Family::D)
    throw std::invalid_argument("epsilon coordinates are a type D notion");
  return to_eps_impl(r);
}

int RootSystem::star(int r) const {
  if (spec_.family != Family::D)
    throw std::invalid_argument("star is a type D notion");
  return star_.at(r);
}

}  // namespace brade
