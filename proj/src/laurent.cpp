#include "brade/laurent.hpp"

#include <algorithm>
#include <cstdlib>

namespace brade {

void LaurentPoly::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0) it = c_.erase(it); else ++it;
  }
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, long exp) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exp] = coeff;
  return p;
}

long LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

Int LaurentPoly::coeff(long exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, v] : o.c_) r.c_[e] += v;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, v] : o.c_) r.c_[e] -= v;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, v1] : c_)
    for (auto& [e2, v2] : o.c_) r.c_[e1 + e2] += v1 * v2;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_square() const {
  LaurentPoly r;
  for (auto& [e, v] : c_) r.c_[2 * e] = v;
  return r;
}

Rat LaurentPoly::eval(const Rat& x) const {
  if (c_.empty()) return 0;
  if (x == 0) {
    if (min_exp() < 0)
      throw std::invalid_argument("evaluation at 0 with negative exponents");
    return coeff(0);
  }
  // Horner over the exponent range, negative part via 1/x.
  Rat xinv = 1 / x;
  Rat acc = 0;
  long prev = 0;
  bool first = true;
  // descending exponents
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    long e = it->first;
    if (first) {
      acc = it->second;
      first = false;
    } else {
      for (long k = 0; k < prev - e; ++k) acc *= x;
      acc += it->second;
    }
    prev = e;
  }
  Rat scale = 1;
  if (prev > 0)
    for (long k = 0; k < prev; ++k) scale *= x;
  else
    for (long k = 0; k < -prev; ++k) scale *= xinv;
  return acc * scale;
}

namespace {

// positive divisors of |v|, by trial division
std::vector<Int> divisors(Int v) {
  v = abs(v);
  std::vector<Int> ds;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      ds.push_back(d);
      if (d * d != v) ds.push_back(v / d);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rat> LaurentPoly::rational_roots() const {
  if (c_.empty())
    throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rat> roots;
  long m = min_exp();
  if (m > 0) roots.push_back(0);
  // cleared part q with q(0) != 0
  if (max_exp() > m) {
    Int a0 = c_.begin()->second;     // constant term of q
    Int aN = c_.rbegin()->second;    // leading term
    for (const Int& p : divisors(a0))
      for (const Int& q : divisors(aN))
        for (int s : {1, -1}) {
          Rat cand(s * p, q);
          cand.canonicalize();
          if (eval(cand) != 0) continue;
          if (std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Rat& a, const Rat& b) { return a < b; });
  return roots;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [e, v] : c_) {
    Int av = abs(v);
    if (first) {
      if (v < 0) s += "-";
      first = false;
    } else {
      s += (v < 0) ? " - " : " + ";
    }
    bool unit = (av == 1);
    if (e == 0 || !unit) s += av.get_str();
    if (e != 0) {
      s += "δ";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::logic_error("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  long shift = a.min_exp() - b.min_exp();
  // dense copies of the cleared parts
  long da = a.max_exp() - a.min_exp(), db = b.max_exp() - b.min_exp();
  if (da < db) throw std::logic_error("inexact polynomial division");
  std::vector<Int> r(da + 1), d(db + 1);
  for (auto& [e, v] : a.terms()) r[e - a.min_exp()] = v;
  for (auto& [e, v] : b.terms()) d[e - b.min_exp()] = v;
  std::vector<Int> q(da - db + 1);
  for (long k = da - db; k >= 0; --k) {
    Int& lead = r[k + db];
    if (lead == 0) continue;
    if (lead % d[db] != 0) throw std::logic_error("inexact polynomial division");
    Int t = lead / d[db];
    q[k] = t;
    for (long j = 0; j <= db; ++j) r[k + j] -= t * d[j];
  }
  for (const Int& c : r)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  LaurentPoly res;
  for (long k = 0; k <= da - db; ++k)
    res += LaurentPoly::monomial(q[k], k + shift);
  return res;
}

LaurentPoly det(const std::vector<std::vector<LaurentPoly>>& m) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det of non-square matrix");
  if (n == 0) return LaurentPoly(1);

  // Clear each row's minimal delta power so Bareiss runs over Z[delta].
  long shift = 0;
  std::vector<std::vector<LaurentPoly>> a = m;
  for (size_t i = 0; i < n; ++i) {
    long rmin = 0;
    bool seen = false;
    for (auto& p : a[i])
      if (!p.is_zero()) {
        rmin = seen ? std::min(rmin, p.min_exp()) : p.min_exp();
        seen = true;
      }
    if (!seen) return LaurentPoly();  // zero row
    if (rmin != 0) {
      LaurentPoly f = LaurentPoly::delta(-rmin);
      for (auto& p : a[i]) p *= f;
      shift += rmin;
    }
  }

  int sign = 1;
  LaurentPoly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return LaurentPoly();
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num.is_zero() ? num : divide_exact(num, prev);
      }
    prev = a[k][k];
  }
  LaurentPoly d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d * LaurentPoly::delta(shift);
}

}  // namespace brade
