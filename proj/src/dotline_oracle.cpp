// Independent dimension computation for the Dot-Line relation ideal.
// Works with the commutative polynomial ring directly: Buchberger
// completion over the integers under degree-then-lex order, then a count
// of standard monomials. Shares no code with the rewrite engine.

#include "blobcalc/dotline.hpp"
#include "blobcalc/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace blobcalc {

namespace {

using Mono = std::vector<int>;

int total_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

// degree-then-lex with x_n > x_{n-1} > ... > x_1; returns true if a < b
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// terms sorted with the leading monomial last
using Poly = std::map<Mono, long long, MonoLess>;

void add_term(Poly& p, const Mono& m, long long c) {
  if (c == 0) return;
  auto it = p.emplace(m, 0).first;
  it->second += c;
  if (it->second == 0) p.erase(it);
}

void normalize_content(Poly& p) {
  long long g = 0;
  for (auto& [m, c] : p) g = std::gcd(g, c < 0 ? -c : c);
  if (g > 1)
    for (auto& [m, c] : p) c /= g;
  if (!p.empty() && p.rbegin()->second < 0)
    for (auto& [m, c] : p) c = -c;
}

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Poly mono_multiple(const Poly& p, const Mono& shift, long long coeff) {
  Poly out;
  for (auto& [m, c] : p) {
    Mono mm = m;
    for (std::size_t i = 0; i < mm.size(); ++i) mm[i] += shift[i];
    out.emplace(std::move(mm), c * coeff);
  }
  return out;
}

// pseudo top-reduction against the basis; result content-normalized
void top_reduce(Poly& p, const std::vector<Poly>& basis) {
  bool progress = true;
  while (!p.empty() && progress) {
    progress = false;
    const Mono& lm = p.rbegin()->first;
    for (const auto& g : basis) {
      const Mono& glm = g.rbegin()->first;
      if (!divides(glm, lm)) continue;
      long long a = p.rbegin()->second;
      long long b = g.rbegin()->second;
      long long l = std::lcm(a < 0 ? -a : a, b < 0 ? -b : b);
      long long pa = l / a;
      long long gb = l / b;
      Mono shift(lm.size());
      for (std::size_t i = 0; i < lm.size(); ++i) shift[i] = lm[i] - glm[i];
      Poly q;
      for (auto& [m, c] : p) add_term(q, m, c * pa);
      Poly gg = mono_multiple(g, shift, -gb);
      for (auto& [m, c] : gg) add_term(q, m, c);
      p = std::move(q);
      normalize_content(p);
      progress = true;
      break;
    }
  }
}

} // namespace

long long dimension_oracle(int n) {
  if (n < 1 || n > 6)
    fail("BoundExceeded", "dimension_oracle supports 1 <= n <= 6");
  std::vector<Poly> basis;
  auto mono = [&](std::initializer_list<std::pair<int, int>> entries) {
    Mono m(static_cast<std::size_t>(n), 0);
    for (auto [i, e] : entries) m[static_cast<std::size_t>(i)] = e;
    return m;
  };
  // x_1^2 and x_i^2 + 2 x_i (x_1 + ... + x_{i-1})
  for (int i = 0; i < n; ++i) {
    Poly g;
    add_term(g, mono({{i, 2}}), 1);
    for (int j = 0; j < i; ++j) {
      Mono m(static_cast<std::size_t>(n), 0);
      m[static_cast<std::size_t>(i)] = 1;
      m[static_cast<std::size_t>(j)] = 1;
      add_term(g, m, 2);
    }
    basis.push_back(std::move(g));
  }
  // Buchberger completion
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Mono& li = basis[i].rbegin()->first;
    const Mono& lj = basis[j].rbegin()->first;
    bool coprime = true;
    Mono lcm_m(static_cast<std::size_t>(n));
    for (std::size_t u = 0; u < lcm_m.size(); ++u) {
      lcm_m[u] = std::max(li[u], lj[u]);
      if (li[u] > 0 && lj[u] > 0) coprime = false;
    }
    if (coprime) continue; // product criterion
    long long ci = basis[i].rbegin()->second;
    long long cj = basis[j].rbegin()->second;
    long long l = std::lcm(ci < 0 ? -ci : ci, cj < 0 ? -cj : cj);
    Mono si(lcm_m), sj(lcm_m);
    for (std::size_t u = 0; u < lcm_m.size(); ++u) {
      si[u] -= li[u];
      sj[u] -= lj[u];
    }
    Poly s = mono_multiple(basis[i], si, l / ci);
    Poly t = mono_multiple(basis[j], sj, l / cj);
    for (auto& [m, c] : t) add_term(s, m, -c);
    normalize_content(s);
    top_reduce(s, basis);
    if (s.empty()) continue;
    basis.push_back(std::move(s));
    for (std::size_t u = 0; u + 1 < basis.size(); ++u)
      pairs.emplace_back(u, basis.size() - 1);
  }
  // standard monomials = monomials divisible by no leading monomial
  std::vector<Mono> lms;
  for (auto& g : basis) lms.push_back(g.rbegin()->first);
  // zero-dimensionality: every variable needs a pure power among the LMs
  for (int v = 0; v < n; ++v) {
    bool found = false;
    for (auto& lm : lms) {
      bool pure = lm[static_cast<std::size_t>(v)] > 0;
      for (int u = 0; pure && u < n; ++u)
        if (u != v && lm[static_cast<std::size_t>(u)] > 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found)
      fail("InternalError", "quotient is not finite-dimensional over variable " +
                                std::to_string(v + 1));
  }
  std::set<Mono> seen;
  std::deque<Mono> queue;
  Mono origin(static_cast<std::size_t>(n), 0);
  seen.insert(origin);
  queue.push_back(origin);
  long long count = 0;
  while (!queue.empty()) {
    Mono m = queue.front();
    queue.pop_front();
    bool standard = true;
    for (auto& lm : lms)
      if (divides(lm, m)) {
        standard = false;
        break;
      }
    if (!standard) continue;
    ++count;
    for (int v = 0; v < n; ++v) {
      Mono mm = m;
      mm[static_cast<std::size_t>(v)] += 1;
      if (seen.insert(mm).second) queue.push_back(mm);
    }
  }
  return count;
}

} // namespace blobcalc
