#include "blobcalc/tableaux.hpp"

#include "blobcalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace blobcalc {

std::string Bipartition::str() const {
  return std::to_string(first) + "," + std::to_string(second);
}

Bipartition Bipartition::parse(const std::string& text) {
  auto pos = text.find(',');
  if (pos == std::string::npos)
    fail("ParseError", "bipartition must be \"a,b\", got \"" + text + "\"");
  try {
    Bipartition b{std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 1))};
    if (b.first < 0 || b.second < 0)
      fail("ParseError", "bipartition parts must be nonnegative: \"" + text + "\"");
    return b;
  } catch (const std::invalid_argument&) {
    fail("ParseError", "bipartition must be \"a,b\", got \"" + text + "\"");
  } catch (const std::out_of_range&) {
    fail("ParseError", "bipartition out of range: \"" + text + "\"");
  }
}

Bipartition Bitableau::shape() const {
  Bipartition s;
  for (auto c : comp) (c == 1 ? s.first : s.second)++;
  return s;
}

std::string Bitableau::str() const {
  std::string out;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back(static_cast<char>('0' + comp[i]));
  }
  return out;
}

Bitableau Bitableau::parse(const std::string& text) {
  Bitableau t;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok == "1") t.comp.push_back(1);
    else if (tok == "2") t.comp.push_back(2);
    else fail("ParseError", "tableau components must be 1 or 2, got \"" + tok + "\"");
  }
  return t;
}

Bitableau tmax(const Bipartition& lambda) {
  long long n = lambda.size();
  long long mu = std::min(lambda.first, lambda.second);
  std::uint8_t rest = lambda.first >= lambda.second ? 1 : 2;
  Bitableau t;
  t.comp.resize(static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i)
    t.comp[static_cast<std::size_t>(i - 1)] =
        i <= 2 * mu ? (i % 2 == 1 ? 2 : 1) : rest;
  return t;
}

Walk walk_of(const Bitableau& t) {
  Walk w;
  w.pos.reserve(t.comp.size() + 1);
  w.pos.push_back(0);
  for (auto c : t.comp) w.pos.push_back(w.pos.back() + (c == 1 ? 1 : -1));
  return w;
}

Bitableau tableau_of(const Walk& w) {
  Bitableau t;
  t.comp.reserve(w.pos.size() - 1);
  for (std::size_t i = 1; i < w.pos.size(); ++i)
    t.comp.push_back(w.pos[i] > w.pos[i - 1] ? 1 : 2);
  return t;
}

std::vector<int> residue_sequence(const Bitableau& t, const Params& p) {
  std::vector<int> res;
  res.reserve(t.comp.size());
  long long col1 = 0, col2 = 0;
  for (auto c : t.comp) {
    if (c == 1) res.push_back(p.residue(p.k + col1++));
    else res.push_back(p.residue(-p.k + col2++));
  }
  return res;
}

std::vector<int> residue_sequence(const Bipartition& lambda, const Params& p) {
  return residue_sequence(tmax(lambda), p);
}

std::vector<int> walk_residues(const Walk& w, const Params& p) {
  // l odd, so the congruence 2 rho = ... determines rho uniquely.
  long long inv2 = (p.l + 1) / 2;
  std::vector<int> res;
  res.reserve(w.pos.size() - 1);
  for (std::size_t i = 1; i < w.pos.size(); ++i) {
    long long two_rho =
        static_cast<long long>(i) - 2 +
        static_cast<long long>(w.pos[i] - w.pos[i - 1]) * (w.pos[i] + p.m);
    res.push_back(p.residue(two_rho * inv2));
  }
  return res;
}

std::vector<Bitableau> enumerate_std(const Bipartition& lambda, long long bound) {
  long long n = lambda.size();
  if (n > bound)
    fail("BoundExceeded", "enumerate_std: n=" + std::to_string(n) +
                              " exceeds bound " + std::to_string(bound));
  std::vector<Bitableau> out;
  Bitableau t;
  t.comp.assign(static_cast<std::size_t>(n), 2);
  // choose the positions of component-1 entries
  std::vector<std::size_t> idx(static_cast<std::size_t>(lambda.first));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (lambda.first == 0) {
    out.push_back(t);
    return out;
  }
  while (true) {
    std::fill(t.comp.begin(), t.comp.end(), 2);
    for (auto i : idx) t.comp[i] = 1;
    out.push_back(t);
    // next combination
    std::size_t j = idx.size();
    while (j > 0 && idx[j - 1] == static_cast<std::size_t>(n) - idx.size() + (j - 1)) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t u = j; u < idx.size(); ++u) idx[u] = idx[u - 1] + 1;
  }
  return out;
}

std::vector<Bitableau> enumerate_std_n(long long n, long long bound) {
  if (n > bound)
    fail("BoundExceeded", "enumerate_std_n: n=" + std::to_string(n) +
                              " exceeds bound " + std::to_string(bound));
  std::vector<Bitableau> out;
  out.reserve(static_cast<std::size_t>(1) << n);
  Bitableau t;
  t.comp.assign(static_cast<std::size_t>(n), 1);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    for (long long i = 0; i < n; ++i)
      t.comp[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 2 : 1;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Bitableau> is_residue_sequence(const std::vector<int>& seq,
                                             const Params& p) {
  long long n = static_cast<long long>(seq.size());
  long long inv2 = (p.l + 1) / 2;
  auto step_residue = [&](long long level, int prev, int next) {
    long long two_rho = level - 2 + static_cast<long long>(next - prev) * (next + p.m);
    return p.residue(two_rho * inv2);
  };
  // frontier of reachable positions per level, with parents for the witness
  std::map<int, int> frontier;
  frontier[0] = 0;
  std::vector<std::map<int, int>> parent(static_cast<std::size_t>(n) + 1);
  for (long long i = 1; i <= n; ++i) {
    std::map<int, int> next;
    int want = p.residue(seq[static_cast<std::size_t>(i - 1)]);
    for (auto& [pos, _] : frontier) {
      for (int np : {pos + 1, pos - 1}) {
        if (step_residue(i, pos, np) != want) continue;
        if (next.emplace(np, pos).second)
          parent[static_cast<std::size_t>(i)][np] = pos;
      }
    }
    if (next.empty()) return std::nullopt;
    frontier = std::move(next);
  }
  Walk w;
  w.pos.assign(static_cast<std::size_t>(n) + 1, 0);
  w.pos[static_cast<std::size_t>(n)] = frontier.begin()->first;
  for (long long i = n; i >= 1; --i)
    w.pos[static_cast<std::size_t>(i - 1)] =
        parent[static_cast<std::size_t>(i)][w.pos[static_cast<std::size_t>(i)]];
  return tableau_of(w);
}

std::vector<int> wall_contacts(const Walk& w, const Params& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.pos.size(); ++i)
    if (p.is_wall(w.pos[i])) out.push_back(static_cast<int>(i));
  return out;
}

Walk reflect_after(const Walk& w, int i) {
  Walk out = w;
  int c = w.pos[static_cast<std::size_t>(i)];
  for (std::size_t j = static_cast<std::size_t>(i) + 1; j < out.pos.size(); ++j)
    out.pos[j] = 2 * c - out.pos[j];
  return out;
}

std::vector<Walk> equivalence_class(const Walk& w, const Params& p) {
  std::set<Walk> seen{w};
  std::vector<Walk> frontier{w};
  while (!frontier.empty()) {
    std::vector<Walk> next;
    for (const auto& u : frontier) {
      for (int i : wall_contacts(u, p)) {
        if (i + 1 >= static_cast<int>(u.pos.size())) continue; // nothing after v_n
        Walk r = reflect_after(u, i);
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Walk fold_walk(const Walk& w, const Params& p) {
  // Track the current isometry x -> a*x + b, flipping it at each wall
  // crossing; the image stays inside [-m, l-m].
  Walk out;
  out.pos.reserve(w.pos.size());
  out.pos.push_back(w.pos[0]);
  long long a = 1, b = 0;
  const long long lo = -p.m, hi = p.l - p.m;
  for (std::size_t i = 1; i < w.pos.size(); ++i) {
    long long x = a * w.pos[i] + b;
    if (x < lo || x > hi) {
      long long wall = x < lo ? lo : hi;
      a = -a;
      b = 2 * wall - b;
      x = a * w.pos[i] + b;
    }
    out.pos.push_back(static_cast<int>(x));
  }
  return out;
}

bool has_hook(const Bitableau& t, long long k) {
  if (k < 1 || k >= t.size())
    fail("IndexOutOfRange", "hook position must satisfy 1 <= k < n");
  return t.comp[static_cast<std::size_t>(k - 1)] != t.comp[static_cast<std::size_t>(k)];
}

std::optional<Bitableau> apply_transposition(const Bitableau& t, long long k) {
  if (!has_hook(t, k)) return std::nullopt;
  Bitableau out = t;
  std::swap(out.comp[static_cast<std::size_t>(k - 1)], out.comp[static_cast<std::size_t>(k)]);
  return out;
}

LambdaData lambda_data(const Bipartition& lambda, const Params& p) {
  long long n = lambda.size();
  long long mu = std::min(lambda.first, lambda.second);
  long long a = 2 * mu + (mu == lambda.first ? p.m : p.l - p.m);
  if (n <= a)
    fail("InsideFundamentalAlcove",
         "lambda=(" + lambda.str() + ") lies inside the fundamental alcove: n=" +
             std::to_string(n) + " <= a=" + std::to_string(a));
  if ((n - a) % p.l == 0)
    fail("OnWall", "lambda=(" + lambda.str() + ") lies on a wall: n=" +
                       std::to_string(n) + " = a=" + std::to_string(a) + " mod l");
  LambdaData d;
  d.lambda = lambda;
  d.a = a;
  d.q = (n - a) / p.l;
  d.r = (n - a) % p.l;
  for (long long j = 1; j <= d.q + 1; ++j) d.levels.push_back(a + (j - 1) * p.l);
  Walk folded = fold_walk(walk_of(tmax(lambda)), p);
  d.t_central = tableau_of(folded);
  d.mu = d.t_central.shape();
  d.w = Alcoves(p).alcove_of(Rational(lambda.point()));
  return d;
}

} // namespace blobcalc
