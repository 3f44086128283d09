#include "blobcalc/dotline.hpp"

#include "blobcalc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace blobcalc {

DotLineElement DotLineElement::unit(int rank) {
  DotLineElement e(rank);
  e.terms_[0] = 1;
  return e;
}

DotLineElement DotLineElement::generator(int rank, int i) {
  if (i < 1 || i > rank)
    fail("IndexOutOfRange", "generator X_" + std::to_string(i) +
                                " out of range for rank " + std::to_string(rank));
  DotLineElement e(rank);
  e.terms_[1u << (i - 1)] = 1;
  return e;
}

DotLineElement& DotLineElement::add_term(std::uint32_t mask, long long c) {
  if (c == 0) return *this;
  auto it = terms_.emplace(mask, 0).first;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
  return *this;
}

DotLineElement operator+(const DotLineElement& a, const DotLineElement& b) {
  if (a.rank_ != b.rank_) fail("RankMismatch", "adding elements of different ranks");
  DotLineElement out = a;
  for (auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

DotLineElement operator*(long long c, const DotLineElement& a) {
  DotLineElement out(a.rank_);
  if (c != 0)
    for (auto& [m, x] : a.terms_) out.terms_[m] = c * x;
  return out;
}

namespace {

// X_i * X^mask in normal form, with i possibly already in mask. Indices
// strictly decrease in the recursion, so it terminates.
void gen_times_mask(int i, std::uint32_t mask, long long coeff, DotLineElement& acc) {
  std::uint32_t bit = 1u << (i - 1);
  if (!(mask & bit)) {
    acc.add_term(mask | bit, coeff);
    return;
  }
  if (i == 1) return; // X_1^2 = 0
  for (int j = 1; j < i; ++j) gen_times_mask(j, mask, -2 * coeff, acc);
}

} // namespace

DotLineElement operator*(const DotLineElement& a, const DotLineElement& b) {
  if (a.rank_ != b.rank_) fail("RankMismatch", "multiplying elements of different ranks");
  DotLineElement out(a.rank_);
  for (auto& [ma, ca] : a.terms_) {
    for (auto& [mb, cb] : b.terms_) {
      // multiply X^mb by the generators of ma one at a time
      DotLineElement cur(a.rank_);
      cur.add_term(mb, ca * cb);
      for (int i = 1; i <= a.rank_; ++i) {
        if (!(ma & (1u << (i - 1)))) continue;
        DotLineElement next(a.rank_);
        for (auto& [m, c] : cur.terms()) gen_times_mask(i, m, c, next);
        cur = std::move(next);
      }
      for (auto& [m, c] : cur.terms()) out.add_term(m, c);
    }
  }
  return out;
}

std::string DotLineElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool firstterm = true;
  for (auto& [mask, c] : terms_) {
    long long a = c;
    if (!firstterm) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    firstterm = false;
    if (mask == 0) {
      os << a;
      continue;
    }
    if (a != 1 && a != -1) os << a << "*";
    else if (a == -1) os << "-";
    bool firstvar = true;
    for (int i = 1; i <= rank_; ++i) {
      if (!(mask & (1u << (i - 1)))) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << "X" << i;
    }
  }
  return os.str();
}

namespace {

// Rewrites move weight from a position to a strictly lower one, so they
// strictly decrease monomials under right-to-left lexicographic order.
// Processing the largest pending monomial first therefore touches each
// distinct monomial once, with coefficients merged.
struct RevLexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

} // namespace

DotLineElement normal_form_choosing(
    int rank, const std::vector<int>& exponents,
    const std::function<std::size_t(const std::vector<std::size_t>&)>& pick) {
  if (static_cast<int>(exponents.size()) != rank)
    fail("RankMismatch", "exponent vector length does not match rank");
  DotLineElement out(rank);
  std::map<std::vector<int>, long long, RevLexGreater> pending;
  pending.emplace(exponents, 1);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::vector<int>& e = node.key();
    long long c = node.mapped();
    if (c == 0) continue;
    std::vector<std::size_t> squared;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] >= 2) squared.push_back(i);
    if (squared.empty()) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] == 1) mask |= 1u << i;
      out.add_term(mask, c);
      continue;
    }
    std::size_t i = pick(squared);
    if (i == 0) continue; // X_1^2 = 0
    for (std::size_t j = 0; j < i; ++j) {
      auto e2 = e;
      e2[i] -= 1;
      e2[j] += 1;
      pending[std::move(e2)] += -2 * c;
    }
  }
  return out;
}

DotLineElement normal_form(int rank, const std::vector<int>& exponents) {
  return normal_form_choosing(rank, exponents,
                              [](const std::vector<std::size_t>& sq) { return sq.back(); });
}

bool ordering_annihilation_check(int n) {
  if (n < 1 || n > 10)
    fail("BoundExceeded", "ordering_annihilation_check supports 1 <= n <= 10");
  const std::uint32_t size = 1u << n;
  const std::uint32_t full = size - 1;

  // Memoized expansion of X_i * X^mask in the square-free basis.
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, long long>>>> exp_tab(
      static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i)
    exp_tab[static_cast<std::size_t>(i)].resize(size);
  std::vector<std::vector<char>> ready(static_cast<std::size_t>(n) + 1,
                                       std::vector<char>(size, 0));
  std::vector<long long> scratch(size, 0);
  auto expansion = [&](auto&& self, int i,
                       std::uint32_t mask) -> const std::vector<std::pair<std::uint32_t, long long>>& {
    auto& slot = exp_tab[static_cast<std::size_t>(i)][mask];
    if (ready[static_cast<std::size_t>(i)][mask]) return slot;
    std::uint32_t bit = 1u << (i - 1);
    if (!(mask & bit)) {
      slot.emplace_back(mask | bit, 1);
    } else if (i > 1) {
      std::fill(scratch.begin(), scratch.end(), 0);
      for (int j = 1; j < i; ++j)
        for (auto& [m, c] : self(self, j, mask)) scratch[m] += -2 * c;
      for (std::uint32_t m = 0; m < size; ++m)
        if (scratch[m] != 0) slot.emplace_back(m, scratch[m]);
    }
    ready[static_cast<std::size_t>(i)][mask] = 1;
    return slot;
  };

  // Every product with a generator raises the square-free degree by
  // exactly one, so a product of more than n generators is zero. This
  // settles the pairs where beta dominates alpha in degree; verify the
  // step exhaustively.
  for (int i = 1; i <= n; ++i)
    for (std::uint32_t mask = 0; mask < size; ++mask)
      for (auto& [m, c] : expansion(expansion, i, mask))
        if (__builtin_popcount(m) != __builtin_popcount(mask) + 1) return false;

  // Equal-degree domination: the product depends only on the positions
  // where beta carries the square (2), alpha-hat the gap (0), and both a
  // single factor (1). beta dominates lexicographically exactly when the
  // lowest square sits before the lowest gap; those keys must vanish.
  // The key without squares is X^(1,...,1).
  std::vector<long long> cur(size), nxt(size);
  auto compute_product = [&](std::uint32_t twos, std::uint32_t zeros) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[0] = 1;
    for (int i = 1; i <= n; ++i) {
      std::uint32_t bit = 1u << (i - 1);
      int times = (twos & bit) ? 2 : ((zeros & bit) ? 0 : 1);
      for (int rep = 0; rep < times; ++rep) {
        std::fill(nxt.begin(), nxt.end(), 0);
        bool any = false;
        for (std::uint32_t m = 0; m < size; ++m) {
          if (cur[m] == 0) continue;
          for (auto& [m2, c2] : expansion(expansion, i, m)) {
            nxt[m2] += cur[m] * c2;
            any = true;
          }
        }
        cur.swap(nxt);
        if (!any) return;
      }
    }
  };
  auto product_is_zero = [&](std::uint32_t twos, std::uint32_t zeros) {
    compute_product(twos, zeros);
    for (std::uint32_t m = 0; m < size; ++m)
      if (cur[m] != 0) return false;
    return true;
  };

  // all-ones key: the complementary product survives, exactly X^(1,...,1)
  compute_product(0, 0);
  for (std::uint32_t m = 0; m < size; ++m)
    if (cur[m] != (m == full ? 1 : 0)) return false;

  for (std::uint32_t twos = 1; twos <= full; ++twos) {
    int k = __builtin_popcount(twos);
    std::uint32_t rest = full & ~twos;
    // submasks of rest with popcount k, gap starting after the square
    for (std::uint32_t zeros = rest;; zeros = (zeros - 1) & rest) {
      if (zeros != 0 && __builtin_popcount(zeros) == k &&
          __builtin_ctz(twos) < __builtin_ctz(zeros) &&
          !product_is_zero(twos, zeros))
        return false;
      if (zeros == 0) break;
    }
  }
  return true;
}

} // namespace blobcalc
