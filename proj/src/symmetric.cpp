#include "blobcalc/symmetric.hpp"

#include "blobcalc/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace blobcalc {

Permutation Permutation::from_word(const std::vector<int>& word, long long n) {
  Permutation p(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p.left_multiply(*it);
  return p;
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
      fail("ParseError", "not a permutation in one-line notation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p(static_cast<long long>(images.size()));
  p.img_ = std::move(images);
  return p;
}

void Permutation::left_multiply(int k) {
  if (k < 1 || k >= static_cast<int>(img_.size()))
    fail("IndexOutOfRange", "generator index " + std::to_string(k) +
                                " out of range for n=" + std::to_string(img_.size()));
  for (auto& v : img_) {
    if (v == k) v = k + 1;
    else if (v == k + 1) v = k;
  }
}

long long Permutation::inversions() const {
  long long inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

bool is_321_avoiding(const Permutation& p) {
  const auto& a = p.images();
  std::size_t n = a.size();
  // look for i < j < k with a_i > a_j > a_k
  std::vector<int> suffix_min(n + 1, 1 << 30);
  for (std::size_t i = n; i-- > 0;)
    suffix_min[i] = std::min(suffix_min[i + 1], a[i]);
  int prefix_max = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (prefix_max > a[j] && a[j] > suffix_min[j + 1]) return false;
    prefix_max = std::max(prefix_max, a[j]);
  }
  return true;
}

Bitableau apply(const Permutation& sigma, const Bitableau& t) {
  if (sigma.size() != t.size())
    fail("IndexOutOfRange", "permutation size does not match tableau size");
  Bitableau out;
  out.comp.assign(t.comp.size(), 0);
  for (long long j = 1; j <= t.size(); ++j)
    out.comp[static_cast<std::size_t>(sigma(static_cast<int>(j)) - 1)] =
        t.comp[static_cast<std::size_t>(j - 1)];
  return out;
}

ReducedWordResult d_of(const Bitableau& t) {
  const Walk target = walk_of(t);
  Walk cur = walk_of(tmax(t.shape()));
  const long long n = t.size();
  std::vector<int> chrono;
  while (cur != target) {
    bool made = false;
    for (long long k = n - 1; k >= 1; --k) {
      auto uk = static_cast<std::size_t>(k);
      if (cur.pos[uk - 1] != cur.pos[uk + 1]) continue;
      int flipped = 2 * cur.pos[uk - 1] - cur.pos[uk];
      if (std::abs(flipped - target.pos[uk]) < std::abs(cur.pos[uk] - target.pos[uk])) {
        cur.pos[uk] = flipped;
        chrono.push_back(static_cast<int>(k));
        made = true;
        break;
      }
    }
    if (!made)
      fail("InternalError", "hook search stalled; tableau is not standard?");
  }
  std::vector<int> word(chrono.rbegin(), chrono.rend());
  Permutation perm = Permutation::from_word(word, n);
  return {std::move(word), std::move(perm)};
}

std::vector<std::vector<int>> block_decomposition(const Bipartition& lambda,
                                                  const Params& p) {
  LambdaData d = lambda_data(lambda, p);
  std::vector<int> word = d_of(d.t_central).word;
  // Blocks have contiguous generator supports separated by gaps >= 2,
  // and the word is emitted block by block.
  std::vector<int> support(word);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<std::pair<int, int>> ranges; // [lo, hi] per block
  for (int g : support) {
    if (!ranges.empty() && g <= ranges.back().second + 1) ranges.back().second = g;
    else ranges.emplace_back(g, g);
  }
  std::vector<std::vector<int>> blocks(ranges.size());
  for (int g : word) {
    for (std::size_t b = 0; b < ranges.size(); ++b)
      if (ranges[b].first <= g && g <= ranges[b].second) {
        blocks[b].push_back(g);
        break;
      }
  }
  return blocks;
}

long long klr_degree(const std::vector<int>& word, std::vector<int> seq,
                     const Params& p, std::vector<int>* final_seq) {
  long long deg = 0;
  long long n = static_cast<long long>(seq.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int r = *it;
    if (r < 1 || r >= n)
      fail("IndexOutOfRange", "word letter " + std::to_string(r) +
                                  " out of range for sequence of length " +
                                  std::to_string(n));
    auto ur = static_cast<std::size_t>(r);
    deg -= cartan(p, seq[ur - 1], seq[ur]);
    std::swap(seq[ur - 1], seq[ur]);
  }
  if (final_seq) *final_seq = std::move(seq);
  return deg;
}

} // namespace blobcalc
