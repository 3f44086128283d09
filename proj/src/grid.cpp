#include "blobcalc/grid.hpp"

#include "blobcalc/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace blobcalc {

bool check_blocks_staircase(const Bipartition& lambda, const Params& p,
                            std::string* why) {
  auto explain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  LambdaData d = lambda_data(lambda, p);
  auto blocks = block_decomposition(lambda, p);
  if (static_cast<long long>(blocks.size()) != d.q + 1)
    return explain("expected " + std::to_string(d.q + 1) + " blocks, got " +
                   std::to_string(blocks.size()));
  std::vector<int> concat;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& word = blocks[b];
    if (word.empty()) return explain("empty block");
    // parse maximal descending-by-one runs (s_k s_{k-1} ... s_j)
    std::vector<std::pair<int, int>> runs; // (k, j)
    runs.emplace_back(word[0], word[0]);
    for (std::size_t u = 1; u < word.size(); ++u) {
      if (word[u] == runs.back().second - 1) runs.back().second = word[u];
      else runs.emplace_back(word[u], word[u]);
    }
    if (runs.front().first != d.levels[b])
      return explain("block " + std::to_string(b + 1) + " does not start at level " +
                     std::to_string(d.levels[b]));
    for (std::size_t a = 0; a < runs.size(); ++a) {
      auto [k, j] = runs[a];
      if (k < j) return explain("run not descending");
      if (a > 0) {
        if (k != runs[a - 1].first + 1) return explain("run tops must step by 1");
        if (j != runs[a - 1].second + 2) return explain("run bottoms must step by 2");
      }
      if (k - j > p.l - (static_cast<int>(a) + 3))
        return explain("staircase width bound violated at run " + std::to_string(a + 1));
    }
    concat.insert(concat.end(), word.begin(), word.end());
  }
  // disjoint supports with gaps >= 2 make the blocks commute
  for (std::size_t a = 0; a + 1 < blocks.size(); ++a) {
    int hi = *std::max_element(blocks[a].begin(), blocks[a].end());
    int lo = *std::min_element(blocks[a + 1].begin(), blocks[a + 1].end());
    if (lo - hi < 2) return explain("block supports too close to commute");
  }
  auto direct = d_of(d.t_central);
  if (!(Permutation::from_word(concat, lambda.size()) == direct.perm))
    return explain("block product differs from d(t_lambda)");
  if (static_cast<long long>(concat.size()) != direct.perm.inversions())
    return explain("block word not reduced");
  return true;
}

bool check_wall_claim(const Bipartition& lambda, const Params& p, std::string* why) {
  LambdaData d = lambda_data(lambda, p);
  long long n = lambda.size();
  long long mu = std::min(lambda.first, lambda.second);
  auto seq = residue_sequence(lambda, p);
  for (long long r = 2 * mu + 1; r < n; ++r) {
    auto s = seq;
    std::swap(s[static_cast<std::size_t>(r - 1)], s[static_cast<std::size_t>(r)]);
    if (is_residue_sequence(s, p) && (r - d.a) % p.l != 0) {
      if (why)
        *why = "s_" + std::to_string(r) + " i^lambda realizable but r != a mod l";
      return false;
    }
  }
  return true;
}

bool check_residue_fibres(const Params& p, long long n, std::string* why) {
  std::map<std::vector<int>, std::set<Walk>> fibres;
  for (const auto& t : enumerate_std_n(n)) {
    Walk w = walk_of(t);
    auto box = residue_sequence(t, p);
    if (box != walk_residues(w, p)) {
      if (why) *why = "residue formulas disagree at t=" + t.str();
      return false;
    }
    fibres[std::move(box)].insert(std::move(w));
  }
  for (auto& [seq, walks] : fibres) {
    auto cls = equivalence_class(*walks.begin(), p);
    if (std::set<Walk>(cls.begin(), cls.end()) != walks) {
      if (why) *why = "reflection class differs from residue fibre at n=" +
                      std::to_string(n);
      return false;
    }
  }
  return true;
}

std::vector<GridCellResult> run_grid(const std::vector<Params>& frames,
                                     long long n_max, int jobs, int length_bound) {
  struct Cell {
    Params p;
    Bipartition lambda;
  };
  std::vector<Cell> cells;
  for (const auto& p : frames) {
    for (long long n = 1; n <= n_max; ++n) {
      for (long long a = 0; a <= n; ++a) {
        Bipartition lambda{a, n - a};
        long long mu = std::min(lambda.first, lambda.second);
        long long al = 2 * mu + (mu == lambda.first ? p.m : p.l - p.m);
        if (n <= al || (n - al) % p.l == 0) continue;
        if ((n - al) / p.l + 1 > length_bound) continue;
        cells.push_back({p, lambda});
      }
    }
  }
  std::vector<GridCellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) break;
      const auto& cell = cells[i];
      GridCellResult& r = results[i];
      r.l = cell.p.l;
      r.m = cell.p.m;
      r.lambda = cell.lambda;
      try {
        LambdaData d = lambda_data(cell.lambda, cell.p);
        r.q = d.q;
        auto rep = verify_bijection(cell.lambda, cell.p, length_bound);
        r.count = rep.count_b;
        r.bijection_ok = rep.ok();
        if (!r.bijection_ok && rep.first_mismatch) r.note = *rep.first_mismatch;
        r.central_ok =
            central_element_degree(cell.lambda, cell.p) == 2 * (d.q + 1);
        std::string why;
        r.blocks_ok = check_blocks_staircase(cell.lambda, cell.p, &why);
        if (!r.blocks_ok) r.note = why;
        r.wall_claim_ok = check_wall_claim(cell.lambda, cell.p, &why);
        if (!r.wall_claim_ok) r.note = why;
      } catch (const DomainError& e) {
        r.note = std::string(e.code()) + ": " + e.what();
      }
    }
  };
  if (jobs < 1) jobs = 1;
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

} // namespace blobcalc
