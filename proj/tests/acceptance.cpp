// Acceptance suite: one pass/fail line per criterion, exact checks only.

#include "blobcalc/bridge.hpp"
#include "blobcalc/errors.hpp"
#include "blobcalc/grid.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

using namespace blobcalc;
namespace orc = blobcalc::oracles;

namespace {

std::vector<Params> grid_frames() {
  std::vector<Params> frames;
  for (auto [l, m] : {std::pair{5, 2}, {5, 3}, {7, 2}, {7, 3}, {7, 4}, {9, 2}})
    frames.push_back(validate_params(l, m));
  return frames;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

template <typename Fn>
void criterion(int id, const char* name, double budget_ms, Fn&& fn) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    fn(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (budget_ms > 0 && ms > budget_ms) {
    out.pass = false;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += "runtime budget exceeded";
  }
  if (!out.pass) ++failures;
  std::printf("[%s] criterion %2d: %s (%.1f ms)%s%s\n", out.pass ? "PASS" : "FAIL",
              id, name, ms, out.detail.empty() ? "" : " -- ",
              out.detail.c_str());
  std::fflush(stdout);
}

void expect(Outcome& out, bool cond, const std::string& what) {
  if (!cond && out.pass) {
    out.pass = false;
    out.detail = what;
  }
}

bool matches_forbidden_pattern(const std::vector<int>& seq, const Params& p) {
  long long n = static_cast<long long>(seq.size());
  if (n >= 2) {
    if (seq[0] == p.k && seq[1] == p.residue(p.k - 1)) return true;
    if (seq[0] == p.residue(-p.k) && seq[1] == p.residue(-p.k - 1)) return true;
  }
  for (long long r = 0; r + 2 < n; ++r) {
    auto ur = static_cast<std::size_t>(r);
    if (seq[ur] == seq[ur + 1] && seq[ur] == p.residue(seq[ur + 2] + 1)) return true;
    if (seq[ur + 1] == seq[ur + 2] && seq[ur + 1] == p.residue(seq[ur] - 1)) return true;
  }
  return false;
}

} // namespace

int main() {
  const auto frames = grid_frames();
  const int jobs =
      std::max(1, static_cast<int>(std::thread::hardware_concurrency()));

  // The grid sweep backs criteria 5, 8, 9 and 10; run it once.
  std::vector<GridCellResult> grid;
  double grid_ms = 0;
  {
    auto t0 = std::chrono::steady_clock::now();
    grid = run_grid(frames, 40, jobs, 12);
    auto t1 = std::chrono::steady_clock::now();
    grid_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  }

  criterion(1, "residue sequence golden values", 1.0, [&](Outcome& out) {
    Params p = validate_params(5, 2);
    expect(out,
           residue_sequence(Bipartition{6, 3}, p) ==
               std::vector<int>{4, 1, 0, 2, 1, 3, 4, 0, 1},
           "lambda=(6,3)");
    expect(out,
           residue_sequence(Bipartition{18, 3}, p) ==
               std::vector<int>{4, 1, 0, 2, 1, 3, 4, 0, 1, 2, 3,
                                4, 0, 1, 2, 3, 4, 0, 1, 2, 3},
           "lambda=(18,3)");
  });

  criterion(2, "walk/box residue agreement and class = residue fibre, n <= 12",
            30000.0, [&](Outcome& out) {
    for (const Params& p : frames) {
      for (long long n = 1; n <= 12 && out.pass; ++n) {
        std::map<std::vector<int>, std::set<Walk>> fibres;
        for (const auto& t : enumerate_std_n(n)) {
          Walk w = walk_of(t);
          auto box = residue_sequence(t, p);
          if (box != walk_residues(w, p)) {
            expect(out, false, "residue formulas disagree at n=" + std::to_string(n));
            break;
          }
          fibres[box].insert(std::move(w));
        }
        for (auto& [seq, walks] : fibres) {
          auto cls = equivalence_class(*walks.begin(), p);
          if (std::set<Walk>(cls.begin(), cls.end()) != walks) {
            expect(out, false,
                   "reflection class != residue fibre at n=" + std::to_string(n) +
                       ", l=" + std::to_string(p.l) + ", m=" + std::to_string(p.m));
            break;
          }
        }
      }
    }
  });

  criterion(3, "rejected patterns and realizability vs Std(n), n <= 12", 0,
            [&](Outcome& out) {
    std::mt19937 rng(240811);
    for (const Params& p : frames) {
      for (long long n = 1; n <= 12 && out.pass; ++n) {
        std::set<std::vector<int>> realizable;
        for (const auto& t : enumerate_std_n(n))
          realizable.insert(residue_sequence(t, p));
        for (const auto& seq : realizable) {
          expect(out, !matches_forbidden_pattern(seq, p),
                 "realizable sequence matches a forbidden pattern");
          auto witness = is_residue_sequence(seq, p);
          expect(out, witness && residue_sequence(*witness, p) == seq,
                 "realizable sequence rejected at n=" + std::to_string(n));
        }
        auto check_seq = [&](const std::vector<int>& seq) {
          bool accepted = is_residue_sequence(seq, p).has_value();
          expect(out, accepted == (realizable.count(seq) > 0),
                 "acceptance disagrees with enumeration at n=" + std::to_string(n));
          if (matches_forbidden_pattern(seq, p))
            expect(out, !accepted, "forbidden pattern accepted");
        };
        if (n <= 5) {
          // exhaustive over I^n
          std::vector<int> seq(static_cast<std::size_t>(n), 0);
          while (out.pass) {
            check_seq(seq);
            std::size_t i = 0;
            while (i < seq.size() && seq[i] == p.l - 1) seq[i++] = 0;
            if (i == seq.size()) break;
            ++seq[i];
          }
        } else {
          // all single-entry mutations of realizable sequences
          for (const auto& seq : realizable) {
            for (std::size_t i = 0; i < seq.size() && out.pass; ++i) {
              auto mutated = seq;
              for (int v = 0; v < p.l; ++v) {
                mutated[i] = v;
                check_seq(mutated);
              }
            }
            if (!out.pass) break;
          }
          // random sequences
          std::uniform_int_distribution<int> dist(0, p.l - 1);
          for (int round = 0; round < 2000 && out.pass; ++round) {
            std::vector<int> seq(static_cast<std::size_t>(n));
            for (auto& v : seq) v = dist(rng);
            check_seq(seq);
          }
        }
      }
    }
  });

  criterion(4, "hook-word golden tests; reduced and 321-avoiding outputs", 0,
            [&](Outcome& out) {
    auto d1 = d_of(Bitableau::parse("2,2,2,2,1,2,1"));
    expect(out, d1.perm == Permutation::from_word({4, 3, 2, 6, 5, 4}, 7),
           "d(t) != s4 s3 s2 s6 s5 s4");
    std::vector<int> word15{6, 5, 7, 4, 6, 8, 3, 5, 7, 2, 4, 6, 1, 3, 5};
    Permutation sigma = Permutation::from_word(word15, 9);
    auto d2 = d_of(apply(sigma, tmax({6, 3})));
    expect(out, d2.perm == sigma, "15-crossing golden word");
    for (long long n = 1; n <= 9 && out.pass; ++n) {
      for (const auto& t : enumerate_std_n(n)) {
        auto d = d_of(t);
        if (apply(d.perm, tmax(t.shape())) != t ||
            static_cast<long long>(d.word.size()) != d.perm.inversions() ||
            !is_321_avoiding(d.perm)) {
          expect(out, false, "failure at n=" + std::to_string(n) + ", t=" + t.str());
          break;
        }
      }
    }
  });

  criterion(5, "block factorization golden and staircase constraints", 0,
            [&](Outcome& out) {
    auto blocks = block_decomposition({23, 2}, validate_params(7, 3));
    expect(out, blocks.size() == 3, "expected 3 blocks");
    if (blocks.size() == 3) {
      expect(out, blocks[0] == std::vector<int>{8, 7, 6, 5, 9, 8, 7, 10, 9, 11},
             "block 1");
      expect(out, blocks[1] == std::vector<int>{15, 14, 16}, "block 2");
      expect(out, blocks[2] == std::vector<int>{22, 21, 20, 19, 23, 22, 21, 24, 23},
             "block 3");
    }
    for (const auto& cell : grid)
      if (!cell.blocks_ok) {
        expect(out, false,
               "staircase violated at l=" + std::to_string(cell.l) + ", m=" +
                   std::to_string(cell.m) + ", lambda=(" + cell.lambda.str() + ")");
        break;
      }
  });

  criterion(6, "Dot-Line dimension 2^n: oracle, ordering, confluence", 60000.0,
            [&](Outcome& out) {
    for (int n = 1; n <= 6; ++n)
      expect(out, dimension_oracle(n) == (1LL << n),
             "oracle dimension at n=" + std::to_string(n));
    for (int n = 1; n <= 10; ++n)
      expect(out, ordering_annihilation_check(n),
             "ordering annihilation at n=" + std::to_string(n));
    std::mt19937 rng(61803);
    for (int round = 0; round < 10000 && out.pass; ++round) {
      std::uniform_int_distribution<int> rank_dist(1, 8);
      int n = rank_dist(rng);
      std::vector<int> exps(static_cast<std::size_t>(n), 0);
      std::uniform_int_distribution<int> deg_dist(0, 2);
      std::uniform_int_distribution<int> pos_dist(0, n - 1);
      for (auto& e : exps) e = deg_dist(rng);
      for (int u = 0; u < 2; ++u) exps[static_cast<std::size_t>(pos_dist(rng))] += 1;
      DotLineElement canonical = normal_form(n, exps);
      auto random_pick = [&](const std::vector<std::size_t>& squared) {
        std::uniform_int_distribution<std::size_t> d(0, squared.size() - 1);
        return squared[d(rng)];
      };
      expect(out, normal_form_choosing(n, exps, random_pick) == canonical,
             "confluence failure at round " + std::to_string(round));
    }
  });

  criterion(7, "light leaves: counts, top multiset, unique top degree", 0,
            [&](Outcome& out) {
    for (Letter f : {Letter::S, Letter::T}) {
      DihedralElement w3 = DihedralElement::word(3, f);
      auto tops = top_polynomials(w3);
      std::vector<long long> sizes;
      for (auto& [x, g] : tops) sizes.push_back(g.eval_at_one());
      std::sort(sizes.rbegin(), sizes.rend());
      expect(out, sizes == std::vector<long long>{2, 2, 1, 1, 1, 1},
             "top multiset at l(w)=3");
      expect(out, graded_dim_soergel(w3).eval_at_one() == 12, "dim A_w != 12");
      for (int len = 1; len <= 16 && out.pass; ++len) {
        DihedralElement w = DihedralElement::word(len, f);
        long long leaves = 0, top_degree = 0;
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
          LightLeaf leaf = leaf_from_bits(w, bits);
          ++leaves;
          if (leaf.degree == len) ++top_degree;
          if (leaf.degree > len) top_degree = -1000;
        }
        expect(out, leaves == (1LL << len), "leaf count");
        expect(out, top_degree == 1,
               "degree-l(w) leaf not unique at l(w)=" + std::to_string(len));
      }
    }
  });

  criterion(8, "graded bijection b_n(lambda) = A_w over the full grid", 300000.0,
            [&](Outcome& out) {
    long long cells = 0;
    for (const auto& cell : grid) {
      ++cells;
      if (!cell.bijection_ok) {
        expect(out, false,
               "bijection failed at l=" + std::to_string(cell.l) + ", m=" +
                   std::to_string(cell.m) + ", lambda=(" + cell.lambda.str() +
                   "): " + cell.note);
        break;
      }
    }
    expect(out, cells > 3000, "grid unexpectedly small");
    expect(out, grid_ms < 300000.0, "grid sweep exceeded 5 minutes");
    if (out.pass)
      out.detail = std::to_string(cells) + " cells, sweep " +
                   std::to_string(static_cast<long long>(grid_ms)) + " ms";
  });

  criterion(9, "wall-contact claim for transposed residue sequences", 0,
            [&](Outcome& out) {
    for (const auto& cell : grid)
      if (!cell.wall_claim_ok) {
        expect(out, false,
               "claim violated at l=" + std::to_string(cell.l) + ", m=" +
                   std::to_string(cell.m) + ", lambda=(" + cell.lambda.str() + ")");
        break;
      }
  });

  criterion(10, "central element degree 2(q+1) across the grid", 0,
            [&](Outcome& out) {
    for (const auto& cell : grid)
      if (!cell.central_ok) {
        expect(out, false,
               "degree mismatch at l=" + std::to_string(cell.l) + ", m=" +
                   std::to_string(cell.m) + ", lambda=(" + cell.lambda.str() + ")");
        break;
      }
  });

  criterion(11, "KL closed form vs recursion; decomposition matrix shape", 0,
            [&](Outcome& out) {
    orc::KlOracle oracle;
    auto elems = orc::elements_up_to(8);
    for (const auto& x : elems)
      for (const auto& y : elems)
        expect(out, kl_h(x, y) == oracle.h(x, y),
               "kl_h(" + x.str() + ", " + y.str() + ")");
    for (const Params& p : frames) {
      Alcoves alc(p);
      for (long long n : {8LL, 12LL}) {
        DecompositionMatrix mat = decomposition_matrix(n, p);
        for (std::size_t i = 0; i < mat.points.size() && out.pass; ++i) {
          if (mat.on_wall[i]) continue;
          expect(out, mat.entries[i][i] == Laurent::one(), "diagonal entry != 1");
          for (std::size_t j = 0; j < mat.points.size(); ++j) {
            if (mat.on_wall[j]) continue;
            const Laurent& entry = mat.entries[i][j];
            if (!alc.same_orbit(mat.points[i], mat.points[j]))
              expect(out, entry.is_zero(), "off-orbit entry nonzero");
            else if (!entry.is_zero()) {
              DihedralElement x = alc.alcove_of(Rational(mat.points[i]));
              DihedralElement y = alc.alcove_of(Rational(mat.points[j]));
              expect(out, x.length <= y.length, "unitriangularity violated");
            }
          }
        }
      }
    }
  });

  if (failures == 0) std::printf("acceptance: all criteria passed\n");
  else std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
