// blobcalc command line: every operation of the library behind one batch
// front end with JSON (or CSV) output. Exit codes: 0 ok, 1 domain error,
// 2 usage error.

#include "blobcalc/bridge.hpp"
#include "blobcalc/errors.hpp"
#include "blobcalc/grid.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <thread>

using nlohmann::json;
using namespace blobcalc;

namespace {

json laurent_json(const Laurent& p) {
  json out = json::array();
  for (auto [e, c] : p.pairs()) out.push_back(json::array({e, c}));
  return out;
}

json element_json(const DotLineElement& e) {
  json out = json::array();
  for (auto& [mask, c] : e.terms()) out.push_back(json::array({mask, c}));
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail("ParseError", std::string(what) + ": bad integer \"" + tok + "\"");
    }
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  int l = 0, m = 0;
  long long n = 0;
  std::string lambda_text, tab_text, seq_text, word_text, top_text, exp_text;
  long long bound = -1; // per-command default
  int jobs = 1;
  bool csv = false;
  bool oracle = false;
  bool ordering = false;
};

Params params_of(const Options& o) { return validate_params(o.l, o.m); }

void cmd_params_check(const Options& o) {
  Params p = params_of(o);
  emit({{"l", p.l}, {"m", p.m}, {"k", p.k}});
}

void cmd_residues(const Options& o) {
  Params p = params_of(o);
  if (o.tab_text.empty() && o.lambda_text.empty())
    fail("UsageError", "residues requires --lambda or --tab");
  std::vector<int> seq;
  if (!o.tab_text.empty()) seq = residue_sequence(Bitableau::parse(o.tab_text), p);
  else seq = residue_sequence(Bipartition::parse(o.lambda_text), p);
  emit(json(seq));
}

void cmd_std_enum(const Options& o) {
  if (o.lambda_text.empty() && o.n == 0)
    fail("UsageError", "std-enum requires --lambda or --n");
  long long bound = o.bound < 0 ? 22 : o.bound;
  std::vector<Bitableau> tabs;
  if (!o.lambda_text.empty())
    tabs = enumerate_std(Bipartition::parse(o.lambda_text), bound);
  else
    tabs = enumerate_std_n(o.n, bound);
  json list = json::array();
  for (const auto& t : tabs) list.push_back(t.str());
  emit({{"count", tabs.size()}, {"tableaux", list}});
}

void cmd_isp(const Options& o) {
  Params p = params_of(o);
  auto witness = is_residue_sequence(parse_int_list(o.seq_text, "--seq"), p);
  json out{{"residue_sequence", witness.has_value()}};
  if (witness) {
    out["witness"] = witness->str();
    out["shape"] = witness->shape().str();
  }
  emit(out);
}

void cmd_class(const Options& o) {
  Params p = params_of(o);
  if (o.tab_text.empty() && o.lambda_text.empty())
    fail("UsageError", "class requires --lambda or --tab");
  Walk start = o.tab_text.empty()
                   ? walk_of(tmax(Bipartition::parse(o.lambda_text)))
                   : walk_of(Bitableau::parse(o.tab_text));
  auto cls = equivalence_class(start, p);
  json walks = json::array();
  json shapes = json::array();
  for (const auto& w : cls) {
    walks.push_back(json(w.pos));
    shapes.push_back(tableau_of(w).shape().str());
  }
  emit({{"size", cls.size()}, {"walks", walks}, {"shapes", shapes}});
}

void cmd_dtab(const Options& o) {
  Bitableau t = Bitableau::parse(o.tab_text);
  auto d = d_of(t);
  emit({{"word", d.word},
        {"one_line", d.perm.images()},
        {"reduced", static_cast<long long>(d.word.size()) == d.perm.inversions()},
        {"is_321_avoiding", is_321_avoiding(d.perm)}});
}

void cmd_blocks(const Options& o) {
  Params p = params_of(o);
  Bipartition lambda = Bipartition::parse(o.lambda_text);
  LambdaData d = lambda_data(lambda, p);
  emit({{"a", d.a},
        {"q", d.q},
        {"r", d.r},
        {"levels", d.levels},
        {"mu", d.mu.str()},
        {"t_central", d.t_central.str()},
        {"w", d.w.str()},
        {"blocks", block_decomposition(lambda, p)}});
}

void cmd_dotline(const Options& o) {
  int rank = static_cast<int>(o.n);
  if (o.oracle) {
    emit({{"n", rank}, {"dimension", dimension_oracle(rank)}});
    return;
  }
  if (o.ordering) {
    emit({{"n", rank}, {"ordering_annihilation", ordering_annihilation_check(rank)}});
    return;
  }
  if (o.exp_text.empty())
    fail("UsageError", "dotline requires --exp, --oracle or --ordering-check");
  std::vector<int> exps = parse_int_list(o.exp_text, "--exp");
  DotLineElement e = normal_form(rank, exps);
  emit({{"n", rank}, {"element", element_json(e)}, {"str", e.str()}});
}

void cmd_leaves(const Options& o) {
  DihedralElement w = DihedralElement::parse(o.word_text);
  int bound = o.bound < 0 ? 24 : static_cast<int>(o.bound);
  std::vector<LightLeaf> leaves =
      o.top_text.empty() ? enumerate_leaves(w, bound)
                         : leaves_by_top(w, DihedralElement::parse(o.top_text), bound);
  json list = json::array();
  for (const auto& leaf : leaves)
    list.push_back({{"steps", leaf.decoration_str()},
                    {"top", leaf.top.str()},
                    {"degree", leaf.degree}});
  emit({{"w", w.str()}, {"count", leaves.size()}, {"leaves", list}});
}

void cmd_gdim_soergel(const Options& o) {
  DihedralElement w = DihedralElement::parse(o.word_text);
  Laurent g = graded_dim_soergel(w, o.bound < 0 ? 24 : static_cast<int>(o.bound));
  emit({{"w", w.str()},
        {"graded_dim", laurent_json(g)},
        {"dim", g.eval_at_one()}});
}

void cmd_gdim_blob(const Options& o) {
  Params p = params_of(o);
  Bipartition lambda = Bipartition::parse(o.lambda_text);
  Laurent g = graded_dim_blob(lambda, p);
  emit({{"lambda", lambda.str()},
        {"graded_dim", laurent_json(g)},
        {"dim", g.eval_at_one()}});
}

void cmd_verify_bijection(const Options& o) {
  Params p = params_of(o);
  Bipartition lambda = Bipartition::parse(o.lambda_text);
  BijectionReport rep = verify_bijection(lambda, p, o.bound < 0 ? 24 : static_cast<int>(o.bound));
  json f = json::object();
  for (auto& [mu, x] : rep.f_table) f[mu.str()] = x.str();
  json out{{"lambda", rep.lambda.str()},
           {"w", rep.w.str()},
           {"count_b", rep.count_b},
           {"count_A", rep.count_A},
           {"graded_b", laurent_json(rep.graded_b)},
           {"graded_A", laurent_json(rep.graded_A)},
           {"F", f},
           {"f_bijective", rep.f_bijective},
           {"counts_equal", rep.counts_equal},
           {"graded_equal", rep.graded_equal},
           {"degree_preserving", rep.degree_preserving},
           {"wall_convention", rep.wall_convention},
           {"ok", rep.ok()}};
  out["first_mismatch"] = rep.first_mismatch ? json(*rep.first_mismatch) : json();
  emit(out);
}

std::string laurent_cell(const Laurent& p) {
  std::string s = "[";
  bool first = true;
  for (auto [e, c] : p.pairs()) {
    if (!first) s += ",";
    first = false;
    s += "[" + std::to_string(e) + "," + std::to_string(c) + "]";
  }
  return s + "]";
}

void cmd_decomp(const Options& o) {
  Params p = params_of(o);
  DecompositionMatrix mat = decomposition_matrix(o.n, p);
  if (o.csv) {
    std::cout << "lambda\\mu";
    for (std::size_t j = 0; j < mat.points.size(); ++j)
      std::cout << "," << mat.points[j];
    std::cout << "\n";
    for (std::size_t i = 0; i < mat.points.size(); ++i) {
      std::cout << mat.points[i];
      for (std::size_t j = 0; j < mat.points.size(); ++j) {
        std::cout << ",";
        if (mat.on_wall[i] || mat.on_wall[j]) std::cout << "wall";
        else std::cout << "\"" << laurent_cell(mat.entries[i][j]) << "\"";
      }
      std::cout << "\n";
    }
    return;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < mat.points.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < mat.points.size(); ++j) {
      if (mat.on_wall[i] || mat.on_wall[j]) row.push_back("wall");
      else row.push_back(laurent_json(mat.entries[i][j]));
    }
    rows.push_back(row);
  }
  emit({{"n", o.n},
        {"points", mat.points},
        {"on_wall", mat.on_wall},
        {"entries", rows}});
}

void cmd_grid(const Options& o) {
  std::vector<Params> frames;
  if (o.l != 0 || o.m != 0) {
    frames.push_back(validate_params(o.l, o.m));
  } else {
    for (auto [l, m] : {std::pair{5, 2}, {5, 3}, {7, 2}, {7, 3}, {7, 4}, {9, 2}})
      frames.push_back(validate_params(l, m));
  }
  int jobs = o.jobs > 0 ? o.jobs
                        : static_cast<int>(std::thread::hardware_concurrency());
  auto results = run_grid(frames, o.n, jobs, o.bound < 0 ? 24 : static_cast<int>(o.bound));
  json failures = json::array();
  long long ok_cells = 0;
  for (const auto& r : results) {
    if (r.ok()) {
      ++ok_cells;
      continue;
    }
    failures.push_back({{"l", r.l},
                        {"m", r.m},
                        {"lambda", r.lambda.str()},
                        {"note", r.note}});
  }
  // exhaustive residue-fibre checks are capped at n = 12 (2^n tableaux)
  long long fibre_checks = 0;
  for (const auto& p : frames) {
    for (long long n = 1; n <= std::min<long long>(o.n, 12); ++n) {
      std::string why;
      if (check_residue_fibres(p, n, &why)) {
        ++fibre_checks;
      } else {
        failures.push_back({{"l", p.l}, {"m", p.m}, {"n", n}, {"note", why}});
      }
    }
  }
  emit({{"cells", results.size()},
        {"ok_cells", ok_cells},
        {"fibre_checks", fibre_checks},
        {"ok", failures.empty()},
        {"failures", failures}});
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of the blob algebra and the two-color "
               "Soergel calculus of the infinite dihedral group"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* c, bool required = true) {
    auto* lopt = c->add_option("--l", o.l, "odd modulus l");
    auto* mopt = c->add_option("--m", o.m, "blob parameter m, 1 <= m < l");
    if (required) {
      lopt->required();
      mopt->required();
    }
  };

  auto* pc = app.add_subcommand("params-check", "validate (l, m) and solve for k");
  add_params(pc);

  auto* rs = app.add_subcommand("residues", "residue sequence of t^lambda or a tableau");
  add_params(rs);
  rs->add_option("--lambda", o.lambda_text, "bipartition a,b");
  rs->add_option("--tab", o.tab_text, "component sequence 2,1,...");

  auto* se = app.add_subcommand("std-enum", "enumerate standard bitableaux");
  se->add_option("--n", o.n, "enumerate Std(n)");
  se->add_option("--lambda", o.lambda_text, "enumerate Std(lambda)");
  se->add_option("--bound", o.bound, "size guard (default 22)");

  auto* isp = app.add_subcommand("isp", "test whether a sequence is a residue sequence");
  add_params(isp);
  isp->add_option("--seq", o.seq_text, "residue sequence i1,i2,...")->required();

  auto* cl = app.add_subcommand("class", "reflection-equivalence class of a walk");
  add_params(cl);
  cl->add_option("--lambda", o.lambda_text, "start from walk of t^lambda");
  cl->add_option("--tab", o.tab_text, "start from walk of this tableau");

  auto* dt = app.add_subcommand("dtab", "reduced word and permutation d(t)");
  dt->add_option("--tab", o.tab_text, "component sequence 2,1,...")->required();

  auto* bl = app.add_subcommand("blocks", "block factorization of d(t_lambda)");
  add_params(bl);
  bl->add_option("--lambda", o.lambda_text, "bipartition a,b")->required();

  auto* dl = app.add_subcommand("dotline", "Dot-Line algebra computations");
  dl->add_option("--n", o.n, "rank")->required();
  dl->add_option("--exp", o.exp_text, "exponent vector e1,...,en to normalize");
  dl->add_flag("--oracle", o.oracle, "independent dimension computation (n <= 6)");
  dl->add_flag("--ordering-check", o.ordering,
               "annihilation of dominated complementary products (n <= 10)");

  auto* lv = app.add_subcommand("leaves", "light leaves of a dihedral word");
  lv->add_option("--word", o.word_text, "element, e.g. sts")->required();
  lv->add_option("--top", o.top_text, "restrict to this top");
  lv->add_option("--bound", o.bound, "length guard (default 24)");

  auto* gs = app.add_subcommand("gdim-soergel", "graded dimension of A_w");
  gs->add_option("--word", o.word_text, "element, e.g. sts")->required();
  gs->add_option("--bound", o.bound, "length guard (default 24)");

  auto* gb = app.add_subcommand("gdim-blob", "graded dimension of b_n(lambda)");
  add_params(gb);
  gb->add_option("--lambda", o.lambda_text, "bipartition a,b")->required();

  auto* vb = app.add_subcommand("verify-bijection",
                                "cell basis vs double leaves correspondence");
  add_params(vb);
  vb->add_option("--lambda", o.lambda_text, "bipartition a,b")->required();
  vb->add_option("--bound", o.bound, "length guard (default 24)");

  auto* dc = app.add_subcommand("decomp", "predicted graded decomposition matrix");
  add_params(dc);
  dc->add_option("--n", o.n, "weight range -n..n")->required();
  dc->add_flag("--csv", o.csv, "emit CSV instead of JSON");

  auto* gr = app.add_subcommand("grid", "sweep (l, m, lambda) cells and aggregate checks");
  add_params(gr, /*required=*/false);
  gr->add_option("--n", o.n, "maximal n")->required();
  gr->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
  gr->add_option("--bound", o.bound, "length guard (default 24)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pc->parsed()) cmd_params_check(o);
    else if (rs->parsed()) cmd_residues(o);
    else if (se->parsed()) cmd_std_enum(o);
    else if (isp->parsed()) cmd_isp(o);
    else if (cl->parsed()) cmd_class(o);
    else if (dt->parsed()) cmd_dtab(o);
    else if (bl->parsed()) cmd_blocks(o);
    else if (dl->parsed()) cmd_dotline(o);
    else if (lv->parsed()) cmd_leaves(o);
    else if (gs->parsed()) cmd_gdim_soergel(o);
    else if (gb->parsed()) cmd_gdim_blob(o);
    else if (vb->parsed()) cmd_verify_bijection(o);
    else if (dc->parsed()) cmd_decomp(o);
    else if (gr->parsed()) cmd_grid(o);
  } catch (const DomainError& e) {
    if (e.code() == "UsageError") {
      std::cerr << e.what() << "\n";
      return 2;
    }
    std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 0;
}
