// Python bindings for the main operations. Values cross the boundary as
// plain Python types: Laurent polynomials as [[exponent, coefficient]]
// lists, tableaux as component lists, group elements as strings.

#include "blobcalc/bridge.hpp"
#include "blobcalc/errors.hpp"
#include "blobcalc/grid.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace blobcalc;

namespace {

py::list laurent_pairs(const Laurent& p) {
  py::list out;
  for (auto [e, c] : p.pairs()) out.append(py::make_tuple(e, c));
  return out;
}

Bitableau tableau_from(const std::vector<int>& comp) {
  Bitableau t;
  for (int c : comp) {
    if (c != 1 && c != 2) fail("ParseError", "tableau components must be 1 or 2");
    t.comp.push_back(static_cast<std::uint8_t>(c));
  }
  return t;
}

std::vector<int> comp_of(const Bitableau& t) {
  return {t.comp.begin(), t.comp.end()};
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact combinatorics of the blob algebra and the two-color "
            "Soergel calculus of the infinite dihedral group";

  static py::exception<DomainError> domain_error(m, "DomainError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      domain_error(("[" + e.code() + "] " + e.what()).c_str());
    }
  });

  py::class_<Params>(m, "Params")
      .def_readonly("l", &Params::l)
      .def_readonly("m", &Params::m)
      .def_readonly("k", &Params::k)
      .def("residue", &Params::residue)
      .def("is_wall", &Params::is_wall)
      .def("__repr__", [](const Params& p) {
        return "Params(l=" + std::to_string(p.l) + ", m=" + std::to_string(p.m) +
               ", k=" + std::to_string(p.k) + ")";
      });

  m.def("validate_params", &validate_params, py::arg("l"), py::arg("m"));
  m.def("cartan", &cartan, py::arg("params"), py::arg("i"), py::arg("j"));

  m.def("bruhat_leq", [](const std::string& x, const std::string& y) {
    return bruhat_leq(DihedralElement::parse(x), DihedralElement::parse(y));
  });
  m.def("kl_h", [](const std::string& x, const std::string& y) {
    return laurent_pairs(kl_h(DihedralElement::parse(x), DihedralElement::parse(y)));
  });
  m.def("multiply", [](const std::string& x, const std::string& y) {
    return (DihedralElement::parse(x) * DihedralElement::parse(y)).str();
  });
  m.def("alcove_of", [](const Params& p, long long num, long long den) {
    return Alcoves(p).alcove_of(Rational(num, den)).str();
  }, py::arg("params"), py::arg("num"), py::arg("den") = 1);
  m.def("act", [](const Params& p, const std::string& x, long long num, long long den) {
    Rational r = Alcoves(p).act(DihedralElement::parse(x), Rational(num, den));
    return py::make_tuple(r.num, r.den);
  }, py::arg("params"), py::arg("x"), py::arg("num"), py::arg("den") = 1);

  m.def("tmax", [](long long a, long long b) { return comp_of(tmax({a, b})); });
  m.def("residue_sequence", [](const Params& p, const std::vector<int>& comp) {
    return residue_sequence(tableau_from(comp), p);
  });
  m.def("residue_sequence_of_shape", [](const Params& p, long long a, long long b) {
    return residue_sequence(Bipartition{a, b}, p);
  });
  m.def("walk_of", [](const std::vector<int>& comp) {
    return walk_of(tableau_from(comp)).pos;
  });
  m.def("tableau_of", [](const std::vector<int>& pos) {
    Walk w;
    w.pos = pos;
    return comp_of(tableau_of(w));
  });
  m.def("enumerate_std", [](long long a, long long b, long long bound) {
    py::list out;
    for (const auto& t : enumerate_std(Bipartition{a, b}, bound))
      out.append(comp_of(t));
    return out;
  }, py::arg("a"), py::arg("b"), py::arg("bound") = 22);
  m.def("enumerate_std_n", [](long long n, long long bound) {
    py::list out;
    for (const auto& t : enumerate_std_n(n, bound)) out.append(comp_of(t));
    return out;
  }, py::arg("n"), py::arg("bound") = 22);
  m.def("is_residue_sequence", [](const Params& p, const std::vector<int>& seq) -> py::object {
    auto witness = is_residue_sequence(seq, p);
    if (!witness) return py::none();
    return py::cast(comp_of(*witness));
  });
  m.def("equivalence_class", [](const Params& p, const std::vector<int>& comp) {
    py::list out;
    for (const auto& w : equivalence_class(walk_of(tableau_from(comp)), p))
      out.append(w.pos);
    return out;
  });
  m.def("lambda_data", [](const Params& p, long long a, long long b) {
    LambdaData d = lambda_data({a, b}, p);
    py::dict out;
    out["a"] = d.a;
    out["q"] = d.q;
    out["r"] = d.r;
    out["levels"] = d.levels;
    out["mu"] = py::make_tuple(d.mu.first, d.mu.second);
    out["t_central"] = comp_of(d.t_central);
    out["w"] = d.w.str();
    return out;
  });

  m.def("d_of", [](const std::vector<int>& comp) {
    auto d = d_of(tableau_from(comp));
    return py::make_tuple(d.word, d.perm.images());
  });
  m.def("is_321_avoiding", [](const std::vector<int>& one_line) {
    return is_321_avoiding(Permutation::from_one_line(one_line));
  });
  m.def("block_decomposition", [](const Params& p, long long a, long long b) {
    return block_decomposition({a, b}, p);
  });
  m.def("klr_degree", [](const Params& p, const std::vector<int>& word,
                         const std::vector<int>& seq) {
    return klr_degree(word, seq, p);
  });

  m.def("dotline_normal_form", [](int rank, const std::vector<int>& exps) {
    DotLineElement e = normal_form(rank, exps);
    py::list out;
    for (auto& [mask, c] : e.terms()) out.append(py::make_tuple(mask, c));
    return out;
  });
  m.def("dotline_multiply", [](int rank,
                               const std::vector<std::pair<std::uint32_t, long long>>& a,
                               const std::vector<std::pair<std::uint32_t, long long>>& b) {
    DotLineElement ea(rank), eb(rank);
    for (auto& [mask, c] : a) ea.add_term(mask, c);
    for (auto& [mask, c] : b) eb.add_term(mask, c);
    DotLineElement prod = ea * eb;
    py::list out;
    for (auto& [mask, c] : prod.terms()) out.append(py::make_tuple(mask, c));
    return out;
  });
  m.def("dotline_dimension_oracle", &dimension_oracle);
  m.def("dotline_ordering_check", &ordering_annihilation_check);

  m.def("enumerate_leaves", [](const std::string& w, int bound) {
    py::list out;
    for (const auto& leaf : enumerate_leaves(DihedralElement::parse(w), bound)) {
      py::dict d;
      d["steps"] = leaf.decoration_str();
      d["top"] = leaf.top.str();
      d["degree"] = leaf.degree;
      out.append(d);
    }
    return out;
  }, py::arg("w"), py::arg("bound") = 24);
  m.def("graded_dim_soergel", [](const std::string& w, int bound) {
    return laurent_pairs(graded_dim_soergel(DihedralElement::parse(w), bound));
  }, py::arg("w"), py::arg("bound") = 24);

  m.def("basis_of", [](const Params& p, long long a, long long b) {
    py::list out;
    for (const auto& datum : basis_of({a, b}, p)) {
      py::dict d;
      d["mu"] = py::make_tuple(datum.mu.first, datum.mu.second);
      d["s"] = comp_of(datum.s);
      d["t"] = comp_of(datum.t);
      d["degree"] = datum.degree;
      out.append(d);
    }
    return out;
  });
  m.def("graded_dim_blob", [](const Params& p, long long a, long long b) {
    return laurent_pairs(graded_dim_blob({a, b}, p));
  });
  m.def("central_element_degree", [](const Params& p, long long a, long long b) {
    return central_element_degree({a, b}, p);
  });
  m.def("y_model", [](const Params& p, long long a, long long b) {
    YModel y = y_model({a, b}, p);
    return py::make_tuple(y.rank, y.levels);
  });

  m.def("f_map", [](const Params& p, long long a, long long b) {
    py::dict out;
    for (auto& [mu, x] : f_map({a, b}, p))
      out[py::make_tuple(mu.first, mu.second)] = x.str();
    return out;
  });
  m.def("f_mu", [](const Params& p, const std::vector<int>& comp, long long a,
                   long long b) {
    LightLeaf leaf = f_mu(tableau_from(comp), {a, b}, p);
    py::dict d;
    d["steps"] = leaf.decoration_str();
    d["top"] = leaf.top.str();
    d["degree"] = leaf.degree;
    return d;
  });
  m.def("verify_bijection", [](const Params& p, long long a, long long b) {
    BijectionReport rep = verify_bijection({a, b}, p);
    py::dict out;
    out["lambda"] = py::make_tuple(rep.lambda.first, rep.lambda.second);
    out["w"] = rep.w.str();
    out["count_b"] = rep.count_b;
    out["count_A"] = rep.count_A;
    out["graded_b"] = laurent_pairs(rep.graded_b);
    out["graded_A"] = laurent_pairs(rep.graded_A);
    py::dict f;
    for (auto& [mu, x] : rep.f_table)
      f[py::make_tuple(mu.first, mu.second)] = x.str();
    out["F"] = f;
    out["ok"] = rep.ok();
    out["degree_preserving"] = rep.degree_preserving;
    out["graded_equal"] = rep.graded_equal;
    out["counts_equal"] = rep.counts_equal;
    out["f_bijective"] = rep.f_bijective;
    out["wall_convention"] = rep.wall_convention;
    out["first_mismatch"] =
        rep.first_mismatch ? py::cast(*rep.first_mismatch) : py::none();
    return out;
  });
  m.def("decomposition_matrix", [](const Params& p, long long n) {
    DecompositionMatrix mat = decomposition_matrix(n, p);
    py::dict out;
    out["points"] = mat.points;
    out["on_wall"] = std::vector<int>(mat.on_wall.begin(), mat.on_wall.end());
    py::list rows;
    for (auto& row : mat.entries) {
      py::list r;
      for (auto& entry : row) r.append(laurent_pairs(entry));
      rows.append(r);
    }
    out["entries"] = rows;
    return out;
  });
}
