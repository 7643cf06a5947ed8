#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cantorv/clone.hpp"
#include "cantorv/ktheory.hpp"
#include "cantorv/parse.hpp"
#include "cantorv/poset.hpp"
#include "cantorv/segal.hpp"
#include "cantorv/suites.hpp"

namespace py = pybind11;
using namespace cantorv;

namespace {

// All values cross the boundary as the text literals of the CLI; the
// C++ layer stays the single owner of the canonical representations.

Signature sig_of(int n, int r) { return Signature(n, r); }

py::int_ big(const Int& x) {
  return py::module_::import("builtins").attr("int")(x.str());
}

py::list matrix_out(const IntMatrix& m) {
  py::list rows;
  for (size_t i = 0; i < m.rows; ++i) {
    py::list row;
    for (size_t j = 0; j < m.cols; ++j) row.append(big(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

IntMatrix matrix_in(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols)
      throw std::invalid_argument("matrix rows have unequal lengths");
    for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

py::list homology_out(const HomologyResult& h) {
  py::list out;
  for (const auto& g : h.groups) out.append(g.str());
  return out;
}

FiniteGroup load_group(const std::string& arg) {
  for (const std::string& name : builtin_group_names())
    if (name == arg) return builtin_group(name);
  return group_from_csv(arg, "csv");
}

}  // namespace

PYBIND11_MODULE(_cantorv, m) {
  m.doc() = "exact arithmetic for Cantor algebras, Higman-Thompson groups, "
            "clone calculus and finite homology";

  m.def("nf", [](const std::string& t, int n, int r) {
    const Signature s = sig_of(n, r);
    return print_term(reduce(parse_term(t, s)), s);
  }, py::arg("term"), py::arg("n") = 2, py::arg("r") = 1);

  m.def("eq", [](const std::string& a, const std::string& b, int n, int r) {
    const Signature s = sig_of(n, r);
    return equal(parse_term(a, s), parse_term(b, s));
  }, py::arg("left"), py::arg("right"), py::arg("n") = 2, py::arg("r") = 1);

  m.def("identity", [](int n, int r) {
    return print_tableau(Tableau::identity(sig_of(n, r)));
  }, py::arg("n") = 2, py::arg("r") = 1);

  m.def("mul", [](const std::string& u, const std::string& v) {
    return print_tableau(compose(parse_tableau(u), parse_tableau(v)));
  });

  m.def("inv", [](const std::string& u) {
    return print_tableau(inverse(parse_tableau(u)));
  });

  m.def("apply", [](const std::string& u, const std::string& t) {
    const Tableau tab = parse_tableau(u);
    return print_term(apply(tab, parse_term(t, tab.sig())), tab.sig());
  });

  m.def("block_sum", [](const std::string& u, const std::string& v) {
    return print_tableau(block_sum(parse_tableau(u), parse_tableau(v)));
  });

  m.def("swap_blocks", [](int n, int r) {
    return print_tableau(swap_blocks(n, r));
  });

  m.def("whitehead", [](const std::string& w) {
    const Tableau tab = parse_tableau(w);
    const auto [a, b] = whitehead_witness(tab);
    py::dict out;
    out["a"] = print_tableau(a);
    out["b"] = print_tableau(b);
    out["identity_holds"] =
        commutator(a, b) == block_sum(tab, inverse(tab));
    return out;
  });

  m.def("perfect", [](const std::string& u, const std::string& v) {
    const PerfectnessReport rep =
        perfectness_identity(parse_tableau(u), parse_tableau(v));
    return py::make_tuple(rep.equal, rep.expanded_equal);
  });

  m.def("retract_check", [](const std::string& u) {
    const RetractReport rep = retract_check(parse_tableau(u));
    py::dict out;
    out["ok"] = rep.ok;
    out["retract_recovers"] = rep.retract_recovers;
    return out;
  });

  m.def("disjointify", [](const std::vector<std::string>& codes, int n,
                          int r) {
    const Signature s = sig_of(n, r);
    std::vector<Clone> in;
    for (const std::string& c : codes) in.push_back(Clone(parse_code(c, s)));
    std::vector<std::string> out;
    for (const Clone& c : disjointify(in)) out.push_back(c.str());
    return out;
  }, py::arg("codes"), py::arg("n") = 2, py::arg("r") = 1);

  m.def("clone_intersect", [](const std::string& a, const std::string& b,
                              int n, int r) -> py::object {
    const Signature s = sig_of(n, r);
    const auto meet =
        clone_intersect(Clone(parse_code(a, s)), Clone(parse_code(b, s)));
    if (!meet) return py::none();
    return py::str(meet->str());
  }, py::arg("a"), py::arg("b"), py::arg("n") = 2, py::arg("r") = 1);

  m.def("segal_witness",
        [](const std::vector<std::pair<std::string, std::string>>& family) {
    std::vector<std::pair<Tableau, Clone>> fam;
    for (const auto& [t, c] : family) {
      const Tableau tab = parse_tableau(t);
      fam.push_back({tab, Clone(parse_code(c, tab.sig()))});
    }
    const SegalWitness w = segal_witness(fam);
    py::dict out;
    out["g"] = print_tableau(w.g);
    py::list refined;
    bool ok = true;
    for (size_t j = 0; j < fam.size(); ++j) {
      refined.append(w.refined[j].str());
      ok = ok &&
           fixes_pointwise(compose(inverse(w.g), fam[j].first), w.refined[j]);
    }
    out["refined"] = refined;
    out["verified"] = ok;
    return out;
  });

  m.def("seq_member", [](const std::string& u, const std::string& seq) {
    const Tableau tab = parse_tableau(u);
    return seq_membership(tab, parse_cloneseq(seq, tab.sig()));
  });

  m.def("support_iso", [](const std::string& code, int n, int r) {
    const SupportIso iso = support_iso(Clone(parse_code(code, sig_of(n, r))));
    py::dict out;
    out["complement"] = iso.complement.str();
    out["source_arity"] = iso.source.arity;
    out["source_rank"] = iso.source.rank;
    return out;
  }, py::arg("code"), py::arg("n") = 2, py::arg("r") = 1);

  m.def("build_q", [](const std::vector<std::string>& seqs, int n, int r) {
    const Signature s = sig_of(n, r);
    std::vector<CloneSeq> p;
    for (const std::string& x : seqs) p.push_back(parse_cloneseq(x, s));
    const PosetQ q = build_q(p);
    py::dict out;
    py::list elements;
    for (const CloneSeq& e : q.elements) elements.append(e.str());
    out["elements"] = elements;
    out["p_size"] = q.p_size;
    out["retract"] = q.retract;
    return out;
  }, py::arg("seqs"), py::arg("n") = 2, py::arg("r") = 1);

  m.def("k0", [](int n) {
    const K0Ring ring = k0(n);
    py::dict out;
    out["modulus"] = ring.modulus;
    out["ring"] = ring.str();
    out["relation_verified"] = ring.relation.verified;
    return out;
  });

  m.def("expand_iso", [](int n, int r) {
    const ExpansionIso iso = expansion_iso(n, r);
    py::dict out;
    py::list fwd, back;
    for (const Term& t : iso.forward.images)
      fwd.append(print_term(t, iso.forward.target));
    for (const Term& t : iso.backward.images)
      back.append(print_term(t, iso.backward.target));
    out["forward"] = fwd;
    out["backward"] = back;
    out["verified"] = iso.verified;
    return out;
  });

  m.def("product_probe", [](const std::string& s, const std::string& t,
                            int n, int depth) {
    const Signature sig = sig_of(n, 1);
    const ProductProbeReport rep = product_iso_probe(
        parse_term(s, sig), parse_term(t, sig), sig, depth, depth, 20000);
    py::dict out;
    out["verdict"] = verdict_name(rep.verdict);
    out["certificate"] = rep.certificate;
    if (rep.missing)
      out["missing"] = py::make_tuple(print_term(rep.missing->first, sig),
                                      print_term(rep.missing->second, sig));
    return out;
  }, py::arg("s"), py::arg("t"), py::arg("n") = 2, py::arg("depth") = 4);

  m.def("snf", [](const std::vector<std::vector<long long>>& rows) {
    const IntMatrix mat = matrix_in(rows);
    const SnfResult s = snf(mat);
    py::dict out;
    out["d"] = matrix_out(s.d);
    out["u"] = matrix_out(s.u);
    out["v"] = matrix_out(s.v);
    out["certified"] = verify_snf(mat, s);
    return out;
  });

  m.def("bar_homology", [](const std::string& group, int degree) {
    const FiniteGroup g = load_group(group);
    Subgroup whole(g.order());
    for (int i = 0; i < g.order(); ++i) whole[i] = i;
    return homology_out(bar_homology(g, {whole}, degree));
  }, py::arg("group"), py::arg("degree") = 3);

  m.def("finite_segal", [](const std::string& group, int k, int degree) {
    const FiniteGroup g = load_group(group);
    const SubgroupCollection col = make_collection(g, all_subgroups(g));
    const DecompositionReport rep =
        decomposition_check(col, degree, k > 0 ? k : g.order());
    py::dict out;
    out["pass"] = rep.segal.pass;
    out["certified_all_sizes"] = rep.segal.certified_all_sizes;
    out["all_match"] = rep.all_match;
    out["collection_homology"] = homology_out(rep.collection_homology);
    out["group_homology"] = homology_out(rep.group_homology);
    return out;
  }, py::arg("group"), py::arg("k") = 0, py::arg("degree") = 2);

  m.def("selftest", [](const std::string& profile, uint64_t seed) {
    py::list out;
    for (const auto& r : run_acceptance(profile == "full", seed)) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("profile") = "quick", py::arg("seed") = 1);
}
