#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kst/expr.hpp"
#include "kst/growth.hpp"
#include "kst/kschur.hpp"
#include "kst/nilcoxeter.hpp"
#include "kst/nilhecke.hpp"
#include "kst/peterson.hpp"
#include "kst/selftest.hpp"
#include "kst/tableaux.hpp"

#include <sstream>

namespace py = pybind11;

using kst::shapes::Partition;
using kst::symfunc::Basis;
using kst::symfunc::SymFunc;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::tuple tuple_of(const std::vector<int>& v) {
  py::tuple t((int)v.size());
  for (size_t i = 0; i < v.size(); ++i) t[i] = v[i];
  return t;
}

// symmetric functions cross the boundary as {tuple(parts): coefficient string}
py::dict dict_of(const SymFunc& f) {
  py::dict out;
  for (auto& [la, c] : f.terms()) {
    py::tuple key((int)la.parts().size());
    for (size_t i = 0; i < la.parts().size(); ++i) key[i] = la.parts()[i];
    out[key] = kst::symfunc::qt_str(c);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_kst, m) {
  m.doc() = "exact k-Schur functions and affine Schubert calculus";

  // shapes
  m.def("to_core", [](std::vector<int> la, int k) {
    return kst::shapes::bounded_to_core(to_partition(la), k).shape().parts();
  });
  m.def("to_bounded", [](std::vector<int> shape, int k) {
    return kst::shapes::core_to_bounded(kst::shapes::Core(to_partition(shape), k + 1))
        .parts();
  });
  m.def("k_conjugate", [](std::vector<int> la, int k) {
    return kst::shapes::k_conjugate(to_partition(la), k).parts();
  });
  m.def("k_split", [](std::vector<int> la, int k) {
    std::vector<std::vector<int>> out;
    for (auto& p : kst::shapes::k_split(to_partition(la), k)) out.push_back(p.parts());
    return out;
  });
  m.def("partitions", [](int n, int max_part) {
    std::vector<std::vector<int>> out;
    for (auto& p : kst::shapes::partitions_of(n, max_part)) out.push_back(p.parts());
    return out;
  }, py::arg("n"), py::arg("max_part") = -1);

  // symmetric function engine via the expression grammar
  m.def("expand", [](const std::string& expr, const std::string& basis) {
    return dict_of(kst::expr::eval_in_basis(expr, basis));
  }, py::arg("expr"), py::arg("basis") = "s");
  m.def("expand_str", [](const std::string& expr, const std::string& basis) {
    return kst::expr::eval_in_basis(expr, basis).str();
  }, py::arg("expr"), py::arg("basis") = "s");
  m.def("scalar", [](const std::string& f, const std::string& g, const std::string& mode) {
    auto mm = mode == "hall" ? kst::symfunc::ScalarMode::hall
              : mode == "t"  ? kst::symfunc::ScalarMode::t
                             : kst::symfunc::ScalarMode::qt;
    return kst::symfunc::qt_str(kst::symfunc::scalar(kst::expr::parse_eval(f),
                                                     kst::expr::parse_eval(g), mm));
  }, py::arg("f"), py::arg("g"), py::arg("mode") = "hall");

  // k-Schur family
  m.def("kschur_h", [](std::vector<int> la, int k) {
    return dict_of(kst::kschur::kschur_t1(to_partition(la), k));
  });
  m.def("kschur_t_m", [](std::vector<int> la, int k) {
    return dict_of(kst::kschur::kschur_t(to_partition(la), k));
  });
  m.def("dual_kschur_m", [](std::vector<int> la, int k) {
    return dict_of(kst::kschur::dual_kschur(to_partition(la), k));
  });
  m.def("branch", [](std::vector<int> la, int k, int k2) {
    return dict_of(kst::kschur::branch(
        SymFunc::generator(Basis::ks, to_partition(la), k), k, k2));
  });
  m.def("macdonald_to_ks", [](std::vector<int> mu, int k) {
    return dict_of(kst::kschur::macdonald_to_ks(to_partition(mu), k));
  });
  m.def("weak_kostka", [](int k, std::vector<int> la, std::vector<int> mu) {
    return kst::kschur::weak_kostka(k, to_partition(la), to_partition(mu));
  });
  m.def("klr", [](std::vector<int> la, std::vector<int> mu, std::vector<int> nu, int k) {
    return kst::kschur::klr(to_partition(la), to_partition(mu), to_partition(nu), k);
  });

  // tableaux
  m.def("kostka", [](std::vector<int> la, std::vector<int> mu) {
    return kst::tableaux::kostka(to_partition(la), to_partition(mu));
  });
  m.def("charge", [](std::vector<std::vector<int>> rows) {
    return kst::tableaux::charge(kst::tableaux::Tableau(rows));
  });
  m.def("rsk", [](std::vector<int> word) {
    auto pq = kst::tableaux::rsk(word);
    return py::make_tuple(pq.P.rows(), pq.Q.rows());
  });
  m.def("eg_insert", [](std::vector<int> word) {
    auto pq = kst::tableaux::eg_insert(word);
    return py::make_tuple(pq.P.rows(), pq.Q.rows());
  });
  m.def("atom", [](std::vector<int> la, int k) {
    std::vector<std::vector<std::vector<int>>> out;
    for (auto& t : kst::tableaux::atom(to_partition(la), k)) out.push_back(t.rows());
    return out;
  });

  // affine insertion
  m.def("affine_insert", [](int k, std::vector<int> perm) {
    auto ai = kst::growth::affine_insert(k, perm);
    return py::make_tuple(ai.P.rows(), ai.Q.core_rows());
  });
  m.def("rsk_growth", [](std::vector<int> perm) {
    auto g = kst::growth::rsk_growth(perm);
    return py::make_tuple(g.P.rows(), g.Q.rows());
  });
  m.def("cauchy_check", [](int m, int k) { return kst::growth::cauchy_check(m, k); });

  // nilCoxeter / nilHecke / Peterson, over the named data
  m.def("noncomm_kschur", [](std::vector<int> la, int k) {
    auto d = kst::weyl::RootDatum::named("A" + std::to_string(k) + "~");
    py::dict out;
    for (auto& [w, c] : kst::nilcox::noncomm_kschur(to_partition(la), d).terms())
      out[tuple_of(w.reduced_word())] = (long)c.get_num().get_si();
    return out;
  });
  m.def("xi", [](const std::string& datum, std::vector<int> v, std::vector<int> w) {
    auto d = kst::weyl::RootDatum::named(datum);
    auto ve = kst::weyl::WeylElement::from_reduced_word(d, v);
    auto we = kst::weyl::WeylElement::from_reduced_word(d, w);
    return kst::nilhecke::xi(ve, we).str(d->var_names());
  });
  m.def("schubert_product",
        [](const std::string& datum, std::vector<int> u, std::vector<int> v) {
          auto d = kst::weyl::RootDatum::named(datum);
          auto ue = kst::weyl::WeylElement::from_reduced_word(d, u);
          auto ve = kst::weyl::WeylElement::from_reduced_word(d, v);
          py::dict out;
          for (auto& [w, p] :
               kst::nilhecke::schubert_product(ue, ve, ue.length() + ve.length()))
            out[tuple_of(w.reduced_word())] = p.str(d->var_names());
          return out;
        });
  m.def("j_basis", [](const std::string& type, std::vector<int> u, int bound) {
    auto st = kst::peterson::SmallTorus::named(type);
    auto ue = kst::weyl::WeylElement::from_reduced_word(st.affine, u);
    py::dict out;
    for (auto& [x, p] : kst::peterson::j_basis(st, ue, bound).coeffs)
      out[tuple_of(x.reduced_word())] = p.str(st.finite->var_names());
    return out;
  });

  m.def("selftest", []() {
    std::ostringstream os;
    int failures = kst::selftest::run(os);
    return py::make_tuple(failures, os.str());
  });
}
