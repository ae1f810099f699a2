#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kst/expr.hpp"
#include "kst/growth.hpp"
#include "kst/kschur.hpp"
#include "kst/nilcoxeter.hpp"
#include "kst/nilhecke.hpp"
#include "kst/peterson.hpp"
#include "kst/selftest.hpp"
#include "kst/tableaux.hpp"

using kst::shapes::Partition;
using kst::symfunc::Basis;
using kst::symfunc::SymFunc;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  if (s.find(',') == std::string::npos && s.find('-') == std::string::npos) {
    // digit string like "121"
    for (char c : s) {
      if (!std::isdigit((unsigned char)c))
        throw std::invalid_argument("bad integer list: " + s);
      out.push_back(c - '0');
    }
    return out;
  }
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

Partition parse_partition(const std::string& s) {
  return Partition(parse_int_list(s));
}

void print_symfunc(const SymFunc& f, bool json) {
  std::cout << (json ? kst::expr::json_of(f) : f.str()) << "\n";
}

void check_size_bound(int size, int bound) {
  if (size > bound)
    throw std::length_error("degree " + std::to_string(size) +
                            " exceeds the bound " + std::to_string(bound) +
                            "; raise --max-degree explicitly");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact k-Schur / affine Schubert calculus calculator"};
  app.require_subcommand(1);
  bool json = false;
  int max_degree = 10;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--max-degree", max_degree, "degree guard for heavy expansions");

  // ---- sym ----
  auto* sym = app.add_subcommand("sym", "symmetric function engine");
  auto* sym_expand = sym->add_subcommand("expand", "expand an expression in a basis");
  std::string expr_text, in_basis = "s";
  sym_expand->add_option("--expr", expr_text)->required();
  sym_expand->add_option("--in", in_basis, "target basis (s,m,h,e,p,Qp,ks<k>,dks<k>)");
  sym_expand->callback([&] {
    SymFunc f = kst::expr::eval_in_basis(expr_text, in_basis);
    check_size_bound(f.max_degree(), max_degree);
    print_symfunc(f, json);
  });
  auto* sym_scalar = sym->add_subcommand("scalar", "scalar product of two expressions");
  std::string f_text, g_text, mode = "hall";
  sym_scalar->add_option("--f", f_text)->required();
  sym_scalar->add_option("--g", g_text)->required();
  sym_scalar->add_option("--mode", mode, "hall | t | qt");
  sym_scalar->callback([&] {
    auto m = mode == "hall" ? kst::symfunc::ScalarMode::hall
             : mode == "t"  ? kst::symfunc::ScalarMode::t
                            : kst::symfunc::ScalarMode::qt;
    auto v = kst::symfunc::scalar(kst::expr::parse_eval(f_text),
                                  kst::expr::parse_eval(g_text), m);
    std::cout << kst::symfunc::qt_str(v) << "\n";
  });

  // ---- shapes ----
  auto* sh = app.add_subcommand("shapes", "partition and core combinatorics");
  std::string part_text, core_text;
  int kval = 1, residue = 0, modulus = 2;
  auto* to_core = sh->add_subcommand("to-core", "bounded partition -> core");
  to_core->add_option("--k", kval)->required();
  to_core->add_option("--partition", part_text)->required();
  to_core->callback([&] {
    auto c = kst::shapes::bounded_to_core(parse_partition(part_text), kval);
    std::cout << (json ? kst::shapes::json(c) : c.str()) << "\n";
  });
  auto* to_bounded = sh->add_subcommand("to-bounded", "core -> bounded partition");
  to_bounded->add_option("--k", kval)->required();
  to_bounded->add_option("--core", core_text)->required();
  to_bounded->callback([&] {
    auto p = kst::shapes::core_to_bounded(
        kst::shapes::Core(parse_partition(core_text), kval + 1));
    std::cout << (json ? kst::shapes::json(p) : p.str()) << "\n";
  });
  auto* kconj = sh->add_subcommand("k-conjugate", "k-conjugate of a partition");
  kconj->add_option("--k", kval)->required();
  kconj->add_option("--partition", part_text)->required();
  kconj->callback([&] {
    auto p = kst::shapes::k_conjugate(parse_partition(part_text), kval);
    std::cout << (json ? kst::shapes::json(p) : p.str()) << "\n";
  });
  auto* ksplit = sh->add_subcommand("k-split", "k-split of a partition");
  ksplit->add_option("--k", kval)->required();
  ksplit->add_option("--partition", part_text)->required();
  ksplit->callback([&] {
    std::cout << "[";
    auto parts = kst::shapes::k_split(parse_partition(part_text), kval);
    for (size_t i = 0; i < parts.size(); ++i)
      std::cout << (i ? ", " : "") << parts[i].str();
    std::cout << "]\n";
  });
  auto* corners = sh->add_subcommand("corners", "addable/removable corners by residue");
  corners->add_option("--core", core_text)->required();
  corners->add_option("--modulus", modulus)->required();
  corners->add_option("--residue", residue)->required();
  corners->callback([&] {
    auto rc = kst::shapes::residues_and_corners(
        kst::shapes::Core(parse_partition(core_text), modulus), residue);
    std::cout << "addable:";
    for (auto& c : rc.addable) std::cout << " (" << c.row << "," << c.col << ")";
    std::cout << "\nremovable:";
    for (auto& c : rc.removable) std::cout << " (" << c.row << "," << c.col << ")";
    std::cout << "\n";
  });

  // ---- weyl ----
  auto* wy = app.add_subcommand("weyl", "affine symmetric group utilities");
  int nval = 3;
  std::string word_text, window_text;
  auto* to_window = wy->add_subcommand("window", "reduced word -> window");
  to_window->add_option("--n", nval)->required();
  to_window->add_option("--word", word_text)->required();
  to_window->callback([&] {
    auto w = kst::weyl::AffinePermutation::from_reduced_word(nval,
                                                             parse_int_list(word_text));
    std::cout << w.str() << "\n";
  });
  auto* to_word = wy->add_subcommand("word", "window -> reduced word");
  to_word->add_option("--n", nval)->required();
  to_word->add_option("--window", window_text)->required();
  to_word->callback([&] {
    std::vector<long long> win;
    for (int x : parse_int_list(window_text)) win.push_back(x);
    kst::weyl::AffinePermutation w(nval, win);
    auto rw = w.reduced_word();
    std::cout << "[";
    for (size_t i = 0; i < rw.size(); ++i) std::cout << (i ? ", " : "") << rw[i];
    std::cout << "]\n";
  });
  auto* grass = wy->add_subcommand("to-core", "affine Grassmannian word -> core");
  grass->add_option("--n", nval)->required();
  grass->add_option("--word", word_text)->required();
  grass->callback([&] {
    auto w = kst::weyl::AffinePermutation::from_reduced_word(nval,
                                                             parse_int_list(word_text));
    std::cout << kst::weyl::affine_to_core(w, nval).str() << "\n";
  });

  // ---- kschur ----
  auto* ks = app.add_subcommand("kschur", "k-Schur operations");
  std::string part2_text, weight_text;
  int k2val = 2;
  auto* ks_t = ks->add_subcommand("ks-t", "generic-t k-Schur in the monomial basis");
  ks_t->add_option("--k", kval)->required();
  ks_t->add_option("--partition", part_text)->required();
  ks_t->callback([&] {
    auto la = parse_partition(part_text);
    check_size_bound(la.size(), max_degree);
    print_symfunc(kst::kschur::kschur_t(la, kval), json);
  });
  auto* ks_dual = ks->add_subcommand("dual", "dual k-Schur in the monomial basis");
  ks_dual->add_option("--k", kval)->required();
  ks_dual->add_option("--partition", part_text)->required();
  ks_dual->callback([&] {
    auto la = parse_partition(part_text);
    check_size_bound(la.size(), max_degree);
    print_symfunc(kst::kschur::dual_kschur(la, kval), json);
  });
  auto* ks_branch = ks->add_subcommand("branch", "expand ks(k;t) in ks(k2;t)");
  ks_branch->add_option("--k", kval)->required();
  ks_branch->add_option("--k2", k2val)->required();
  ks_branch->add_option("--partition", part_text)->required();
  ks_branch->callback([&] {
    auto la = parse_partition(part_text);
    check_size_bound(la.size(), max_degree);
    print_symfunc(
        kst::kschur::branch(SymFunc::generator(Basis::ks, la, kval), kval, k2val), json);
  });
  auto* ks_mac = ks->add_subcommand("macdonald", "H_mu in the ks(k;t) basis");
  ks_mac->add_option("--k", kval)->required();
  ks_mac->add_option("--partition", part_text)->required();
  ks_mac->callback([&] {
    auto mu = parse_partition(part_text);
    check_size_bound(mu.size(), max_degree);
    print_symfunc(kst::kschur::macdonald_to_ks(mu, kval), json);
  });
  auto* ks_weak = ks->add_subcommand("weak-tableaux", "count weak tableaux");
  ks_weak->add_option("--k", kval)->required();
  ks_weak->add_option("--shape", part_text)->required();
  ks_weak->add_option("--weight", weight_text)->required();
  std::string rep = "bounded";
  ks_weak->add_option("--rep", rep, "bounded | core");
  ks_weak->callback([&] {
    auto weight = parse_int_list(weight_text);
    std::vector<kst::kschur::WeakTableau> ts;
    if (rep == "core")
      ts = kst::kschur::weak_tableaux(
          kval, kst::shapes::Core(parse_partition(part_text), kval + 1), weight);
    else
      ts = kst::kschur::weak_tableaux(kval, parse_partition(part_text), weight);
    for (auto& t : ts) {
      for (auto& row : t.core_rows()) {
        for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
        std::cout << " / ";
      }
      std::cout << "\n";
    }
    std::cout << ts.size() << " tableaux\n";
  });

  // ---- nilcox ----
  auto* nc = app.add_subcommand("nilcox", "nilCoxeter algebra");
  auto* nc_schur = nc->add_subcommand("schur", "noncommutative Schur function");
  nc_schur->add_option("--n", nval)->required();
  nc_schur->add_option("--partition", part_text)->required();
  nc_schur->callback([&] {
    auto d = kst::weyl::RootDatum::named("A" + std::to_string(nval - 1));
    std::cout << kst::nilcox::noncomm_schur(parse_partition(part_text), d).str() << "\n";
  });
  auto* nc_ks = nc->add_subcommand("kschur", "noncommutative k-Schur function");
  nc_ks->add_option("--k", kval)->required();
  nc_ks->add_option("--partition", part_text)->required();
  nc_ks->callback([&] {
    auto la = parse_partition(part_text);
    check_size_bound(la.size(), max_degree);
    auto d = kst::weyl::RootDatum::named("A" + std::to_string(kval) + "~");
    std::cout << kst::nilcox::noncomm_kschur(la, d).str() << "\n";
  });
  auto* nc_st = nc->add_subcommand("stanley", "(affine) Stanley symmetric function");
  bool affine = false;
  nc_st->add_option("--n", nval)->required();
  nc_st->add_option("--word", word_text)->required();
  nc_st->add_flag("--affine", affine);
  nc_st->callback([&] {
    auto word = parse_int_list(word_text);
    check_size_bound((int)word.size(), max_degree);
    auto d = kst::weyl::RootDatum::named(affine ? "A" + std::to_string(nval - 1) + "~"
                                                : "A" + std::to_string(nval - 1));
    auto w = kst::weyl::WeylElement::from_reduced_word(d, word);
    print_symfunc(affine ? kst::nilcox::affine_stanley(w) : kst::nilcox::stanley(w),
                  json);
  });

  // ---- nilhecke ----
  auto* nh = app.add_subcommand("nilhecke", "Kostant-Kumar nilHecke ring");
  std::string datum_name = "A2", vword, wword, uword;
  auto* nh_xi = nh->add_subcommand("xi", "localization xi^v(w)");
  nh_xi->add_option("--datum", datum_name);
  nh_xi->add_option("--v", vword)->required();
  nh_xi->add_option("--w", wword)->required();
  nh_xi->callback([&] {
    auto d = kst::weyl::RootDatum::named(datum_name);
    auto v = kst::weyl::WeylElement::from_reduced_word(d, parse_int_list(vword));
    auto w = kst::weyl::WeylElement::from_reduced_word(d, parse_int_list(wword));
    std::cout << kst::nilhecke::xi(v, w).str(d->var_names()) << "\n";
  });
  auto* nh_prod = nh->add_subcommand("product", "Schubert class product");
  int bound = -1;
  nh_prod->add_option("--datum", datum_name);
  nh_prod->add_option("--u", uword)->required();
  nh_prod->add_option("--v", vword)->required();
  nh_prod->add_option("--bound", bound, "length ceiling (default l(u)+l(v))");
  nh_prod->callback([&] {
    auto d = kst::weyl::RootDatum::named(datum_name);
    auto u = kst::weyl::WeylElement::from_reduced_word(d, parse_int_list(uword));
    auto v = kst::weyl::WeylElement::from_reduced_word(d, parse_int_list(vword));
    int b = bound < 0 ? u.length() + v.length() : bound;
    check_size_bound(b, max_degree);
    auto prod = kst::nilhecke::schubert_product(u, v, b);
    std::cout << "{";
    bool first = true;
    for (auto& [w, p] : prod) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << "\"";
      auto rw = w.reduced_word();
      for (size_t i = 0; i < rw.size(); ++i) std::cout << (i ? "," : "") << rw[i];
      std::cout << "\": \"" << p.str(d->var_names()) << "\"";
    }
    std::cout << "}\n";
  });

  // ---- peterson ----
  auto* pe = app.add_subcommand("peterson", "Peterson subalgebra / j-basis");
  std::string type_name = "A2~";
  int jbound = 6;
  auto* pe_j = pe->add_subcommand("j", "equivariant j-basis element");
  pe_j->add_option("--type", type_name);
  pe_j->add_option("--w", wword)->required();
  pe_j->add_option("--bound", jbound);
  pe_j->callback([&] {
    auto st = kst::peterson::SmallTorus::named(type_name);
    auto u = kst::weyl::WeylElement::from_reduced_word(st.affine, parse_int_list(wword));
    check_size_bound(jbound, std::max(max_degree, jbound));
    auto j = kst::peterson::j_basis(st, u, jbound);
    std::cout << "{";
    bool first = true;
    for (auto& [x, p] : j.coeffs) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << "\"";
      auto rw = x.reduced_word();
      for (size_t i = 0; i < rw.size(); ++i) std::cout << (i ? "," : "") << rw[i];
      std::cout << "\": \"" << p.str(st.finite->var_names()) << "\"";
    }
    std::cout << "}\n";
  });
  auto* pe_j0 = pe->add_subcommand("j0", "nonequivariant shadow of j");
  pe_j0->add_option("--type", type_name);
  pe_j0->add_option("--w", wword)->required();
  pe_j0->callback([&] {
    auto st = kst::peterson::SmallTorus::named(type_name);
    auto u = kst::weyl::WeylElement::from_reduced_word(st.affine, parse_int_list(wword));
    std::cout << kst::peterson::j0_basis(st, u, u.length()).str() << "\n";
  });

  // ---- insert ----
  auto* ins = app.add_subcommand("insert", "affine RSK on permutations");
  std::string perm_text, strong_text, weak_text;
  bool inverse = false;
  ins->add_option("--k", kval)->required();
  ins->add_option("--perm", perm_text);
  ins->add_flag("--inverse", inverse);
  ins->add_option("--strong", strong_text, "strong tableau rows, e.g. [[-1,-2,3],[-3]]");
  ins->add_option("--weak", weak_text, "weak tableau rows (core representation)");
  ins->callback([&] {
    auto parse_rows = [](const std::string& s) {
      std::vector<std::vector<int>> rows;
      std::vector<int> cur;
      std::string num;
      auto flushnum = [&] {
        if (!num.empty()) {
          cur.push_back(std::stoi(num));
          num.clear();
        }
      };
      int depth = 0;
      for (char c : s) {
        if (c == '[') {
          ++depth;
          if (depth == 2) cur.clear();
        } else if (c == ']') {
          flushnum();
          if (depth == 2) rows.push_back(cur);
          --depth;
        } else if (c == ',') {
          flushnum();
        } else if (!std::isspace((unsigned char)c)) {
          num.push_back(c);
        }
      }
      return rows;
    };
    if (inverse) {
      auto strong_rows = parse_rows(strong_text);
      auto weak_rows = parse_rows(weak_text);
      // rebuild the strong tableau from its rows
      int n = 0;
      for (auto& r : strong_rows)
        for (int e : r) n = std::max(n, std::abs(e));
      std::vector<kst::shapes::Core> chain;
      std::vector<int> marks(n, INT_MIN);
      for (int i = 0; i <= n; ++i) {
        std::vector<int> parts;
        for (auto& r : strong_rows) {
          int cnt = 0;
          for (int e : r)
            if (std::abs(e) <= i && e != 0) ++cnt;
          if (cnt) parts.push_back(cnt);
        }
        std::sort(parts.rbegin(), parts.rend());
        chain.push_back(kst::shapes::Core(Partition(parts), kval + 1));
      }
      for (int r = 0; r < (int)strong_rows.size(); ++r)
        for (int c = 0; c < (int)strong_rows[r].size(); ++c)
          if (strong_rows[r][c] < 0) marks[-strong_rows[r][c] - 1] = (c + 1) - (r + 1);
      kst::kschur::StrongMarkedTableau P(kval, chain, marks, std::vector<int>(n, 1));
      auto Q = kst::kschur::WeakTableau::from_core_rows(kval, weak_rows);
      auto perm = kst::growth::affine_insert_inverse(P, Q);
      std::cout << "[";
      for (size_t i = 0; i < perm.size(); ++i) std::cout << (i ? "," : "") << perm[i];
      std::cout << "]\n";
      return;
    }
    auto perm = parse_int_list(perm_text);
    check_size_bound((int)perm.size(), max_degree);
    auto ai = kst::growth::affine_insert(kval, perm);
    auto dump = [&](const std::vector<std::vector<int>>& rows) {
      std::cout << "[";
      for (size_t r = 0; r < rows.size(); ++r) {
        std::cout << (r ? ",[" : "[");
        for (size_t c = 0; c < rows[r].size(); ++c)
          std::cout << (c ? "," : "") << rows[r][c];
        std::cout << "]";
      }
      std::cout << "]";
    };
    std::cout << "{\"P\": ";
    dump(ai.P.rows());
    std::cout << ", \"Q\": ";
    dump(ai.Q.core_rows());
    std::cout << "}\n";
  });

  // ---- selftest ----
  auto* self = app.add_subcommand("selftest", "golden reference checks");
  int self_rc = 0;
  self->callback([&] {
    int failures = kst::selftest::run(std::cout);
    std::cout << (failures ? "FAILED" : "OK") << "\n";
    if (failures) self_rc = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit with 1
  } catch (const std::length_error& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "math domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return self_rc;
}
