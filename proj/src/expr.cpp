#include "kst/expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "kst/kschur.hpp"

namespace kst::expr {

using shapes::Partition;
using symfunc::Basis;
using symfunc::QT;
using symfunc::SymFunc;

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("syntax error at position " + std::to_string(pos) +
                                ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (start == pos) fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }

  std::string name() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos])))
      ++pos;
    return s.substr(start, pos - start);
  }

  Partition partition() {
    if (!eat('[')) fail("expected '['");
    std::vector<int> parts;
    if (!eat(']')) {
      for (;;) {
        parts.push_back((int)integer());
        if (eat(']')) break;
        if (!eat(',')) fail("expected ',' or ']'");
      }
    }
    return Partition(parts);
  }

  SymFunc atom(const std::string& nm) {
    Partition la = partition();
    if (nm == "s") return SymFunc::generator(Basis::s, la);
    if (nm == "h" || nm == "e" || nm == "p" || nm == "m") {
      Basis b = nm == "h" ? Basis::h : nm == "e" ? Basis::e
                : nm == "p" ? Basis::p : Basis::m;
      return symfunc::convert(SymFunc::generator(b, la), Basis::s);
    }
    if (nm == "Qp") return symfunc::hl_qp(la);
    if (nm == "H") return symfunc::macdonald_H(la);
    if (nm.size() >= 3 && nm.substr(0, 2) == "ks" && std::isdigit((unsigned char)nm[2])) {
      int k = std::stoi(nm.substr(2));
      return symfunc::convert(kschur::kschur_t1(la, k), Basis::s);
    }
    if (nm.size() >= 4 && nm.substr(0, 3) == "dks" && std::isdigit((unsigned char)nm[3])) {
      int k = std::stoi(nm.substr(3));
      return symfunc::convert(kschur::dual_kschur(la, k), Basis::s);
    }
    if (nm.size() >= 2 && nm[0] == 'F' && std::isdigit((unsigned char)nm[1])) {
      int k = std::stoi(nm.substr(1));
      return symfunc::convert(kschur::dual_kschur(la, k), Basis::s);
    }
    fail("unknown basis atom '" + nm + "'");
  }

  SymFunc primary() {
    skip_ws();
    if (eat('(')) {
      SymFunc e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat('-')) return -primary();
    char c = peek();
    if (std::isdigit((unsigned char)c)) {
      long v = integer();
      return SymFunc::unit(Basis::s) * symfunc::qt_int(v);
    }
    std::string nm = name();
    if (nm.empty()) fail("expected an atom, scalar or '('");
    skip_ws();
    if (pos < s.size() && s[pos] == '[') return atom(nm);
    if (nm == "q") return SymFunc::unit(Basis::s) * symfunc::qt_q();
    if (nm == "t") return SymFunc::unit(Basis::s) * symfunc::qt_t();
    fail("unknown name '" + nm + "'");
  }

  SymFunc factor() {
    SymFunc base = primary();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      long e = integer();
      if (e < 0) fail("negative powers are not supported");
      SymFunc acc = SymFunc::unit(Basis::s);
      for (long i = 0; i < e; ++i) acc = symfunc::convert(symfunc::mul(acc, base), Basis::s);
      return acc;
    }
    return base;
  }

  SymFunc term() {
    SymFunc acc = factor();
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        acc = symfunc::convert(symfunc::mul(acc, factor()), Basis::s);
      } else if (pos < s.size() && s[pos] == '/') {
        ++pos;
        SymFunc d = factor();
        if (d.terms().size() != 1 || !(d.terms().begin()->first == Partition{}))
          fail("division only by scalars");
        acc = acc * (symfunc::qt_one() / d.terms().begin()->second);
      } else {
        break;
      }
    }
    return acc;
  }

  SymFunc expr() {
    SymFunc acc = term();
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == '+') {
        ++pos;
        acc = acc + term();
      } else if (pos < s.size() && s[pos] == '-') {
        ++pos;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

SymFunc parse_eval(const std::string& text) {
  // allow a trailing "in BASIS" clause
  size_t in_pos = text.rfind(" in ");
  std::string body = text;
  std::string basis;
  if (in_pos != std::string::npos) {
    std::string tail = text.substr(in_pos + 4);
    // the tail must be a bare basis name
    bool bare = !tail.empty();
    for (char c : tail)
      if (!std::isalnum((unsigned char)c) && !std::isspace((unsigned char)c)) bare = false;
    if (bare) {
      basis = tail;
      while (!basis.empty() && std::isspace((unsigned char)basis.back())) basis.pop_back();
      while (!basis.empty() && std::isspace((unsigned char)basis.front()))
        basis.erase(basis.begin());
      body = text.substr(0, in_pos);
    }
  }
  Parser p(body);
  SymFunc v = p.expr();
  p.skip_ws();
  if (p.pos != body.size()) p.fail("trailing input");
  if (basis.empty()) return v;
  return eval_in_basis(body, basis);
}

SymFunc eval_in_basis(const std::string& text, const std::string& basis) {
  Parser p(text);
  SymFunc v = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (basis == "s") return v;
  if (basis == "m") return symfunc::convert(v, Basis::m);
  if (basis == "h") return symfunc::convert(v, Basis::h);
  if (basis == "e") return symfunc::convert(v, Basis::e);
  if (basis == "p") return symfunc::convert(v, Basis::p);
  if (basis == "Qp") return symfunc::to_hl_qp(v);
  if (basis.size() >= 3 && basis.substr(0, 2) == "ks")
    return kschur::to_ks_t1(v, std::stoi(basis.substr(2)));
  if (basis.size() >= 4 && basis.substr(0, 3) == "dks")
    return kschur::to_dks(v, std::stoi(basis.substr(3)));
  if (basis.size() >= 2 && basis[0] == 'F' && std::isdigit((unsigned char)basis[1]))
    return kschur::to_dks(v, std::stoi(basis.substr(1)));
  throw std::invalid_argument("unknown target basis '" + basis + "'");
}

std::string json_of(const SymFunc& f) {
  // terms sorted graded-lex
  std::vector<const std::pair<const Partition, QT>*> items;
  for (auto& kv : f.terms()) items.push_back(&kv);
  std::sort(items.begin(), items.end(), [](auto* a, auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first.parts() < b->first.parts();
  });
  std::ostringstream os;
  os << "{\"basis\":\"" << symfunc::basis_name(f.basis(), f.k()) << "\",\"terms\":[";
  bool first = true;
  for (auto* kv : items) {
    if (!first) os << ",";
    first = false;
    os << "{\"partition\":[";
    for (size_t i = 0; i < kv->first.parts().size(); ++i)
      os << (i ? "," : "") << kv->first.parts()[i];
    os << "],\"coeff\":\"" << symfunc::qt_str(kv->second) << "\"}";
  }
  os << "]}";
  return os.str();
}

}  // namespace kst::expr
