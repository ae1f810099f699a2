#pragma once

#include <string>

#include "kst/symfunc.hpp"

namespace kst::expr {

// Parse an expression over basis atoms (s[2,1], h[3], Qp[2,1], H[2,2], p[2],
// m[1,1], e[2], ks3[3,2], dks3[2,1], F3[2,1]) with operators + - * / ^ and
// scalar literals in q and t. The value is returned in the Schur basis; the
// k-bases are evaluated at t = 1.
symfunc::SymFunc parse_eval(const std::string& text);

// parse "EXPR in BASIS" or evaluate with an explicit target basis name
symfunc::SymFunc eval_in_basis(const std::string& text, const std::string& basis);

std::string json_of(const symfunc::SymFunc& f);

}  // namespace kst::expr
