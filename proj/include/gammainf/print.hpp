#pragma once

#include <string>

#include "gammainf/context.hpp"
#include "gammainf/ginf_check.hpp"

namespace gammainf {

// Surface syntax, the inverse of parse_term: `\x:A. M` for lambda,
// `!x:A. B` for a dependent product, `A -> B` for a non-dependent one,
// `x^{A}` for tagged variables (`x^s` when the tag is a single sort).
// Binder names are generated (x0, x1, ...) avoiding every name in hfv.
std::string print_term(const TermPtr& term);

std::string print_var(const FreeVar& var);
std::string print_context(const Context& ctx);
std::string print_judgment(const ContextfulJudgment& j);
std::string print_judgment(const GinfJudgment& j);

}  // namespace gammainf
