#pragma once

#include "gammainf/context.hpp"
#include "gammainf/pts_spec.hpp"

namespace gammainf {

// Syntax-directed type synthesis for the traditional contextful rules.
// (weak) is absorbed into context lookup, (conv) into beta-equality checks
// at applications and the final comparison. Functional specs only.
// With check_context set, the context is verified well-formed first;
// callers that already did so can skip the quadratic re-check.
TermPtr infer_type(const PtsSpec& spec, const Context& ctx, const TermPtr& m,
                   Fuel fuel = kDefaultFuel, bool check_context = true);

// True iff the judgment is derivable: the synthesized type is the stated
// one, or beta-equal to it with the stated type itself typable by a sort.
bool check_judgment(const PtsSpec& spec, const ContextfulJudgment& j, Fuel fuel = kDefaultFuel);

// True iff each declaration's type is typable by a sort in its prefix.
bool wf_context(const PtsSpec& spec, const Context& ctx, Fuel fuel = kDefaultFuel);

// Shrinks the context of a derivable type-annotated judgment to exactly the
// hereditarily free variables of subject and type, dropping declarations
// right to left and re-checking after each drop.
Context strengthen_to_hfv(const PtsSpec& spec, const ContextfulJudgment& j,
                          Fuel fuel = kDefaultFuel);

}  // namespace gammainf
