#pragma once

#include <utility>

#include "gammainf/pts_spec.hpp"
#include "gammainf/term.hpp"

namespace gammainf {

// A context-free judgment M : A. Both sides are locally closed; all free
// variables (hereditarily) carry tags by construction of the term type.
struct GinfJudgment {
  TermPtr subject;
  TermPtr type;

  GinfJudgment(TermPtr s, TermPtr t);
};

// Picks the deterministic fresh eigenvariable y with tag `binder_domain`:
// names x0, x1, ... are tried until the variable (name *and* tag) avoids
// `avoid`. Returns the variable and the body opened with it.
std::pair<FreeVar, TermPtr> eigen_open(const TermPtr& binder_domain, const TermPtr& body,
                                       const VarSet& avoid);

// Context-free type synthesis in the exists-fresh formulation: binders are
// checked by opening with a fresh eigenvariable; the side condition demands
// the eigenvariable leaves no trace in the closed result, hereditarily.
TermPtr ginf_infer(const PtsSpec& spec, const TermPtr& m, Fuel fuel = kDefaultFuel);

bool ginf_check(const PtsSpec& spec, const GinfJudgment& j, Fuel fuel = kDefaultFuel);

}  // namespace gammainf
