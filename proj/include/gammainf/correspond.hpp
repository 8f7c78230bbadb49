#pragma once

#include <vector>

#include "gammainf/ginf_check.hpp"
#include "gammainf/pts_check.hpp"

namespace gammainf {

// A contextful judgment in annotated normal form: every declaration is
// x^{B} : B with tag equal to type, and every free variable of subject and
// type is a declared context variable. (Binders are indices by
// representation, so the dotted-variable condition holds for free.)
class AnnotatedJudgment {
 public:
  explicit AnnotatedJudgment(ContextfulJudgment j);

  const ContextfulJudgment& judgment() const { return j_; }
  const Context& ctx() const { return j_.ctx; }
  const TermPtr& subject() const { return j_.subject; }
  const TermPtr& type() const { return j_.type; }

 private:
  ContextfulJudgment j_;
};

// Renames the context to the standard names x1^{B1}:B1, ..., xn^{Bn}:Bn
// (left to right, earlier renamings applied to later types), rewriting all
// occurrences in subject and type. The result is alpha-equivalent to the
// input, reading context declarations as binders.
AnnotatedJudgment annotate(const ContextfulJudgment& j);

// Drops the context of a derivable annotated judgment.
GinfJudgment to_ginf(const AnnotatedJudgment& j, const PtsSpec& spec, Fuel fuel = kDefaultFuel);

// Rebuilds an annotated context for a derivable context-free judgment:
// exactly the variables of hfv(subject) + hfv(type), each declared x^{A}:A,
// ordered so that every variable follows the variables of its tag. The
// result is re-checked before being returned.
AnnotatedJudgment synthesize_context(const GinfJudgment& j, const PtsSpec& spec,
                                     Fuel fuel = kDefaultFuel);

// First-occurrence order of hfv(subject) + hfv(type) under a left-to-right,
// tags-before-bodies traversal; the declaration order synthesize_context
// uses. A variable's tag variables always precede it.
std::vector<FreeVar> hfv_occurrence_order(const TermPtr& subject, const TermPtr& type);

}  // namespace gammainf
