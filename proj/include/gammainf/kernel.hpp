#pragma once

#include "gammainf/ginf_check.hpp"
#include "gammainf/pts_spec.hpp"

namespace gammainf {

// A certified context-free judgment. Values can only be produced by the
// mk_* combinators below, each of which validates one typing rule; the
// module's contract is that every Thm's judgment passes ginf_check under
// the spec it carries. No combinator touches shared state.
class Thm {
 public:
  const GinfJudgment& judgment() const { return judgment_; }
  const TermPtr& subject() const { return judgment_.subject; }
  const TermPtr& type() const { return judgment_.type; }
  const SpecPtr& spec() const { return spec_; }
  std::uint64_t spec_fingerprint() const { return spec_->fingerprint(); }

 private:
  Thm(SpecPtr spec, GinfJudgment judgment)
      : spec_(std::move(spec)), judgment_(std::move(judgment)) {}

  friend Thm mk_sort(const SpecPtr&, const SortName&);
  friend Thm mk_var(const Thm&, const Name&);
  friend Thm mk_pi(const Thm&, const Thm&, const FreeVar&);
  friend Thm mk_lam(const Thm&, const Thm&, const FreeVar&);
  friend Thm mk_app(const Thm&, const Thm&, Fuel);
  friend Thm mk_conv(const Thm&, const Thm&, Fuel);

  SpecPtr spec_;
  GinfJudgment judgment_;
};

// (sort): s1 : s2 for the unique axiom target of s1.
Thm mk_sort(const SpecPtr& spec, const SortName& s1);

// (var): from A : s, derive name^{A} : A.
Thm mk_var(const Thm& sort_thm, const Name& name);

// (Pi): from A : s1 and B : s2, derive Pi(A, close(B, eigen)) : s3 for the
// rule (s1, s2, s3). The eigenvariable must carry A as its tag and must not
// survive the closing (hereditarily).
Thm mk_pi(const Thm& domain, const Thm& codomain, const FreeVar& eigen);

// (lambda): from M : B and a Thm for the matching Pi type, derive
// Lam(A, close(M, eigen)) : Pi(A, close(B, eigen)).
Thm mk_lam(const Thm& body, const Thm& pi_type, const FreeVar& eigen);

// (app): from M : Pi(A, B) (up to reduction) and N : A' with A' beta-equal
// to A, derive M N : open(B, N).
Thm mk_app(const Thm& fun, const Thm& arg, Fuel fuel = kDefaultFuel);

// (conv): from M : A and B : s with A beta-equal to B, derive M : B.
Thm mk_conv(const Thm& t, const Thm& type_thm, Fuel fuel = kDefaultFuel);

}  // namespace gammainf
