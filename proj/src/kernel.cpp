#include "gammainf/kernel.hpp"

namespace gammainf {

namespace {

void require_same_spec(const Thm& a, const Thm& b) {
  if (a.spec_fingerprint() != b.spec_fingerprint()) {
    throw Error(Errc::SpecMismatch, "theorems come from different specs");
  }
}

SortName type_as_sort(const Thm& t, const char* what) {
  if (!t.type()->is(Term::Kind::Sort)) {
    throw Error(Errc::NotASort, std::string(what) + " must prove a judgment of shape A : s");
  }
  return t.type()->sort_name();
}

}  // namespace

Thm mk_sort(const SpecPtr& spec, const SortName& s1) {
  if (!spec) throw Error(Errc::InvalidTerm, "null spec");
  auto targets = spec->axiom(s1);
  if (targets.empty()) throw Error(Errc::NoAxiom, "no axiom for sort " + s1.str());
  if (targets.size() > 1) throw Error(Errc::AmbiguousAxiom, "several axioms for " + s1.str());
  return Thm(spec, GinfJudgment(Term::sort(s1), Term::sort(targets.front())));
}

Thm mk_var(const Thm& sort_thm, const Name& name) {
  type_as_sort(sort_thm, "the tag premise");
  FreeVar var(name, sort_thm.subject());
  return Thm(sort_thm.spec(), GinfJudgment(Term::free(var), sort_thm.subject()));
}

Thm mk_pi(const Thm& domain, const Thm& codomain, const FreeVar& eigen) {
  require_same_spec(domain, codomain);
  SortName s1 = type_as_sort(domain, "the domain premise");
  SortName s2 = type_as_sort(codomain, "the codomain premise");
  if (*eigen.tag() != *domain.subject()) {
    throw Error(Errc::TagMismatch, "eigenvariable tag differs from the domain");
  }
  TermPtr closed = close(codomain.subject(), eigen);
  if (hfv(closed).count(eigen) > 0) {
    throw Error(Errc::SideConditionViolated,
                "eigenvariable " + eigen.name().str() +
                    " occurs hereditarily in the codomain and cannot be bound");
  }
  SortName s3 = unique_rule(*domain.spec(), s1, s2);
  return Thm(domain.spec(),
             GinfJudgment(Term::pi(domain.subject(), closed), Term::sort(s3)));
}

Thm mk_lam(const Thm& body, const Thm& pi_type, const FreeVar& eigen) {
  require_same_spec(body, pi_type);
  type_as_sort(pi_type, "the Pi premise");
  TermPtr closed_body = close(body.subject(), eigen);
  TermPtr closed_cod = close(body.type(), eigen);
  if (hfv(closed_body).count(eigen) > 0 || hfv(closed_cod).count(eigen) > 0) {
    throw Error(Errc::SideConditionViolated,
                "eigenvariable " + eigen.name().str() +
                    " occurs hereditarily in the body or its type and cannot be bound");
  }
  TermPtr expected = Term::pi(eigen.tag(), closed_cod);
  if (*pi_type.subject() != *expected) {
    throw Error(Errc::PiMismatch,
                "Pi premise does not match the abstraction over the eigenvariable");
  }
  return Thm(body.spec(),
             GinfJudgment(Term::lam(eigen.tag(), closed_body), pi_type.subject()));
}

Thm mk_app(const Thm& fun, const Thm& arg, Fuel fuel) {
  require_same_spec(fun, arg);
  auto pi = reduce_to_pi(fun.type(), fuel);
  if (!pi) throw Error(Errc::NotAFunction, "function premise has no Pi type");
  if (!beta_eq((*pi)->domain(), arg.type(), fuel)) {
    throw Error(Errc::DomainMismatch, "argument type is not beta-equal to the domain");
  }
  return Thm(fun.spec(), GinfJudgment(Term::app(fun.subject(), arg.subject()),
                                      open((*pi)->body(), arg.subject())));
}

Thm mk_conv(const Thm& t, const Thm& type_thm, Fuel fuel) {
  require_same_spec(t, type_thm);
  type_as_sort(type_thm, "the type premise");
  if (!beta_eq(t.type(), type_thm.subject(), fuel)) {
    throw Error(Errc::NotConvertible, "stated type is not beta-equal to the derived one");
  }
  return Thm(t.spec(), GinfJudgment(t.subject(), type_thm.subject()));
}

}  // namespace gammainf
