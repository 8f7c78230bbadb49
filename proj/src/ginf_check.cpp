#include "gammainf/ginf_check.hpp"

#include <unordered_map>

namespace gammainf {

GinfJudgment::GinfJudgment(TermPtr s, TermPtr t) : subject(std::move(s)), type(std::move(t)) {
  if (!subject->locally_closed() || !type->locally_closed()) {
    throw Error(Errc::InvalidTerm, "judgment subject and type must be locally closed");
  }
}

std::pair<FreeVar, TermPtr> eigen_open(const TermPtr& binder_domain, const TermPtr& body,
                                       const VarSet& avoid) {
  for (std::size_t i = 0;; ++i) {
    FreeVar candidate(Name("x" + std::to_string(i)), binder_domain);
    if (avoid.count(candidate) == 0) {
      return {candidate, open(body, Term::free(candidate))};
    }
  }
}

namespace {

void require_functional(const PtsSpec& spec) {
  if (!spec.is_functional()) {
    throw Error(Errc::NonFunctionalSpec,
                "syntax-directed checking needs functional axioms and rules");
  }
}

class GinfChecker {
 public:
  GinfChecker(const PtsSpec& spec, Fuel fuel) : spec_(spec), fuel_(fuel) {}

  TermPtr infer(const TermPtr& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    TermPtr type = infer_uncached(m);
    memo_.emplace(m, type);
    return type;
  }

  SortName sort_of(const TermPtr& m, Errc not_sort) {
    TermPtr type = infer(m);
    if (type->is(Term::Kind::Sort)) return type->sort_name();
    if (auto s = reduce_to_sort(type, fuel_)) return *s;
    throw Error(not_sort, "term is not typable by a sort");
  }

 private:
  TermPtr infer_uncached(const TermPtr& m) {
    switch (m->kind()) {
      case Term::Kind::Sort:
        return Term::sort(unique_axiom(spec_, m->sort_name()));
      case Term::Kind::Bound:
        throw Error(Errc::InvalidTerm, "dangling bound index");
      case Term::Kind::Free:
        try {
          sort_of(m->var().tag(), Errc::TagNotASort);
        } catch (const FuelExhaustedError&) {
          throw;
        } catch (const Error& e) {
          if (e.code() == Errc::TagNotASort) throw;
          throw Error(Errc::TagNotASort,
                      "tag of " + m->var().name().str() + " is not typable by a sort (" +
                          e.what() + ")");
        }
        return m->var().tag();
      case Term::Kind::Pi: {
        SortName s1 = sort_of(m->domain(), Errc::IllegalDomain);
        auto [eigen, opened] = eigen_open(m->domain(), m->body(),
                                          hfv_union(m->domain(), m->body()));
        SortName s2 = [&] {
          try {
            return sort_of(opened, Errc::IllegalCodomain);
          } catch (const FuelExhaustedError&) {
            throw;
          } catch (const Error&) {
            raise_if_side_condition(m->domain(), m->body(), &s1);
            throw;
          }
        }();
        (void)eigen;
        return Term::sort(unique_rule(spec_, s1, s2));
      }
      case Term::Kind::Lam: {
        sort_of(m->domain(), Errc::IllegalDomain);
        auto [eigen, opened] = eigen_open(m->domain(), m->body(),
                                          hfv_union(m->domain(), m->body()));
        TermPtr body_type = [&] {
          try {
            return infer(opened);
          } catch (const FuelExhaustedError&) {
            throw;
          } catch (const Error&) {
            raise_if_side_condition(m->domain(), m->body(), nullptr);
            throw;
          }
        }();
        TermPtr codomain = close(body_type, eigen);
        if (hfv(codomain).count(eigen) > 0) {
          throw Error(Errc::SideConditionViolated,
                      "eigenvariable " + eigen.name().str() +
                          " escapes through a tag of the inferred type");
        }
        TermPtr pi_type = Term::pi(m->domain(), codomain);
        infer(pi_type);  // second premise: the Pi type is itself well-sorted
        return pi_type;
      }
      case Term::Kind::App: {
        TermPtr fun_type = infer(m->fun());
        auto pi = reduce_to_pi(fun_type, fuel_);
        if (!pi) throw Error(Errc::NotAFunction, "application head has no Pi type");
        TermPtr arg_type = infer(m->arg());
        if (!beta_eq((*pi)->domain(), arg_type, fuel_)) {
          throw Error(Errc::DomainMismatch,
                      "argument type is not beta-equal to the function domain");
        }
        return open((*pi)->body(), m->arg());
      }
    }
    throw Error(Errc::InvalidTerm, "unreachable term kind");
  }

  // A fresh eigenvariable failed to type the binder premise. Rule instances
  // may also pick an eigenvariable that already lives in the body's tags
  // (with the binder domain as its tag); those instances are blocked exactly
  // by the side condition y not-in hfv(body), which is the informative
  // error. Raise it when such a candidate would otherwise have worked.
  void raise_if_side_condition(const TermPtr& domain, const TermPtr& body,
                               const SortName* pi_s1) {
    VarSet body_fv = fv(body);
    for (const FreeVar& candidate : hfv(body)) {
      if (*candidate.tag() != *domain) continue;
      if (body_fv.count(candidate) > 0) continue;  // closing would capture it
      bool premise_ok = false;
      try {
        TermPtr opened = open(body, Term::free(candidate));
        if (pi_s1 != nullptr) {
          SortName s2 = sort_of(opened, Errc::IllegalCodomain);
          unique_rule(spec_, *pi_s1, s2);
        } else {
          infer(opened);
        }
        premise_ok = true;
      } catch (const Error&) {
        // candidate fails too; keep the primary diagnosis
      }
      if (premise_ok) {
        throw Error(Errc::SideConditionViolated,
                    "eigenvariable " + candidate.name().str() +
                        " occurs hereditarily in the body (inside a tag) and cannot be bound");
      }
    }
  }

  const PtsSpec& spec_;
  Fuel fuel_;
  std::unordered_map<TermPtr, TermPtr, TermPtrHash, TermPtrEq> memo_;
};

}  // namespace

TermPtr ginf_infer(const PtsSpec& spec, const TermPtr& m, Fuel fuel) {
  require_functional(spec);
  if (!m->locally_closed()) {
    throw Error(Errc::InvalidTerm, "subject must be locally closed");
  }
  return GinfChecker(spec, fuel).infer(m);
}

bool ginf_check(const PtsSpec& spec, const GinfJudgment& j, Fuel fuel) {
  require_functional(spec);
  GinfChecker checker(spec, fuel);
  TermPtr inferred;
  try {
    inferred = checker.infer(j.subject);
  } catch (const FuelExhaustedError&) {
    throw;
  } catch (const Error&) {
    return false;
  }
  if (*inferred == *j.type) return true;
  if (!beta_eq(inferred, j.type, fuel)) return false;
  try {
    checker.sort_of(j.type, Errc::NotASort);
    return true;
  } catch (const FuelExhaustedError&) {
    throw;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace gammainf
