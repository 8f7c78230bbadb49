#include "gammainf/pts_check.hpp"

#include "gammainf/ginf_check.hpp"

namespace gammainf {

namespace {

void require_functional(const PtsSpec& spec) {
  if (!spec.is_functional()) {
    throw Error(Errc::NonFunctionalSpec,
                "syntax-directed checking needs functional axioms and rules");
  }
}

void add_hfv(VarSet& out, const TermPtr& t) {
  VarSet s = hfv(t);
  out.insert(s.begin(), s.end());
}

class PtsChecker {
 public:
  PtsChecker(const PtsSpec& spec, Fuel fuel) : spec_(spec), fuel_(fuel) {}

  TermPtr infer(const Context& ctx, const TermPtr& m) {
    switch (m->kind()) {
      case Term::Kind::Sort:
        return Term::sort(unique_axiom(spec_, m->sort_name()));
      case Term::Kind::Bound:
        throw Error(Errc::InvalidTerm, "dangling bound index");
      case Term::Kind::Free: {
        if (auto type = ctx.type_of(m->var())) return *type;
        throw Error(Errc::UnboundVariable,
                    "variable " + m->var().name().str() + " is not declared");
      }
      case Term::Kind::Pi: {
        SortName s1 = sort_of(ctx, m->domain(), Errc::IllegalDomain);
        auto [eigen, opened] = fresh_open(ctx, m->domain(), m->body());
        SortName s2 = sort_of(ctx.extended(eigen, m->domain()), opened, Errc::IllegalCodomain);
        return Term::sort(unique_rule(spec_, s1, s2));
      }
      case Term::Kind::Lam: {
        sort_of(ctx, m->domain(), Errc::IllegalDomain);
        auto [eigen, opened] = fresh_open(ctx, m->domain(), m->body());
        TermPtr body_type = infer(ctx.extended(eigen, m->domain()), opened);
        TermPtr codomain = close(body_type, eigen);
        if (hfv(codomain).count(eigen) > 0) {
          // cannot happen for a fresh eigenvariable; guards the invariant
          // that inferred types never mention checker-invented variables
          throw Error(Errc::SideConditionViolated,
                      "eigenvariable escapes through a tag of the body type");
        }
        TermPtr pi_type = Term::pi(m->domain(), codomain);
        infer(ctx, pi_type);  // the (lambda) rule's Pi premise
        return pi_type;
      }
      case Term::Kind::App: {
        TermPtr fun_type = infer(ctx, m->fun());
        auto pi = reduce_to_pi(fun_type, fuel_);
        if (!pi) throw Error(Errc::NotAFunction, "application head has no Pi type");
        TermPtr arg_type = infer(ctx, m->arg());
        if (!beta_eq((*pi)->domain(), arg_type, fuel_)) {
          throw Error(Errc::DomainMismatch,
                      "argument type is not beta-equal to the function domain");
        }
        return open((*pi)->body(), m->arg());
      }
    }
    throw Error(Errc::InvalidTerm, "unreachable term kind");
  }

  SortName sort_of(const Context& ctx, const TermPtr& m, Errc not_sort) {
    TermPtr type = infer(ctx, m);
    if (type->is(Term::Kind::Sort)) return type->sort_name();
    if (auto s = reduce_to_sort(type, fuel_)) return *s;
    throw Error(not_sort, "term is not typable by a sort");
  }

 private:
  std::pair<FreeVar, TermPtr> fresh_open(const Context& ctx, const TermPtr& domain,
                                         const TermPtr& body) {
    VarSet avoid;
    for (const auto& d : ctx.decls()) {
      avoid.insert(d.var);
      add_hfv(avoid, d.var.tag());
      add_hfv(avoid, d.type);
    }
    add_hfv(avoid, domain);
    add_hfv(avoid, body);
    return eigen_open(domain, body, avoid);
  }

  const PtsSpec& spec_;
  Fuel fuel_;
};

bool prefix_wf(PtsChecker& checker, const Context& ctx) {
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    try {
      checker.sort_of(ctx.prefix(i), ctx.decls()[i].type, Errc::NotASort);
    } catch (const FuelExhaustedError&) {
      throw;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

}  // namespace

TermPtr infer_type(const PtsSpec& spec, const Context& ctx, const TermPtr& m, Fuel fuel,
                   bool check_context) {
  require_functional(spec);
  if (!m->locally_closed()) {
    throw Error(Errc::InvalidTerm, "subject must be locally closed");
  }
  PtsChecker checker(spec, fuel);
  if (check_context && !prefix_wf(checker, ctx)) {
    throw Error(Errc::InvalidContext, "context is not well-formed");
  }
  return checker.infer(ctx, m);
}

bool wf_context(const PtsSpec& spec, const Context& ctx, Fuel fuel) {
  require_functional(spec);
  PtsChecker checker(spec, fuel);
  return prefix_wf(checker, ctx);
}

bool check_judgment(const PtsSpec& spec, const ContextfulJudgment& j, Fuel fuel) {
  require_functional(spec);
  PtsChecker checker(spec, fuel);
  if (!prefix_wf(checker, j.ctx)) return false;
  TermPtr inferred;
  try {
    inferred = checker.infer(j.ctx, j.subject);
  } catch (const FuelExhaustedError&) {
    throw;
  } catch (const Error&) {
    return false;
  }
  if (*inferred == *j.type) return true;
  if (!beta_eq(inferred, j.type, fuel)) return false;
  try {
    checker.sort_of(j.ctx, j.type, Errc::NotASort);
    return true;
  } catch (const FuelExhaustedError&) {
    throw;
  } catch (const Error&) {
    return false;
  }
}

Context strengthen_to_hfv(const PtsSpec& spec, const ContextfulJudgment& j, Fuel fuel) {
  require_functional(spec);
  if (!j.ctx.is_annotated()) {
    throw Error(Errc::NotDerivable, "strengthening requires a type-annotated context");
  }
  if (!check_judgment(spec, j, fuel)) {
    throw Error(Errc::NotDerivable, "judgment does not check before strengthening");
  }
  VarSet needed = hfv_union(j.subject, j.type);
  std::vector<Declaration> decls = j.ctx.decls();
  for (std::size_t i = decls.size(); i-- > 0;) {
    if (needed.count(decls[i].var) > 0) continue;
    std::vector<Declaration> shrunk = decls;
    shrunk.erase(shrunk.begin() + static_cast<std::ptrdiff_t>(i));
    ContextfulJudgment candidate(Context(shrunk), j.subject, j.type);
    if (!check_judgment(spec, candidate, fuel)) {
      throw Error(Errc::NotDerivable,
                  "dropping " + decls[i].var.name().str() + " breaks the judgment");
    }
    decls = std::move(shrunk);
  }
  return Context(std::move(decls));
}

}  // namespace gammainf
