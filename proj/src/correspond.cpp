#include "gammainf/correspond.hpp"

#include <map>
#include <unordered_map>

namespace gammainf {

namespace {

struct FreeVarHash {
  std::size_t operator()(const FreeVar& v) const { return v.hash(); }
};

using Renaming = std::unordered_map<FreeVar, TermPtr, FreeVarHash>;

// Parallel substitution of whole variables (identity match); tags of
// non-matched variables are left alone.
TermPtr rename(const TermPtr& t, const Renaming& map) {
  switch (t->kind()) {
    case Term::Kind::Sort:
    case Term::Kind::Bound:
      return t;
    case Term::Kind::Free: {
      auto it = map.find(t->var());
      return it != map.end() ? it->second : t;
    }
    case Term::Kind::Pi:
    case Term::Kind::Lam: {
      TermPtr d = rename(t->domain(), map);
      TermPtr b = rename(t->body(), map);
      if (d == t->domain() && b == t->body()) return t;
      return t->is(Term::Kind::Pi) ? Term::pi(d, b) : Term::lam(d, b);
    }
    case Term::Kind::App: {
      TermPtr f = rename(t->fun(), map);
      TermPtr a = rename(t->arg(), map);
      if (f == t->fun() && a == t->arg()) return t;
      return Term::app(f, a);
    }
  }
  return t;
}

}  // namespace

AnnotatedJudgment::AnnotatedJudgment(ContextfulJudgment j) : j_(std::move(j)) {
  VarSet declared;
  for (const auto& d : j_.ctx.decls()) {
    if (*d.var.tag() != *d.type) {
      throw Error(Errc::InvalidContext,
                  "declaration of " + d.var.name().str() + " is not tag-annotated");
    }
    declared.insert(d.var);
  }
  for (const FreeVar& v : fv(j_.subject)) {
    if (declared.count(v) == 0) {
      throw Error(Errc::UndeclaredFreeVariable,
                  "subject mentions undeclared variable " + v.name().str());
    }
  }
  for (const FreeVar& v : fv(j_.type)) {
    if (declared.count(v) == 0) {
      throw Error(Errc::UndeclaredFreeVariable,
                  "type mentions undeclared variable " + v.name().str());
    }
  }
}

AnnotatedJudgment annotate(const ContextfulJudgment& j) {
  const auto& decls = j.ctx.decls();

  // scoping preconditions: each declared type sees only earlier variables,
  // subject and type see only declared ones
  VarSet seen;
  for (const auto& d : decls) {
    for (const FreeVar& v : fv(d.type)) {
      if (seen.count(v) == 0) {
        throw Error(Errc::UndeclaredFreeVariable,
                    "type of " + d.var.name().str() + " mentions " + v.name().str() +
                        " which is not declared earlier");
      }
    }
    seen.insert(d.var);
  }
  for (const FreeVar& v : fv(j.subject)) {
    if (seen.count(v) == 0) {
      throw Error(Errc::UndeclaredFreeVariable,
                  "subject mentions undeclared variable " + v.name().str());
    }
  }
  for (const FreeVar& v : fv(j.type)) {
    if (seen.count(v) == 0) {
      throw Error(Errc::UndeclaredFreeVariable,
                  "type mentions undeclared variable " + v.name().str());
    }
  }

  Renaming map;
  std::vector<Declaration> renamed;
  renamed.reserve(decls.size());
  for (std::size_t i = 0; i < decls.size(); ++i) {
    TermPtr new_type = rename(decls[i].type, map);
    FreeVar new_var(Name("x" + std::to_string(i + 1)), new_type);
    map.emplace(decls[i].var, Term::free(new_var));
    renamed.push_back({new_var, new_type});
  }
  return AnnotatedJudgment(ContextfulJudgment(Context(std::move(renamed)),
                                              rename(j.subject, map), rename(j.type, map)));
}

GinfJudgment to_ginf(const AnnotatedJudgment& j, const PtsSpec& spec, Fuel fuel) {
  if (!check_judgment(spec, j.judgment(), fuel)) {
    throw Error(Errc::NotDerivable, "annotated judgment does not check");
  }
  return GinfJudgment(j.subject(), j.type());
}

std::vector<FreeVar> hfv_occurrence_order(const TermPtr& subject, const TermPtr& type) {
  std::vector<FreeVar> order;
  VarSet seen;
  auto visit = [&](auto&& self, const TermPtr& t) -> void {
    switch (t->kind()) {
      case Term::Kind::Free:
        self(self, t->var().tag());
        if (seen.insert(t->var()).second) order.push_back(t->var());
        break;
      case Term::Kind::Pi:
      case Term::Kind::Lam:
        self(self, t->domain());
        self(self, t->body());
        break;
      case Term::Kind::App:
        self(self, t->fun());
        self(self, t->arg());
        break;
      default:
        break;
    }
  };
  visit(visit, subject);
  visit(visit, type);
  return order;
}

AnnotatedJudgment synthesize_context(const GinfJudgment& j, const PtsSpec& spec, Fuel fuel) {
  if (!ginf_check(spec, j, fuel)) {
    throw Error(Errc::NotDerivable, "judgment is not derivable context-free");
  }
  std::vector<FreeVar> order = hfv_occurrence_order(j.subject, j.type);

  std::map<FreeVar, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i], i);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const FreeVar& dep : hfv(order[i].tag())) {
      auto it = position.find(dep);
      if (it == position.end() || it->second >= i) {
        throw Error(Errc::CyclicTags, "tag-occurrence relation is not an ordering");
      }
    }
  }

  std::vector<Declaration> decls;
  decls.reserve(order.size());
  for (const FreeVar& v : order) decls.push_back({v, v.tag()});

  ContextfulJudgment out(Context(std::move(decls)), j.subject, j.type);
  if (!check_judgment(spec, out, fuel)) {
    throw Error(Errc::NotDerivable, "synthesized judgment fails the contextful check");
  }
  return AnnotatedJudgment(std::move(out));
}

}  // namespace gammainf
