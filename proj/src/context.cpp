#include "gammainf/context.hpp"

namespace gammainf {

Context::Context(std::vector<Declaration> decls) : decls_(std::move(decls)) { validate(); }

void Context::validate() const {
  VarSet seen;
  for (const auto& d : decls_) {
    if (!seen.insert(d.var).second) {
      throw Error(Errc::InvalidContext,
                  "variable '" + d.var.name().str() + "' declared twice");
    }
    if (!d.type->locally_closed()) {
      throw Error(Errc::InvalidContext, "declared type of '" + d.var.name().str() +
                                            "' has dangling bound indices");
    }
  }
}

bool Context::declares(const FreeVar& v) const {
  for (const auto& d : decls_) {
    if (d.var == v) return true;
  }
  return false;
}

std::optional<TermPtr> Context::type_of(const FreeVar& v) const {
  for (const auto& d : decls_) {
    if (d.var == v) return d.type;
  }
  return std::nullopt;
}

Context Context::extended(FreeVar var, TermPtr type) const {
  std::vector<Declaration> decls = decls_;
  decls.push_back({std::move(var), std::move(type)});
  return Context(std::move(decls));
}

Context Context::prefix(std::size_t length) const {
  std::vector<Declaration> decls(decls_.begin(), decls_.begin() + length);
  return Context(std::move(decls));
}

VarSet Context::domain() const {
  VarSet out;
  for (const auto& d : decls_) out.insert(d.var);
  return out;
}

bool Context::is_annotated() const {
  for (const auto& d : decls_) {
    if (*d.var.tag() != *d.type) return false;
  }
  return true;
}

bool operator==(const Context& a, const Context& b) {
  if (a.decls_.size() != b.decls_.size()) return false;
  for (std::size_t i = 0; i < a.decls_.size(); ++i) {
    if (a.decls_[i].var != b.decls_[i].var || *a.decls_[i].type != *b.decls_[i].type) {
      return false;
    }
  }
  return true;
}

ContextfulJudgment::ContextfulJudgment(Context c, TermPtr s, TermPtr t)
    : ctx(std::move(c)), subject(std::move(s)), type(std::move(t)) {
  if (!subject->locally_closed() || !type->locally_closed()) {
    throw Error(Errc::InvalidTerm, "judgment subject and type must be locally closed");
  }
}

bool compatible(const Context& g, const Context& d) {
  for (const auto& decl : g.decls()) {
    if (auto other = d.type_of(decl.var)) {
      if (**other != *decl.type) return false;
    }
  }
  return true;
}

Context merge(const Context& g, const Context& d) {
  std::vector<Declaration> out = g.decls();
  for (const auto& decl : d.decls()) {
    if (!g.declares(decl.var)) out.push_back(decl);
  }
  return Context(std::move(out));
}

}  // namespace gammainf
