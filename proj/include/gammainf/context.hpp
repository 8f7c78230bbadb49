#pragma once

#include <optional>
#include <vector>

#include "gammainf/term.hpp"

namespace gammainf {

struct Declaration {
  FreeVar var;
  TermPtr type;
};

// Ordered list of declarations. Variables are pairwise distinct by full
// identity (name and tag); a variable's tag need not match its declared
// type — only annotated contexts require that.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Declaration> decls);

  const std::vector<Declaration>& decls() const { return decls_; }
  std::size_t size() const { return decls_.size(); }
  bool empty() const { return decls_.empty(); }

  bool declares(const FreeVar& v) const;
  std::optional<TermPtr> type_of(const FreeVar& v) const;

  Context extended(FreeVar var, TermPtr type) const;
  Context prefix(std::size_t length) const;

  VarSet domain() const;

  // True iff every declaration has tag structurally equal to its type.
  bool is_annotated() const;

  friend bool operator==(const Context& a, const Context& b);

 private:
  void validate() const;

  std::vector<Declaration> decls_;
};

struct ContextfulJudgment {
  Context ctx;
  TermPtr subject;
  TermPtr type;

  ContextfulJudgment(Context c, TermPtr s, TermPtr t);
};

// Def.-3 compatibility: every shared variable has structurally identical
// types on both sides (alpha-equal via the canonical representation, not
// merely beta-convertible).
bool compatible(const Context& g, const Context& d);

// g followed by the declarations of d whose variables g does not declare,
// in d's order.
Context merge(const Context& g, const Context& d);

}  // namespace gammainf
