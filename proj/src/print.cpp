#include "gammainf/print.hpp"

#include <set>
#include <vector>

namespace gammainf {

namespace {

// tighter position = higher level; parenthesize when the construct binds
// looser than its position allows
enum Level : int { kTop = 0, kArrowLhs = 1, kAppFun = 2, kAppArg = 3 };

class Printer {
 public:
  explicit Printer(const TermPtr& root) {
    for (const FreeVar& v : hfv(root)) used_names_.insert(v.name().str());
  }

  std::string print(const TermPtr& t, int level) {
    switch (t->kind()) {
      case Term::Kind::Sort:
        return t->sort_name().str();
      case Term::Kind::Bound: {
        std::size_t i = t->bound_index();
        if (i >= binders_.size() || binders_[binders_.size() - 1 - i].empty()) {
          throw Error(Errc::InvalidTerm, "dangling bound index in printed term");
        }
        return binders_[binders_.size() - 1 - i];
      }
      case Term::Kind::Free:
        return var_text(t->var());
      case Term::Kind::Pi: {
        if (!uses_binder(t->body())) {
          std::string out = print(t->domain(), kArrowLhs);
          binders_.push_back("");
          out += " -> " + print(t->body(), kTop);
          binders_.pop_back();
          return level > kTop ? "(" + out + ")" : out;
        }
        return binder_text("!", t, level);
      }
      case Term::Kind::Lam:
        return binder_text("\\", t, level);
      case Term::Kind::App: {
        std::string out = print(t->fun(), kAppFun);
        out += " " + print(t->arg(), kAppArg);
        return level > kAppFun ? "(" + out + ")" : out;
      }
    }
    return {};
  }

  std::string var_text(const FreeVar& v) {
    std::string out = v.name().str() + "^";
    if (v.tag()->is(Term::Kind::Sort)) return out + v.tag()->sort_name().str();
    // tags are closed: print them in a fresh binder scope
    std::vector<std::string> saved;
    saved.swap(binders_);
    out += "{" + print(v.tag(), kTop) + "}";
    binders_.swap(saved);
    return out;
  }

 private:
  std::string binder_text(const char* head, const TermPtr& t, int level) {
    std::string name = fresh_name();
    std::string out = std::string(head) + name + ":" + print(t->domain(), kTop) + ". ";
    binders_.push_back(name);
    out += print(t->body(), kTop);
    binders_.pop_back();
    return level > kTop ? "(" + out + ")" : out;
  }

  std::string fresh_name() {
    for (;; ++counter_) {
      std::string candidate = "x" + std::to_string(counter_);
      if (used_names_.count(candidate) == 0) {
        ++counter_;
        return candidate;
      }
    }
  }

  std::set<std::string> used_names_;
  std::vector<std::string> binders_;
  std::size_t counter_ = 0;
};

}  // namespace

std::string print_term(const TermPtr& term) { return Printer(term).print(term, kTop); }

std::string print_var(const FreeVar& var) { return Printer(var.tag()).var_text(var); }

std::string print_context(const Context& ctx) {
  std::string out;
  for (const auto& d : ctx.decls()) {
    out += print_var(d.var) + " : " + print_term(d.type) + "\n";
  }
  return out;
}

std::string print_judgment(const ContextfulJudgment& j) {
  std::string out;
  for (std::size_t i = 0; i < j.ctx.size(); ++i) {
    if (i > 0) out += ", ";
    out += print_var(j.ctx.decls()[i].var) + " : " + print_term(j.ctx.decls()[i].type);
  }
  out += (j.ctx.empty() ? "|- " : " |- ");
  out += print_term(j.subject) + " : " + print_term(j.type);
  return out;
}

std::string print_judgment(const GinfJudgment& j) {
  return print_term(j.subject) + " : " + print_term(j.type);
}

}  // namespace gammainf
