#include "gammainf/enumerate.hpp"

#include <map>
#include <tuple>

namespace gammainf {

namespace {

std::vector<std::string> name_pool(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    if (i < 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("v" + std::to_string(i));
    }
  }
  return names;
}

class Enumerator {
 public:
  explicit Enumerator(const EnumBudget& budget)
      : budget_(budget), names_(name_pool(budget.max_names_per_tag)) {}

  // All terms of exactly `size` nodes under `depth` enclosing binders, with
  // `tag_depth` levels of tag nesting still allowed.
  const std::vector<TermPtr>& exact(std::size_t size, std::size_t depth,
                                    std::size_t tag_depth) {
    auto key = std::make_tuple(size, depth, tag_depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<TermPtr> out;
    if (size == 1) {
      for (const auto& s : budget_.sort_alphabet) out.push_back(Term::sort(s));
      for (std::size_t k = 0; k < depth; ++k) out.push_back(Term::bound(k));
    } else if (size >= 2) {
      if (tag_depth >= 1) {
        for (const auto& name : names_) {
          for (const auto& tag : exact(size - 1, 0, tag_depth - 1)) {
            out.push_back(Term::free(name, tag));
          }
        }
      }
      for (std::size_t left = 1; left + 1 < size; ++left) {
        std::size_t right = size - 1 - left;
        const auto& domains = exact(left, depth, tag_depth);
        const auto& bodies = exact(right, depth + 1, tag_depth);
        for (const auto& d : domains) {
          for (const auto& b : bodies) out.push_back(Term::pi(d, b));
        }
      }
      for (std::size_t left = 1; left + 1 < size; ++left) {
        std::size_t right = size - 1 - left;
        const auto& domains = exact(left, depth, tag_depth);
        const auto& bodies = exact(right, depth + 1, tag_depth);
        for (const auto& d : domains) {
          for (const auto& b : bodies) out.push_back(Term::lam(d, b));
        }
      }
      for (std::size_t left = 1; left + 1 < size; ++left) {
        std::size_t right = size - 1 - left;
        const auto& funs = exact(left, depth, tag_depth);
        const auto& args = exact(right, depth, tag_depth);
        for (const auto& f : funs) {
          for (const auto& a : args) out.push_back(Term::app(f, a));
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const EnumBudget& budget_;
  std::vector<std::string> names_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<TermPtr>> memo_;
};

}  // namespace

void enumerate_terms(const EnumBudget& budget, const std::function<void(const TermPtr&)>& fn) {
  Enumerator en(budget);
  for (std::size_t size = 1; size <= budget.max_term_size; ++size) {
    for (const auto& t : en.exact(size, 0, budget.max_tag_depth)) fn(t);
  }
}

std::vector<TermPtr> enumerate_terms(const EnumBudget& budget) {
  std::vector<TermPtr> out;
  enumerate_terms(budget, [&](const TermPtr& t) { out.push_back(t); });
  return out;
}

std::vector<Context> enumerate_annotated_contexts(const EnumBudget& budget,
                                                  std::size_t max_decls,
                                                  std::size_t max_tag_size) {
  Enumerator en(budget);
  std::vector<TermPtr> tags;
  for (std::size_t size = 1; size <= max_tag_size; ++size) {
    for (const auto& t : en.exact(size, 0, budget.max_tag_depth)) tags.push_back(t);
  }
  std::vector<std::string> names = name_pool(budget.max_names_per_tag);

  std::vector<Context> out;
  auto grow = [&](auto&& self, const Context& cur, std::size_t remaining) -> void {
    out.push_back(cur);
    if (remaining == 0) return;
    VarSet dom = cur.domain();
    for (const auto& name : names) {
      for (const auto& tag : tags) {
        bool scoped = true;
        for (const FreeVar& v : fv(tag)) {
          if (dom.count(v) == 0) {
            scoped = false;
            break;
          }
        }
        if (!scoped) continue;
        FreeVar var{Name(name), tag};
        if (cur.declares(var)) continue;
        self(self, cur.extended(var, tag), remaining - 1);
      }
    }
  };
  grow(grow, Context(), max_decls);
  return out;
}

}  // namespace gammainf
