#pragma once

#include <functional>
#include <vector>

#include "gammainf/context.hpp"
#include "gammainf/term.hpp"

namespace gammainf {

// Bounds for exhaustive enumeration and for the oracle's derivation search.
// Sizes count nodes with tags included; max_tag_depth bounds the nesting of
// tags inside tags; max_names_per_tag is the size of the free-variable name
// pool ("a", "b", ...).
struct EnumBudget {
  std::size_t max_term_size = 4;
  std::size_t max_tag_depth = 2;
  std::vector<SortName> sort_alphabet = {SortName("*"), SortName("#")};
  std::size_t max_names_per_tag = 1;
  Fuel fuel = kDefaultFuel;
};

// Every locally closed pseudo-term within the budget, each exactly once,
// by ascending size and a fixed structural order within each size.
std::vector<TermPtr> enumerate_terms(const EnumBudget& budget);
void enumerate_terms(const EnumBudget& budget, const std::function<void(const TermPtr&)>& fn);

// Annotated contexts (declarations x^{B} : B) with at most max_decls
// entries, tags drawn from the enumerated closed terms of size at most
// max_tag_size, each tag's free variables declared earlier in the context.
std::vector<Context> enumerate_annotated_contexts(const EnumBudget& budget,
                                                  std::size_t max_decls,
                                                  std::size_t max_tag_size);

}  // namespace gammainf
