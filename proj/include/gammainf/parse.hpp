#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "gammainf/context.hpp"

namespace gammainf {

// Half-open byte range into the input, for diagnostics.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(Errc code, const std::string& message, SourceSpan span)
      : Error(code, message), span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

struct ParseOptions {
  // Identifiers in this set lex as sorts; `*`, `#` and the aliases for box,
  // Pi and lambda are always recognized.
  std::set<std::string> sorts = {"*", "#"};
  // Contextful mode: plain names not bound by a binder resolve against this
  // context. Without it such names are an error (the context-free reading).
  const Context* context = nullptr;
};

// Grammar: `\x:A. M` and `!x:A. B` bind x as an index in the body;
// `A -> B` is sugar for a non-dependent Pi; application is juxtaposition,
// left-associative; `x^{A}` is a tagged free variable (`x^s` allowed when
// the tag is one sort token). `;` starts a line comment.
TermPtr parse_term(std::string_view text, const ParseOptions& opts = {});

// One declaration per line: `name ^{ tag } : type` or `name : type`. Types
// and tags may refer to earlier declarations by plain name. Untagged
// declarations get tag = declared type in annotated mode and a unit tag
// (the sort `*`, or the first sort of the alphabet) otherwise.
Context parse_context(std::string_view text, bool annotated, const ParseOptions& opts = {});

}  // namespace gammainf
