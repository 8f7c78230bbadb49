#include "gammainf/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace gammainf {

namespace {

enum class Tok {
  LParen,
  RParen,
  Lambda,   // '\' or U+03BB
  Pi,       // '!' or U+03A0
  Dot,
  Colon,
  Caret,
  LBrace,
  RBrace,
  Arrow,    // ->
  Star,     // '*'
  Hash,     // '#' or U+25A1
  Ident,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (std::isspace(c)) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "", {start, start}};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      current_ = {k, std::string(1, c), {start, pos_}};
    };
    switch (c) {
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '\\': single(Tok::Lambda); return;
      case '!': single(Tok::Pi); return;
      case '.': single(Tok::Dot); return;
      case ':': single(Tok::Colon); return;
      case '^': single(Tok::Caret); return;
      case '{': single(Tok::LBrace); return;
      case '}': single(Tok::RBrace); return;
      case '*': single(Tok::Star); return;
      case '#': single(Tok::Hash); return;
      default: break;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      current_ = {Tok::Arrow, "->", {start, pos_}};
      return;
    }
    if (take_utf8("\xce\xbb")) {  // lambda
      current_ = {Tok::Lambda, "\\", {start, pos_}};
      return;
    }
    if (take_utf8("\xce\xa0")) {  // Pi
      current_ = {Tok::Pi, "!", {start, pos_}};
      return;
    }
    if (take_utf8("\xe2\x96\xa1")) {  // box
      current_ = {Tok::Hash, "#", {start, pos_}};
      return;
    }
    unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalpha(uc) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size()) {
        unsigned char e = static_cast<unsigned char>(text_[end]);
        if (!std::isalnum(e) && e != '_') break;
        ++end;
      }
      current_ = {Tok::Ident, std::string(text_.substr(pos_, end - pos_)), {start, end}};
      pos_ = end;
      return;
    }
    throw ParseError(Errc::SyntaxError,
                     "unexpected character '" + std::string(1, c) + "' at offset " +
                         std::to_string(pos_),
                     {start, start + 1});
  }

  bool take_utf8(std::string_view bytes) {
    if (text_.substr(pos_, bytes.size()) == bytes) {
      pos_ += bytes.size();
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, "", {0, 0}};
};

class TermParser {
 public:
  TermParser(std::string_view text, const ParseOptions& opts) : lexer_(text), opts_(opts) {}

  TermPtr parse_whole() {
    TermPtr t = parse_term();
    expect(Tok::End, "end of input");
    return t;
  }

  TermPtr parse_term() {
    const Token& t = lexer_.peek();
    if (t.kind == Tok::Lambda || t.kind == Tok::Pi) return parse_binder();
    TermPtr lhs = parse_app();
    if (lexer_.peek().kind == Tok::Arrow) {
      lexer_.take();
      binders_.push_back("");  // anonymous level for the codomain
      TermPtr rhs = parse_term();
      binders_.pop_back();
      return Term::pi(lhs, rhs);
    }
    return lhs;
  }

 private:
  TermPtr parse_binder() {
    Token head = lexer_.take();
    Token name = expect(Tok::Ident, "binder name");
    if (opts_.sorts.count(name.text) > 0) {
      throw ParseError(Errc::SyntaxError, "sort name '" + name.text + "' used as a binder",
                       name.span);
    }
    expect(Tok::Colon, "':' after binder name");
    TermPtr domain = parse_term();
    expect(Tok::Dot, "'.' after binder domain");
    binders_.push_back(name.text);
    TermPtr body = parse_term();
    binders_.pop_back();
    return head.kind == Tok::Lambda ? Term::lam(domain, body) : Term::pi(domain, body);
  }

  TermPtr parse_app() {
    TermPtr t = parse_atom();
    while (starts_atom(lexer_.peek().kind)) {
      t = Term::app(t, parse_atom());
    }
    return t;
  }

  static bool starts_atom(Tok k) {
    return k == Tok::LParen || k == Tok::Star || k == Tok::Hash || k == Tok::Ident;
  }

  TermPtr parse_atom() {
    Token t = lexer_.take();
    switch (t.kind) {
      case Tok::LParen: {
        TermPtr inner = parse_term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Star:
        return Term::sort("*");
      case Tok::Hash:
        return Term::sort("#");
      case Tok::Ident:
        return parse_name(t);
      default:
        throw ParseError(Errc::SyntaxError, "expected a term, found '" + t.text + "'", t.span);
    }
  }

  TermPtr parse_name(const Token& name) {
    bool is_sort = opts_.sorts.count(name.text) > 0;
    if (lexer_.peek().kind == Tok::Caret) {
      if (is_sort) {
        throw ParseError(Errc::SyntaxError, "sort '" + name.text + "' cannot carry a tag",
                         name.span);
      }
      lexer_.take();
      return Term::free(name.text, parse_tag());
    }
    if (is_sort) return Term::sort(name.text);
    // plain name: innermost binder wins
    for (std::size_t i = binders_.size(); i-- > 0;) {
      if (binders_[i] == name.text) {
        return Term::bound(binders_.size() - 1 - i);
      }
    }
    if (opts_.context != nullptr) {
      const FreeVar* found = nullptr;
      for (const auto& d : opts_.context->decls()) {
        if (d.var.name().str() == name.text) {
          if (found != nullptr) {
            throw ParseError(Errc::SyntaxError,
                             "name '" + name.text +
                                 "' is declared with several tags; write it as " + name.text +
                                 "^{...}",
                             name.span);
          }
          found = &d.var;
        }
      }
      if (found != nullptr) return Term::free(*found);
      throw ParseError(Errc::UnboundName,
                       "name '" + name.text + "' is neither bound nor declared", name.span);
    }
    throw ParseError(Errc::UnboundName,
                     "name '" + name.text + "' is not bound by an enclosing binder", name.span);
  }

  TermPtr parse_tag() {
    Token t = lexer_.take();
    switch (t.kind) {
      case Tok::LBrace: {
        // tags are closed terms: binders outside are out of scope
        std::vector<std::string> saved;
        saved.swap(binders_);
        TermPtr tag = parse_term();
        binders_.swap(saved);
        expect(Tok::RBrace, "'}'");
        return tag;
      }
      case Tok::Star:
        return Term::sort("*");
      case Tok::Hash:
        return Term::sort("#");
      case Tok::Ident:
        if (opts_.sorts.count(t.text) > 0) return Term::sort(t.text);
        throw ParseError(Errc::SyntaxError,
                         "bare tag must be a single sort; write ^{" + t.text + "...}", t.span);
      default:
        throw ParseError(Errc::SyntaxError, "expected a tag after '^'", t.span);
    }
  }

  Token expect(Tok kind, const std::string& what) {
    Token t = lexer_.take();
    if (t.kind != kind) {
      throw ParseError(Errc::SyntaxError, "expected " + what + ", found '" + t.text + "'",
                       t.span);
    }
    return t;
  }

  Lexer lexer_;
  const ParseOptions& opts_;
  std::vector<std::string> binders_;
};

}  // namespace

TermPtr parse_term(std::string_view text, const ParseOptions& opts) {
  return TermParser(text, opts).parse_whole();
}

Context parse_context(std::string_view text, bool annotated, const ParseOptions& opts) {
  // Unit tag for untagged declarations outside annotated mode.
  TermPtr unit_tag = opts.sorts.count("*") > 0 ? Term::sort("*")
                                               : Term::sort(*opts.sorts.begin());
  Context ctx;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::string_view lex_view = line;
    Lexer lex(lex_view);
    if (lex.peek().kind == Tok::End) continue;
    Token name = lex.take();
    if (name.kind != Tok::Ident) {
      throw ParseError(Errc::SyntaxError, "declaration must start with a name", name.span);
    }
    if (opts.sorts.count(name.text) > 0) {
      throw ParseError(Errc::SyntaxError, "sort '" + name.text + "' cannot be declared",
                       name.span);
    }

    ParseOptions line_opts = opts;
    line_opts.context = &ctx;

    std::string tag_text;
    bool has_tag = false;
    if (lex.peek().kind == Tok::Caret) {
      lex.take();
      Token open_tok = lex.take();
      if (open_tok.kind == Tok::LBrace) {
        // capture the brace-balanced tag text and reparse it as a term
        std::size_t depth = 1;
        std::size_t start = open_tok.span.end;
        std::size_t i = start;
        for (; i < lex_view.size() && depth > 0; ++i) {
          if (lex_view[i] == '{') ++depth;
          if (lex_view[i] == '}') --depth;
        }
        if (depth != 0) {
          throw ParseError(Errc::SyntaxError, "unbalanced '{' in tag", open_tok.span);
        }
        tag_text = std::string(lex_view.substr(start, i - 1 - start));
        has_tag = true;
        lex_view = lex_view.substr(i);
        lex = Lexer(lex_view);
      } else if (open_tok.kind == Tok::Star || open_tok.kind == Tok::Hash ||
                 (open_tok.kind == Tok::Ident && opts.sorts.count(open_tok.text) > 0)) {
        tag_text = open_tok.kind == Tok::Star ? "*" : open_tok.kind == Tok::Hash ? "#"
                                                                                 : open_tok.text;
        has_tag = true;
      } else {
        throw ParseError(Errc::SyntaxError, "expected a tag after '^'", open_tok.span);
      }
    }

    Token colon = lex.take();
    if (colon.kind != Tok::Colon) {
      throw ParseError(Errc::SyntaxError, "expected ':' in declaration", colon.span);
    }

    std::size_t type_begin = colon.span.end;
    TermPtr type = parse_term(lex_view.substr(type_begin), line_opts);
    TermPtr tag = has_tag ? parse_term(tag_text, line_opts) : (annotated ? type : unit_tag);
    ctx = ctx.extended(FreeVar(Name(name.text), tag), type);
  }
  return ctx;
}

}  // namespace gammainf
