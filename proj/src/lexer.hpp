#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nfpc/diagnostics.hpp"

namespace nfpc {

// Shared tokenizer for the model file, the VSL expression language, the
// type-library extension file and valuation files. `#` starts a line
// comment; whitespace is insignificant between tokens.
struct Token {
  enum class Kind { Name, Number, String, Symbol, End };
  Kind kind = Kind::End;
  std::string text;  // Name/Number: spelling; String: unescaped value; Symbol: the symbol
  SourcePos pos;

  bool is_name(std::string_view s) const { return kind == Kind::Name && text == s; }
  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
};

class Lexer {
public:
  explicit Lexer(std::string_view input);

  const Token& peek() const { return current_; }
  Token next();  // returns current token and advances

  // set when scanning failed (bad string escape, stray character)
  const std::optional<ParseError>& error() const { return error_; }

private:
  void advance();
  void fail(SourcePos pos, std::string message);

  std::string_view input_;
  size_t offset_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
  std::optional<ParseError> error_;
};

std::string escape_string_literal(std::string_view value);  // adds quotes

}  // namespace nfpc
