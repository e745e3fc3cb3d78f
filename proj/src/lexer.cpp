#include "lexer.hpp"

#include <cctype>

namespace nfpc {

namespace {

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool name_part(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Lexer::Lexer(std::string_view input) : input_(input) { advance(); }

Token Lexer::next() {
  Token t = current_;
  advance();
  return t;
}

void Lexer::fail(SourcePos pos, std::string message) {
  if (!error_) error_ = ParseError{pos, std::move(message)};
  current_ = Token{Token::Kind::End, "", pos};
}

void Lexer::advance() {
  if (error_) return;

  // skip whitespace and # comments
  while (offset_ < input_.size()) {
    char c = input_[offset_];
    if (c == '\n') {
      ++line_;
      column_ = 1;
      ++offset_;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++column_;
      ++offset_;
    } else if (c == '#') {
      while (offset_ < input_.size() && input_[offset_] != '\n') ++offset_;
    } else {
      break;
    }
  }

  SourcePos pos{line_, column_};
  if (offset_ >= input_.size()) {
    current_ = Token{Token::Kind::End, "", pos};
    return;
  }

  char c = input_[offset_];
  auto take = [&](size_t n) {
    std::string s(input_.substr(offset_, n));
    offset_ += n;
    column_ += static_cast<int>(n);
    return s;
  };

  if (name_start(c)) {
    size_t end = offset_;
    while (end < input_.size() && name_part(input_[end])) ++end;
    current_ = Token{Token::Kind::Name, take(end - offset_), pos};
    return;
  }

  bool negative_number = c == '-' && offset_ + 1 < input_.size() &&
                         std::isdigit(static_cast<unsigned char>(input_[offset_ + 1]));
  if (std::isdigit(static_cast<unsigned char>(c)) || negative_number) {
    size_t end = offset_ + (negative_number ? 1 : 0);
    while (end < input_.size() && std::isdigit(static_cast<unsigned char>(input_[end]))) ++end;
    if (end < input_.size() && input_[end] == '.') {
      size_t frac = end + 1;
      if (frac >= input_.size() || !std::isdigit(static_cast<unsigned char>(input_[frac])))
        return fail(pos, "digits required after decimal point");
      while (frac < input_.size() && std::isdigit(static_cast<unsigned char>(input_[frac]))) ++frac;
      end = frac;
    }
    current_ = Token{Token::Kind::Number, take(end - offset_), pos};
    return;
  }

  if (c == '"') {
    std::string value;
    size_t i = offset_ + 1;
    int col = column_ + 1;
    while (true) {
      if (i >= input_.size() || input_[i] == '\n')
        return fail(pos, "unterminated string literal");
      char s = input_[i];
      if (s == '"') {
        ++i;
        ++col;
        break;
      }
      if (s == '\\') {
        if (i + 1 >= input_.size()) return fail(pos, "unterminated string literal");
        char e = input_[i + 1];
        switch (e) {
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          default:
            return fail(SourcePos{line_, col}, std::string("unknown escape \\") + e);
        }
        i += 2;
        col += 2;
      } else {
        value += s;
        ++i;
        ++col;
      }
    }
    offset_ = i;
    column_ = col;
    current_ = Token{Token::Kind::String, std::move(value), pos};
    return;
  }

  auto two = input_.substr(offset_, 2);
  if (two == "==" || two == "!=" || two == "<=" || two == ">=") {
    current_ = Token{Token::Kind::Symbol, take(2), pos};
    return;
  }
  switch (c) {
    case '{': case '}': case '(': case ')': case ':': case '=':
    case ',': case '[': case ']': case '<': case '>': case '/':
      current_ = Token{Token::Kind::Symbol, take(1), pos};
      return;
    default:
      return fail(pos, std::string("unexpected character '") + c + "'");
  }
}

std::string escape_string_literal(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace nfpc
