#pragma once

#include <string>
#include <utility>
#include <variant>

namespace nfpc {

struct SourcePos {
  int line = 1;
  int column = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// Lexical or syntactic failure, positioned in the input text.
struct ParseError {
  SourcePos pos;
  std::string message;
};

/// Validation or type-checking finding. `subject` names the model element
/// the rule fired on, `rule` is a stable identifier for the violated rule.
struct Diagnostic {
  std::string subject;
  std::string rule;
  std::string message;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Minimal expected-style result (std::expected is unavailable on C++20
/// toolchains). Holds exactly one of a value or an error.
template <typename T, typename E>
class Result {
public:
  Result(T value) : store_(std::in_place_index<0>, std::move(value)) {}
  Result(E error) : store_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return store_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() & { return std::get<0>(store_); }
  const T& value() const& { return std::get<0>(store_); }
  T&& value() && { return std::get<0>(std::move(store_)); }

  E& error() & { return std::get<1>(store_); }
  const E& error() const& { return std::get<1>(store_); }

private:
  std::variant<T, E> store_;
};

}  // namespace nfpc
