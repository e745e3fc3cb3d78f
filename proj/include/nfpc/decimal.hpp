#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace nfpc {

/// Exact decimal number for scale-aware comparison: 200.00 and 200.0 denote
/// the same value. Callers keep the written text themselves; this type only
/// answers ordering questions.
class Decimal {
public:
  /// Accepts `-?[0-9]+(\.[0-9]+)?`. Anything else yields nullopt.
  static std::optional<Decimal> parse(std::string_view text);

  /// Three-way comparison: negative, zero or positive.
  int compare(const Decimal& other) const;

  /// True when the fractional digits are all zero.
  bool is_integral() const { return frac_.empty(); }

  bool negative() const { return negative_; }

private:
  bool negative_ = false;
  std::string int_;   // integer digits, leading zeros stripped ("0" stays "0")
  std::string frac_;  // fractional digits, trailing zeros stripped
};

/// True when `text` is in xsd:integer's lexical space: optional sign plus
/// digits, no decimal point.
bool is_lexical_integer(std::string_view text);

}  // namespace nfpc
