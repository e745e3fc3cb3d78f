#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfpc/diagnostics.hpp"
#include "nfpc/vsl.hpp"

namespace nfpc {

/// XSD value type a basic NFP type maps to. Closed set.
enum class XsdType { Double, Integer, Boolean, String };

std::string_view xsd_type_name(XsdType t);   // "xsd:double", ...
std::string_view xsd_type_local(XsdType t);  // "double", ...
std::optional<XsdType> xsd_type_from_local(std::string_view local);

/// One basic NFP type: its XSD value type plus the admissible unit literals.
struct NfpTypeEntry {
  std::string name;
  XsdType xsd_value_type = XsdType::Double;
  std::vector<std::string> units;  // admissible unit literals
  bool unit_open = false;          // any unit string accepted

  /// Whether values of this type carry a unit at all.
  bool has_unit() const { return unit_open || !units.empty(); }

  friend bool operator==(const NfpTypeEntry&, const NfpTypeEntry&) = default;
};

/// The built-in basic-type table plus user extensions. Immutable once
/// loaded; lookups are safe to run concurrently.
class NfpTypeLibrary {
public:
  /// Built-in table: NFP_Real, NFP_Integer, NFP_Boolean, NFP_String,
  /// NFP_Percentage, NFP_Price, NFP_Duration, NFP_DataSize, NFP_Frequency.
  static NfpTypeLibrary builtin();

  const NfpTypeEntry* lookup(std::string_view name) const;

  /// Adds an extension entry. Extensions never shadow built-ins or earlier
  /// extensions; a duplicate name yields a diagnostic.
  std::optional<Diagnostic> add(NfpTypeEntry entry);

  /// Loads an extension file:
  ///   nfptype NAME : xsd:TYPE ( units [ "u1", ... ] | units open | unitless )
  /// Returns the number of entries added.
  Result<int, ParseError> load_extensions(std::string_view text);

  const std::vector<NfpTypeEntry>& entries() const { return entries_; }
  size_t builtin_count() const { return builtin_count_; }

private:
  std::vector<NfpTypeEntry> entries_;
  size_t builtin_count_ = 0;
};

/// Static admissibility check of a constraint literal against an NFP type:
/// value kind must match the XSD type (integer types take only lexically
/// integral numbers) and tuple units must be admissible. nullopt means ok.
std::optional<Diagnostic> check_literal(const NfpTypeEntry& entry, const vsl::Literal& literal);

}  // namespace nfpc
