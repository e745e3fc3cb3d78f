#include "nfpc/decimal.hpp"

#include <algorithm>
#include <cctype>

namespace nfpc {

std::optional<Decimal> Decimal::parse(std::string_view text) {
  Decimal d;
  size_t i = 0;
  if (i < text.size() && text[i] == '-') {
    d.negative_ = true;
    ++i;
  }
  size_t int_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == int_begin) return std::nullopt;
  d.int_.assign(text.substr(int_begin, i - int_begin));
  if (i < text.size() && text[i] == '.') {
    ++i;
    size_t frac_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == frac_begin) return std::nullopt;
    d.frac_.assign(text.substr(frac_begin, i - frac_begin));
  }
  if (i != text.size()) return std::nullopt;

  size_t nz = d.int_.find_first_not_of('0');
  d.int_ = nz == std::string::npos ? "0" : d.int_.substr(nz);
  while (!d.frac_.empty() && d.frac_.back() == '0') d.frac_.pop_back();
  if (d.int_ == "0" && d.frac_.empty()) d.negative_ = false;  // -0 is 0
  return d;
}

namespace {

// compares |a| and |b| given normalized digit strings
int compare_magnitude(const Decimal&, const std::string& ai, const std::string& af,
                      const std::string& bi, const std::string& bf) {
  if (ai.size() != bi.size()) return ai.size() < bi.size() ? -1 : 1;
  if (int c = ai.compare(bi); c != 0) return c < 0 ? -1 : 1;
  size_t n = std::max(af.size(), bf.size());
  for (size_t k = 0; k < n; ++k) {
    char ca = k < af.size() ? af[k] : '0';
    char cb = k < bf.size() ? bf[k] : '0';
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

}  // namespace

int Decimal::compare(const Decimal& other) const {
  if (negative_ != other.negative_) return negative_ ? -1 : 1;
  int mag = compare_magnitude(*this, int_, frac_, other.int_, other.frac_);
  return negative_ ? -mag : mag;
}

bool is_lexical_integer(std::string_view text) {
  size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

}  // namespace nfpc
