#include "support/xml_doc.hpp"

#include <algorithm>
#include <cctype>

namespace nfpc::test {

const std::string* XmlNode::attr(std::string_view attr_name) const {
  for (const auto& [name, value] : attrs)
    if (name == attr_name) return &value;
  return nullptr;
}

void XmlNode::collect(std::string_view element_name, std::vector<const XmlNode*>& out) const {
  if (name == element_name) out.push_back(this);
  for (const auto& child : children) child.collect(element_name, out);
}

std::vector<const XmlNode*> XmlNode::find_all(std::string_view element_name) const {
  std::vector<const XmlNode*> out;
  collect(element_name, out);
  return out;
}

const XmlNode* XmlNode::first(std::string_view element_name) const {
  auto all = find_all(element_name);
  return all.empty() ? nullptr : all.front();
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '.' ||
         c == '-';
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  XmlDoc run() {
    XmlDoc doc;
    skip_prolog(doc);
    if (!starts_element()) fail("expected root element");
    doc.root = element(doc);
    skip_misc();
    if (pos_ != text_.size()) fail("content after root element");
    return doc;
  }

private:
  [[noreturn]] void fail(const std::string& message) {
    throw XmlParseError(message + " at offset " + std::to_string(pos_));
  }

  char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool eof() const { return pos_ >= text_.size(); }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(cur()))) ++pos_;
  }

  void skip_comment() {
    expect("<!--");
    size_t end = text_.find("-->", pos_);
    if (end == std::string_view::npos) fail("unterminated comment");
    pos_ = end + 3;
  }

  bool starts_element() const {
    return cur() == '<' && pos_ + 1 < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '_');
  }

  std::string name_token() {
    size_t start = pos_;
    while (!eof() && is_name_char(cur())) ++pos_;
    if (pos_ == start) fail("expected name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string expand(std::string_view raw, const XmlDoc& doc) {
    std::string out;
    for (size_t i = 0; i < raw.size();) {
      if (raw[i] != '&') {
        out += raw[i++];
        continue;
      }
      size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("bare '&' in content");
      std::string entity(raw.substr(i + 1, semi - i - 1));
      if (entity == "amp")
        out += '&';
      else if (entity == "lt")
        out += '<';
      else if (entity == "gt")
        out += '>';
      else if (entity == "quot")
        out += '"';
      else if (entity == "apos")
        out += '\'';
      else {
        auto declared = std::find_if(doc.entities.begin(), doc.entities.end(),
                                     [&](const auto& e) { return e.first == entity; });
        if (declared == doc.entities.end()) fail("undeclared entity '&" + entity + ";'");
        out += declared->second;
      }
      i = semi + 1;
    }
    return out;
  }

  void skip_prolog(XmlDoc& doc) {
    skip_ws();
    if (consume("<?xml")) {
      size_t end = text_.find("?>", pos_);
      if (end == std::string_view::npos) fail("unterminated XML declaration");
      pos_ = end + 2;
    }
    skip_misc();
    if (consume("<!DOCTYPE")) {
      skip_ws();
      name_token();
      skip_ws();
      if (consume("[")) {
        while (true) {
          skip_ws();
          if (consume("]")) break;
          expect("<!ENTITY");
          skip_ws();
          std::string entity_name = name_token();
          skip_ws();
          expect("\"");
          size_t end = text_.find('"', pos_);
          if (end == std::string_view::npos) fail("unterminated entity value");
          doc.entities.emplace_back(entity_name,
                                    std::string(text_.substr(pos_, end - pos_)));
          pos_ = end + 1;
          skip_ws();
          expect(">");
        }
        skip_ws();
      }
      expect(">");
    }
    skip_misc();
  }

  void skip_misc() {
    while (true) {
      skip_ws();
      if (cur() == '<' && text_.substr(pos_, 4) == "<!--")
        skip_comment();
      else
        return;
    }
  }

  XmlNode element(const XmlDoc& doc) {
    expect("<");
    XmlNode node;
    node.name = name_token();
    while (true) {
      skip_ws();
      if (consume("/>")) return node;
      if (consume(">")) break;
      std::string attr_name = name_token();
      if (node.attr(attr_name)) fail("duplicate attribute '" + attr_name + "'");
      skip_ws();
      expect("=");
      skip_ws();
      expect("\"");
      size_t end = text_.find('"', pos_);
      if (end == std::string_view::npos) fail("unterminated attribute value");
      std::string_view raw = text_.substr(pos_, end - pos_);
      if (raw.find('<') != std::string_view::npos) fail("'<' in attribute value");
      node.attrs.emplace_back(attr_name, expand(raw, doc));
      pos_ = end + 1;
    }

    // content
    while (true) {
      if (eof()) fail("unterminated element '" + node.name + "'");
      if (cur() == '<') {
        if (text_.substr(pos_, 4) == "<!--") {
          skip_comment();
          continue;
        }
        if (text_.substr(pos_, 2) == "</") {
          pos_ += 2;
          std::string closing = name_token();
          if (closing != node.name)
            fail("mismatched closing tag '" + closing + "' for '" + node.name + "'");
          skip_ws();
          expect(">");
          return node;
        }
        if (!starts_element()) fail("unsupported markup");
        node.children.push_back(element(doc));
        continue;
      }
      size_t end = text_.find('<', pos_);
      if (end == std::string_view::npos) fail("unterminated element '" + node.name + "'");
      std::string_view raw = text_.substr(pos_, end - pos_);
      std::string expanded = expand(raw, doc);
      bool only_ws = std::all_of(expanded.begin(), expanded.end(), [](unsigned char c) {
        return std::isspace(c);
      });
      if (!only_ws) node.text += expanded;
      pos_ = end;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

XmlDoc parse_xml(std::string_view text) { return Parser(text).run(); }

bool structurally_equal(const XmlNode& a, const XmlNode& b) {
  if (a.name != b.name || a.text != b.text) return false;
  auto sorted = [](const XmlNode& n) {
    auto attrs = n.attrs;
    std::sort(attrs.begin(), attrs.end());
    return attrs;
  };
  if (sorted(a) != sorted(b)) return false;
  if (a.children.size() != b.children.size()) return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(a.children[i], b.children[i])) return false;
  return true;
}

std::string canonical_string(const XmlNode& node) {
  std::string out = "(" + node.name;
  auto attrs = node.attrs;
  std::sort(attrs.begin(), attrs.end());
  for (const auto& [name, value] : attrs) out += " " + name + "='" + value + "'";
  if (!node.text.empty()) out += " text='" + node.text + "'";
  for (const auto& child : node.children) out += " " + canonical_string(child);
  out += ")";
  return out;
}

}  // namespace nfpc::test
