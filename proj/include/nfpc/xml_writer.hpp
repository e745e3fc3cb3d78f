#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nfpc::xml {

std::string escape_attr(std::string_view value);
std::string escape_text(std::string_view value);

/// Buildable element tree rendered deterministically: attributes in
/// insertion order, 2-space indent, LF line endings. Attributes added with
/// raw_attr are emitted verbatim so intentional entity references like
/// `&xsd;double` survive; everything else is escaped.
class Element {
public:
  explicit Element(std::string name) : name_(std::move(name)) {}

  Element& attr(std::string name, std::string_view value);
  Element& raw_attr(std::string name, std::string value);
  Element& text(std::string value);
  Element& child(Element element);

  const std::string& name() const { return name_; }
  const std::vector<Element>& children() const { return children_; }

  void render(std::string& out, int depth) const;

private:
  std::string name_;
  std::vector<std::pair<std::string, std::string>> attrs_;  // values pre-escaped
  std::string text_;
  std::vector<Element> children_;
};

struct DtdEntity {
  std::string name;
  std::string value;
};

/// Full document: XML declaration, optional internal DTD subset declaring
/// `entities` on the root element's name, then the tree. UTF-8, LF.
std::string render_document(const Element& root, const std::vector<DtdEntity>& entities = {});

}  // namespace nfpc::xml
