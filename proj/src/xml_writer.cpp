#include "nfpc/xml_writer.hpp"

namespace nfpc::xml {

std::string escape_attr(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_text(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

Element& Element::attr(std::string name, std::string_view value) {
  attrs_.emplace_back(std::move(name), escape_attr(value));
  return *this;
}

Element& Element::raw_attr(std::string name, std::string value) {
  attrs_.emplace_back(std::move(name), std::move(value));
  return *this;
}

Element& Element::text(std::string value) {
  text_ = std::move(value);
  return *this;
}

Element& Element::child(Element element) {
  children_.push_back(std::move(element));
  return *this;
}

void Element::render(std::string& out, int depth) const {
  std::string indent(static_cast<size_t>(depth) * 2, ' ');
  out += indent;
  out += '<';
  out += name_;
  for (const auto& [name, value] : attrs_) {
    out += ' ';
    out += name;
    out += "=\"";
    out += value;
    out += '"';
  }
  if (children_.empty() && text_.empty()) {
    out += "/>\n";
    return;
  }
  if (children_.empty()) {
    out += '>';
    out += escape_text(text_);
    out += "</";
    out += name_;
    out += ">\n";
    return;
  }
  out += ">\n";
  for (const auto& child : children_) child.render(out, depth + 1);
  out += indent;
  out += "</";
  out += name_;
  out += ">\n";
}

std::string render_document(const Element& root, const std::vector<DtdEntity>& entities) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!entities.empty()) {
    out += "<!DOCTYPE " + root.name() + " [\n";
    for (const auto& entity : entities)
      out += "  <!ENTITY " + entity.name + " \"" + entity.value + "\">\n";
    out += "]>\n";
  }
  root.render(out, 0);
  return out;
}

}  // namespace nfpc::xml
