#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "veritag/util/strings.hpp"

namespace veritag::markup {

enum class NodeKind { document, element, text };

using NodeId = std::size_t;

struct Node {
  NodeKind kind = NodeKind::element;
  std::string tag;  // lowercase; empty for text and document nodes
  std::vector<std::pair<std::string, std::string>> attributes;  // names lowercase, source order
  std::string text;  // decoded character data for text nodes
  NodeId parent = 0;
  std::vector<NodeId> children;

  /// First value of attribute `name`, if present.
  std::optional<std::string_view> attr(std::string_view name) const {
    for (const auto& [k, v] : attributes)
      if (k == name) return std::string_view(v);
    return std::nullopt;
  }
};

/// Parsed page. Node 0 is the document root; nodes live in one arena and
/// refer to each other by index.
class Document {
 public:
  Document() { nodes_.push_back(Node{NodeKind::document, {}, {}, {}, 0, {}}); }

  static constexpr NodeId root = 0;

  const Node& node(NodeId id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }

  NodeId append(NodeId parent, Node n) {
    n.parent = parent;
    nodes_.push_back(std::move(n));
    NodeId id = nodes_.size() - 1;
    nodes_[parent].children.push_back(id);
    return id;
  }

  void append_text(NodeId parent, std::string_view text) {
    if (text.empty()) return;
    auto& kids = nodes_[parent].children;
    if (!kids.empty() && nodes_[kids.back()].kind == NodeKind::text) {
      nodes_[kids.back()].text.append(text);
      return;
    }
    Node t;
    t.kind = NodeKind::text;
    t.text = std::string(text);
    append(parent, std::move(t));
  }

  /// Pre-order walk over element nodes in document order.
  void for_each_element(const std::function<void(NodeId, const Node&)>& fn, NodeId from = root) const {
    std::vector<NodeId> stack{from};
    while (!stack.empty()) {
      NodeId id = stack.back();
      stack.pop_back();
      const Node& n = nodes_[id];
      if (n.kind == NodeKind::element) fn(id, n);
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
    }
  }

  std::size_t element_count() const {
    std::size_t count = 0;
    for (const auto& n : nodes_)
      if (n.kind == NodeKind::element) ++count;
    return count;
  }

  /// First element with the given tag in document order.
  std::optional<NodeId> find_first(std::string_view tag, NodeId from = root) const {
    std::optional<NodeId> found;
    for_each_element(
        [&](NodeId id, const Node& n) {
          if (!found && n.tag == tag) found = id;
        },
        from);
    return found;
  }

  std::vector<NodeId> find_all(std::string_view tag, NodeId from = root) const {
    std::vector<NodeId> out;
    for_each_element(
        [&](NodeId id, const Node& n) {
          if (n.tag == tag) out.push_back(id);
        },
        from);
    return out;
  }

  /// Concatenated character data below `id`.
  std::string text_content(NodeId id) const {
    std::string out;
    collect_text(id, out);
    return out;
  }

 private:
  void collect_text(NodeId id, std::string& out) const {
    const Node& n = nodes_[id];
    if (n.kind == NodeKind::text) {
      out += n.text;
      return;
    }
    for (NodeId c : n.children) collect_text(c, out);
  }

  std::vector<Node> nodes_;
};

namespace detail {

inline bool is_void_element(std::string_view tag) {
  static constexpr std::string_view voids[] = {"area", "base",  "br",   "col",   "embed",  "hr",    "img",
                                               "input", "link", "meta", "param", "source", "track", "wbr",
                                               "frame", "keygen"};
  for (auto v : voids)
    if (v == tag) return true;
  return false;
}

inline bool is_raw_text_element(std::string_view tag) { return tag == "script" || tag == "style"; }

inline bool is_escapable_raw_text_element(std::string_view tag) { return tag == "title" || tag == "textarea"; }

/// Start tags that close an open <p>.
inline bool closes_paragraph(std::string_view tag) {
  static constexpr std::string_view tags[] = {
      "address", "article", "aside",  "blockquote", "details", "dialog", "div",     "dl",    "fieldset",
      "figure",  "footer",  "form",   "h1",         "h2",      "h3",     "h4",      "h5",    "h6",
      "header",  "hr",      "main",   "menu",       "nav",     "ol",     "p",       "pre",   "section",
      "table",   "ul",      "figcaption", "hgroup", "summary"};
  for (auto t : tags)
    if (t == tag) return true;
  return false;
}

inline bool is_scope_boundary(std::string_view tag) {
  return tag == "html" || tag == "table" || tag == "td" || tag == "th" || tag == "button" || tag == "object" ||
         tag == "caption" || tag == "template";
}

inline const std::pair<std::string_view, std::uint32_t>* named_entities(std::size_t& count) {
  static constexpr std::pair<std::string_view, std::uint32_t> table[] = {
      {"amp", '&'},        {"lt", '<'},         {"gt", '>'},         {"quot", '"'},       {"apos", '\''},
      {"nbsp", 0xA0},      {"copy", 0xA9},      {"reg", 0xAE},       {"trade", 0x2122},   {"mdash", 0x2014},
      {"ndash", 0x2013},   {"hellip", 0x2026},  {"lsquo", 0x2018},   {"rsquo", 0x2019},   {"ldquo", 0x201C},
      {"rdquo", 0x201D},   {"laquo", 0xAB},     {"raquo", 0xBB},     {"middot", 0xB7},    {"bull", 0x2022},
      {"euro", 0x20AC},    {"pound", 0xA3},     {"cent", 0xA2},      {"deg", 0xB0},       {"times", 0xD7},
      {"eacute", 0xE9},    {"egrave", 0xE8},    {"aacute", 0xE1},    {"oacute", 0xF3},    {"uacute", 0xFA},
      {"iacute", 0xED},    {"ntilde", 0xF1},    {"ccedil", 0xE7},    {"uuml", 0xFC},      {"ouml", 0xF6},
      {"auml", 0xE4},      {"szlig", 0xDF},     {"shy", 0xAD},       {"zwj", 0x200D},     {"thinsp", 0x2009},
  };
  count = sizeof(table) / sizeof(table[0]);
  return table;
}

}  // namespace detail

/// Decodes character references. Unknown or malformed references stay literal.
inline std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    std::size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    std::string_view ref = s.substr(i + 1, semi - i - 1);
    bool done = false;
    if (!ref.empty() && ref[0] == '#') {
      std::uint32_t cp = 0;
      bool hex = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X');
      std::string_view digits = ref.substr(hex ? 2 : 1);
      bool ok = !digits.empty();
      for (char c : digits) {
        int v = -1;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
        if (v < 0) {
          ok = false;
          break;
        }
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
        if (cp > 0x10FFFF) cp = 0x110000;
      }
      if (ok) {
        util::append_utf8(out, cp);
        done = true;
      }
    } else {
      std::size_t count = 0;
      const auto* table = detail::named_entities(count);
      for (std::size_t k = 0; k < count; ++k) {
        if (table[k].first == ref) {
          util::append_utf8(out, table[k].second);
          done = true;
          break;
        }
      }
    }
    if (done) {
      i = semi + 1;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

namespace detail {

class TreeBuilder {
 public:
  explicit TreeBuilder(Document& doc) : doc_(doc) { stack_.push_back(Document::root); }

  NodeId current() const { return stack_.back(); }

  void text(std::string_view t) { doc_.append_text(current(), t); }

  /// Returns the new element; void and self-closed elements are not left open.
  NodeId start(Node element, bool self_closing) {
    const std::string& tag = element.tag;
    if (closes_paragraph(tag)) close_in_scope("p");
    if (tag == "li") close_in_scope("li", {"ul", "ol"});
    if (tag == "dt" || tag == "dd") {
      close_in_scope("dt", {"dl"});
      close_in_scope("dd", {"dl"});
    }
    if (tag == "option") close_if_current("option");
    if (tag == "tr") close_in_scope("tr", {"table", "tbody", "thead", "tfoot"});
    if (tag == "td" || tag == "th") {
      close_in_scope("td", {"tr", "table"});
      close_in_scope("th", {"tr", "table"});
    }
    bool is_void = is_void_element(tag);
    NodeId id = doc_.append(current(), std::move(element));
    if (!is_void && !self_closing) stack_.push_back(id);
    return id;
  }

  void end(std::string_view tag) {
    for (std::size_t k = stack_.size(); k-- > 1;) {
      if (doc_.node(stack_[k]).tag == tag) {
        stack_.resize(k);
        return;
      }
    }
    // stray end tag: ignored
  }

 private:
  void close_if_current(std::string_view tag) {
    if (stack_.size() > 1 && doc_.node(current()).tag == tag) stack_.pop_back();
  }

  void close_in_scope(std::string_view tag, std::initializer_list<std::string_view> extra_boundaries = {}) {
    for (std::size_t k = stack_.size(); k-- > 1;) {
      const std::string& t = doc_.node(stack_[k]).tag;
      if (t == tag) {
        stack_.resize(k);
        return;
      }
      if (is_scope_boundary(t)) return;
      for (auto b : extra_boundaries)
        if (t == b) return;
    }
  }

  Document& doc_;
  std::vector<NodeId> stack_;
};

inline bool is_tag_name_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

inline bool is_tag_name_char(char c) {
  return is_tag_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == ':' || c == '_' || c == '.';
}

}  // namespace detail

/// Lenient HTML parser. Never fails: malformed markup is recovered the way
/// browsers mostly do (implied </p>, </li>, </td> and friends, stray end
/// tags ignored, unclosed elements closed at end of input). Unlike a browser
/// it does not synthesize missing html/head/body elements. Invalid UTF-8 is
/// replaced with U+FFFD.
inline Document parse_html(std::string_view raw) {
  Document doc;
  const std::string input = util::sanitize_utf8(raw);
  const std::string_view s = input;
  detail::TreeBuilder builder(doc);
  const std::size_t n = s.size();
  std::size_t i = 0;
  std::size_t text_start = 0;

  auto flush_text = [&](std::size_t end) {
    if (end > text_start) builder.text(decode_entities(s.substr(text_start, end - text_start)));
  };

  while (i < n) {
    if (s[i] != '<') {
      ++i;
      continue;
    }
    // comment
    if (s.substr(i, 4) == "<!--") {
      flush_text(i);
      std::size_t end = s.find("-->", i + 4);
      i = end == std::string_view::npos ? n : end + 3;
      text_start = i;
      continue;
    }
    // doctype, CDATA, processing instructions: skipped
    if (i + 1 < n && (s[i + 1] == '!' || s[i + 1] == '?')) {
      flush_text(i);
      std::size_t end = s.find('>', i + 2);
      i = end == std::string_view::npos ? n : end + 1;
      text_start = i;
      continue;
    }
    // end tag
    if (i + 2 < n && s[i + 1] == '/' && detail::is_tag_name_start(s[i + 2])) {
      flush_text(i);
      std::size_t j = i + 2;
      while (j < n && detail::is_tag_name_char(s[j])) ++j;
      std::string tag = util::to_lower(s.substr(i + 2, j - i - 2));
      std::size_t end = s.find('>', j);
      i = end == std::string_view::npos ? n : end + 1;
      text_start = i;
      builder.end(tag);
      continue;
    }
    if (i + 1 >= n || !detail::is_tag_name_start(s[i + 1])) {
      ++i;  // literal '<'
      continue;
    }
    // start tag
    flush_text(i);
    std::size_t j = i + 1;
    while (j < n && detail::is_tag_name_char(s[j])) ++j;
    Node element;
    element.kind = NodeKind::element;
    element.tag = util::to_lower(s.substr(i + 1, j - i - 1));
    bool self_closing = false;
    while (j < n) {
      while (j < n && (util::is_ascii_space(s[j]) || s[j] == '/')) {
        if (s[j] == '/' && j + 1 < n && s[j + 1] == '>') self_closing = true;
        ++j;
      }
      if (j >= n || s[j] == '>') break;
      std::size_t name_start = j;
      while (j < n && !util::is_ascii_space(s[j]) && s[j] != '=' && s[j] != '>' &&
             !(s[j] == '/' && j + 1 < n && s[j + 1] == '>'))
        ++j;
      std::string name = util::to_lower(s.substr(name_start, j - name_start));
      while (j < n && util::is_ascii_space(s[j])) ++j;
      std::string value;
      if (j < n && s[j] == '=') {
        ++j;
        while (j < n && util::is_ascii_space(s[j])) ++j;
        if (j < n && (s[j] == '"' || s[j] == '\'')) {
          char q = s[j++];
          std::size_t close = s.find(q, j);
          if (close == std::string_view::npos) close = n;
          value = decode_entities(s.substr(j, close - j));
          j = close < n ? close + 1 : n;
        } else {
          std::size_t v0 = j;
          while (j < n && !util::is_ascii_space(s[j]) && s[j] != '>') ++j;
          value = decode_entities(s.substr(v0, j - v0));
        }
      }
      if (!name.empty()) {
        bool duplicate = false;
        for (const auto& [k, v] : element.attributes) duplicate = duplicate || k == name;
        if (!duplicate) element.attributes.emplace_back(std::move(name), std::move(value));
      }
    }
    i = j < n ? j + 1 : n;
    text_start = i;
    const std::string tag = element.tag;
    NodeId id = builder.start(std::move(element), self_closing);
    if (!self_closing && (detail::is_raw_text_element(tag) || detail::is_escapable_raw_text_element(tag))) {
      // content runs to the matching end tag, no markup inside
      std::size_t k = i;
      std::size_t close = n;
      while (k < n) {
        std::size_t lt = s.find("</", k);
        if (lt == std::string_view::npos) break;
        if (util::iequals(s.substr(lt + 2, tag.size()), tag) &&
            (lt + 2 + tag.size() >= n || !detail::is_tag_name_char(s[lt + 2 + tag.size()]))) {
          close = lt;
          break;
        }
        k = lt + 2;
      }
      std::string_view body = s.substr(i, close - i);
      if (detail::is_raw_text_element(tag)) doc.append_text(id, body);
      else doc.append_text(id, decode_entities(body));
      builder.end(tag);
      if (close >= n) {
        i = n;
      } else {
        std::size_t gt = s.find('>', close);
        i = gt == std::string_view::npos ? n : gt + 1;
      }
      text_start = i;
    }
  }
  flush_text(n);
  return doc;
}

namespace detail {

inline std::string escape_text(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string escape_attr(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '<': out += "&lt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline void serialize(const Document& doc, NodeId id, std::string& out) {
  const Node& n = doc.node(id);
  if (n.kind == NodeKind::text) {
    const Node& parent = doc.node(n.parent);
    if (is_raw_text_element(parent.tag)) out += n.text;
    else out += escape_text(n.text);
    return;
  }
  if (n.kind == NodeKind::element) {
    out += '<';
    out += n.tag;
    for (const auto& [k, v] : n.attributes) {
      out += ' ';
      out += k;
      out += "=\"";
      out += escape_attr(v);
      out += '"';
    }
    out += '>';
    if (is_void_element(n.tag)) return;
  }
  for (NodeId c : n.children) serialize(doc, c, out);
  if (n.kind == NodeKind::element) {
    out += "</";
    out += n.tag;
    out += '>';
  }
}

}  // namespace detail

/// Serializes the tree back to markup with every element explicitly closed.
inline std::string to_html(const Document& doc) {
  std::string out;
  detail::serialize(doc, Document::root, out);
  return out;
}

}  // namespace veritag::markup
