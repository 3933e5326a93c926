#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "veritag/markup/html.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::markup {

/// Headline and body text of a page, plus which extraction rules fired.
struct Article {
  std::string headline;
  std::string content;  // plain text; one line per paragraph
  std::vector<std::string> extraction_notes;
};

namespace detail {

inline bool is_block_element(std::string_view tag) {
  static constexpr std::string_view tags[] = {
      "address", "article", "aside", "blockquote", "body",   "br",     "dd",       "details", "dialog",
      "div",     "dl",      "dt",    "fieldset",   "figcaption", "figure", "footer", "form",    "h1",
      "h2",      "h3",      "h4",    "h5",         "h6",     "header", "hr",       "li",      "main",
      "nav",     "ol",      "p",     "pre",        "section", "summary", "table",  "td",      "th",
      "tr",      "ul",      "caption", "title",    "head",   "html"};
  for (auto t : tags)
    if (t == tag) return true;
  return false;
}

inline bool never_text(std::string_view tag) {
  return tag == "script" || tag == "style" || tag == "noscript" || tag == "template";
}

inline void collect_block_text(const Document& doc, NodeId id, std::initializer_list<std::string_view> skip,
                               std::string& out) {
  const Node& n = doc.node(id);
  if (n.kind == NodeKind::text) {
    out += n.text;
    return;
  }
  if (n.kind == NodeKind::element) {
    if (never_text(n.tag)) return;
    for (auto s : skip)
      if (n.tag == s) return;
  }
  const bool block = n.kind == NodeKind::element && is_block_element(n.tag);
  if (block) out.push_back('\n');
  for (NodeId c : n.children) collect_block_text(doc, c, skip, out);
  if (block) out.push_back('\n');
}

/// Whitespace-collapsed lines, empty lines dropped.
inline std::string normalize_lines(std::string_view raw) {
  std::vector<std::string> lines;
  for (const auto& line : util::split(raw, '\n')) {
    auto collapsed = util::collapse_ws(line);
    if (!collapsed.empty()) lines.push_back(std::move(collapsed));
  }
  return util::join(lines, "\n");
}

}  // namespace detail

/// Block-aware plain text of the subtree at `id`: block elements start new
/// lines, script/style/noscript/template are never text.
inline std::string block_text(const Document& doc, NodeId id, std::initializer_list<std::string_view> skip = {}) {
  std::string raw;
  detail::collect_block_text(doc, id, skip, raw);
  return detail::normalize_lines(raw);
}

/// Extraction cascade.
///
/// Headline: first non-empty of og:title meta content, <title>, first <h1>.
/// Content: first non-empty of the first <article>'s text, the <p> elements
/// under <body> (one line each), the body text without
/// script/style/nav/footer/aside.
inline Article extract_article(const Document& doc) {
  Article a;

  doc.for_each_element([&](NodeId, const Node& n) {
    if (!a.headline.empty() || n.tag != "meta") return;
    auto prop = n.attr("property");
    if (!prop) prop = n.attr("name");
    if (prop && util::iequals(util::trim(*prop), "og:title")) {
      if (auto content = n.attr("content")) a.headline = util::collapse_ws(*content);
    }
  });
  if (!a.headline.empty()) {
    a.extraction_notes.push_back("headline: og:title");
  } else if (auto title = doc.find_first("title");
             title && !(a.headline = util::collapse_ws(doc.text_content(*title))).empty()) {
    a.extraction_notes.push_back("headline: title");
  } else if (auto h1 = doc.find_first("h1"); h1 && !(a.headline = util::collapse_ws(block_text(doc, *h1))).empty()) {
    a.extraction_notes.push_back("headline: h1");
  } else {
    a.headline.clear();
    a.extraction_notes.push_back("no headline source");
  }

  const NodeId body = doc.find_first("body").value_or(Document::root);
  if (auto article = doc.find_first("article"); article && !(a.content = block_text(doc, *article)).empty()) {
    a.extraction_notes.push_back("content: article");
    return a;
  }
  std::vector<std::string> paragraphs;
  for (NodeId p : doc.find_all("p", body)) {
    auto text = block_text(doc, p);
    if (!text.empty()) paragraphs.push_back(std::move(text));
  }
  if (!paragraphs.empty()) {
    a.content = util::join(paragraphs, "\n");
    a.extraction_notes.push_back("content: paragraphs");
    return a;
  }
  a.content = block_text(doc, body, {"nav", "footer", "aside", "head", "title"});
  a.extraction_notes.push_back(a.content.empty() ? "no content" : "content: body text");
  return a;
}

}  // namespace veritag::markup
