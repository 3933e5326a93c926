#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "veritag/markup/html.hpp"
#include "veritag/markup/tag_groups.hpp"
#include "veritag/resources_data.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::markup {

struct WebMarkupFeatures {
  std::array<int, tag_group_count> tag_group_counts{};  // indexed by TagGroup
  int ads_count = 0;
  int author_present = 0;

  int count(TagGroup g) const { return tag_group_counts[static_cast<std::size_t>(g)]; }
  bool operator==(const WebMarkupFeatures&) const = default;
};

/// Advertising-network domains. A host matches a domain when it equals it or
/// is a subdomain of it.
class AdDomains {
 public:
  AdDomains() : AdDomains(util::parse_word_list(resources::ad_domains)) {}
  explicit AdDomains(const std::vector<std::string>& domains) {
    for (const auto& d : domains) domains_.push_back(util::to_lower(d));
  }

  static AdDomains from_file(const std::string& path) { return AdDomains(util::load_word_list(path)); }

  static const AdDomains& defaults() {
    static const AdDomains bundled;
    return bundled;
  }

  void add(std::string domain) { domains_.push_back(util::to_lower(domain)); }

  bool matches_host(std::string_view host) const {
    for (const auto& d : domains_) {
      if (host == d) return true;
      if (host.size() > d.size() && util::ends_with(host, d) && host[host.size() - d.size() - 1] == '.')
        return true;
    }
    return false;
  }

  std::size_t size() const { return domains_.size(); }

 private:
  std::vector<std::string> domains_;
};

/// Host part of an absolute or protocol-relative URL; empty for relative URLs.
inline std::string url_host(std::string_view url) {
  url = util::trim(url);
  std::size_t start;
  auto lower = util::to_lower(url.substr(0, 8));
  if (util::starts_with(lower, "http://")) start = 7;
  else if (util::starts_with(lower, "https://")) start = 8;
  else if (util::starts_with(url, "//")) start = 2;
  else return {};
  std::size_t end = url.find_first_of("/?#", start);
  std::string_view authority = url.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
  if (auto at = authority.rfind('@'); at != std::string_view::npos) authority.remove_prefix(at + 1);
  if (auto colon = authority.find(':'); colon != std::string_view::npos) authority = authority.substr(0, colon);
  return util::to_lower(authority);
}

/// Lowercase alphanumeric segments of an attribute value ("sidebar-ad news"
/// yields sidebar, ad, news).
inline std::vector<std::string> attribute_tokens(std::string_view value) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : value) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      cur.push_back(util::ascii_lower(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

namespace detail {

inline bool has_token(const Node& n, std::initializer_list<std::string_view> wanted) {
  for (const char* attr : {"id", "class"}) {
    auto v = n.attr(attr);
    if (!v) continue;
    for (const auto& tok : attribute_tokens(*v))
      for (auto w : wanted)
        if (tok == w) return true;
  }
  return false;
}

}  // namespace detail

/// Elements that look like advertisements, each counted once:
///  (a) iframe/script/img/ins whose `src` host is an ad-network domain;
///  (b) any element whose id or class has an ad-marker token.
inline int count_ads(const Document& doc, const AdDomains& domains) {
  int count = 0;
  doc.for_each_element([&](NodeId, const Node& n) {
    bool hit = false;
    if (n.tag == "iframe" || n.tag == "script" || n.tag == "img" || n.tag == "ins") {
      if (auto src = n.attr("src")) {
        auto host = url_host(*src);
        hit = !host.empty() && domains.matches_host(host);
      }
    }
    if (!hit)
      hit = detail::has_token(n, {"ad", "ads", "advert", "advertisement", "sponsored", "adsbygoogle", "taboola",
                                  "outbrain", "doubleclick"});
    if (hit) ++count;
  });
  return count;
}

inline int count_ads(const Document& doc) { return count_ads(doc, AdDomains::defaults()); }

/// 1 when the page names an author through meta tags, rel="author", or a
/// non-empty byline/author element.
inline int detect_author(const Document& doc) {
  bool found = false;
  doc.for_each_element([&](NodeId id, const Node& n) {
    if (found) return;
    if (n.tag == "meta") {
      auto content = n.attr("content");
      bool nonempty = content && !util::trim(*content).empty();
      auto name = n.attr("name");
      auto property = n.attr("property");
      if (nonempty && ((name && util::iequals(util::trim(*name), "author")) ||
                       (property && util::iequals(util::trim(*property), "article:author")))) {
        found = true;
        return;
      }
    }
    if (auto rel = n.attr("rel")) {
      for (const auto& tok : util::split_ws(*rel))
        if (util::iequals(tok, "author")) {
          found = true;
          return;
        }
    }
    if (detail::has_token(n, {"byline", "author"}) && !util::trim(doc.text_content(id)).empty()) found = true;
  });
  return found ? 1 : 0;
}

inline WebMarkupFeatures markup_features(const Document& doc, const AdDomains& domains) {
  WebMarkupFeatures f;
  doc.for_each_element([&](NodeId, const Node& n) {
    if (auto g = group_of(n.tag)) ++f.tag_group_counts[static_cast<std::size_t>(*g)];
  });
  f.ads_count = count_ads(doc, domains);
  f.author_present = detect_author(doc);
  return f;
}

inline WebMarkupFeatures markup_features(const Document& doc) { return markup_features(doc, AdDomains::defaults()); }

}  // namespace veritag::markup
