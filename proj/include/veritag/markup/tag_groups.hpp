#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace veritag::markup {

/// Functional tag groups. Order here is the feature order everywhere else.
enum class TagGroup { BT, FT, FIT, FRT, IT, AVT, LKT, LT, TT, ST, MT, PT };

inline constexpr std::size_t tag_group_count = 12;

inline constexpr std::array<std::string_view, tag_group_count> tag_group_names = {
    "BT", "FT", "FIT", "FRT", "IT", "AVT", "LKT", "LT", "TT", "ST", "MT", "PT"};

struct TagGroupEntry {
  std::string_view tag;
  TagGroup group;
};

// Mirrors resources/tag_groups.json; a test keeps the two in sync.
inline constexpr TagGroupEntry tag_group_table[] = {
    {"html", TagGroup::BT},      {"body", TagGroup::BT},      {"title", TagGroup::BT},
    {"h1", TagGroup::BT},        {"h2", TagGroup::BT},        {"h3", TagGroup::BT},
    {"h4", TagGroup::BT},        {"h5", TagGroup::BT},        {"h6", TagGroup::BT},
    {"p", TagGroup::BT},         {"br", TagGroup::BT},        {"hr", TagGroup::BT},
    {"b", TagGroup::FT},         {"i", TagGroup::FT},         {"u", TagGroup::FT},
    {"em", TagGroup::FT},        {"strong", TagGroup::FT},    {"small", TagGroup::FT},
    {"sub", TagGroup::FT},       {"sup", TagGroup::FT},       {"mark", TagGroup::FT},
    {"del", TagGroup::FT},       {"ins", TagGroup::FT},       {"abbr", TagGroup::FT},
    {"acronym", TagGroup::FT},   {"blockquote", TagGroup::FT}, {"cite", TagGroup::FT},
    {"code", TagGroup::FT},      {"pre", TagGroup::FT},       {"q", TagGroup::FT},
    {"s", TagGroup::FT},         {"form", TagGroup::FIT},     {"input", TagGroup::FIT},
    {"textarea", TagGroup::FIT}, {"button", TagGroup::FIT},   {"select", TagGroup::FIT},
    {"option", TagGroup::FIT},   {"optgroup", TagGroup::FIT}, {"label", TagGroup::FIT},
    {"fieldset", TagGroup::FIT}, {"legend", TagGroup::FIT},   {"datalist", TagGroup::FIT},
    {"output", TagGroup::FIT},   {"frame", TagGroup::FRT},    {"frameset", TagGroup::FRT},
    {"noframes", TagGroup::FRT}, {"iframe", TagGroup::FRT},   {"img", TagGroup::IT},
    {"map", TagGroup::IT},       {"area", TagGroup::IT},      {"canvas", TagGroup::IT},
    {"figure", TagGroup::IT},    {"figcaption", TagGroup::IT}, {"picture", TagGroup::IT},
    {"svg", TagGroup::IT},       {"audio", TagGroup::AVT},    {"video", TagGroup::AVT},
    {"source", TagGroup::AVT},   {"track", TagGroup::AVT},    {"embed", TagGroup::AVT},
    {"a", TagGroup::LKT},        {"nav", TagGroup::LKT},      {"link", TagGroup::LKT},
    {"ul", TagGroup::LT},        {"ol", TagGroup::LT},        {"li", TagGroup::LT},
    {"dl", TagGroup::LT},        {"dt", TagGroup::LT},        {"dd", TagGroup::LT},
    {"table", TagGroup::TT},     {"caption", TagGroup::TT},   {"th", TagGroup::TT},
    {"tr", TagGroup::TT},        {"td", TagGroup::TT},        {"thead", TagGroup::TT},
    {"tbody", TagGroup::TT},     {"tfoot", TagGroup::TT},     {"col", TagGroup::TT},
    {"colgroup", TagGroup::TT},  {"article", TagGroup::ST},   {"section", TagGroup::ST},
    {"aside", TagGroup::ST},     {"header", TagGroup::ST},    {"footer", TagGroup::ST},
    {"main", TagGroup::ST},      {"details", TagGroup::ST},   {"summary", TagGroup::ST},
    {"dialog", TagGroup::ST},    {"head", TagGroup::MT},      {"meta", TagGroup::MT},
    {"base", TagGroup::MT},      {"style", TagGroup::MT},     {"script", TagGroup::PT},
    {"noscript", TagGroup::PT},  {"object", TagGroup::PT},    {"param", TagGroup::PT},
};

/// Group of a lowercase tag name; unknown and custom tags belong to none.
inline std::optional<TagGroup> group_of(std::string_view tag) {
  for (const auto& e : tag_group_table)
    if (e.tag == tag) return e.group;
  return std::nullopt;
}

}  // namespace veritag::markup
