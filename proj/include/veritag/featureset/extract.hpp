#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <vector>

#include "veritag/corpus/manifest.hpp"
#include "veritag/featureset/schema.hpp"
#include "veritag/linguistics/dictionary.hpp"
#include "veritag/linguistics/morphology.hpp"
#include "veritag/linguistics/pos_tagger.hpp"
#include "veritag/linguistics/readability.hpp"
#include "veritag/linguistics/tokenizer.hpp"
#include "veritag/markup/article.hpp"
#include "veritag/markup/features.hpp"
#include "veritag/markup/html.hpp"
#include "veritag/util/parallel.hpp"

namespace veritag::featureset {

inline constexpr std::array<std::string_view, 19> readability_feature_names = {
    "FRI", "FKI", "MSI", "GFI", "CLI", "ARI", "LWI", "WS", "W", "STC",
    "CH",  "SY",  "LX",  "CW.cap", "CW.complex", "DW", "LW", "URL", "PS"};

/// Immutable resources shared by every extraction call.
struct ExtractionContext {
  std::shared_ptr<const linguistics::CategoryDictionary> dictionary;
  std::shared_ptr<const linguistics::PosTagger> tagger;
  std::shared_ptr<const linguistics::WordLists> word_lists;
  std::shared_ptr<const markup::AdDomains> ad_domains;

  /// Bundled demo dictionary, rule tagger, default lists and ad domains.
  static ExtractionContext defaults() {
    ExtractionContext c;
    c.dictionary = std::make_shared<linguistics::CategoryDictionary>(linguistics::CategoryDictionary::demo());
    c.tagger = std::make_shared<linguistics::RuleTagger>();
    c.word_lists = std::make_shared<linguistics::WordLists>();
    c.ad_domains = std::make_shared<markup::AdDomains>();
    return c;
  }
};

inline std::vector<std::string> group_feature_names(Group g, const linguistics::CategoryDictionary& dict) {
  std::vector<std::string> out;
  const std::string prefix = std::string(1, group_letter(g)) + ".";
  switch (g) {
    case Group::N:
      for (auto t : linguistics::morphological_tags) out.push_back(prefix + std::string(t));
      break;
    case Group::L:
      for (const auto& c : dict.categories) out.push_back(prefix + c);
      break;
    case Group::R:
      for (auto r : readability_feature_names) out.push_back(prefix + std::string(r));
      break;
    case Group::W:
      for (auto t : markup::tag_group_names) out.push_back(prefix + std::string(t));
      out.push_back(prefix + "ADS");
      out.push_back(prefix + "AU");
      break;
  }
  return out;
}

/// Every feature of the requested groups, groups in N, L, R, W order.
inline FeatureSchema full_schema(const GroupSet& groups, Granularity granularity,
                                 const linguistics::CategoryDictionary& dict) {
  FeatureSchema s;
  s.groups = groups;
  s.granularity = granularity;
  for (Group g : all_groups)
    if (groups.count(g))
      for (auto& n : group_feature_names(g, dict)) s.names.push_back(std::move(n));
  s.validate();
  return s;
}

inline std::vector<double> readability_values(const linguistics::ReadabilityScores& r) {
  return {r.fri, r.fki, r.msi, r.gfi, r.cli, r.ari, r.lwi,
          r.ws,  static_cast<double>(r.w), static_cast<double>(r.stc), static_cast<double>(r.ch),
          static_cast<double>(r.sy), static_cast<double>(r.lx), static_cast<double>(r.cw_cap),
          static_cast<double>(r.cw_complex), static_cast<double>(r.dw), static_cast<double>(r.lw),
          static_cast<double>(r.url), r.ps};
}

inline std::vector<double> markup_values(const markup::WebMarkupFeatures& w) {
  std::vector<double> out;
  for (int c : w.tag_group_counts) out.push_back(c);
  out.push_back(w.ads_count);
  out.push_back(w.author_present);
  return out;
}

/// N, L and R blocks for one piece of text.
struct LinguisticBlocks {
  std::vector<double> morphological;
  std::vector<double> psychological;
  std::vector<double> readability;
};

inline LinguisticBlocks linguistic_blocks(const std::string& text, const ExtractionContext& ctx) {
  auto tok = linguistics::tokenize(text, ctx.word_lists->abbreviations);
  LinguisticBlocks b;
  auto pos = linguistics::morphological_features(tok, *ctx.tagger);
  for (int c : pos.counts) b.morphological.push_back(c);
  b.psychological = linguistics::dictionary_scores(tok.tokens, *ctx.dictionary);
  b.readability = readability_values(linguistics::readability_features(tok, *ctx.word_lists));
  return b;
}

inline std::string granularity_text(const markup::Article& a, Granularity g) {
  switch (g) {
    case Granularity::H: return a.headline;
    case Granularity::C: return a.content;
    default: return a.headline + "\n" + a.content;
  }
}

/// All features a page can produce, computed once: linguistic blocks per
/// granularity (only those requested) and the page-level markup block.
struct PageFeatures {
  std::string doc_id;
  std::optional<Label> label;
  int year = 0;
  std::string site;
  markup::Article article;
  std::vector<double> markup;
  std::array<std::optional<LinguisticBlocks>, 3> linguistic;  // indexed by Granularity
};

inline PageFeatures page_features(const std::string& doc_id, const std::string& html,
                                  const std::vector<Granularity>& granularities, const ExtractionContext& ctx) {
  PageFeatures p;
  p.doc_id = doc_id;
  auto tree = markup::parse_html(html);
  p.article = markup::extract_article(tree);
  p.markup = markup_values(markup::markup_features(tree, *ctx.ad_domains));
  for (Granularity g : granularities) {
    auto& slot = p.linguistic[static_cast<std::size_t>(g)];
    if (!slot) slot = linguistic_blocks(granularity_text(p.article, g), ctx);
  }
  return p;
}

/// Vector over the full schema of `groups`; W comes from the page tree for
/// every granularity.
inline FeatureVector assemble(const PageFeatures& p, Granularity granularity, const GroupSet& groups) {
  FeatureVector v;
  v.doc_id = p.doc_id;
  v.label = p.label;
  const auto& blocks = p.linguistic[static_cast<std::size_t>(granularity)];
  const bool needs_text = groups.count(Group::N) || groups.count(Group::L) || groups.count(Group::R);
  if (needs_text && !blocks) throw InvariantError("page features lack the requested granularity");
  for (Group g : all_groups) {
    if (!groups.count(g)) continue;
    const std::vector<double>* src = nullptr;
    switch (g) {
      case Group::N: src = &blocks->morphological; break;
      case Group::L: src = &blocks->psychological; break;
      case Group::R: src = &blocks->readability; break;
      case Group::W: src = &p.markup; break;
    }
    v.values.insert(v.values.end(), src->begin(), src->end());
  }
  return v;
}

/// Feature vector aligned to `full_schema(groups, granularity, dict)`.
inline FeatureVector extract_tag_features(const markup::Article& article, const markup::Document& tree,
                                          Granularity granularity, const GroupSet& groups,
                                          const ExtractionContext& ctx) {
  PageFeatures p;
  p.article = article;
  p.markup = markup_values(markup::markup_features(tree, *ctx.ad_domains));
  p.linguistic[static_cast<std::size_t>(granularity)] = linguistic_blocks(granularity_text(article, granularity), ctx);
  return assemble(p, granularity, groups);
}

inline std::vector<PageFeatures> extract_corpus(const std::vector<corpus::RawDocument>& docs,
                                                const std::vector<Granularity>& granularities,
                                                const ExtractionContext& ctx, unsigned jobs = 1) {
  std::vector<PageFeatures> out(docs.size());
  util::parallel_for(docs.size(), jobs, [&](std::size_t i) {
    out[i] = page_features(docs[i].id, docs[i].html, granularities, ctx);
    out[i].label = docs[i].label;
    out[i].year = docs[i].year;
    out[i].site = docs[i].site;
  });
  return out;
}

inline FeatureMatrix assemble_matrix(const std::vector<PageFeatures>& pages, const FeatureSchema& full) {
  FeatureMatrix m;
  m.schema = full;
  for (const auto& p : pages) m.rows.push_back(assemble(p, full.granularity, full.groups));
  return m;
}

}  // namespace veritag::featureset
