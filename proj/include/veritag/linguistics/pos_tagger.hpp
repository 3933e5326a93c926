#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/linguistics/tokenizer.hpp"
#include "veritag/util/random.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::linguistics {

/// Penn Treebank word-level tags a tagger may emit.
inline constexpr std::array<std::string_view, 36> penn_word_tags = {
    "CC",  "CD",  "DT",  "EX",  "FW",  "IN",  "JJ",   "JJR", "JJS", "LS",  "MD",  "NN",
    "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB",  "RBR", "RBS", "RP",  "SYM",
    "TO",  "UH",  "VB",  "VBD", "VBG", "VBN", "VBP",  "VBZ", "WDT", "WP",  "WP$", "WRB"};

/// One tag per token; `tokens` is treated as a single sentence.
class PosTagger {
 public:
  virtual ~PosTagger() = default;
  virtual std::vector<std::string> tag(const std::vector<std::string>& tokens) const = 0;

  /// Tags sentence by sentence and concatenates.
  std::vector<std::string> tag(const TokenizedText& text) const {
    std::vector<std::string> out;
    out.reserve(text.tokens.size());
    for (const auto& s : text.sentences) {
      std::vector<std::string> sentence(text.tokens.begin() + static_cast<std::ptrdiff_t>(s.begin),
                                        text.tokens.begin() + static_cast<std::ptrdiff_t>(s.end));
      for (auto& t : tag(sentence)) out.push_back(std::move(t));
    }
    return out;
  }
};

namespace detail {

enum class VerbForm { base, past, participle, past_or_participle, third, gerund };

struct Lexicon {
  std::unordered_map<std::string, std::string> fixed;  // closed-class and common words
  std::unordered_map<std::string, VerbForm> verbs;
  std::unordered_set<std::string> verb_bases;
  std::unordered_set<std::string> noun_verbs;  // bases that are commonly nouns too

  static const Lexicon& get() {
    static const Lexicon lex = build();
    return lex;
  }

 private:
  static void add(Lexicon& l, std::string_view tag, std::string_view words) {
    for (const auto& w : util::split_ws(words)) l.fixed[w] = std::string(tag);
  }

  static Lexicon build() {
    Lexicon l;
    add(l, "DT", "the a an this these those every each some any no another either neither");
    add(l, "IN",
        "of in on at by for with from about into over after before under between through during without "
        "against among because if while although though since unless than as whether upon within toward "
        "towards across behind beyond near like despite until till via per amid onto throughout inside "
        "outside above below along beside besides except whereas");
    add(l, "CC", "and or but nor plus yet");
    add(l, "PRP",
        "i you he she it we they me him us them myself yourself himself herself itself ourselves themselves "
        "yourselves i'm you're he's she's it's we're they're i've you've we've they've i'll you'll he'll "
        "she'll we'll they'll i'd you'd he'd she'd we'd they'd");
    add(l, "PRP$", "my your his its our their");
    add(l, "WDT", "which whichever whatever");
    add(l, "WP", "who whom what whoever");
    add(l, "WP$", "whose");
    add(l, "WRB", "when where why how whenever wherever");
    add(l, "MD", "can could will would shall should may might must ought can't couldn't won't wouldn't "
                  "shouldn't cannot mustn't");
    add(l, "TO", "to");
    add(l, "RB",
        "not n't also very just now then here so too only even still already again ever never always often "
        "soon almost however really quite perhaps maybe well away ago once instead together else rather enough "
        "nearly indeed actually probably finally recently currently simply yet");
    add(l, "RBR", "more less further");
    add(l, "RBS", "most least");
    add(l, "UH", "oh wow hey yes yeah ah ouch oops hello ok okay hi please alas hmm huh uh um");
    add(l, "JJ",
        "good bad new old great big small large high low long short young early late important public "
        "political national federal former real fake false true full free last next first other many much "
        "few several same own recent major local foreign senior top final key white black red blue green "
        "social economic human whole possible able clear certain special little private common available "
        "strong sure hard easy happy sad angry dead open close");
    add(l, "JJR",
        "better worse bigger smaller larger higher lower greater older younger earlier fewer stronger longer "
        "faster easier harder richer poorer");
    add(l, "JJS",
        "best worst biggest smallest largest highest lowest greatest oldest youngest latest strongest longest "
        "fastest easiest hardest richest poorest");
    add(l, "CD",
        "zero one two three four five six seven eight nine ten eleven twelve thirteen fifteen twenty thirty "
        "forty fifty sixty seventy eighty ninety hundred thousand million billion trillion dozen");
    add(l, "NN", "today yesterday tomorrow people time year way day man thing woman life child world "
                 "government news state country week");
    add(l, "VBZ", "is has does says doesn't isn't hasn't");
    add(l, "VBP", "am are aren't don't haven't");
    add(l, "VBD", "was were wasn't weren't didn't");
    add(l, "VBN", "been");
    add(l, "VBG", "being having doing");
    add(l, "VB", "let's");

    // irregular verbs: base past participle
    static constexpr std::string_view irregular[] = {
        "be was been",        "have had had",         "do did done",        "say said said",
        "go went gone",       "get got gotten",       "make made made",     "know knew known",
        "think thought thought", "take took taken",   "see saw seen",       "come came come",
        "give gave given",    "find found found",     "tell told told",     "become became become",
        "leave left left",    "feel felt felt",       "bring brought brought", "begin began begun",
        "keep kept kept",     "hold held held",       "write wrote written", "stand stood stood",
        "hear heard heard",   "mean meant meant",     "meet met met",       "run ran run",
        "pay paid paid",      "sit sat sat",          "speak spoke spoken", "lead led led",
        "grow grew grown",    "lose lost lost",       "fall fell fallen",   "send sent sent",
        "build built built",  "win won won",          "buy bought bought",  "sell sold sold",
        "eat ate eaten",      "sleep slept slept",    "show showed shown",  "break broke broken",
        "choose chose chosen", "drive drove driven",  "fight fought fought", "catch caught caught",
        "teach taught taught", "throw threw thrown",  "wear wore worn",     "forget forgot forgotten",
        "spend spent spent",  "steal stole stolen",   "rise rose risen",    "fly flew flown",
        "draw drew drawn",    "hide hid hidden",      "seek sought sought", "shake shook shaken",
        "sing sang sung",     "swim swam swum",       "understand understood understood",
        "lay laid laid",      "flee fled fled",       "strike struck struck", "bear bore born",
        "ride rode ridden",   "wake woke woken",      "feed fed fed",       "deal dealt dealt",
    };
    static constexpr std::string_view unchanged[] = {"put", "set", "let", "hit", "cut", "hurt", "shut",
                                                     "cost", "quit", "spread", "read", "bet", "split"};
    for (auto line : irregular) {
      auto parts = util::split_ws(line);
      l.verbs[parts[0]] = VerbForm::base;
      l.verb_bases.insert(parts[0]);
      if (parts[1] == parts[2]) {
        l.verbs[parts[1]] = VerbForm::past_or_participle;
      } else {
        l.verbs[parts[1]] = VerbForm::past;
        l.verbs[parts[2]] = VerbForm::participle;
      }
    }
    for (auto v : unchanged) {
      l.verbs[std::string(v)] = VerbForm::past_or_participle;
      l.verb_bases.insert(std::string(v));
    }
    static constexpr std::string_view regular =
        "announce ask believe call claim continue decide deny expect help include need plan report seem start "
        "support talk try turn use want work accuse add agree allow appear attack ban block change charge close "
        "confirm consider create die end face fail follow happen hope investigate kill like live look love move "
        "open play protest provide raise reach receive reject remain remove require return reveal sign stop "
        "suggest threaten vote warn watch walk jump share post launch order push pass arrest admit argue demand "
        "insist respond explain learn listen wait visit worry cause offer serve suffer promise";
    static constexpr std::string_view noun_like =
        "call claim help need plan report support talk try turn use work attack ban block change charge close "
        "end face hope like look love move play protest return sign stop vote watch walk jump share post launch "
        "order push pass arrest demand wait visit worry cause offer promise cut hit set bet split cost";
    for (const auto& v : util::split_ws(regular)) {
      l.verb_bases.insert(v);
      l.verbs.emplace(v, VerbForm::base);
    }
    for (const auto& v : util::split_ws(noun_like)) l.noun_verbs.insert(v);
    return l;
  }
};

inline bool is_have_or_be(std::string_view w) {
  static constexpr std::string_view forms[] = {"have", "has", "had", "having", "is", "are", "was", "were",
                                               "been", "being", "be", "am", "i've", "you've", "we've",
                                               "they've", "get", "got", "gets"};
  for (auto f : forms)
    if (w == f) return true;
  return false;
}

inline bool is_determiner_like(std::string_view tag) {
  return tag == "DT" || tag == "JJ" || tag == "PRP$" || tag == "IN" || tag == "POS" || tag == "CD" ||
         tag == "PDT" || tag == "JJS" || tag == "JJR";
}

inline bool has_letter(std::string_view w) {
  for (char c : w)
    if (std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80) return true;
  return false;
}

inline bool has_digit(std::string_view w) {
  for (char c : w)
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
  return false;
}

}  // namespace detail

/// Lexicon plus suffix/shape rules. Needs no model file; also serves as the
/// unknown-word fallback of the perceptron tagger.
class RuleTagger : public PosTagger {
 public:
  using PosTagger::tag;

  std::vector<std::string> tag(const std::vector<std::string>& tokens) const override {
    std::vector<std::string> tags;
    tags.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) tags.push_back(tag_token(tokens, i, tags));
    return tags;
  }

  /// Tag for tokens[i] given the tags already assigned to tokens[0, i).
  std::string tag_token(const std::vector<std::string>& tokens, std::size_t i,
                        const std::vector<std::string>& prev_tags) const {
    const auto& lex = detail::Lexicon::get();
    const std::string& word = tokens[i];
    std::string lower = util::to_lower(word);
    const std::string prev = i > 0 && i - 1 < prev_tags.size() ? prev_tags[i - 1] : "";
    const std::string prev_word = i > 0 ? util::to_lower(tokens[i - 1]) : "";
    const std::string next_word = i + 1 < tokens.size() ? util::to_lower(tokens[i + 1]) : "";

    if (!detail::has_letter(word)) return "CD";
    if (detail::has_digit(word) && lower.size() >= 3 &&
        (util::ends_with(lower, "s") || util::ends_with(lower, "th") || util::ends_with(lower, "st") ||
         util::ends_with(lower, "nd") || util::ends_with(lower, "rd")) &&
        std::isdigit(static_cast<unsigned char>(lower[0])))
      return "CD";

    // contextual closed-class words
    if (lower == "that") return prev == "NN" || prev == "NNS" ? "WDT" : "IN";
    if (lower == "all" || lower == "both" || lower == "half" || lower == "such") {
      static const std::set<std::string> dets = {"the", "a", "an", "this", "that", "these", "those", "my",
                                                 "his", "her", "their", "our", "its", "your"};
      if (dets.count(next_word)) return "PDT";
      return lower == "such" ? "JJ" : "DT";
    }
    if (lower == "her") {
      auto nf = lex.fixed.find(next_word);
      bool next_open = !next_word.empty() && (nf == lex.fixed.end() || nf->second == "JJ" || nf->second == "NN");
      return next_open ? "PRP$" : "PRP";
    }
    if (lower == "there") {
      static const std::set<std::string> be = {"is", "are", "was", "were", "be", "been", "seems", "remains"};
      return be.count(next_word) ? "EX" : "RB";
    }
    if (lower == "up" || lower == "down" || lower == "off" || lower == "out") {
      return util::starts_with(prev, "VB") ? "RP" : (lower == "out" ? "RP" : "IN");
    }
    if (lower == "have" || lower == "do") {
      if (prev == "MD" || prev == "TO") return "VB";
      return "VBP";
    }
    if (lower == "be") return "VB";
    if (lower == "had" || lower == "did") {
      return lower == "had" && detail::is_have_or_be(prev_word) ? "VBN" : "VBD";
    }
    if (auto it = lex.fixed.find(lower); it != lex.fixed.end()) {
      const bool capitalized = std::isupper(static_cast<unsigned char>(word[0]));
      // mid-sentence capitalized content words are names ("Will", "May" excluded)
      if (!(capitalized && i > 0 && (it->second == "JJ" || it->second == "NN" || it->second == "JJR")))
        return it->second;
    }

    const bool capitalized = std::isupper(static_cast<unsigned char>(word[0]));
    if (capitalized && i > 0) {
      if (util::ends_with(lower, "'s")) return "NNP";
      bool all_caps = std::all_of(word.begin(), word.end(), [](char c) {
        return !std::isalpha(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c));
      });
      if (!all_caps && word.size() > 3 && util::ends_with(word, "s") && !util::ends_with(word, "ss") &&
          lex.fixed.count(lower.substr(0, lower.size() - 1)) == 0 && !lex.verbs.count(lower))
        return "NNPS";
      return "NNP";
    }

    std::string stem = lower;
    if (util::ends_with(stem, "'s")) stem.resize(stem.size() - 2);

    if (auto it = lex.verbs.find(stem); it != lex.verbs.end()) {
      switch (it->second) {
        case detail::VerbForm::past: return "VBD";
        case detail::VerbForm::participle: return "VBN";
        case detail::VerbForm::past_or_participle:
          if (stem == "put" || stem == "set" || stem == "let" || stem == "hit" || stem == "cut" ||
              stem == "hurt" || stem == "shut" || stem == "cost" || stem == "quit" || stem == "spread" ||
              stem == "read" || stem == "bet" || stem == "split") {
            if (prev == "MD" || prev == "TO") return "VB";
            if (detail::is_determiner_like(prev) && lex.noun_verbs.count(stem)) return "NN";
          }
          return perfect_context(tokens, i) ? "VBN" : "VBD";
        case detail::VerbForm::base:
          if (prev == "MD" || prev == "TO") return "VB";
          if (detail::is_determiner_like(prev)) return "NN";
          if (prev == "PRP" || prev == "NNS" || prev == "WDT" || prev == "WP") return "VBP";
          if (lex.noun_verbs.count(stem)) return i == 0 ? "VB" : "NN";
          return "VB";
        default: break;
      }
    }

    if (stem.size() > 4 && util::ends_with(stem, "ing")) return "VBG";
    if (stem.size() > 3 && util::ends_with(stem, "ed")) return perfect_context(tokens, i) ? "VBN" : "VBD";
    if (stem.size() > 3 && util::ends_with(stem, "ly")) return "RB";
    if (stem.size() > 4 && util::ends_with(stem, "iest")) return "JJS";
    if (stem.size() > 4 && util::ends_with(stem, "ier")) return "JJR";
    if (prev == "MD" || prev == "TO") return "VB";
    for (std::string_view suffix : {"ous", "ful", "ive", "able", "ible", "ic", "less", "ish", "ical", "ary", "ent", "ant"})
      if (stem.size() > suffix.size() + 2 && util::ends_with(stem, suffix)) return "JJ";
    if (stem.size() > 5 && util::ends_with(stem, "al") && !util::ends_with(stem, "sal") && !util::ends_with(stem, "val"))
      return "JJ";
    if (stem.size() > 3 && util::ends_with(stem, "s") && !util::ends_with(stem, "ss") &&
        !util::ends_with(stem, "us") && !util::ends_with(stem, "is")) {
      std::string base = stem.substr(0, stem.size() - 1);
      std::string base_es = util::ends_with(stem, "es") ? stem.substr(0, stem.size() - 2) : base;
      bool verb = lex.verb_bases.count(base) || lex.verb_bases.count(base_es);
      if (verb && (prev == "PRP" || prev == "NN" || prev == "NNP" || prev == "WDT" || prev == "WP")) return "VBZ";
      return "NNS";
    }
    if (prev == "PRP") return "VBP";
    return "NN";
  }

 private:
  /// A have/be/get form within the previous three tokens (adverbs skipped).
  static bool perfect_context(const std::vector<std::string>& tokens, std::size_t i) {
    const auto& lex = detail::Lexicon::get();
    for (std::size_t back = 1; back <= 3 && back <= i; ++back) {
      std::string w = util::to_lower(tokens[i - back]);
      if (detail::is_have_or_be(w)) return true;
      auto it = lex.fixed.find(w);
      if (it == lex.fixed.end() || (it->second != "RB" && it->second != "PRP")) {
        if (!(w.size() > 3 && util::ends_with(w, "ly"))) return false;
      }
    }
    return false;
  }
};

/// Greedy left-to-right averaged perceptron.
///
/// Features: bias, lowercase word, word shape, 1-3 character suffixes,
/// first character, the previous two predicted tags (alone, paired, and with
/// the word) and the neighbouring words. Words never seen in training are
/// tagged by the rule backend.
class PerceptronTagger : public PosTagger {
 public:
  using PosTagger::tag;
  using Weights = std::map<std::string, std::map<std::string, double>>;

  struct TaggedSentence {
    std::vector<std::string> words;
    std::vector<std::string> tags;
  };

  PerceptronTagger() = default;

  std::vector<std::string> tag(const std::vector<std::string>& tokens) const override {
    std::vector<std::string> tags;
    tags.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!known_words_.count(util::to_lower(tokens[i]))) {
        tags.push_back(fallback_.tag_token(tokens, i, tags));
        continue;
      }
      tags.push_back(predict(features(tokens, i, tags)));
    }
    return tags;
  }

  /// Trains from scratch. Sentence order is reshuffled each epoch from `seed`.
  void train(const std::vector<TaggedSentence>& sentences, int epochs, std::uint64_t seed) {
    weights_.clear();
    known_words_.clear();
    tags_.clear();
    std::set<std::string> tag_set;
    for (const auto& s : sentences) {
      if (s.words.size() != s.tags.size()) throw DataError("tagger training: words/tags length mismatch");
      for (std::size_t i = 0; i < s.words.size(); ++i) {
        known_words_.insert(util::to_lower(s.words[i]));
        tag_set.insert(s.tags[i]);
      }
    }
    if (tag_set.empty()) throw DataError("tagger training: no tagged tokens");
    tags_.assign(tag_set.begin(), tag_set.end());

    // averaging bookkeeping: running totals and last-update timestamps
    std::map<std::pair<std::string, std::string>, double> totals;
    std::map<std::pair<std::string, std::string>, long> stamps;
    long clock = 0;
    auto update = [&](const std::string& feat, const std::string& tag, double delta) {
      auto key = std::make_pair(feat, tag);
      double& w = weights_[feat][tag];
      totals[key] += static_cast<double>(clock - stamps[key]) * w;
      stamps[key] = clock;
      w += delta;
    };

    std::vector<std::size_t> order(sentences.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    util::Rng rng(seed);
    for (int epoch = 0; epoch < epochs; ++epoch) {
      util::shuffle(order, rng);
      for (std::size_t idx : order) {
        const auto& s = sentences[idx];
        std::vector<std::string> predicted;
        for (std::size_t i = 0; i < s.words.size(); ++i) {
          ++clock;
          auto feats = features(s.words, i, predicted);
          std::string guess = predict(feats);
          if (guess != s.tags[i]) {
            for (const auto& f : feats) {
              update(f, s.tags[i], 1.0);
              update(f, guess, -1.0);
            }
          }
          predicted.push_back(guess);
        }
      }
    }
    for (auto& [feat, per_tag] : weights_) {
      for (auto& [tag, w] : per_tag) {
        auto key = std::make_pair(feat, tag);
        double total = totals[key] + static_cast<double>(clock - stamps[key]) * w;
        w = clock > 0 ? total / static_cast<double>(clock) : w;
      }
    }
    prune_zero_weights();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["format"] = "veritag-perceptron-tagger";
    j["version"] = 1;
    j["tags"] = tags_;
    j["known_words"] = std::vector<std::string>(known_words_.begin(), known_words_.end());
    j["weights"] = weights_;
    return j;
  }

  static PerceptronTagger from_json(const nlohmann::json& j) {
    try {
      if (j.at("format") != "veritag-perceptron-tagger") throw DataError("not a perceptron tagger weights file");
      if (j.at("version") != 1) throw DataError("unsupported tagger weights version");
      PerceptronTagger t;
      t.tags_ = j.at("tags").get<std::vector<std::string>>();
      auto words = j.at("known_words").get<std::vector<std::string>>();
      t.known_words_.insert(words.begin(), words.end());
      t.weights_ = j.at("weights").get<Weights>();
      if (t.tags_.empty()) throw DataError("tagger weights file has no tags");
      return t;
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("tagger weights: ") + e.what());
    }
  }

  static PerceptronTagger load(const std::string& path) {
    std::string text;
    try {
      text = util::read_file(path);
    } catch (const DataError&) {
      throw DataError("missing tagger weights file: " + path);
    }
    try {
      return from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError("tagger weights " + path + ": " + e.what());
    }
  }

  void save(const std::string& path) const { util::write_file(path, to_json().dump() + "\n"); }

  const std::vector<std::string>& tags() const { return tags_; }

  static std::string shape(std::string_view word) {
    std::string out;
    for (char c : word) {
      auto u = static_cast<unsigned char>(c);
      char k = std::isupper(u) ? 'X' : std::islower(u) ? 'x' : std::isdigit(u) ? 'd' : c;
      if (out.empty() || out.back() != k) out.push_back(k);
    }
    return out;
  }

 private:
  static std::vector<std::string> features(const std::vector<std::string>& words, std::size_t i,
                                           const std::vector<std::string>& prev_tags) {
    const std::string w = util::to_lower(words[i]);
    const std::string p1 = i >= 1 ? prev_tags[i - 1] : "-START-";
    const std::string p2 = i >= 2 ? prev_tags[i - 2] : "-START2-";
    const std::string prev_word = i >= 1 ? util::to_lower(words[i - 1]) : "-START-";
    const std::string next_word = i + 1 < words.size() ? util::to_lower(words[i + 1]) : "-END-";
    auto suffix = [&](std::size_t n) { return w.size() >= n ? w.substr(w.size() - n) : w; };
    return {"bias",
            "w=" + w,
            "shape=" + shape(words[i]),
            "suf1=" + suffix(1),
            "suf2=" + suffix(2),
            "suf3=" + suffix(3),
            "pre1=" + w.substr(0, 1),
            "t-1=" + p1,
            "t-2=" + p2,
            "t-1,t-2=" + p1 + "," + p2,
            "t-1,w=" + p1 + "," + w,
            "w-1=" + prev_word,
            "w+1=" + next_word};
  }

  std::string predict(const std::vector<std::string>& feats) const {
    std::map<std::string, double> scores;
    for (const auto& t : tags_) scores[t] = 0.0;
    for (const auto& f : feats) {
      auto it = weights_.find(f);
      if (it == weights_.end()) continue;
      for (const auto& [tag, w] : it->second) scores[tag] += w;
    }
    // highest score; ties go to the lexicographically smallest tag
    std::string best;
    double best_score = 0.0;
    for (const auto& [tag, s] : scores) {
      if (best.empty() || s > best_score) {
        best = tag;
        best_score = s;
      }
    }
    return best;
  }

  void prune_zero_weights() {
    for (auto it = weights_.begin(); it != weights_.end();) {
      for (auto jt = it->second.begin(); jt != it->second.end();) {
        if (jt->second == 0.0) jt = it->second.erase(jt);
        else ++jt;
      }
      if (it->second.empty()) it = weights_.erase(it);
      else ++it;
    }
  }

  Weights weights_;
  std::set<std::string> known_words_;
  std::vector<std::string> tags_;
  RuleTagger fallback_;
};

/// Parses a tagger spec: "rules" or "perceptron:PATH".
inline std::shared_ptr<const PosTagger> make_tagger(const std::string& spec) {
  if (spec.empty() || spec == "rules") return std::make_shared<RuleTagger>();
  if (util::starts_with(spec, "perceptron:")) {
    auto path = spec.substr(std::string("perceptron:").size());
    if (path.empty()) throw UsageError("tagger spec 'perceptron:' needs a weights path");
    return std::make_shared<PerceptronTagger>(PerceptronTagger::load(path));
  }
  throw UsageError("unknown tagger spec '" + spec + "' (expected rules or perceptron:PATH)");
}

/// Reads a tagged corpus: one sentence per line, tokens as word/TAG.
inline std::vector<PerceptronTagger::TaggedSentence> parse_tagged_corpus(std::string_view text) {
  std::vector<PerceptronTagger::TaggedSentence> out;
  auto lines = util::split(text, '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto line = util::trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;
    PerceptronTagger::TaggedSentence s;
    for (const auto& item : util::split_ws(line)) {
      auto slash = item.rfind('/');
      if (slash == std::string::npos || slash == 0 || slash + 1 == item.size())
        throw DataError("tagged corpus line " + std::to_string(n + 1) + ": expected word/TAG, got '" + item + "'");
      s.words.push_back(item.substr(0, slash));
      s.tags.push_back(item.substr(slash + 1));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace veritag::linguistics
