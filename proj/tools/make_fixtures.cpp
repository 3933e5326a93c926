// Writes the bundled synthetic corpora:
//   data/mini_corpus   40 pages, two sites per class, two styles that differ
//                      in ads, markup and language
//   data/drift_corpus  80 pages over two years; the topic vocabulary of the
//                      two classes swaps between years while language style
//                      is identical and only the page markup tells classes apart
//
// usage: make_fixtures OUT_DATA_DIR

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "veritag/featureset/extract.hpp"
#include "veritag/util/random.hpp"
#include "veritag/util/strings.hpp"

namespace fs = std::filesystem;
using veritag::util::Rng;
using veritag::util::uniform_index;

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform_index(rng, v.size())];
}

int between(Rng& rng, int lo, int hi) { return lo + static_cast<int>(uniform_index(rng, static_cast<std::size_t>(hi - lo + 1))); }

struct Page {
  std::string id, url, site, label;
  int year;
  std::string html;
};

void write_corpus(const fs::path& dir, const std::vector<Page>& pages,
                  const std::vector<std::pair<std::string, std::string>>& sites) {
  fs::create_directories(dir / "pages");
  std::string manifest;
  for (const auto& p : pages) {
    const std::string rel = "pages/" + p.id + ".html";
    veritag::util::write_file((dir / rel).string(), p.html);
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["url"] = p.url;
    j["site"] = p.site;
    j["label"] = p.label;
    j["year"] = p.year;
    j["html_path"] = rel;
    manifest += j.dump() + "\n";
  }
  veritag::util::write_file((dir / "manifest.jsonl").string(), manifest);
  nlohmann::ordered_json labels;
  for (const auto& [site, label] : sites) labels[site] = label;
  veritag::util::write_file((dir / "site_labels.json").string(), labels.dump(2) + "\n");
}

// ---- mini corpus ---------------------------------------------------------

const std::vector<std::string> shared_topics = {"the city council", "the state budget", "the school board",
                                                "the new highway", "the water utility", "the county court",
                                                "the housing plan", "the election office"};

std::string formal_sentence(Rng& rng, const std::string& topic) {
  static const std::vector<std::string> forms = {
      "According to documents reviewed this week, %T approved a revised schedule after several months of "
      "deliberation.",
      "Officials familiar with %T said the proposal would require additional review before implementation.",
      "The decision by %T followed a lengthy consultation period that included testimony from independent "
      "analysts.",
      "Representatives declined to comment on the specific figures, although %T published a summary of its "
      "findings.",
      "Independent auditors examined the records maintained by %T and reported no significant "
      "irregularities.",
      "Residents who attended the meeting asked whether %T had considered alternative financing arrangements.",
      "In a statement released on Tuesday, %T described the agreement as a preliminary framework rather than "
      "a final settlement.",
      "Economists noted that the projected costs associated with %T remain consistent with earlier "
      "estimates."};
  std::string s = pick(rng, forms);
  s.replace(s.find("%T"), 2, topic);
  return s;
}

std::string shouty_sentence(Rng& rng, const std::string& topic) {
  static const std::vector<std::string> forms = {
      "You won't believe what %T just did!",   "They lied to you again!",
      "Wake up, people!",                      "This is HUGE news about %T!",
      "Share this before they delete it!",     "We told you so!",
      "Nobody is talking about %T!",           "It is a total disaster!",
      "You need to see this right now!",       "%T is hiding the truth from you!"};
  std::string s = pick(rng, forms);
  if (auto pos = s.find("%T"); pos != std::string::npos) {
    std::string t = topic;
    if (pos == 0) t[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    s.replace(pos, 2, t);
  }
  return s;
}

std::string upper_first(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

Page reliable_mini_page(Rng& rng, const std::string& site, const std::string& id, int year) {
  const std::string topic = pick(rng, shared_topics);
  const std::string headline = upper_first(topic.substr(4)) + " approves revised plan after review";
  const std::vector<std::string> authors = {"Maria Chen", "David Okafor", "Laura Brennan", "Samuel Ortiz"};
  const std::string author = pick(rng, authors);
  std::string body;
  const int paragraphs = between(rng, 4, 6);
  for (int p = 0; p < paragraphs; ++p) {
    body += "<p>";
    const int sentences = between(rng, 2, 3);
    for (int s = 0; s < sentences; ++s) body += (s ? " " : "") + formal_sentence(rng, topic);
    body += "</p>\n";
  }
  std::string html = "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>" + headline +
                     " | " + site + "</title>\n<meta property=\"og:title\" content=\"" + headline +
                     "\">\n<meta name=\"author\" content=\"" + author + "\">\n<link rel=\"stylesheet\" href=\"/site.css\">\n"
                     "</head>\n<body>\n<header><nav><a href=\"/\">Home</a> <a href=\"/local\">Local</a> "
                     "<a href=\"/politics\">Politics</a></nav></header>\n<main>\n<article>\n<h1>" +
                     headline + "</h1>\n<p class=\"byline\">By <a rel=\"author\" href=\"/staff\">" + author +
                     "</a></p>\n" + body;
  if (uniform_index(rng, 2)) html += "<figure><img src=\"/img/" + id + ".jpg\" alt=\"\"><figcaption>File photo.</figcaption></figure>\n";
  html += "</article>\n<section class=\"related\"><h2>Related coverage</h2><ul><li><a href=\"/a\">Earlier report</a></li>"
          "<li><a href=\"/b\">Background</a></li></ul></section>\n</main>\n<footer><p>Contact the newsroom.</p>"
          "</footer>\n</body>\n</html>\n";
  return {id, "https://www." + site + "/" + std::to_string(year) + "/" + id, site, "reliable", year, html};
}

Page unreliable_mini_page(Rng& rng, const std::string& site, const std::string& id, int year) {
  const std::string topic = pick(rng, shared_topics);
  const std::string headline = "SHOCKING: " + upper_first(topic.substr(4)) + " EXPOSED!!!";
  std::string html = "<html>\n<head>\n<title>" + headline +
                     "</title>\n<script src=\"https://securepubads.g.doubleclick.net/tag/js/gpt.js\"></script>\n"
                     "<script src=\"https://cdn.taboola.com/libtrc/loader.js\"></script>\n</head>\n<body>\n"
                     "<div class=\"ad banner\"><iframe src=\"https://googleads.g.doubleclick.net/pagead/ads?slot=1\">"
                     "</iframe></div>\n<h1>" +
                     headline + "</h1>\n";
  const int paragraphs = between(rng, 5, 8);
  for (int p = 0; p < paragraphs; ++p) {
    html += "<p>";
    const int sentences = between(rng, 2, 4);
    for (int s = 0; s < sentences; ++s) html += (s ? " " : "") + shouty_sentence(rng, topic);
    html += "</p>\n";
    if (p % 2 == 1) html += "<img src=\"/memes/" + id + "-" + std::to_string(p) + ".gif\">\n";
    if (p % 3 == 2)
      html += "<ins class=\"adsbygoogle\"></ins>\n<iframe src=\"https://ads.revcontent.com/widget?id=" +
              std::to_string(p) + "\"></iframe>\n";
  }
  html += "<video src=\"/clips/" + id + ".mp4\" autoplay></video>\n<div class=\"sponsored\"><a href=\"https://"
          "www.outbrain.com/what-is\">You may also like</a></div>\n<form action=\"/subscribe\"><input type=\"email\">"
          "<button>SUBSCRIBE NOW</button></form>\n</body>\n</html>\n";
  return {id, "http://" + site + "/" + id, site, "unreliable", year, html};
}

// ---- drift corpus --------------------------------------------------------

// Word i of both lists has the same length, syllable count, tag, dictionary
// categories and easy-word status, so swapping lists leaves every linguistic
// feature unchanged. The generator checks this for every page it writes.
const std::vector<std::string> economy_words = {"tariff", "export",  "lender",   "ledger", "pension",
                                                "surplus", "invoice", "mortgage", "quota",  "commodity"};
const std::vector<std::string> celebrity_words = {"gossip",  "ballad",  "singer",   "sequel", "romance",
                                                  "fashion", "concert", "premiere", "album",  "celebrity"};

// Every page uses each template once and each topic word once, in shuffled
// order, so word-level statistics match across pages and only order varies.
std::string drift_text(Rng& rng, const std::vector<std::string>& topic) {
  std::vector<std::string> forms = {
      "Analysts said the %W debate dominated the week.",
      "Several readers wrote to ask about the %W story.",
      "The latest %W report arrived late on Friday evening.",
      "Critics argued that the %W question deserved more attention.",
      "Supporters said the %W plan would be announced soon.",
      "A spokesperson described the %W news as unexpected.",
      "Observers expect the %W issue to return next month.",
      "Many people followed the %W coverage closely.",
      "Nobody could explain the %W delay on Monday.",
      "Local groups discussed the %W proposal at length."};
  std::vector<std::string> words = topic;
  veritag::util::shuffle(forms, rng);
  veritag::util::shuffle(words, rng);
  std::string text;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::string s = forms[i];
    s.replace(s.find("%W"), 2, words[i % words.size()]);
    text += (i ? " " : "") + s;
  }
  return text;
}

std::string with_words(std::string text, const std::vector<std::string>& from, const std::vector<std::string>& to) {
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t pos = text.find(from[i]); pos != std::string::npos; pos = text.find(from[i], pos + to[i].size()))
      text.replace(pos, from[i].size(), to[i]);
  }
  return text;
}

Page drift_page(Rng& rng, const std::string& site, const std::string& label, const std::string& id, int year,
                const std::vector<std::string>& topic) {
  const std::string headline = "Readers debate the " + topic.front() + " story";
  const std::string body = drift_text(rng, topic);
  auto sentences = veritag::util::split(body, '.');
  std::string article = "<article>\n";
  std::string para;
  int in_para = 0;
  for (const auto& raw : sentences) {
    auto s = std::string(veritag::util::trim(raw));
    if (s.empty()) continue;
    para += (in_para ? " " : "") + s + ".";
    if (++in_para == 2) {
      article += "<p>" + para + "</p>\n";
      para.clear();
      in_para = 0;
    }
  }
  if (!para.empty()) article += "<p>" + para + "</p>\n";
  article += "</article>\n";

  std::string html = "<html>\n<head>\n<title>" + headline + "</title>\n";
  if (label == "reliable") {
    html += "<meta name=\"author\" content=\"Staff Reporter\">\n</head>\n<body>\n<header><nav>";
    const int links = between(rng, 4, 7);
    for (int i = 0; i < links; ++i) html += "<a href=\"/s" + std::to_string(i) + "\">Section</a>";
    html += "</nav></header>\n<main>\n<section>\n" + article + "</section>\n";
    if (uniform_index(rng, 2)) html += "<figure><img src=\"/photo.jpg\" alt=\"\"></figure>\n";
    html += "</main>\n<aside><a href=\"/more\">More</a></aside>\n<footer><a href=\"/about\">About</a></footer>\n";
  } else {
    html += "<script src=\"https://securepubads.g.doubleclick.net/tag/js/gpt.js\"></script>\n</head>\n<body>\n";
    const int ads = between(rng, 3, 6);
    for (int i = 0; i < ads; ++i)
      html += "<div class=\"ad\"><iframe src=\"https://googleads.g.doubleclick.net/pagead/ads?s=" + std::to_string(i) +
              "\"></iframe></div>\n";
    const int images = between(rng, 4, 8);
    for (int i = 0; i < images; ++i) html += "<img src=\"/pic" + std::to_string(i) + ".gif\">\n";
    html += article;
    html += "<video src=\"/clip.mp4\"></video>\n";
  }
  html += "</body>\n</html>\n";
  return {id, "https://" + site + "/" + id, site, label, year, html};
}

// Throws unless both topic variants of `html` produce the same N, L and R values.
void check_topic_neutral(const std::string& html, const std::vector<std::string>& topic,
                         const std::vector<std::string>& other, const veritag::featureset::ExtractionContext& ctx) {
  using namespace veritag::featureset;
  const GroupSet text_groups = {Group::N, Group::L, Group::R};
  auto a = page_features("a", html, {Granularity::HC}, ctx);
  auto b = page_features("b", with_words(html, topic, other), {Granularity::HC}, ctx);
  if (assemble(a, Granularity::HC, text_groups).values != assemble(b, Granularity::HC, text_groups).values)
    throw std::runtime_error("drift fixture: topic words change linguistic features");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures OUT_DATA_DIR\n";
    return 1;
  }
  const fs::path out = argv[1];
  try {
    std::vector<Page> mini;
    const std::vector<std::pair<std::string, std::string>> mini_sites = {{"civicledger.com", "reliable"},
                                                                         {"metrorecord.org", "reliable"},
                                                                         {"truthblaster.net", "unreliable"},
                                                                         {"wakeupdaily.info", "unreliable"}};
    Rng rng(20180401);
    int n = 0;
    for (int year : {2013, 2014})
      for (const auto& [site, label] : mini_sites)
        for (int i = 0; i < 5; ++i) {
          char id[16];
          std::snprintf(id, sizeof id, "m%03d", n++);
          mini.push_back(label == "reliable" ? reliable_mini_page(rng, site, id, year)
                                             : unreliable_mini_page(rng, site, id, year));
        }
    write_corpus(out / "mini_corpus", mini, mini_sites);

    const auto ctx = veritag::featureset::ExtractionContext::defaults();
    std::vector<Page> drift;
    const std::vector<std::pair<std::string, std::string>> drift_sites = {{"plainreport.com", "reliable"},
                                                                          {"buzzfeedr.net", "unreliable"}};
    Rng drng(20160101);
    n = 0;
    for (int year : {2015, 2016})
      for (const auto& [site, label] : drift_sites)
        for (int i = 0; i < 20; ++i) {
          const bool economy = (label == "reliable") == (year == 2015);
          const auto& topic = economy ? economy_words : celebrity_words;
          const auto& other = economy ? celebrity_words : economy_words;
          char id[16];
          std::snprintf(id, sizeof id, "d%03d", n++);
          auto page = drift_page(drng, site, label, id, year, topic);
          check_topic_neutral(page.html, topic, other, ctx);
          drift.push_back(std::move(page));
        }
    write_corpus(out / "drift_corpus", drift, drift_sites);
    std::cout << "wrote " << mini.size() << " mini pages and " << drift.size() << " drift pages to " << out << "\n";
  } catch (const std::exception& e) {
    std::cerr << "make_fixtures: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
