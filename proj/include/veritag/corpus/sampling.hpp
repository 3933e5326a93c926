#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "veritag/error.hpp"
#include "veritag/util/hash.hpp"
#include "veritag/util/random.hpp"

namespace veritag::corpus {

/// Keeps at most `cap` items per (site, year) group.
///
/// Each group draws from its own generator, seeded from `seed` and the group
/// key, so the seed changes which items survive but never how many. Output
/// is sorted by (site, year, id).
template <typename Doc>
std::vector<Doc> balanced_sample(const std::vector<Doc>& docs, std::size_t cap, std::uint64_t seed) {
  if (cap < 1) throw UsageError("sample: cap must be at least 1");
  std::map<std::pair<std::string, int>, std::vector<const Doc*>> groups;
  for (const auto& d : docs) groups[{d.site, d.year}].push_back(&d);
  std::vector<Doc> out;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), [](const Doc* a, const Doc* b) { return a->id < b->id; });
    if (members.size() > cap) {
      util::Rng rng(util::derive_seed(seed, util::fnv1a64(key.first + "\x1f" + std::to_string(key.second))));
      // partial Fisher-Yates: the first `cap` slots become the sample
      for (std::size_t i = 0; i < cap; ++i) {
        std::size_t j = i + util::uniform_index(rng, members.size() - i);
        std::swap(members[i], members[j]);
      }
      members.resize(cap);
      std::sort(members.begin(), members.end(), [](const Doc* a, const Doc* b) { return a->id < b->id; });
    }
    for (const Doc* d : members) out.push_back(*d);
  }
  return out;
}

}  // namespace veritag::corpus
