#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace grpx {

/// Values recorded when the corpus was assembled; a rebuilt group must match.
struct Fingerprint {
  std::map<std::uint32_t, std::size_t> orders;
  std::size_t subgroups = 0;  // 0 when not recorded
  std::uint32_t d = 0;
  std::uint32_t rank = 0;
};

struct CorpusEntry {
  std::string key;
  std::string spec;
  std::string description;
  std::size_t order = 0;
  std::vector<std::string> tags;
  Fingerprint fingerprint;

  bool has_tag(const std::string& t) const;
};

const std::vector<CorpusEntry>& corpus();
/// nullptr when the key is unknown.
const CorpusEntry* find_corpus_entry(const std::string& key);

}  // namespace grpx
