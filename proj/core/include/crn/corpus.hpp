#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crn/network.hpp"

namespace crn {

struct CorpusEntry {
  std::string name;
  std::string description;
  std::string text;  // .crn source
  bool biochemical = false;         // one of the four application models
  bool assume_persistent = false;   // persistence established outside this library
};

const std::vector<CorpusEntry>& corpus();

// S0 + K <-> S0K -> S1K -> ... -> Sn + K and Sn + F <-> SnF -> ... -> S1F -> S0 + F.
std::string processive_phosphorylation_text(int n);

// Accepts a corpus name, or "processive_phosphorylation:N" for the parameterized chain.
ReactionNetwork corpus_network(std::string_view name);

}  // namespace crn
