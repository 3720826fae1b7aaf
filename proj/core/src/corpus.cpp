#include "crn/corpus.hpp"

#include <stdexcept>

namespace crn {

std::string processive_phosphorylation_text(int n) {
  if (n < 1) throw std::invalid_argument("processive phosphorylation needs n >= 1");
  const std::string sn = "S" + std::to_string(n);
  std::string t = "# processive phosphorylation, n = " + std::to_string(n) + "\n";
  t += "K0: S0 + K <-> S0K\n";
  for (int i = 1; i < n; ++i)
    t += "K" + std::to_string(i) + ": S" + std::to_string(i - 1) + "K -> S" + std::to_string(i) + "K\n";
  t += "K" + std::to_string(n) + ": S" + std::to_string(n - 1) + "K -> " + sn + " + K\n";
  t += "F0: " + sn + " + F <-> " + sn + "F\n";
  for (int i = n; i > 1; --i)
    t += "F" + std::to_string(n - i + 1) + ": S" + std::to_string(i) + "F -> S" + std::to_string(i - 1) + "F\n";
  t += "F" + std::to_string(n) + ": S1F -> S0 + F\n";
  return t;
}

namespace {

std::string electron_transfer_text(int k) {
  std::string t = "# electron transfer, B_i + A_j <-> A_i + B_j for i < j\n";
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      auto s = [](char c, int x) { return std::string(1, c) + std::to_string(x); };
      t += "T" + std::to_string(i) + std::to_string(j) + ": " + s('B', i) + " + " + s('A', j) + " <-> " + s('A', i) +
           " + " + s('B', j) + "\n";
    }
  return t;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  c.push_back({"competitive_binding", "two enzymes competing for one substrate",
               "# X + E1 <-> XE1, X + E2 <-> XE2\n"
               "B1: X + E1 <-> XE1\n"
               "B2: X + E2 <-> XE2\n",
               false, false});
  c.push_back({"three_body", "binding of X and Y mediated by E",
               "# species order E, X, Y, XE, YE, XEY\n"
               "R1: E + X <-> XE\n"
               "R2: E + Y <-> YE\n"
               "R3: X + YE <-> XEY\n"
               "R4: Y + XE <-> XEY\n",
               false, false});
  c.push_back({"cubical_example", "cubical network with a 3:1 row",
               "R1: 3 X1 <-> X2 + X3\n"
               "R2: X2 <-> X4\n"
               "R3: X3 <-> X4\n"
               "R4: X5 <-> X1\n",
               false, false});
  c.push_back({"processive_phosphorylation", "processive phosphorylation chain, n = 3",
               processive_phosphorylation_text(3), true, true});
  c.push_back({"pcr_annealing", "primer annealing step of PCR",
               "A1: P1 + T1 <-> H1\n"
               "A2: P2 + T2 <-> H2\n"
               "A3: T1 + T2 <-> U\n"
               "A4: P1 + P2 <-> D\n",
               true, false});
  c.push_back({"rkip", "Raf-1 kinase inhibitor protein pathway",
               "R1: Raf-1 + RKIP <-> Raf-1/RKIP\n"
               "R2: Raf-1/RKIP + ERK-PP <-> Raf-1/RKIP/ERK-PP\n"
               "R3: Raf-1/RKIP/ERK-PP -> Raf-1 + ERK + RKIP-P\n"
               "R4: MEK-PP + ERK <-> MEK-PP/ERK\n"
               "R5: MEK-PP/ERK -> MEK-PP + ERK-PP\n"
               "R6: RKIP-P + RP <-> RKIP-P/RP\n"
               "R7: RKIP-P/RP -> RKIP + RP\n",
               true, true});
  c.push_back({"electron_transfer", "electron transfer among four carriers", electron_transfer_text(4), true, false});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

ReactionNetwork corpus_network(std::string_view name) {
  constexpr std::string_view pp = "processive_phosphorylation:";
  if (name.substr(0, pp.size()) == pp) {
    int n = std::stoi(std::string(name.substr(pp.size())));
    return parse_network(processive_phosphorylation_text(n), "processive_phosphorylation:" + std::to_string(n));
  }
  for (const auto& e : corpus())
    if (e.name == name) return parse_network(e.text, e.name);
  throw std::invalid_argument("unknown corpus network '" + std::string(name) + "'");
}

}  // namespace crn
