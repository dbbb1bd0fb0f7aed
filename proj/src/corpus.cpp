#include "grpx/corpus.hpp"

#include <algorithm>

namespace grpx {

bool CorpusEntry::has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

namespace {

std::vector<CorpusEntry> make_corpus() {
  // Fingerprints: order census, number of subgroups, d, rank.
  return {
      {"Triv", "C(1)", "trivial group", 1, {"abelian", "cyclic"}, {{{1, 1}}, 1, 0, 0}},
      {"C2", "C(2)", "cyclic of order 2", 2, {"abelian", "cyclic"}, {{{1, 1}, {2, 1}}, 2, 1, 1}},
      {"C3", "C(3)", "cyclic of order 3", 3, {"abelian", "cyclic"}, {{{1, 1}, {3, 2}}, 2, 1, 1}},
      {"C4", "C(4)", "cyclic of order 4", 4, {"abelian", "cyclic"}, {{{1, 1}, {2, 1}, {4, 2}}, 3, 1, 1}},
      {"C5", "C(5)", "cyclic of order 5", 5, {"abelian", "cyclic"}, {{{1, 1}, {5, 4}}, 2, 1, 1}},
      {"C6", "C(6)", "cyclic of order 6", 6, {"abelian", "cyclic"},
       {{{1, 1}, {2, 1}, {3, 2}, {6, 2}}, 4, 1, 1}},
      {"C8", "C(8)", "cyclic of order 8", 8, {"abelian", "cyclic"},
       {{{1, 1}, {2, 1}, {4, 2}, {8, 4}}, 4, 1, 1}},
      {"C9", "C(9)", "cyclic of order 9", 9, {"abelian", "cyclic"}, {{{1, 1}, {3, 2}, {9, 6}}, 3, 1, 1}},
      {"C12", "C(12)", "cyclic of order 12", 12, {"abelian", "cyclic"},
       {{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}, 6, 1, 1}},
      {"V4", "C(2) x C(2)", "Klein four-group", 4, {"abelian"}, {{{1, 1}, {2, 3}}, 5, 2, 2}},
      {"C4xC2", "C(4) x C(2)", "abelian of order 8 and exponent 4", 8, {"abelian"},
       {{{1, 1}, {2, 3}, {4, 4}}, 8, 2, 2}},
      {"E8", "C(2) x C(2) x C(2)", "elementary abelian of order 8", 8, {"abelian"}, {{{1, 1}, {2, 7}}, 16, 3, 3}},
      {"D8", "SD(C(4), C(2), pow(3))", "dihedral of order 8", 8, {"nilpotent"},
       {{{1, 1}, {2, 5}, {4, 2}}, 10, 2, 2}},
      {"Q8", "Perm(8; (0 1 4 5)(2 3 6 7), (0 2 4 6)(1 7 5 3))", "quaternion group", 8,
       {"nilpotent", "hamiltonian"}, {{{1, 1}, {2, 1}, {4, 6}}, 6, 2, 2}},
      {"M16", "SD(C(8), C(2), pow(5))", "modular group of order 16", 16, {"nilpotent", "modular-nonhamiltonian"},
       {{{1, 1}, {2, 3}, {4, 4}, {8, 8}}, 11, 2, 2}},
      {"C8xC2", "C(8) x C(2)", "abelian partner of M16", 16, {"abelian"},
       {{{1, 1}, {2, 3}, {4, 4}, {8, 8}}, 11, 2, 2}},
      {"S3", "SD(C(3), C(2), pow(2))", "symmetric group of degree 3", 6, {"frobenius"},
       {{{1, 1}, {2, 3}, {3, 2}}, 6, 2, 2}},
      {"A4", "SD(C(2) x C(2), C(3), mat[0 1; 1 1])", "alternating group of degree 4", 12, {"frobenius"},
       {{{1, 1}, {2, 3}, {3, 8}}, 10, 2, 2}},
      {"S4", "Perm(4; (0 1 2 3), (0 1))", "symmetric group of degree 4", 24, {},
       {{{1, 1}, {2, 9}, {3, 8}, {4, 6}}, 30, 2, 2}},
      {"F21", "SD(C(7), C(3), pow(2))", "Frobenius group of order 21", 21, {"frobenius"},
       {{{1, 1}, {3, 14}, {7, 6}}, 10, 2, 2}},
      {"C3C3_C2", "SD(C(3) x C(3), C(2), pow(2))", "generalized dihedral of order 18", 18, {"frobenius"},
       {{{1, 1}, {2, 9}, {3, 8}}, 28, 3, 3}},
      {"G42_1", "SD(C(7), C(6), pow(6))", "C7 by C6 with image of order 2", 42, {},
       {{{1, 1}, {2, 7}, {3, 2}, {6, 14}, {7, 6}, {21, 12}}, 20, 2, 2}},
      {"G42_2", "SD(C(7), C(6), pow(2))", "C7 by C6 with image of order 3", 42, {},
       {{{1, 1}, {2, 1}, {3, 14}, {6, 14}, {7, 6}, {14, 6}}, 20, 2, 2}},
      {"C9xC3", "C(9) x C(3)", "abelian of order 27 and exponent 9", 27, {"abelian"},
       {{{1, 1}, {3, 8}, {9, 18}}, 10, 2, 2}},
      {"ES27", "SD(C(9), C(3), pow(4))", "extraspecial of order 27 and exponent 9", 27,
       {"nilpotent", "modular-nonhamiltonian"}, {{{1, 1}, {3, 8}, {9, 18}}, 10, 2, 2}},
      {"G605_2", "SD(C(11) x C(11), C(5), mat[3 0; 0 9])", "F11^2 by C5, lambda = 2", 605, {"frobenius"},
       {{{1, 1}, {5, 484}, {11, 120}}, 158, 2, 2}},
      {"G605_3", "SD(C(11) x C(11), C(5), mat[3 0; 0 5])", "F11^2 by C5, lambda = 3", 605, {"frobenius"},
       {{{1, 1}, {5, 484}, {11, 120}}, 158, 2, 2}},
      {"G605_4", "SD(C(11) x C(11), C(5), mat[3 0; 0 4])", "F11^2 by C5, lambda = 4", 605, {"frobenius"},
       {{{1, 1}, {5, 484}, {11, 120}}, 158, 2, 2}},
      {"Q8_C3", "SD(Q8, C(3), imgs{g2, g1*g2})", "Q8 extended by an automorphism of order 3", 24, {},
       {{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}, 15, 2, 2}},
      {"SG32_32", "PC{2; a,b,c,d,e; a^2=d, b^2=e, c^2=d*e, [b,a]=e, [c,a]=d}", "SmallGroup(32,32)", 32,
       {"nilpotent"}, {{{1, 1}, {2, 3}, {4, 28}}, 34, 3, 3}},
      {"SG81_10", "PC{3; a,b,c,d; a^3=d, b^3=d^2, [b,a]=c, [c,a]=d}", "SmallGroup(81,10)", 81, {"nilpotent"},
       {{{1, 1}, {3, 8}, {9, 72}}, 23, 2, 2}},
      {"BL3125", "SD(C(5) x C(5) x C(5) x C(5), C(5), mat[1 1 0 0; 0 1 1 0; 0 0 1 1; 0 0 0 1])",
       "maximal class, exponent 5, abelian maximal subgroup", 3125, {"nilpotent", "slow"},
       {{{1, 1}, {5, 3124}}, 1901, 2, 4}},
      {"FC3125", "PC{5; a,b,c,d,e; [b,a]=c, [c,a]=d, [c,b]=e}", "free 2-generated, exponent 5, class 3", 3125,
       {"nilpotent", "slow"}, {{{1, 1}, {5, 3124}}, 1901, 2, 3}},
      {"C12xC2", "C(12) x C(2)", "abelian of order 24", 24, {"abelian"}, {{{1, 1}, {2, 3}, {3, 2}, {4, 4}, {6, 6}, {12, 8}}, 16, 2, 2}},
  };
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = make_corpus();
  return entries;
}

const CorpusEntry* find_corpus_entry(const std::string& key) {
  for (const auto& e : corpus())
    if (e.key == key) return &e;
  return nullptr;
}

}  // namespace grpx
