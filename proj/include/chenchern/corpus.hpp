#ifndef CHENCHERN_CORPUS_HPP
#define CHENCHERN_CORPUS_HPP

#include <string>
#include <vector>

#include "chenchern/unitary.hpp"

namespace chenchern {

struct NamedMap {
  std::string name;
  UnitaryMap map;
};

/// e^{i tau k x} on T^1.
UnitaryMap circle_map(int k = 1);
/// diag(e^{i tau x1}, e^{-i tau x1}) U diag(e^{i tau x2}, 1) with U a rational rotation.
UnitaryMap su2_style_t2();
/// A 2x2 word on T^3 mixing all three coordinates (Tr w^3 vanishes: each
/// layer squares to zero and only two layers meet).
UnitaryMap word_t3();
/// diag(e^{i tau x1},1) U diag(e^{i tau x2},1) V diag(e^{i tau x3},1): three
/// non-commuting layers, so Tr w^3 is nonzero.
UnitaryMap layered_t3();
/// A 3x3 word on T^5 whose degree-5 Maurer-Cartan trace is nonzero.
UnitaryMap map_l3_d5();
/// D U D^{-1} with D = diag(e^{i tau x}, 1) and U = (1/101)[[99,-20],[20,99]]; small sup norm of w.
UnitaryMap small_conjugation();
/// g_t = diag(e^{i tau x1}, 1) U diag(e^{i tau t}, e^{i tau t/4}) V diag(e^{i tau x2}, 1)
/// on T^2 x I; the endpoints differ by a phase between the two rotations.
UnitaryMap homotopy_path();

/// Corpus used by the exact identity checks.
std::vector<NamedMap> identity_corpus();
/// Every shipped map by name (identity corpus plus the heavier examples).
std::vector<NamedMap> named_corpus();

}  // namespace chenchern

#endif  // CHENCHERN_CORPUS_HPP
