#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subpair/oracle.hpp"

namespace subpair {

// Parsed JSON pair description.  Coordinates are stored as ring codes;
// zmod generators are given as integers or decimal strings, truncpoly
// generators as little-endian digit arrays.
struct PairDocument {
    RingSpec ring;
    std::vector<int> parts;
    std::vector<std::vector<i64>> agens;
    int m = 2;
};

PairDocument parse_pair_document(const std::string& text);
PairDocument load_pair_document(const std::string& path);
// Builds the pair and rejects documents with p^m A != 0.
Pair document_pair(const PairDocument& doc);

// Same partition and the same base-p digit pattern of every generator
// coordinate, read over F_p[T]/(T^n).  Not a ring map; classification
// structure is preserved and asserted by the compare-rings command.
Pair mirror_to_truncpoly(const Pair& x);

// Entry point used by the binary and the tests.  Returns the process exit
// code: 0 success, 1 verification failure, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subpair
