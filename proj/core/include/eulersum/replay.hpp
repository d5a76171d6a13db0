#ifndef EULERSUM_REPLAY_HPP
#define EULERSUM_REPLAY_HPP

#include <string>
#include <utility>
#include <vector>

#include "eulersum/real.hpp"

namespace eulersum {

struct ReplayLine {
    std::string label;
    std::string expected;  // printed value, Euler's comma style
    std::string computed;
    bool match = false;
    std::string note;
};

struct ReplayReport {
    int section = 0;
    std::vector<ReplayLine> lines;
    bool all_match = false;
};

/// Recomputes every printed line of the chosen worked example (149, 159 or
/// 162) and reports per-line agreement at the printed precision, allowing
/// +/-2 units in the last printed digit.
ReplayReport replay(int section, const MathContext& ctx);

/// The printed table data being replayed: (label, printed value) pairs.
std::vector<std::pair<std::string, std::string>> replay_fixture(int section);

} // namespace eulersum

#endif
