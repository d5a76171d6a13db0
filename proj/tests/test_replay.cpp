#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/replay.hpp"

using namespace eulersum;

namespace {

std::vector<std::pair<std::string, std::string>> load_fixture(int section) {
    std::ifstream in(std::string(EULERSUM_TEST_DATA_DIR) + "/replay_" +
                     std::to_string(section) + ".txt");
    REQUIRE(in.good());
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto bar = line.find('|');
        REQUIRE(bar != std::string::npos);
        out.emplace_back(line.substr(0, bar), line.substr(bar + 1));
    }
    return out;
}

} // namespace

TEST_CASE("embedded fixtures match the data files verbatim") {
    for (int section : {149, 159, 162}) CHECK(replay_fixture(section) == load_fixture(section));
    CHECK_THROWS_AS(replay_fixture(150), domain_error);
}

TEST_CASE("section 149 replay") {
    ReplayReport rep = replay(149, MathContext{19, 10});
    CHECK(rep.section == 149);
    REQUIRE(rep.lines.size() == 12);
    CHECK(rep.all_match);
    CHECK(rep.lines.back().label == "C");
    CHECK(rep.lines.back().note.find("last-digit") != std::string::npos);
    CHECK(rep.lines.back().expected == "1,644934066848226430");
}

TEST_CASE("section 159 replay") {
    ReplayReport rep = replay(159, MathContext{18, 10});
    REQUIRE(rep.lines.size() == 11);
    CHECK(rep.all_match);
    CHECK(rep.lines.back().expected == "2567,6046442221328");
    CHECK(rep.lines.back().match);
}

TEST_CASE("section 162 replay") {
    ReplayReport rep = replay(162, MathContext{18, 10});
    REQUIRE(rep.lines.size() == 10);
    CHECK(rep.all_match);
    bool saw_log_line = false;
    for (const auto& l : rep.lines)
        if (l.expected == "1,0991456565") {
            saw_log_line = true;
            CHECK(l.match);
        }
    CHECK(saw_log_line);
    CHECK(rep.lines.back().expected == "12,56451");
}

TEST_CASE("unknown sections are rejected") {
    CHECK_THROWS_AS(replay(150, MathContext{18, 10}), domain_error);
    CHECK_THROWS_AS(replay(0, MathContext{18, 10}), domain_error);
}

TEST_CASE("replays are deterministic") {
    ReplayReport a = replay(149, MathContext{18, 10});
    ReplayReport b = replay(149, MathContext{18, 10});
    REQUIRE(a.lines.size() == b.lines.size());
    for (size_t i = 0; i < a.lines.size(); ++i)
        CHECK(a.lines[i].computed == b.lines[i].computed);
}
