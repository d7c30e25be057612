#include <numeric>

#include "nakcox/classify.hpp"

namespace nakcox {

namespace {

std::vector<FixtureEntry> build_fixture() {
    // frozen expectation grid; labels are "[a,b,c]" (star), "(a,b,c)"
    // (canonical), "<a,b,c]" (extended canonical), "WALL:<coxeter number>"
    std::vector<FixtureEntry> t = {
        {3, 5, "[2,2,3]", false},
        {3, 6, "[2,3,3]", false},
        {3, 7, "[2,3,4]", false},
        {3, 8, "[2,3,5]", false},
        {3, 9, "(2,3,5)", false},
        {3, 10, "(2,3,6)", false},
        {3, 11, "(2,3,7)", false},
        {3, 12, "<2,3,7]", false},
        {3, 13, "<2,3,8]", false},
        {3, 14, "<2,3,9]", false},
        {3, 15, "<2,3,10]", false},
        {3, 16, "WALL:18", false},

        {4, 6, "[2,3,3]", false},
        {4, 7, "[2,3,4]", false},
        {4, 8, "(2,3,4)", false},
        {4, 9, "(2,4,4)", false},
        {4, 10, "(2,4,5)", false},
        {4, 11, "<2,4,5]", false},
        {4, 12, "<2,5,5]", false},
        {4, 13, "<2,5,6]", false},
        {4, 14, "<2,5,7]", true},
        {4, 15, "WALL:12", false},

        {5, 7, "[2,3,4]", false},
        {5, 8, "[2,3,5]", false},
        {5, 9, "(2,3,5)", false},
        {5, 10, "[2,3,7]", false},
        {5, 11, "<2,4,5]", false},
        {5, 12, "<2,5,5]", false},
        {5, 13, "<2,5,6]", false},
        {5, 14, "<2,6,6]", true},
        {5, 15, "WALL:40", false},

        {6, 8, "[2,3,5]", false},
        {6, 9, "[2,3,6]", false},
        {6, 10, "(2,3,6)", false},
        {6, 11, "(2,3,7)", false},
        {6, 12, "<2,3,7]", false},
        {6, 13, "<2,4,7]", false},
        {6, 14, "<2,5,7]", true},
        {6, 15, "WALL:12", false},

        {7, 9, "[2,3,6]", false},
        {7, 10, "[2,3,7]", false},
        {7, 11, "(2,3,7)", false},
        {7, 12, "<2,3,7]", false},
        {7, 13, "<2,3,8]", false},
        {7, 14, "WALL:126", false},

        {8, 10, "[2,3,7]", false},
        {8, 11, "[2,3,8]", false},
        {8, 12, "(2,3,8)", false},
        {8, 13, "<2,3,8]", false},
        {8, 14, "<2,3,9]", false},
        {8, 15, "<2,3,10]", false},
        {8, 16, "<2,3,11]", true},
        {8, 17, "WALL:24", false},
    };
    for (int r = 9; r <= 19; ++r) {
        auto ref = [&](char open, int c, const char* close) {
            return std::string(1, open) + "2,3," + std::to_string(c) + close;
        };
        t.push_back({r, r + 2, ref('[', r - 1, "]"), false});
        t.push_back({r, r + 3, ref('[', r, "]"), false});
        t.push_back({r, r + 4, ref('(', r, ")"), false});
        t.push_back({r, r + 5, ref('<', r, "]"), false});
        t.push_back({r, r + 6, ref('<', r + 1, "]"), false});
        unsigned long wall = std::lcm(2ul * r, 18ul);
        t.push_back({r, r + 7, "WALL:" + std::to_string(wall), false});
    }
    return t;
}

}  // namespace

const std::vector<FixtureEntry>& grid_fixture() {
    static const std::vector<FixtureEntry> table = build_fixture();
    return table;
}

const FixtureEntry* fixture_lookup(int n, int r) {
    for (const auto& e : grid_fixture())
        if (e.n == n && e.r == r) return &e;
    return nullptr;
}

}  // namespace nakcox
