#pragma once
// rank data of N_{r+4}(r) under the identification with coherent sheaves on
// the weighted projective line of weight type (2,3,r), vertices 1..r+4

namespace nakcox_test {

inline int simple_rank(int r, int i) {
    if (i == 1 || i == r + 1 || i == r + 2) return -1;
    if (i == 3 || i == 4 || i == r + 4) return 1;
    return 0;
}

inline int proj_rank(int r, int i) {
    if (i == 1 || i == 2 || i == r + 3 || i == r + 4) return -1;
    if (i == 3 || i == r + 2) return 0;
    return 1;
}

}  // namespace nakcox_test
