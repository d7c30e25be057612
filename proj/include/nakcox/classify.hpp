#pragma once
// Classification grid: for each Nakayama algebra N_n(r) decide which
// reference algebras share its Coxeter polynomial, whether its Coxeter
// matrix is periodic, and compare against the frozen expectation table.

#include <optional>
#include <string>
#include <vector>

#include "nakcox/intpoly.hpp"

namespace nakcox {

enum class RefKind { Star, Canonical, ExtCanonical, Triangle };

struct RefLabel {
    RefKind kind;
    int a, b, c;  // triangle labels use (2, a, b) stored as a=2
    std::string text() const;
    bool operator==(const RefLabel&) const = default;
};

struct RefPolyEntry {
    RefLabel label;
    IntPolynomial poly;
};

// all star/canonical/extended-canonical labels whose algebra has n vertices,
// with their Coxeter polynomials; memoized, thread safe
const std::vector<RefPolyEntry>& reference_table(int n);

enum class CellStatus { Matched, Wall, Unknown };

struct CellResult {
    int n = 0, r = 0;
    CellStatus status = CellStatus::Unknown;
    std::vector<RefLabel> labels;  // references with equal Coxeter polynomial
    std::optional<unsigned long> coxeter_number;
    bool in_fixture = false;   // expectation table has this cell
    bool confirmed = false;    // result agrees with a non-conjectural expectation
    IntPolynomial poly;
};

CellResult classify_cell(int n, int r);

// rows r in [rmin, rmax], columns s = n - r in [smin, smax]
std::vector<CellResult> classify_grid(int rmin, int rmax, int smin, int smax, int jobs = 1);

struct WallRow {
    int r = 0;
    int n = 0;  // least n in [r+2, r+14] with periodic Coxeter matrix
    unsigned long number = 0;
};
// first periodic cell per row; rows with none in range are omitted
std::vector<WallRow> wall_table(int rmin, int rmax);

// frozen expectation for the classification grid
struct FixtureEntry {
    int r = 0, n = 0;
    std::string label;  // reference label text, or "WALL:<number>"
    bool conjectural = false;
};
const std::vector<FixtureEntry>& grid_fixture();
const FixtureEntry* fixture_lookup(int n, int r);

}  // namespace nakcox
