#include "nakcox/classify.hpp"

#include <array>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <thread>

#include "nakcox/coxeter.hpp"
#include "nakcox/lgroup.hpp"
#include "nakcox/reftypes.hpp"

namespace nakcox {

std::string RefLabel::text() const {
    std::string abc = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
    switch (kind) {
        case RefKind::Star: return "[" + abc + "]";
        case RefKind::Canonical: return "(" + abc + ")";
        case RefKind::ExtCanonical: return "<" + abc + "]";
        case RefKind::Triangle: return "<" + abc + ">";
    }
    return abc;
}

namespace {

// weight triples 2 <= a <= b <= c with a + b + c = sum
std::vector<std::array<int, 3>> triples_with_sum(int sum) {
    std::vector<std::array<int, 3>> out;
    for (int a = 2; 3 * a <= sum; ++a)
        for (int b = a; a + 2 * b <= sum; ++b) {
            int c = sum - a - b;
            if (c >= b) out.push_back({a, b, c});
        }
    return out;
}

std::optional<RefLabel> parse_fixture_label(const std::string& s) {
    if (s.size() < 7) return std::nullopt;
    char open = s.front(), close = s.back();
    RefKind kind;
    if (open == '[' && close == ']')
        kind = RefKind::Star;
    else if (open == '(' && close == ')')
        kind = RefKind::Canonical;
    else if (open == '<' && close == ']')
        kind = RefKind::ExtCanonical;
    else
        return std::nullopt;
    int a = 0, b = 0, c = 0;
    if (sscanf(s.c_str() + 1, "%d,%d,%d", &a, &b, &c) != 3) return std::nullopt;
    return RefLabel{kind, a, b, c};
}

}  // namespace

const std::vector<RefPolyEntry>& reference_table(int n) {
    static std::map<int, std::vector<RefPolyEntry>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<RefPolyEntry> table;
    for (auto [a, b, c] : triples_with_sum(n + 2))
        table.push_back({RefLabel{RefKind::Star, a, b, c}, star_coxeter_poly(a, b, c)});
    for (auto [a, b, c] : triples_with_sum(n + 1))
        table.push_back({RefLabel{RefKind::Canonical, a, b, c}, canonical_coxeter_poly(a, b, c)});
    for (auto [a, b, c] : triples_with_sum(n))
        table.push_back(
            {RefLabel{RefKind::ExtCanonical, a, b, c}, extended_canonical_coxeter_poly(a, b, c)});
    return cache.emplace(n, std::move(table)).first->second;
}

CellResult classify_cell(int n, int r) {
    CellResult res;
    res.n = n;
    res.r = r;
    res.poly = coxeter_poly_nakayama(n, r);
    res.coxeter_number = coxeter_number_nakayama(n, r);

    for (const auto& entry : reference_table(n))
        if (entry.poly == res.poly) res.labels.push_back(entry.label);

    if (!res.labels.empty()) {
        res.status = CellStatus::Matched;
        // triangle <2,a,b> attaches when n = (a-1)(b-1), r is one of the two
        // weights, the weight triple is hyperbolic and the polynomials agree
        for (int a = 3; (a - 1) * (a - 1) <= n; ++a) {
            if (n % (a - 1) != 0) continue;
            int b = n / (a - 1) + 1;
            if (b < a) continue;
            if (r != a && r != b) continue;
            if (euler_char(WeightTriple(2, a, b)) >= 0) continue;
            if (triangle_coxeter_poly(a, b) == res.poly)
                res.labels.push_back(RefLabel{RefKind::Triangle, 2, a, b});
        }
    } else if (res.coxeter_number.has_value()) {
        res.status = CellStatus::Wall;
    } else {
        res.status = CellStatus::Unknown;
    }

    if (const FixtureEntry* fe = fixture_lookup(n, r)) {
        res.in_fixture = true;
        if (fe->label.rfind("WALL:", 0) == 0) {
            unsigned long num = std::stoul(fe->label.substr(5));
            res.confirmed = !fe->conjectural && res.status == CellStatus::Wall &&
                            res.coxeter_number.has_value() && *res.coxeter_number == num;
        } else if (auto want = parse_fixture_label(fe->label)) {
            bool present = false;
            for (const auto& l : res.labels)
                if (l == *want) present = true;
            res.confirmed = !fe->conjectural && res.status == CellStatus::Matched && present;
        }
    }
    return res;
}

std::vector<CellResult> classify_grid(int rmin, int rmax, int smin, int smax, int jobs) {
    std::vector<std::pair<int, int>> cells;  // (n, r)
    for (int r = rmin; r <= rmax; ++r)
        for (int s = smin; s <= smax; ++s) cells.emplace_back(r + s, r);
    std::vector<CellResult> out(cells.size());
    if (jobs < 2) {
        for (size_t i = 0; i < cells.size(); ++i)
            out[i] = classify_cell(cells[i].first, cells[i].second);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            out[i] = classify_cell(cells[i].first, cells[i].second);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

std::vector<WallRow> wall_table(int rmin, int rmax) {
    std::vector<WallRow> out;
    for (int r = rmin; r <= rmax; ++r)
        for (int n = r + 2; n <= r + 14; ++n) {
            auto num = coxeter_number_nakayama(n, r);
            if (!num.has_value()) continue;
            // periodic cells matching a reference algebra (Dynkin stars,
            // tubular weights) are not walls; only unmatched periodic cells are
            IntPolynomial poly = coxeter_poly_nakayama(n, r);
            bool matched = false;
            for (const auto& entry : reference_table(n))
                if (entry.poly == poly) {
                    matched = true;
                    break;
                }
            if (matched) continue;
            out.push_back(WallRow{r, n, *num});
            break;
        }
    return out;
}

}  // namespace nakcox
