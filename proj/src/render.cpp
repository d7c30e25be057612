#include "nakcox/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nakcox {

ordered_json poly_json(const IntPolynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return ordered_json{{"degree", p.degree()},
                        {"coefficients", std::move(coeffs)},
                        {"text", p.to_string()}};
}

ordered_json factorization_json(const CyclotomicFactorization& f) {
    ordered_json factors = ordered_json::array();
    for (auto [d, mult] : f.factors)
        factors.push_back(ordered_json{{"index", d}, {"multiplicity", mult}});
    return ordered_json{{"cyclotomic", std::move(factors)},
                        {"remainder", f.remainder.to_string()},
                        {"fully_cyclotomic", f.fully_cyclotomic()}};
}

namespace {

const char* status_name(CellStatus s) {
    switch (s) {
        case CellStatus::Matched: return "matched";
        case CellStatus::Wall: return "wall";
        case CellStatus::Unknown: return "unknown";
    }
    return "unknown";
}

ordered_json number_or_null(const std::optional<unsigned long>& v) {
    if (v.has_value()) return *v;
    return nullptr;
}

// display text of a cell: primary label, or the wall number
std::string cell_display(const CellResult& c) {
    if (c.status == CellStatus::Wall && c.coxeter_number)
        return "wall:" + std::to_string(*c.coxeter_number);
    if (c.status == CellStatus::Matched) return c.labels.front().text();
    return "?";
}

}  // namespace

ordered_json cell_json(const CellResult& cell, bool with_poly) {
    ordered_json labels = ordered_json::array();
    for (const auto& l : cell.labels) labels.push_back(l.text());
    ordered_json j{{"n", cell.n},
                   {"r", cell.r},
                   {"status", status_name(cell.status)},
                   {"labels", std::move(labels)},
                   {"coxeter_number", number_or_null(cell.coxeter_number)},
                   {"in_fixture", cell.in_fixture},
                   {"confirmed", cell.confirmed}};
    if (with_poly) j["charpoly"] = poly_json(cell.poly);
    return j;
}

ordered_json tilting_json(const WeightContext& ctx, const TiltingReport& rep) {
    const WeightTriple& w = ctx.weights();
    ordered_json j{{"weights", {w.p1, w.p2, w.p3}},
                   {"window", ctx.vanishing_window()},
                   {"extension_free", rep.extension_free},
                   {"count", rep.count},
                   {"count_matches", rep.count_matches},
                   {"order_found", rep.order_found},
                   {"n", rep.n},
                   {"r", rep.r},
                   {"cartan_match", rep.cartan_match},
                   {"summands", rep.summands}};
    if (rep.witness)
        j["witness"] = ordered_json{
            {"i", rep.witness->i}, {"j", rep.witness->j}, {"shift", rep.witness->m}};
    return j;
}

std::string render_grid_text(const std::vector<CellResult>& cells) {
    std::map<int, std::map<int, const CellResult*>> rows;  // r -> s -> cell
    int smin = 1 << 30, smax = -(1 << 30);
    for (const auto& c : cells) {
        int s = c.n - c.r;
        rows[c.r][s] = &c;
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    }
    size_t width = 10;
    for (const auto& c : cells) width = std::max(width, cell_display(c).size() + 1);
    std::ostringstream os;
    os << "r\\s";
    for (int s = smin; s <= smax; ++s) {
        std::string h = std::to_string(s);
        os << std::string(width - h.size(), ' ') << h;
    }
    os << '\n';
    for (const auto& [r, row] : rows) {
        std::string rh = std::to_string(r);
        os << rh << std::string(3 - std::min<size_t>(3, rh.size()), ' ');
        for (int s = smin; s <= smax; ++s) {
            auto it = row.find(s);
            std::string txt = (it != row.end()) ? cell_display(*it->second) : "";
            os << std::string(width - txt.size(), ' ') << txt;
        }
        os << '\n';
    }
    return os.str();
}

std::string render_grid_csv(const std::vector<CellResult>& cells) {
    std::ostringstream os;
    os << "r,n,status,labels,coxeter_number\n";
    for (const auto& c : cells) {
        os << c.r << ',' << c.n << ',' << status_name(c.status) << ",\"";
        for (size_t i = 0; i < c.labels.size(); ++i) {
            if (i) os << ';';
            os << c.labels[i].text();
        }
        os << "\",";
        if (c.coxeter_number) os << *c.coxeter_number;
        os << '\n';
    }
    return os.str();
}

namespace {

std::string tex_label(const RefLabel& l) {
    std::string abc =
        std::to_string(l.a) + "," + std::to_string(l.b) + "," + std::to_string(l.c);
    switch (l.kind) {
        case RefKind::Star: return "$[" + abc + "]$";
        case RefKind::Canonical: return "$(" + abc + ")$";
        case RefKind::ExtCanonical: return "$\\langle " + abc + "]$";
        case RefKind::Triangle: return "$\\langle " + abc + "\\rangle$";
    }
    return abc;
}

}  // namespace

std::string render_grid_tex(const std::vector<CellResult>& cells) {
    std::map<int, std::map<int, const CellResult*>> rows;
    int smin = 1 << 30, smax = -(1 << 30);
    for (const auto& c : cells) {
        int s = c.n - c.r;
        rows[c.r][s] = &c;
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    }
    std::ostringstream os;
    os << "\\begin{tabular}{r|";
    for (int s = smin; s <= smax; ++s) os << 'c';
    os << "}\n$r \\backslash n-r$";
    for (int s = smin; s <= smax; ++s) os << " & " << s;
    os << " \\\\\n\\hline\n";
    for (const auto& [r, row] : rows) {
        os << r;
        for (int s = smin; s <= smax; ++s) {
            os << " & ";
            auto it = row.find(s);
            if (it == row.end()) continue;
            const CellResult& c = *it->second;
            if (c.status == CellStatus::Matched)
                os << tex_label(c.labels.front());
            else if (c.status == CellStatus::Wall && c.coxeter_number)
                os << "$\\mathbf{" << *c.coxeter_number << "}$";
            else
                os << "?";
        }
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace nakcox
