#pragma once
// JSON and table rendering for the command line tool.

#include <string>
#include <vector>

#include <json.hpp>

#include "nakcox/classify.hpp"
#include "nakcox/intpoly.hpp"
#include "nakcox/zvect.hpp"

namespace nakcox {

using ordered_json = nlohmann::ordered_json;

// coefficients are emitted as decimal strings so no magnitude is ever lossy
ordered_json poly_json(const IntPolynomial& p);
ordered_json factorization_json(const CyclotomicFactorization& f);
ordered_json cell_json(const CellResult& cell, bool with_poly);
ordered_json tilting_json(const WeightContext& ctx, const TiltingReport& rep);

std::string render_grid_text(const std::vector<CellResult>& cells);
std::string render_grid_csv(const std::vector<CellResult>& cells);
std::string render_grid_tex(const std::vector<CellResult>& cells);

}  // namespace nakcox
