#pragma once

// Tables and reports printed by the command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chains/asymptotics.hpp"
#include "chains/formula.hpp"
#include "chains/tri_poly.hpp"

namespace chains {

// Truncates toward zero at `digits` decimals, e.g. 3.4641016 -> "3.464101"
// and 8.1718704 -> "8.171870"; integers print with one decimal, 4 -> "4.0".
// A guard of 10^-6 units in the last place absorbs binary representation
// error.
std::string format_round_down(double value, int digits = 6);

enum class OutputFormat { csv, json, text };

OutputFormat parse_output_format(std::string_view name);

struct KochRow {
    unsigned s = 0;
    std::uint64_t n = 0;
    double root_upper = 0;
    double root_lower = 0;
    double root_total = 0;
};

struct PolytwinRow {
    std::optional<unsigned> s;  // set for Koch base chains
    GrowthReport growth;
};

// Rows s = 0..max_s. Levels share one engine, so each costs one convex and
// one concave sum of the previous level.
std::vector<KochRow> koch_table(unsigned max_s, NumberMode mode);
std::vector<PolytwinRow> polytwin_koch_table(unsigned max_s, NumberMode mode);

std::string render_koch(const std::vector<KochRow>& rows, OutputFormat format, int digits);
std::string render_polytwin(const std::vector<PolytwinRow>& rows, OutputFormat format, int digits);

struct PolyReport {
    std::string formula;  // input text, filled in by the caller
    NumberMode mode = NumberMode::exact;
    std::uint64_t n = 0;
    std::string upper;  // U, L, tr as printed
    std::string lower;
    std::string total;
    double root_upper = 0;
    double root_lower = 0;
    double root_total = 0;
    std::vector<std::string> upper_coeffs;  // empty unless requested
    std::vector<std::string> lower_coeffs;
};

PolyReport poly_report(const Formula& f, NumberMode mode, bool with_coeffs, int digits);
std::string render_poly(const PolyReport& report, OutputFormat format, int digits);

}  // namespace chains
