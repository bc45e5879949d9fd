#include "chains/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "chains/builders.hpp"

namespace chains {

namespace {

using nlohmann::ordered_json;

constexpr int kMaxDigits = 12;

// Printed decimals go into JSON as numbers; strtod followed by the
// shortest round-trip print reproduces the same digits.
double as_number(const std::string& text) { return std::stod(text); }

std::string join_csv(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += cells[i];
    }
    return out + '\n';
}

std::string render_text_table(const std::vector<std::string>& header,
                              const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) {
            width[c] = std::max(width[c], r[c].size());
        }
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c != 0) {
                out << "  ";
            }
            out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
    return out.str();
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                         const std::vector<bool>& numeric, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: {
            std::string out = join_csv(header);
            for (const auto& r : rows) {
                out += join_csv(r);
            }
            return out;
        }
        case OutputFormat::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json obj = ordered_json::object();
                for (std::size_t c = 0; c < header.size(); ++c) {
                    if (r[c].empty()) {
                        obj[header[c]] = nullptr;
                    } else if (numeric[c]) {
                        obj[header[c]] = as_number(r[c]);
                    } else {
                        obj[header[c]] = r[c];
                    }
                }
                arr.push_back(std::move(obj));
            }
            return arr.dump(2) + '\n';
        }
        case OutputFormat::text:
            return render_text_table(header, rows);
    }
    throw std::logic_error("render_table: unknown format");
}

template <class Num>
std::string print_number(const Num& v, int digits) {
    if constexpr (std::is_same_v<Num, mpz_class>) {
        (void)digits;
        return v.get_str();
    } else {
        return ext_to_decimal(v, digits);
    }
}

template <class Num>
PolyReport poly_report_as(const Formula& f, bool with_coeffs, int digits) {
    const auto polys = tri_poly<Num>(f);
    const auto c = counts_of(polys);
    PolyReport r;
    r.n = c.edges;
    r.upper = print_number(c.upper, digits);
    r.lower = print_number(c.lower, digits);
    r.total = print_number(c.total, digits);
    r.root_upper = c.root_upper;
    r.root_lower = c.root_lower;
    r.root_total = c.root_total;
    if (with_coeffs) {
        for (const auto& v : polys.upper.coeffs) {
            r.upper_coeffs.push_back(print_number(v, digits));
        }
        for (const auto& v : polys.lower.coeffs) {
            r.lower_coeffs.push_back(print_number(v, digits));
        }
    }
    return r;
}

}  // namespace

std::string format_round_down(double value, int digits) {
    if (digits < 1 || digits > kMaxDigits) {
        throw std::invalid_argument("format_round_down: digits must be in 1.." + std::to_string(kMaxDigits));
    }
    if (!std::isfinite(value) || value < 0) {
        throw std::invalid_argument("format_round_down: value must be finite and nonnegative");
    }
    const long double scale = std::pow(10.0L, digits);
    const long double scaled = std::floor(static_cast<long double>(value) * scale + 1e-6L);
    if (scaled >= 9e18L) {
        throw std::overflow_error("format_round_down: value too large");
    }
    const auto units = static_cast<unsigned long long>(scaled);
    const auto unit = static_cast<unsigned long long>(scale);
    std::string frac = std::to_string(units % unit);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    if (units % unit == 0) {
        frac = "0";
    }
    return std::to_string(units / unit) + "." + frac;
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "text") {
        return OutputFormat::text;
    }
    throw std::invalid_argument("unknown output format: " + std::string(name));
}

namespace {

template <class Num>
std::vector<KochRow> koch_table_as(unsigned max_s) {
    TriPolyEngine<Num> engine;
    std::vector<KochRow> rows;
    Formula k = prim();
    for (unsigned s = 0; s <= max_s; ++s) {
        if (s > 0) {
            const auto f = flip(k);
            k = vee(f, f);
        }
        const auto c = counts_of(engine.evaluate(k));
        rows.push_back({s, c.edges, c.root_upper, c.root_lower, c.root_total});
    }
    return rows;
}

template <class Num>
std::vector<PolytwinRow> polytwin_table_as(unsigned max_s) {
    TriPolyEngine<Num> engine;
    std::vector<PolytwinRow> rows;
    Formula k = prim();
    for (unsigned s = 0; s <= max_s; ++s) {
        if (s > 0) {
            const auto f = flip(k);
            k = vee(f, f);
        }
        rows.push_back({s, growth_report(growth_sums(engine.evaluate(k)))});
    }
    return rows;
}

}  // namespace

std::vector<KochRow> koch_table(unsigned max_s, NumberMode mode) {
    if (max_s > 62) {
        throw std::invalid_argument("koch_table: level too large");
    }
    return mode == NumberMode::exact ? koch_table_as<mpz_class>(max_s) : koch_table_as<ExtNum>(max_s);
}

std::vector<PolytwinRow> polytwin_koch_table(unsigned max_s, NumberMode mode) {
    if (max_s > 62) {
        throw std::invalid_argument("polytwin_koch_table: level too large");
    }
    return mode == NumberMode::exact ? polytwin_table_as<mpz_class>(max_s) : polytwin_table_as<ExtNum>(max_s);
}

std::string render_koch(const std::vector<KochRow>& rows, OutputFormat format, int digits) {
    const std::vector<std::string> header{"s", "n", "rootU", "rootL", "rootT"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        cells.push_back({std::to_string(r.s), std::to_string(r.n), format_round_down(r.root_upper, digits),
                         format_round_down(r.root_lower, digits), format_round_down(r.root_total, digits)});
    }
    return render_table(header, cells, {true, true, true, true, true}, format);
}

std::string render_polytwin(const std::vector<PolytwinRow>& rows, OutputFormat format, int digits) {
    const std::vector<std::string> header{"s", "m", "lambda", "tau", "lambda_tau", "lambda_bar", "lambda_lambda_bar"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        const auto& g = r.growth;
        cells.push_back({r.s ? std::to_string(*r.s) : std::string(), std::to_string(g.m),
                         format_round_down(g.lambda, digits), format_round_down(g.tau, digits),
                         format_round_down(g.lambda_tau, digits), format_round_down(g.lambda_bar, digits),
                         format_round_down(g.lambda_lambda_bar, digits)});
    }
    return render_table(header, cells, std::vector<bool>(header.size(), true), format);
}

PolyReport poly_report(const Formula& f, NumberMode mode, bool with_coeffs, int digits) {
    auto r = mode == NumberMode::exact ? poly_report_as<mpz_class>(f, with_coeffs, digits)
                                       : poly_report_as<ExtNum>(f, with_coeffs, digits);
    r.mode = mode;
    return r;
}

std::string render_poly(const PolyReport& r, OutputFormat format, int digits) {
    const std::string ru = format_round_down(r.root_upper, digits);
    const std::string rl = format_round_down(r.root_lower, digits);
    const std::string rt = format_round_down(r.root_total, digits);
    switch (format) {
        case OutputFormat::csv: {
            std::vector<std::string> header{"n", "mode", "U", "L", "tr", "rootU", "rootL", "rootT"};
            std::vector<std::string> row{std::to_string(r.n), to_string(r.mode), r.upper, r.lower, r.total, ru, rl, rt};
            if (!r.upper_coeffs.empty()) {
                auto joined = [](const std::vector<std::string>& v) {
                    std::string s;
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        s += (i == 0 ? "" : " ") + v[i];
                    }
                    return s;
                };
                header.emplace_back("T_upper");
                header.emplace_back("T_lower");
                row.push_back(joined(r.upper_coeffs));
                row.push_back(joined(r.lower_coeffs));
            }
            return join_csv(header) + join_csv(row);
        }
        case OutputFormat::json: {
            ordered_json obj;
            obj["formula"] = r.formula;
            obj["n"] = r.n;
            obj["mode"] = to_string(r.mode);
            obj["U"] = r.upper;
            obj["L"] = r.lower;
            obj["tr"] = r.total;
            obj["rootU"] = as_number(ru);
            obj["rootL"] = as_number(rl);
            obj["rootT"] = as_number(rt);
            if (!r.upper_coeffs.empty()) {
                obj["T_upper"] = r.upper_coeffs;
                obj["T_lower"] = r.lower_coeffs;
            }
            return obj.dump(2) + '\n';
        }
        case OutputFormat::text: {
            std::ostringstream out;
            out << "formula: " << r.formula << '\n'
                << "n: " << r.n << '\n'
                << "mode: " << to_string(r.mode) << '\n'
                << "U: " << r.upper << '\n'
                << "L: " << r.lower << '\n'
                << "tr: " << r.total << '\n'
                << "rootU: " << ru << '\n'
                << "rootL: " << rl << '\n'
                << "rootT: " << rt << '\n';
            if (!r.upper_coeffs.empty()) {
                auto list = [&](const char* name, const std::vector<std::string>& v) {
                    out << name << ": [";
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        out << (i == 0 ? "" : ", ") << v[i];
                    }
                    out << "]\n";
                };
                list("T_upper", r.upper_coeffs);
                list("T_lower", r.lower_coeffs);
            }
            return out.str();
        }
    }
    throw std::logic_error("render_poly: unknown format");
}

}  // namespace chains
