#pragma once

// Text, CSV and JSON renderings of root tables and quadrature rules, and the
// readers that parse them back. Numbers are written with a fixed count of
// significant figures and read back as their decimal lexemes, so a round trip
// loses nothing at the emitted digit count.
//
//   text   n m x                              (one root per line)
//   csv    n,m,i,x                            (header line first)
//   json   [{"n":..,"m":..,"i":..,"x":..,"iterations":..,"residual":..}, ...]

#include "zernike/quadrature.hpp"
#include "zernike/real.hpp"
#include "zernike/root_solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zernike {

/// Significant figures of the residual column; it is a diagnostic only.
inline constexpr int residual_digits = 6;

struct OutputFormat {
    enum class Kind { text, csv, json };
    Kind kind = Kind::text;
    int digits = 19;
};

inline OutputFormat::Kind parse_format_kind(const std::string& name) {
    if (name == "text") return OutputFormat::Kind::text;
    if (name == "csv") return OutputFormat::Kind::csv;
    if (name == "json") return OutputFormat::Kind::json;
    throw std::invalid_argument("unknown output format '" + name + "' (expected text, csv or json)");
}

/// 6 <= digits <= max(19, precision_digits). Nineteen figures are always
/// allowed since that is the width of the reference root table.
inline void validate_digits(int digits, int precision_digits) {
    const int upper = std::max(19, precision_digits);
    if (digits < 6 || digits > upper)
        throw std::invalid_argument("--digits must be between 6 and " + std::to_string(upper) + ", got " +
                                    std::to_string(digits));
}

namespace detail {

template <class Real>
void write_root_json(std::ostream& os, const RootRecord<Real>& r, int digits) {
    os << "{\"n\":" << r.idx.n() << ",\"m\":" << r.idx.m() << ",\"i\":" << r.rank
       << ",\"x\":" << format_significant(r.x, digits) << ",\"iterations\":" << r.iterations
       << ",\"residual\":" << format_general(r.residual, residual_digits) << "}";
}

template <class Real>
void write_json_array(std::ostream& os, std::span<const RootRecord<Real>> records, int digits) {
    os << "[";
    for (std::size_t k = 0; k < records.size(); ++k) {
        os << (k == 0 ? "\n  " : ",\n  ");
        write_root_json(os, records[k], digits);
    }
    os << (records.empty() ? "]\n" : "\n]\n");
}

}  // namespace detail

/// Whole-table view: text `n m x`, csv `n,m,i,x`, or json objects.
template <class Real>
void write_table(std::ostream& os, std::span<const RootRecord<Real>> records, const OutputFormat& fmt) {
    switch (fmt.kind) {
    case OutputFormat::Kind::text:
        for (const auto& r : records)
            os << r.idx.n() << ' ' << r.idx.m() << ' ' << format_significant(r.x, fmt.digits) << '\n';
        break;
    case OutputFormat::Kind::csv:
        os << "n,m,i,x\n";
        for (const auto& r : records)
            os << r.idx.n() << ',' << r.idx.m() << ',' << r.rank << ',' << format_significant(r.x, fmt.digits) << '\n';
        break;
    case OutputFormat::Kind::json:
        detail::write_json_array(os, records, fmt.digits);
        break;
    }
}

/// Single (n, m) view with diagnostics: text `n m i x iterations residual`,
/// csv with the same columns, json as for tables.
template <class Real>
void write_roots(std::ostream& os, std::span<const RootRecord<Real>> records, const OutputFormat& fmt) {
    switch (fmt.kind) {
    case OutputFormat::Kind::text:
        for (const auto& r : records)
            os << r.idx.n() << ' ' << r.idx.m() << ' ' << r.rank << ' ' << format_significant(r.x, fmt.digits) << ' '
               << r.iterations << ' ' << format_general(r.residual, residual_digits) << '\n';
        break;
    case OutputFormat::Kind::csv:
        os << "n,m,i,x,iterations,residual\n";
        for (const auto& r : records)
            os << r.idx.n() << ',' << r.idx.m() << ',' << r.rank << ',' << format_significant(r.x, fmt.digits) << ','
               << r.iterations << ',' << format_general(r.residual, residual_digits) << '\n';
        break;
    case OutputFormat::Kind::json:
        detail::write_json_array(os, records, fmt.digits);
        break;
    }
}

/// text `node weight`, csv `i,node,weight`, json [{"i","node","weight"}].
/// Rule values are printed %g-style, so exact nodes and weights stay short (0.5, 1).
template <class Real>
void write_rule(std::ostream& os, const QuadratureRule<Real>& rule, const OutputFormat& fmt) {
    const auto n = rule.nodes.size();
    switch (fmt.kind) {
    case OutputFormat::Kind::text:
        for (std::size_t i = 0; i < n; ++i)
            os << format_general(rule.nodes[i], fmt.digits) << ' ' << format_general(rule.weights[i], fmt.digits)
               << '\n';
        break;
    case OutputFormat::Kind::csv:
        os << "i,node,weight\n";
        for (std::size_t i = 0; i < n; ++i)
            os << i + 1 << ',' << format_general(rule.nodes[i], fmt.digits) << ','
               << format_general(rule.weights[i], fmt.digits) << '\n';
        break;
    case OutputFormat::Kind::json:
        os << "[";
        for (std::size_t i = 0; i < n; ++i)
            os << (i == 0 ? "\n  " : ",\n  ") << "{\"i\":" << i + 1
               << ",\"node\":" << format_general(rule.nodes[i], fmt.digits)
               << ",\"weight\":" << format_general(rule.weights[i], fmt.digits) << "}";
        os << (n == 0 ? "]\n" : "\n]\n");
        break;
    }
}

/// A root as read back from a rendered table. Numeric fields other than the
/// indices are kept as their decimal text.
struct ParsedRoot {
    int n = 0;
    int m = 0;
    int i = 0;
    std::string x;
    std::optional<int> iterations;
    std::optional<std::string> residual;
};

inline std::vector<ParsedRoot> read_text_table(std::istream& is) {
    std::vector<ParsedRoot> out;
    std::map<std::pair<int, int>, int> rank;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        ParsedRoot r;
        if (!(ls >> r.n >> r.m >> r.x)) throw std::runtime_error("malformed table line: " + line);
        r.i = ++rank[{r.n, r.m}];
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<ParsedRoot> read_csv_table(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("n,m,i,x", 0) != 0)
        throw std::runtime_error("csv table must start with the header n,m,i,x");
    const bool diagnostics = line == "n,m,i,x,iterations,residual";
    std::vector<ParsedRoot> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        if (cells.size() != (diagnostics ? 6u : 4u)) throw std::runtime_error("malformed csv row: " + line);
        ParsedRoot r;
        r.n = std::stoi(cells[0]);
        r.m = std::stoi(cells[1]);
        r.i = std::stoi(cells[2]);
        r.x = cells[3];
        if (diagnostics) {
            r.iterations = std::stoi(cells[4]);
            r.residual = cells[5];
        }
        out.push_back(std::move(r));
    }
    return out;
}

namespace detail {

// SAX consumer that keeps the textual form of floating-point numbers.
class RootArrayReader : public nlohmann::json_sax<nlohmann::json> {
public:
    std::vector<ParsedRoot> roots;

    bool null() override { return fail("null"); }
    bool boolean(bool) override { return fail("boolean"); }
    bool number_integer(number_integer_t v) override { return value(std::to_string(v), true); }
    bool number_unsigned(number_unsigned_t v) override { return value(std::to_string(v), true); }
    bool number_float(number_float_t, const string_t& lexeme) override { return value(lexeme, false); }
    bool string(string_t&) override { return fail("string"); }
    bool binary(binary_t&) override { return fail("binary"); }
    bool start_object(std::size_t) override {
        if (depth_ != 1) return fail("object");
        ++depth_;
        roots.emplace_back();
        return true;
    }
    bool key(string_t& k) override {
        key_ = k;
        return true;
    }
    bool end_object() override {
        --depth_;
        return true;
    }
    bool start_array(std::size_t) override {
        if (depth_ != 0) return fail("nested array");
        ++depth_;
        return true;
    }
    bool end_array() override {
        --depth_;
        return true;
    }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) override {
        throw std::runtime_error("json table parse error at byte " + std::to_string(pos) + ": " + ex.what());
    }

private:
    bool value(const std::string& text, bool integral) {
        if (depth_ != 2) return fail("bare number");
        auto& r = roots.back();
        if (key_ == "n" && integral) r.n = std::stoi(text);
        else if (key_ == "m" && integral) r.m = std::stoi(text);
        else if (key_ == "i" && integral) r.i = std::stoi(text);
        else if (key_ == "iterations" && integral) r.iterations = std::stoi(text);
        else if (key_ == "x") r.x = text;
        else if (key_ == "residual") r.residual = text;
        else return fail("field '" + key_ + "'");
        return true;
    }

    static bool fail(const std::string& what) { throw std::runtime_error("unexpected " + what + " in json table"); }

    int depth_ = 0;
    std::string key_;
};

}  // namespace detail

inline std::vector<ParsedRoot> read_json_table(std::istream& is) {
    detail::RootArrayReader reader;
    nlohmann::json::sax_parse(is, &reader);
    return std::move(reader.roots);
}

}  // namespace zernike
