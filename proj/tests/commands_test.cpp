#include "zernike/commands.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace zernike;
using zernike::testing::load_golden_table;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class F>
Run run(F&& f) {
    std::ostringstream out, err;
    const int code = f(out, err);
    return {code, out.str(), err.str()};
}

CommandOptions with_format(OutputFormat::Kind kind, int digits = 19) {
    CommandOptions opts;
    opts.format.kind = kind;
    opts.format.digits = digits;
    return opts;
}

std::string golden_text() {
    std::ostringstream os;
    for (const auto& r : load_golden_table()) os << r.n << ' ' << r.m << ' ' << r.text << '\n';
    return os.str();
}

}  // namespace

TEST(Format, Significant) {
    EXPECT_EQ(format_significant(0.9616464847987593600, 19), "0.9616464847987593600");
    EXPECT_EQ(format_significant(0.5, 6), "0.500000");
    EXPECT_EQ(format_general(0.5, 19), "0.5");
    EXPECT_EQ(format_general(real50(2) / 3, 19), "0.6666666666666666667");
    EXPECT_EQ(format_significant(real50(1) / 8, 8), "0.12500000");
}

TEST(Format, DigitsAndKind) {
    EXPECT_NO_THROW(validate_digits(6, 15));
    EXPECT_NO_THROW(validate_digits(19, 15));
    EXPECT_NO_THROW(validate_digits(40, 50));
    EXPECT_THROW(validate_digits(5, 15), std::invalid_argument);
    EXPECT_THROW(validate_digits(20, 15), std::invalid_argument);
    EXPECT_EQ(parse_format_kind("csv"), OutputFormat::Kind::csv);
    EXPECT_THROW(parse_format_kind("xml"), std::invalid_argument);
}

TEST(CmdTable, FirstEntry) {
    const auto r = run([](auto& o, auto& e) { return cmd_table(2, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2 0 0.7071067811865475727\n");
}

TEST(CmdTable, ReproducesReferenceTableText) {
    const auto r = run([](auto& o, auto& e) { return cmd_table(20, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden_text());
}

TEST(CmdTable, EmptyAndOutOfRange) {
    auto r = run([](auto& o, auto& e) { return cmd_table(1, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "");
    r = run([](auto& o, auto& e) { return cmd_table(61, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err, "");
}

TEST(CmdTable, Deterministic) {
    for (int precision : {15, 30}) {
        CommandOptions opts;
        opts.precision = precision;
        const auto a = run([&](auto& o, auto& e) { return cmd_table(14, opts, o, e); });
        const auto b = run([&](auto& o, auto& e) { return cmd_table(14, opts, o, e); });
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(CmdTable, UsageErrors) {
    CommandOptions opts;
    opts.precision = 10;
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_table(4, opts, o, e); }).code, 2);
    opts.precision = 101;
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_table(4, opts, o, e); }).code, 2);
    opts = CommandOptions{};
    opts.eps = "abc";
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_table(4, opts, o, e); }).code, 2);
    opts.eps = "-1e-10";
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_table(4, opts, o, e); }).code, 2);
    opts = CommandOptions{};
    opts.format.digits = 3;
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_table(4, opts, o, e); }).code, 2);
}

TEST(CmdTable, ConvergenceFailureNamesTheRoot) {
    CommandOptions opts;
    opts.eps = "1e-300";
    const auto r = run([&](auto& o, auto& e) { return cmd_table(4, opts, o, e); });
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err.find("(n=2, m=0, i=1)"), std::string::npos) << r.err;
}

TEST(CmdTable, CsvAndJsonRoundTrip) {
    for (int digits : {8, 19}) {
        const auto text = run([&](auto& o, auto& e) {
            return cmd_table(12, with_format(OutputFormat::Kind::text, digits), o, e);
        });
        const auto csv = run([&](auto& o, auto& e) {
            return cmd_table(12, with_format(OutputFormat::Kind::csv, digits), o, e);
        });
        const auto json = run([&](auto& o, auto& e) {
            return cmd_table(12, with_format(OutputFormat::Kind::json, digits), o, e);
        });
        ASSERT_EQ(csv.code, 0);
        ASSERT_EQ(json.code, 0);
        std::istringstream ts(text.out), cs(csv.out), js(json.out);
        const auto from_text = read_text_table(ts);
        const auto from_csv = read_csv_table(cs);
        const auto from_json = read_json_table(js);
        ASSERT_EQ(from_csv.size(), from_text.size());
        ASSERT_EQ(from_json.size(), from_text.size());
        for (std::size_t k = 0; k < from_text.size(); ++k) {
            EXPECT_EQ(from_csv[k].n, from_text[k].n);
            EXPECT_EQ(from_csv[k].m, from_text[k].m);
            EXPECT_EQ(from_csv[k].i, from_text[k].i);
            EXPECT_EQ(from_csv[k].x, from_text[k].x);
            EXPECT_EQ(from_json[k].n, from_text[k].n);
            EXPECT_EQ(from_json[k].m, from_text[k].m);
            EXPECT_EQ(from_json[k].i, from_text[k].i);
            EXPECT_EQ(from_json[k].x, from_text[k].x);
            EXPECT_TRUE(from_json[k].iterations.has_value());
            EXPECT_TRUE(from_json[k].residual.has_value());
        }
    }
}

TEST(CmdTable, HighPrecisionDigits) {
    CommandOptions opts;
    opts.precision = 50;
    opts.format.digits = 40;
    const auto r = run([&](auto& o, auto& e) { return cmd_table(2, opts, o, e); });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2 0 0.7071067811865475244008443621048490392848\n");

    opts.precision = 100;
    opts.format.digits = 90;
    const auto wide = run([&](auto& o, auto& e) { return cmd_roots(20, 18, opts, o, e); });
    EXPECT_EQ(wide.code, 0);
    using boost::multiprecision::sqrt;
    const std::string want = format_significant(real100(sqrt(real100(19) / 20)), 90);
    EXPECT_EQ(wide.out.rfind("20 18 1 " + want + " ", 0), 0u) << wide.out;
}

TEST(CmdRoots, Examples) {
    auto r = run([](auto& o, auto& e) { return cmd_roots(6, 4, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("6 4 1 0.9128709291752769017 ", 0), 0u) << r.out;

    r = run([](auto& o, auto& e) { return cmd_roots(5, 5, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "");

    r = run([](auto& o, auto& e) { return cmd_roots(7, 2, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err, "");

    r = run([](auto& o, auto& e) { return cmd_roots(62, 0, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 2);
}

TEST(CmdRoots, CsvCarriesDiagnostics) {
    const auto r = run([](auto& o, auto& e) { return cmd_roots(13, 5, with_format(OutputFormat::Kind::csv), o, e); });
    ASSERT_EQ(r.code, 0);
    std::istringstream is(r.out);
    const auto rows = read_csv_table(is);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].x, "0.5974058327888663866");
    EXPECT_EQ(rows[3].x, "0.9831524024611432155");
    for (const auto& row : rows) {
        ASSERT_TRUE(row.iterations.has_value());
        EXPECT_GE(*row.iterations, 1);
        EXPECT_LE(*row.iterations, 20);
        ASSERT_TRUE(row.residual.has_value());
        EXPECT_LT(std::stod(*row.residual), 1e-13);
    }
}

TEST(CmdQuad, Examples) {
    auto r = run([](auto& o, auto& e) { return cmd_quad(0, 1, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.5 1\n");

    CommandOptions hp;
    hp.precision = 30;
    r = run([&](auto& o, auto& e) { return cmd_quad(1, 1, hp, o, e); });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.6666666666666666667 0.5\n");

    r = run([](auto& o, auto& e) { return cmd_quad(0, 2, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 0);
    std::istringstream is(r.out);
    double y1, w1, y2, w2;
    is >> y1 >> w1 >> y2 >> w2;
    EXPECT_NEAR(y1, 0.4597008433809830485 * 0.4597008433809830485, 1e-15);
    EXPECT_NEAR(y2, 0.8880738339771152567 * 0.8880738339771152567, 1e-15);
    EXPECT_NEAR(w1, 0.5, 1e-15);
    EXPECT_NEAR(w2, 0.5, 1e-15);
}

TEST(CmdQuad, Errors) {
    EXPECT_EQ(run([](auto& o, auto& e) { return cmd_quad(0, 13, CommandOptions{}, o, e); }).code, 2);
    EXPECT_EQ(run([](auto& o, auto& e) { return cmd_quad(-1, 2, CommandOptions{}, o, e); }).code, 2);
    EXPECT_EQ(run([](auto& o, auto& e) { return cmd_quad(0, 0, CommandOptions{}, o, e); }).code, 2);
    const auto r = run([](auto& o, auto& e) { return cmd_quad(0, 10, CommandOptions{}, o, e); });
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("30 digits"), std::string::npos) << r.err;
    CommandOptions hp;
    hp.precision = 40;
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_quad(0, 10, hp, o, e); }).code, 0);
}

TEST(CmdQuad, JsonAndCsv) {
    auto r = run([](auto& o, auto& e) { return cmd_quad(0, 1, with_format(OutputFormat::Kind::csv), o, e); });
    EXPECT_EQ(r.out, "i,node,weight\n1,0.5,1\n");
    r = run([](auto& o, auto& e) { return cmd_quad(0, 1, with_format(OutputFormat::Kind::json), o, e); });
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["i"], 1);
    EXPECT_DOUBLE_EQ(j[0]["node"].get<double>(), 0.5);
    EXPECT_DOUBLE_EQ(j[0]["weight"].get<double>(), 1.0);
}

TEST(Readers, RejectMalformedInput) {
    std::istringstream bad_csv("x,y\n1,2\n");
    EXPECT_THROW(read_csv_table(bad_csv), std::runtime_error);
    std::istringstream short_row("n,m,i,x\n2,0,1\n");
    EXPECT_THROW(read_csv_table(short_row), std::runtime_error);
    std::istringstream bad_json(R"([{"n":2,"m":0,"i":1,"x":"0.7"}])");
    EXPECT_THROW(read_json_table(bad_json), std::runtime_error);
    std::istringstream truncated("[{\"n\":2,");
    EXPECT_THROW(read_json_table(truncated), std::runtime_error);
    std::istringstream bad_text("2 0\n");
    EXPECT_THROW(read_text_table(bad_text), std::runtime_error);
}
