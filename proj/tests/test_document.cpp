#include "hla/document.hpp"
#include "hla/uce.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <functional>

using namespace hla;

namespace {

const std::string data_dir = std::string(HLA_SOURCE_DIR) + "/data/";

std::string data(const std::string& name) { return fixtures::read_file(data_dir + name); }

/// Location prefix "line:col" of the parse error raised by f, or "" if none.
std::string error_at(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        std::string w = e.what();
        return w.substr(0, w.find(':', w.find(':') + 1));
    }
    return "";
}

std::string error_text(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

// emit(parse(x)) is a fixed point and parse(emit(a)) == a for every shipped document.
TEST(Documents, RoundTripAllShippedFiles)
{
    const HomLieAntialgebra exe = parse_algebra(data("exe02.toml"));
    const HomLieAntialgebra total = parse_algebra(data("exe02_total.toml"));
    std::map<std::string, std::function<std::string(const std::string&)>> by_kind = {
        {"algebra", [](const std::string& t) { return emit_algebra(parse_algebra(t)); }},
        {"coefficients", [](const std::string& t) { return emit_coefficients(parse_coefficients(t)); }},
        {"extension", [](const std::string& t) { return emit_extension(parse_extension(t)); }},
        {"cocycle", [&](const std::string& t) { return emit_cocycle(exe, parse_cocycle(t, exe)); }},
        {"action", [&](const std::string& t) { return emit_action(exe, parse_action(t, exe)); }},
        {"morphism", [&](const std::string& t) { return emit_morphism(parse_morphism(t, total, exe), total, exe); }},
    };
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir)) {
        if (entry.path().extension() != ".toml") continue;
        SCOPED_TRACE(entry.path().filename().string());
        const std::string text = fixtures::read_file(entry.path().string());
        const std::string kind = document_kind(text);
        ASSERT_TRUE(by_kind.count(kind)) << kind;
        const std::string once = by_kind[kind](text);
        EXPECT_EQ(by_kind[kind](once), once);
        ++files;
    }
    EXPECT_GE(files, 9);
}

TEST(Documents, StructuralRoundTrip)
{
    for (Scalar mu : {Scalar(1), Scalar(2), Scalar(-3, 7)}) {
        EXPECT_TRUE(parse_algebra(emit_algebra(k3(mu))) == k3(mu));
        EXPECT_TRUE(parse_algebra(emit_algebra(exe02_extension(mu))) == exe02_extension(mu));
        Cocycle2 w = fixtures::exe02_cocycle(mu, true);
        EXPECT_TRUE(parse_cocycle(emit_cocycle(exe02(mu), w), exe02(mu)) == w);
    }
    HomLieAntialgebra s = direct_sum(k3(2), exe02(3));
    EXPECT_TRUE(parse_algebra(emit_algebra(s)) == s);
    UceResult u = build_uce(k3(2));
    EXPECT_TRUE(parse_algebra(emit_algebra(u.uce_algebra)) == u.uce_algebra);
}

TEST(Documents, ShippedDocumentsMatchBuiltins)
{
    EXPECT_TRUE(parse_algebra(data("k3.toml")) == k3(2));
    EXPECT_TRUE(parse_algebra(data("exe02.toml")) == exe02(2));
    EXPECT_TRUE(parse_algebra(data("exe02_total.toml")) == exe02_extension(2));
    EXPECT_EQ(data("exe02.toml"), emit_algebra(exe02(2)));
    EXPECT_TRUE(parse_cocycle(data("exe02_cocycle.toml"), exe02(2)) == fixtures::exe02_cocycle(2));
    CentralExtension e = parse_extension(data("exe02_extension.toml"));
    EXPECT_TRUE(verify_central_extension(e).passed());
    EXPECT_TRUE(e.total == exe02_extension(2));
    EXPECT_EQ(e.kernel.basis.odd, (std::vector<std::string>{"k0"}));
    EXPECT_EQ(e.kernel.beta(0, 0), 2);
    ActionDocument act = parse_action(data("exe02_action.toml"), exe02(2));
    EXPECT_TRUE(verify_action(exe02(2), act.module, act.action).passed());
    CoefficientSpace v = parse_coefficients(data("odd_line.toml"));
    EXPECT_EQ(v.m1(), 1u);
    EXPECT_EQ(v.beta(0, 0), 2);
}

TEST(Documents, OmittedEntriesAreZeroAndMirrorsComplete)
{
    HomLieAntialgebra a = parse_algebra(R"(kind = "algebra"
even = ["e"]
odd = ["p", "q"]
[bracket_odd_odd]
"q,p" = { e = "-1" }
)");
    EXPECT_TRUE(a.alpha().is_zero());
    EXPECT_EQ(a.bracket()(0, 1, 0), 1);
    EXPECT_EQ(a.bracket()(1, 0, 0), -1);
}

TEST(Documents, ErrorsCarryLocations)
{
    const std::string head = "kind = \"algebra\"\neven = [\"e\"]\nodd = [\"f\"]\n";
    EXPECT_EQ(error_at([&] { parse_algebra(head + "foo = \"1\"\n"); }), "4:1");
    EXPECT_NE(error_text([&] { parse_algebra(head + "foo = \"1\"\n"); }).find("unknown key 'foo'"),
              std::string::npos);
    EXPECT_NE(error_text([&] { parse_algebra(head + "[alpha]\ne = { e = \"1/0\" }\n"); }).find("malformed rational"),
              std::string::npos);
    EXPECT_EQ(error_at([&] { parse_algebra(head + "[alpha]\ne = { e = \"1/0\" }\n"); }).substr(0, 2), "5:");
    EXPECT_NE(error_text([&] { parse_algebra(head + "[alpha]\ne = { g = \"1\" }\n"); }).find("undeclared"),
              std::string::npos);
    EXPECT_NE(error_text([&] { parse_algebra(head + "even = [\"x\"]\n"); }).find("duplicate key"), std::string::npos);
    EXPECT_NE(error_text([&] { parse_algebra(head + "[alpha]\ne = { f = \"1\" }\n"); }).find("parity"),
              std::string::npos);
    EXPECT_NE(error_text([&] {
                  parse_algebra("even = [\"e\"]\nodd = [\"p\", \"q\"]\n[bracket_odd_odd]\n\"p,q\" = { e = \"1\" }\n"
                                "\"q,p\" = { e = \"1\" }\n");
              }).find("symmetry contradiction"),
              std::string::npos);
    EXPECT_NE(error_text([&] { parse_algebra("even = [\"e\"]\nodd = [\"p\"]\n[bracket_odd_odd]\n\"p,p\" = { e = \"1\" }\n"); })
                  .find("must vanish"),
              std::string::npos);
    EXPECT_FALSE(error_text([&] { parse_algebra("even = [\"e\"\n"); }).empty());
    EXPECT_FALSE(error_text([&] { parse_algebra("kind = \"cocycle\"\n"); }).empty());
    EXPECT_FALSE(error_text([&] { parse_algebra(head + "[alpha]\n[alpha]\n"); }).empty());
}

TEST(Documents, CommentsAndQuotedKeys)
{
    HomLieAntialgebra a = parse_algebra(R"(# comment line
kind = "algebra"   # trailing comment
even = ["x y"]
odd = []
[alpha]
"x y" = { "x y" = "3" }
)");
    EXPECT_EQ(a.alpha()(0, 0), 3);
    EXPECT_TRUE(parse_algebra(emit_algebra(a)) == a);
}
