#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "ringlab/dsl.hpp"
#include "ringlab/hom.hpp"

using namespace ringlab;

TEST(Parse, Shapes) {
    const RingExpr t = parse_expr("T(2, Z/2)");
    EXPECT_EQ(t.kind, RingExpr::Kind::Triangular);
    EXPECT_EQ(t.number, 2u);
    ASSERT_EQ(t.args.size(), 1u);
    EXPECT_EQ(t.args[0].kind, RingExpr::Kind::Cyclic);

    const RingExpr q = parse_expr("quot(T(2, Z/2), [2])");
    EXPECT_EQ(q.kind, RingExpr::Kind::Quotient);
    EXPECT_EQ(q.elems, std::vector<Elem>{2});
    EXPECT_EQ(parse_expr("sub(M(2,Z/2),[])").elems.size(), 0u);
}

TEST(Parse, ErrorOffsets) {
    auto offset = [](const char* s) -> std::size_t {
        try {
            parse_expr(s);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return 999;
    };
    EXPECT_EQ(offset("M(2 Z/2"), 4u);
    EXPECT_EQ(offset(""), 0u);
    EXPECT_EQ(offset("Z/"), 2u);
    EXPECT_EQ(offset("Q(2, Z/2)"), 0u);
    EXPECT_EQ(offset("T(2, Z/2))"), 9u);
    EXPECT_EQ(offset("quot(Z/4, [2,])"), 13u);
    EXPECT_EQ(offset("prod(Z/2 Z/3)"), 9u);
    EXPECT_EQ(offset("file()"), 5u);
}

TEST(Parse, CanonicalRoundTrip) {
    const std::vector<std::string> exprs{
        "Z/1",
        "Z/12",
        "M(2, Z/2)",
        "T(3, Z/2)",
        "CD(4, Z/2)",
        "trivext(CD(2, Z/3))",
        "truncpoly(Z/4, 2)",
        "prod(Z/2, prod(Z/3, Z/4))",
        "quot(T(2, Z/2), [2])",
        "quot(Z/4, [])",
        "corner(Z/6, 3)",
        "loc(Z/4, [1, 3])",
        "sub(M(2, Z/2), [8, 4])",
        "file(/tmp/some ring.json)",
    };
    for (const auto& s : exprs) {
        const RingExpr e = parse_expr(s);
        EXPECT_EQ(print_expr(e), s);
        EXPECT_EQ(parse_expr(print_expr(e)), e) << s;
    }
    EXPECT_EQ(print_expr(parse_expr("  T( 2 ,Z/ 2 ) ")), "T(2, Z/2)");
}

TEST(Evaluate, Constructions) {
    EXPECT_EQ(evaluate("T(2, Z/2)")->size(), 8u);
    EXPECT_EQ(evaluate("M(2, Z/2)")->size(), 16u);
    EXPECT_EQ(evaluate("CD(4, Z/2)")->size(), 128u);
    EXPECT_EQ(evaluate("truncpoly(Z/2, 3)")->size(), 8u);
    EXPECT_EQ(evaluate("prod(Z/2, Z/4)")->size(), 8u);
    EXPECT_EQ(evaluate("quot(T(2, Z/2), [2])")->size(), 4u);
    EXPECT_EQ(evaluate("corner(Z/6, 3)")->size(), 2u);
    EXPECT_EQ(evaluate("loc(Z/4, [1, 3])")->size(), 4u);
    EXPECT_EQ(evaluate("sub(M(2, Z/2), [8, 4])")->size(), 8u);
    EXPECT_TRUE(find_isomorphism(evaluate("quot(T(2, Z/2), [2])"), evaluate("prod(Z/2, Z/2)")));
    EXPECT_TRUE(find_isomorphism(evaluate("trivext(Z/3)"), evaluate("CD(2, Z/3)")));
}

TEST(Evaluate, Errors) {
    EXPECT_THROW(evaluate("Z/0"), StructuralError);
    EXPECT_THROW(evaluate("quot(Z/4, [7])"), StructuralError);
    EXPECT_THROW(evaluate("corner(Z/6, 2)"), PreconditionError);
    EXPECT_THROW(evaluate("corner(M(2, Z/2), 8)"), PreconditionError);
    EXPECT_THROW(evaluate("loc(Z/4, [2])"), PreconditionError);
    EXPECT_THROW(evaluate("M(4, Z/4)"), CapExceeded);
    EXPECT_THROW(evaluate("file(/nonexistent/ring.json)"), StructuralError);
}

TEST(Evaluate, FileImport) {
    const std::string path = testing::TempDir() + "ringlab_dsl_t2.json";
    const RingRef t2 = evaluate("T(2, Z/2)");
    {
        std::ofstream f(path);
        f << export_ring(*t2);
    }
    const RingRef back = evaluate("file(" + path + ")");
    EXPECT_EQ(table_digest(*back), table_digest(*t2));

    // A table that is well formed but not a ring: 1 + 1 = 1 in a Z/2-shaped table.
    const std::string bad = testing::TempDir() + "ringlab_dsl_bad.json";
    {
        std::ofstream f(bad);
        f << R"({"size":2,"add":[[0,1],[1,1]],"mul":[[0,0],[0,1]],"zero":0,"one":1})";
    }
    EXPECT_THROW(evaluate("file(" + bad + ")"), StructuralError);
    std::remove(path.c_str());
    std::remove(bad.c_str());
}
