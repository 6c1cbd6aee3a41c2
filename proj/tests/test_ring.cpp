#include <gtest/gtest.h>

#include <random>

#include "ringlab/constructions.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/table_io.hpp"

using namespace ringlab;

namespace {

RingTable corrupt_mul(const RingTable& r, Elem a, Elem b, Elem value) {
    std::vector<Elem> add(r.add_table().begin(), r.add_table().end());
    std::vector<Elem> mul(r.mul_table().begin(), r.mul_table().end());
    mul[a * r.size() + b] = value;
    return RingTable(r.size(), add, mul, r.zero(), r.one(), r.labels());
}

// E_ij index in upper_triangular(2, Z/2): digits (a11, a12, a22), most significant first.
constexpr Elem kE11 = 4, kE12 = 2, kE22 = 1;

}  // namespace

TEST(RingTable, StructuralErrorsAreDistinctFromAxiomFailures) {
    EXPECT_THROW(RingTable(2, {0, 1, 1}, {0, 0, 0, 1}, 0, 1), StructuralError);
    EXPECT_THROW(RingTable(2, {0, 1, 1, 2}, {0, 0, 0, 1}, 0, 1), StructuralError);
    EXPECT_THROW(RingTable(2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 5), StructuralError);
    EXPECT_THROW(RingTable(0, {}, {}, 0, 0), StructuralError);
    EXPECT_THROW(RingTable(2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 1, {"a"}), StructuralError);
}

TEST(RingTable, CyclicRingsSatisfyAxioms) {
    for (std::size_t n : {1, 2, 3, 4, 6, 8, 12}) {
        const auto r = cyclic(n);
        const auto report = validate_axioms(*r);
        EXPECT_TRUE(report.ok()) << "Z/" << n;
        EXPECT_EQ(report.trivial, n == 1);
    }
}

TEST(RingTable, CorruptedEntryIsReported) {
    const auto z4 = cyclic(4);
    const RingTable bad = corrupt_mul(*z4, 2, 2, 1);
    const auto report = validate_axioms(bad);
    EXPECT_FALSE(report.ok());
    EXPECT_TRUE(report.violates("left-distributivity") || report.violates("right-distributivity") ||
                report.violates("multiplicative-associativity"));
    for (const auto& v : report.violations) EXPECT_FALSE(v.witnesses.empty()) << v.law;
}

TEST(RingTable, RandomSingleEntryCorruptionsAreCaught) {
    // Every corruption of Z/6 that changes a·b breaks some law: the table of
    // a unital ring on a cyclic additive group is forced by 1·1.
    const auto z6 = cyclic(6);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Elem a = rng() % 6, b = rng() % 6;
        const Elem v = static_cast<Elem>((z6->mul(a, b) + 1 + rng() % 5) % 6);
        EXPECT_FALSE(validate_axioms(corrupt_mul(*z6, a, b, v)).ok());
    }
}

TEST(ElementPredicates, Nilpotency) {
    const auto z4 = cyclic(4);
    EXPECT_TRUE(is_nilpotent_element(*z4, 2));
    EXPECT_FALSE(is_nilpotent_element(*z4, 3));
    EXPECT_TRUE(is_nilpotent_element(*z4, 0));
    const auto t2 = upper_triangular(2, cyclic(2));
    EXPECT_TRUE(is_nilpotent_element(*t2, kE12));
    EXPECT_FALSE(is_nilpotent_element(*t2, kE11));
}

TEST(ElementPredicates, CentralIdempotentRegularUnit) {
    const auto z6 = cyclic(6);
    EXPECT_TRUE(is_idempotent(*z6, 3));
    EXPECT_TRUE(is_central(*z6, 3));
    const auto z4 = cyclic(4);
    EXPECT_TRUE(is_regular(*z4, 3));
    EXPECT_TRUE(is_unit(*z4, 3));
    EXPECT_FALSE(is_regular(*z4, 2));

    const auto m2 = matrix_ring(2, cyclic(2));
    const Elem e11 = 8;  // digits (1,0,0,0)
    EXPECT_EQ(m2->label(e11), "[[1,0],[0,0]]");
    EXPECT_FALSE(is_central(*m2, e11));
    EXPECT_TRUE(is_idempotent(*m2, e11));
}

TEST(ElementPredicates, FiniteRingInvariants) {
    const auto z2 = cyclic(2);
    for (const auto& r : {cyclic(4), cyclic(6), cyclic(8), upper_triangular(2, z2), matrix_ring(2, z2),
                          trivial_extension(z2), direct_product(z2, cyclic(4)), truncated_poly_ring(z2, 3)}) {
        for (Elem a = 0; a < r->size(); ++a) {
            // Finite ring: regular implies unit.
            if (is_regular(*r, a)) {
                EXPECT_TRUE(is_unit(*r, a));
            }
            if (a != r->zero() && is_nilpotent_element(*r, a)) {
                EXPECT_FALSE(is_regular(*r, a));
            }
        }
    }
}

TEST(TableIo, ExportImportIsByteExact) {
    const auto z2 = cyclic(2);
    for (const auto& r : {cyclic(5), upper_triangular(2, z2), trivial_extension(cyclic(3))}) {
        const std::string text = export_ring(*r);
        const RingTable back = import_ring(text);
        EXPECT_EQ(export_ring(back), text);
        EXPECT_EQ(table_digest(back), table_digest(*r));
    }
}

TEST(TableIo, MalformedDocuments) {
    EXPECT_THROW(import_ring("{"), StructuralError);
    EXPECT_THROW(import_ring(R"({"size":2,"add":[[0,1],[1,0]],"zero":0,"one":1})"), StructuralError);
    EXPECT_THROW(import_ring(R"({"size":2,"add":[[0,1],[1]],"mul":[[0,0],[0,1]],"zero":0,"one":1})"),
                 StructuralError);
    EXPECT_THROW(import_ring(R"({"size":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,7]],"zero":0,"one":1})"),
                 StructuralError);
    const RingTable ok = import_ring(R"({"size":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]],"zero":0,"one":1})");
    EXPECT_TRUE(validate_axioms(ok).ok());
    EXPECT_TRUE(ok.labels().empty());
}
