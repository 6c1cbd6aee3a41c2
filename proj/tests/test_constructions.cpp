#include <gtest/gtest.h>

#include "ringlab/constructions.hpp"

using namespace ringlab;

namespace {

constexpr Elem kE11 = 4, kE12 = 2, kE22 = 1;  // in upper_triangular(2, Z/2)

std::vector<Elem> idempotents(const RingTable& r) {
    std::vector<Elem> out;
    for (Elem a = 0; a < r.size(); ++a)
        if (is_idempotent(r, a)) out.push_back(a);
    return out;
}

}  // namespace

TEST(Constructions, Sizes) {
    const auto z2 = cyclic(2);
    EXPECT_EQ(matrix_ring(2, z2)->size(), 16u);
    EXPECT_EQ(upper_triangular(2, z2)->size(), 8u);
    EXPECT_EQ(upper_triangular(3, z2)->size(), 64u);
    EXPECT_EQ(constant_diagonal(2, z2)->size(), 4u);
    EXPECT_EQ(constant_diagonal(4, z2)->size(), 128u);
    EXPECT_EQ(truncated_poly_ring(cyclic(4), 3)->size(), 64u);
    EXPECT_EQ(trivial_extension(z2)->size(), 4u);
}

TEST(Constructions, EveryOutputIsARing) {
    const auto z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4);
    for (const auto& r :
         {z2, z3, cyclic(6), direct_product(z2, z3), direct_product(z2, z4), matrix_ring(2, z2),
          upper_triangular(2, z2), upper_triangular(3, z2), upper_triangular(2, z3), constant_diagonal(2, z3),
          constant_diagonal(3, z2), trivial_extension(z2), trivial_extension(z4),
          truncated_poly_ring(z2, 3), truncated_poly_ring(z4, 2), ideal_quotient(z4, std::vector<Elem>{2}).ring,
          corner(cyclic(6), 3).ring, subring_generated(matrix_ring(2, z2), std::vector<Elem>{8, 4, 1}).ring}) {
        EXPECT_TRUE(validate_axioms(*r).ok());
    }
}

TEST(Constructions, OneIsTheIdentity) {
    const auto z2 = cyclic(2);
    const auto t = trivial_extension(z2);
    EXPECT_EQ(t->one(), 2u);  // (1,0)
    EXPECT_EQ(t->mul(1, 1), 0u);  // (0,1)·(0,1) = (0,0)
    const auto tp = truncated_poly_ring(z2, 2);
    EXPECT_EQ(tp->mul(1, 1), 0u);  // x·x = 0
    EXPECT_EQ(cyclic(1)->one(), cyclic(1)->zero());
}

TEST(Constructions, CyclicIdempotents) {
    EXPECT_EQ(idempotents(*cyclic(6)), (std::vector<Elem>{0, 1, 3, 4}));
    EXPECT_EQ(idempotents(*direct_product(cyclic(2), cyclic(2))).size(), 4u);
}

TEST(Constructions, ChineseRemainderProduct) {
    const auto z6 = cyclic(6);
    const auto p = direct_product(cyclic(2), cyclic(3));
    RingHom crt{z6, p, std::vector<Elem>(6)};
    for (Elem x = 0; x < 6; ++x) crt.map[x] = (x % 2) * 3 + x % 3;
    EXPECT_TRUE(is_isomorphism(crt));
    EXPECT_TRUE(find_isomorphism(z6, p).has_value());
    const auto with_zero = direct_product(cyclic(5), cyclic(1));
    EXPECT_TRUE(find_isomorphism(with_zero, cyclic(5)).has_value());
}

TEST(Constructions, IsomorphismSearchRejectsNonIsomorphicRings) {
    EXPECT_FALSE(find_isomorphism(cyclic(4), direct_product(cyclic(2), cyclic(2))).has_value());
    EXPECT_FALSE(find_isomorphism(trivial_extension(cyclic(2)), direct_product(cyclic(2), cyclic(2))).has_value());
    EXPECT_FALSE(find_isomorphism(cyclic(4), trivial_extension(cyclic(2))).has_value());
}

TEST(Constructions, UpperTriangularContainsExactlyUpperMatrices) {
    const auto z2 = cyclic(2);
    const auto m2 = matrix_ring(2, z2);
    const auto t2 = upper_triangular(2, z2);
    const auto& ml = *m2->matrix_layout();
    std::size_t upper = 0;
    for (Elem x = 0; x < m2->size(); ++x)
        if (ml.entries(x)[2] == 0) ++upper;
    EXPECT_EQ(upper, t2->size());
    EXPECT_EQ(t2->label(kE12), "[[0,1],[0,0]]");
    EXPECT_EQ(t2->label(t2->one()), "[[1,0],[0,1]]");
}

TEST(Constructions, ConstantDiagonalIsTrivialExtension) {
    for (std::size_t q : {2, 3, 4, 6}) {
        const auto r = cyclic(q);
        const auto cd = constant_diagonal(2, r);
        const auto te = trivial_extension(r);
        const RingHom h = trivial_extension_to_constant_diagonal(te, cd);
        EXPECT_TRUE(is_isomorphism(h)) << "Z/" << q;
    }
}

TEST(Constructions, TrivialExtensionIsTruncatedPolynomial) {
    const auto z2 = cyclic(2);
    const auto te = trivial_extension(z2);
    const auto tp = truncated_poly_ring(z2, 2);
    // (a, b) ↦ a + b x; both encode as a·2 + b.
    EXPECT_TRUE(is_isomorphism(identity_hom(te)));
    RingHom h{te, tp, {0, 1, 2, 3}};
    EXPECT_TRUE(is_isomorphism(h));
}

TEST(Constructions, ToeplitzMapIsAnEmbedding) {
    const auto z2 = cyclic(2);
    const RingHom h = toeplitz_iso(z2, 3);
    EXPECT_TRUE(check_homomorphism(h).ok);
    EXPECT_TRUE(is_injective(h));
    // 1 + x = (1, 1, 0) ↦ identity plus the first superdiagonal.
    const Elem one_plus_x = 0b110;
    EXPECT_EQ(h.target->label(h(one_plus_x)), "[[1,1,0],[0,1,1],[0,0,1]]");
    for (auto [q, n] : {std::pair{2u, 2u}, std::pair{4u, 2u}, std::pair{3u, 2u}}) {
        const RingHom t = toeplitz_iso(cyclic(q), n);
        EXPECT_TRUE(check_homomorphism(t).ok && is_injective(t));
    }
}

TEST(Constructions, QuotientOfTriangularByStrictlyUpperPart) {
    const auto t2 = upper_triangular(2, cyclic(2));
    const Quotient q = ideal_quotient(t2, std::vector<Elem>{kE12});
    EXPECT_EQ(q.ideal.members, (std::vector<Elem>{0, kE12}));
    EXPECT_EQ(q.ring->size(), 4u);
    EXPECT_TRUE(check_homomorphism(q.projection).ok);
    EXPECT_TRUE(is_surjective(q.projection));
    const auto z2z2 = direct_product(cyclic(2), cyclic(2));
    // Diagonal pairs: the coset of diag(a, b) goes to (a, b).
    RingHom diag{q.ring, z2z2, std::vector<Elem>(4)};
    for (Elem x = 0; x < t2->size(); ++x) {
        const auto e = t2->matrix_layout()->entries(x);
        diag.map[q.projection(x)] = e[0] * 2 + e[3];
    }
    EXPECT_TRUE(is_isomorphism(diag));
}

TEST(Constructions, QuotientEdgeCases) {
    const auto z4 = cyclic(4);
    const Quotient half = ideal_quotient(z4, std::vector<Elem>{2});
    EXPECT_TRUE(find_isomorphism(half.ring, cyclic(2)).has_value());
    const Quotient same = ideal_quotient(z4, std::vector<Elem>{});
    EXPECT_EQ(same.ring->size(), 4u);
    EXPECT_TRUE(is_isomorphism(RingHom{z4, same.ring, same.projection.map}));
    const Quotient all = ideal_quotient(z4, std::vector<Elem>{1});
    EXPECT_TRUE(all.ring->is_zero_ring());
    EXPECT_TRUE(validate_axioms(*all.ring).ok());
}

TEST(Constructions, Corners) {
    const auto z6 = cyclic(6);
    const Corner c3 = corner(z6, 3);
    EXPECT_EQ(c3.inclusion.map, (std::vector<Elem>{0, 3}));
    EXPECT_TRUE(find_isomorphism(c3.ring, cyclic(2)).has_value());
    const Corner c4 = corner(z6, 4);
    EXPECT_EQ(c4.inclusion.map, (std::vector<Elem>{0, 2, 4}));
    EXPECT_TRUE(find_isomorphism(c4.ring, cyclic(3)).has_value());
    EXPECT_EQ(complement_idempotent(*z6, 3), 4u);
    EXPECT_TRUE(check_homomorphism(c3.projection).ok);
    EXPECT_TRUE(check_homomorphism(c3.inclusion, false).ok);
    const Corner whole = corner(z6, 1);
    EXPECT_TRUE(is_isomorphism(RingHom{whole.ring, z6, whole.inclusion.map}));
}

TEST(Constructions, CornerPreconditions) {
    const auto m2 = matrix_ring(2, cyclic(2));
    try {
        corner(m2, 8);  // E11: idempotent, not central
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("central"), std::string::npos);
    }
    try {
        corner(cyclic(6), 2);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("idempotent"), std::string::npos);
    }
}

TEST(Constructions, Localization) {
    const auto z4 = cyclic(4);
    const Localization loc = localization(z4, std::vector<Elem>{3});
    EXPECT_EQ(loc.denominators, (std::vector<Elem>{1, 3}));
    EXPECT_EQ(loc.fraction(3, 2), 2u);
    EXPECT_TRUE(is_isomorphism(loc.canonical));
    const Localization z6 = localization(cyclic(6), std::vector<Elem>{5});
    EXPECT_EQ(z6.denominators, (std::vector<Elem>{1, 5}));
    EXPECT_EQ(z6.fraction(5, 1), 5u);
    const Localization trivial = localization(z4, std::vector<Elem>{1});
    EXPECT_EQ(trivial.denominators, (std::vector<Elem>{1}));
    EXPECT_THROW(localization(z4, std::vector<Elem>{2}), PreconditionError);
    EXPECT_THROW(localization(matrix_ring(2, cyclic(2)), std::vector<Elem>{8}), PreconditionError);
}

TEST(Constructions, GeneratedSubrings) {
    const auto z2 = cyclic(2);
    const auto m2 = matrix_ring(2, z2);
    // E11, E12, E22 in the full-matrix encoding.
    const Subring s = subring_generated(m2, std::vector<Elem>{8, 4, 1});
    EXPECT_EQ(s.ring->size(), 8u);
    EXPECT_TRUE(find_isomorphism(s.ring, upper_triangular(2, z2)).has_value());
    EXPECT_TRUE(check_homomorphism(s.inclusion).ok);
    EXPECT_EQ(subring_generated(cyclic(6), std::vector<Elem>{}).ring->size(), 6u);
    EXPECT_EQ(subring_generated(cyclic(4), std::vector<Elem>{2}).ring->size(), 4u);
}

TEST(Constructions, DiagonalProjections) {
    const auto t2 = upper_triangular(2, cyclic(2));
    const RingHom p1 = diagonal_projection(t2, 1);
    const RingHom p2 = diagonal_projection(t2, 2);
    EXPECT_EQ(p1(kE12), 0u);
    EXPECT_EQ(p2(t2->one()), 1u);
    EXPECT_EQ(p1(kE11), 1u);
    EXPECT_EQ(p2(kE22), 1u);
    EXPECT_TRUE(check_homomorphism(p1).ok && is_surjective(p1));
    EXPECT_TRUE(check_homomorphism(p2).ok && is_surjective(p2));
    EXPECT_THROW(diagonal_projection(t2, 3), PreconditionError);
    EXPECT_THROW(diagonal_projection(matrix_ring(2, cyclic(2)), 1), PreconditionError);
    const auto t3 = upper_triangular(3, cyclic(3));
    for (std::size_t p = 1; p <= 3; ++p) EXPECT_TRUE(check_homomorphism(diagonal_projection(t3, p)).ok);
    EXPECT_TRUE(check_homomorphism(diagonal_entry_embedding(t3, 2), false).ok);
}

TEST(Constructions, Caps) {
    EXPECT_THROW(cyclic(5000), CapExceeded);
    EXPECT_THROW(matrix_ring(3, cyclic(3)), CapExceeded);
    EXPECT_THROW(direct_product(cyclic(100), cyclic(100)), CapExceeded);
    EXPECT_THROW(truncated_poly_ring(cyclic(2), 13), CapExceeded);
    EXPECT_NO_THROW(truncated_poly_ring(cyclic(2), 12));
}
