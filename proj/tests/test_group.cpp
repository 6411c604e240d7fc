#include <gtest/gtest.h>

#include <hopfgal/group.hpp>

using namespace hopfgal;

TEST(Groups, BuildersSatisfyAxioms) {
    for (const char* spec : {"cyclic:1", "cyclic:12", "product:cyclic:3;cyclic:9", "ut3:3", "ut3:5", "t:3", "t:5",
                             "dihedral:8", "bgroup:2,3,2,0", "bgroup:3,7,2,1", "agroup:3,2,2,2", "agroup:7,3,2,4"}) {
        GroupPtr G = build_group(spec);
        EXPECT_TRUE(G->check_axioms()) << spec;
    }
}

TEST(Groups, OrdersAndShapes) {
    EXPECT_EQ(build_group("ut3:3")->order(), 27);
    EXPECT_FALSE(build_group("ut3:3")->is_abelian());
    EXPECT_EQ(exponent(*build_group("ut3:5")), 5);
    EXPECT_EQ(exponent(*build_group("t:5")), 25);
    EXPECT_FALSE(build_group("t:3")->is_abelian());
    EXPECT_EQ(center(*build_group("ut3:3")).order(), 3);
    EXPECT_EQ(center(*build_group("dihedral:8")).order(), 2);
    EXPECT_EQ(build_group("bgroup:3,7,2,1")->order(), 3 * 49);
    EXPECT_EQ(build_group("agroup:7,3,2,4")->order(), 7 * 9);
}

TEST(Groups, ParseErrors) {
    for (const char* bad : {"", "cyclic:", "cyclic:x", "cyclic:0", "foo:3", "product:cyclic:2", "ut3:3;", "ut3:3x"})
        EXPECT_ANY_THROW(build_group(bad)) << bad;
    EXPECT_THROW(build_group("ut3:4"), DomainError);
    EXPECT_THROW(build_group("bgroup:2,5,2,0"), DomainError);  // 2 is not of order 2 modulo 5
}

// Subgroup counts of small groups.
TEST(Groups, SubgroupLattice) {
    EXPECT_EQ(subgroups(*build_group("cyclic:12")).size(), 6u);
    EXPECT_EQ(subgroups(*build_group("product:cyclic:2;cyclic:2")).size(), 5u);
    EXPECT_EQ(subgroups(*build_group("dihedral:8")).size(), 10u);
    // ut3:p has p + 1 subgroups of order p^2 and p^2 + p + 1 of order p.
    GroupPtr H = build_group("ut3:3");
    EXPECT_EQ(subgroups(*H, 9).size(), 4u);
    EXPECT_EQ(subgroups(*H, 3).size(), 13u);
    GroupPtr T = build_group("t:3");
    EXPECT_EQ(subgroups(*T, 3).size(), 4u);  // the socle is Z_p^2
}

TEST(Groups, ConjugacyClassesCarryWitnesses) {
    GroupPtr G = build_group("dihedral:8");
    auto subs = subgroups(*G);
    auto classes = conjugacy_classes_of_subgroups(*G, subs);
    EXPECT_EQ(classes.size(), 8u);
    for (auto& c : classes) {
        ASSERT_EQ(c.members.size(), c.witnesses.size());
        for (size_t i = 0; i < c.members.size(); ++i)
            EXPECT_EQ(conjugate(*G, subs[c.representative], c.witnesses[i]), subs[c.members[i]]);
    }
}

TEST(Groups, FactorizationPredicates) {
    GroupPtr G = build_group("ut3:3");
    Subgroup F{G.get(), {}};
    for (int u = 0; u < 9; ++u) F.elements.push_back(u);
    Subgroup X = generate(*G, {9});  // <x>
    EXPECT_TRUE(product_is_whole(*G, F, X));
    EXPECT_TRUE(is_exact_factorization(*G, F, X));
    EXPECT_FALSE(product_is_whole(*G, F, generate(*G, {1})));
    EXPECT_EQ(intersect(F, X).order(), 1);
    EXPECT_TRUE(is_abelian(*G, F));
    EXPECT_FALSE(is_cyclic(*G, F));
}

// (b^j x)^n = a^{C(n,2) j} b^{jn} x^n in ut3:p.
TEST(Groups, Ut3PowerFormula) {
    for (int p : {3, 5, 7}) {
        GroupPtr G = build_group("ut3:" + std::to_string(p));
        for (int j = 0; j < p; ++j)
            for (int n = 0; n < 2 * p; ++n) {
                int expect = static_cast<int>((n * (n - 1) / 2 * j) % p + p * ((j * n) % p) + p * p * (n % p));
                EXPECT_EQ(G->power(j * p + p * p, n), expect) << "p=" << p << " j=" << j << " n=" << n;
            }
    }
}

TEST(Groups, IsomorphismSearch) {
    GroupPtr A = build_group("product:cyclic:2;cyclic:3");
    GroupPtr B = build_group("cyclic:6");
    EXPECT_TRUE(find_isomorphism(*A, *B).has_value());
    EXPECT_FALSE(find_isomorphism(*build_group("ut3:3"), *build_group("t:3")).has_value());
    EXPECT_FALSE(find_isomorphism(*build_group("dihedral:8"), *build_group("cyclic:8")).has_value());
}
