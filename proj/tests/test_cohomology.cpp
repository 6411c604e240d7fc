#include <gtest/gtest.h>

#include <hopfgal/families.hpp>

using namespace hopfgal;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 r(2024);
    return r;
}

}  // namespace

// d o d = 0 on random normalized cochains of degree 1 and 2 (the second
// application is checked through is_cocycle, which evaluates d in degree 3).
TEST(CochainProperty, CoboundarySquaresToZero) {
    for (const char* spec : {"cyclic:6", "ut3:3", "dihedral:8", "product:cyclic:2;cyclic:4", "t:3"}) {
        GroupPtr G = build_group(spec);
        for (i64 M : {4, 9, 12}) {
            for (int deg : {1, 2}) {
                Cochain c = random_cochain(deg, G, M, rng());
                ASSERT_TRUE(c.is_normalized());
                Cochain dc = coboundary(c);
                EXPECT_TRUE(dc.is_normalized());
                EXPECT_TRUE(is_cocycle(dc)) << spec << " M=" << M << " deg=" << deg;
                if (deg == 1) {
                    EXPECT_TRUE(coboundary(dc).is_zero());
                }
            }
        }
    }
}

TEST(CochainProperty, LiftPreservesCocycles) {
    GroupPtr G = build_group("ut3:3");
    Cochain w = build_omega_zeta_lambda(3, 1, 1);
    EXPECT_TRUE(is_cocycle(w));
    EXPECT_TRUE(is_cocycle(w.lifted(27)));
    EXPECT_THROW(w.lifted(10), DomainError);
}

TEST(CochainProperty, JsonRoundTrip) {
    GroupPtr G = build_group("dihedral:6");
    Cochain c = random_cochain(2, G, 6, rng());
    Cochain back = cochain_from_json(to_json(c));
    EXPECT_EQ(back.values(), c.values());
    EXPECT_EQ(back.modulus(), c.modulus());
}

// Coboundaries are recognized and come with a verified witness.
TEST(Trivialize, RecognizesCoboundaries) {
    for (const char* spec : {"ut3:3", "dihedral:8", "cyclic:9", "t:3"}) {
        GroupPtr G = build_group(spec);
        for (int deg : {1, 2}) {
            i64 M = 9;
            Cochain c = random_cochain(deg, G, M, rng());
            Cochain dc = coboundary(c);
            auto w = trivialize(dc, false);
            ASSERT_TRUE(w.has_value()) << spec;
            EXPECT_EQ(coboundary(*w), dc);
        }
    }
}

TEST(Trivialize, LiftRules) {
    Cochain w = build_cyclic_cocycle(3, 1, CyclicVariant::Standard);
    EXPECT_FALSE(trivialize(w).has_value());
    SolveOptions bad;
    bad.lift = 2;
    EXPECT_THROW(trivialize(w, true, bad), InfeasibleError);
    SolveOptions tiny;
    tiny.max_unknowns = 3;
    EXPECT_THROW(trivialize(build_omega_zeta_lambda(3, 0, 0), true, tiny), InfeasibleError);
}

// On ut3:3, omega_{zeta,lambda} is a coboundary over k^x only for
// zeta = lambda = 0; every other pair already has a nontrivial cyclic restriction.
TEST(Trivialize, OmegaZetaLambdaAtThree) {
    for (int z = 0; z < 3; ++z)
        for (int l = 0; l < 3; ++l) {
            auto w = trivialize(build_omega_zeta_lambda(3, z, l));
            EXPECT_EQ(w.has_value(), z == 0 && l == 0) << "zeta=" << z << " lambda=" << l;
            EXPECT_EQ(cyclic_obstruction(build_omega_zeta_lambda(3, z, l).lifted(81)), z != 0 || l != 0);
            if (w) {
                EXPECT_EQ(w->modulus(), 81);
            }
        }
}

TEST(H2, SmallGroups) {
    for (int N = 1; N <= 9; ++N) EXPECT_EQ(h2(build_group("cyclic:" + std::to_string(N)), N).order(), 1) << N;
    for (int q : {2, 3, 5}) {
        std::string c = "cyclic:" + std::to_string(q);
        auto d = h2(build_group("product:" + c + ";" + c), q);
        EXPECT_EQ(d.order(), q);
        ASSERT_EQ(d.representatives.size(), static_cast<size_t>(q));
        EXPECT_TRUE(d.representatives[0].is_zero());
        for (auto& r : d.representatives) EXPECT_TRUE(is_cocycle(r));
        for (size_t i = 0; i < d.representatives.size(); ++i)
            for (size_t j = i + 1; j < d.representatives.size(); ++j) {
                Cochain diff = d.representatives[i] - d.representatives[j];
                EXPECT_FALSE(is_symmetric(diff)) << "q=" << q << " classes " << i << "," << j;
                EXPECT_FALSE(trivialize(diff).has_value());
            }
    }
    EXPECT_EQ(h2(build_group("product:cyclic:2;cyclic:4"), 4).order(), 2);
    EXPECT_EQ(h2(build_group("product:cyclic:3;product:cyclic:3;cyclic:3"), 3).order(), 27);
    EXPECT_EQ(h2(build_group("dihedral:8"), 4).order(), 2);
    EXPECT_EQ(h2(build_group("ut3:3"), 3).order(), 9);
    EXPECT_EQ(h2(build_group("bgroup:2,3,2,0"), 6).order(), 1);
    EXPECT_EQ(h2(build_group("bgroup:2,5,4,0"), 10).order(), 1);
}

// The alternating form of a 2-cocycle only depends on its class: adding a
// coboundary keeps the non-degeneracy verdict.
TEST(CohomologyProperty, NondegeneracyIsClassInvariant) {
    for (int q : {2, 3, 5}) {
        std::string c = "cyclic:" + std::to_string(q);
        GroupPtr A = build_group("product:" + c + ";" + c);
        auto d = h2(A, q);
        for (auto& r : d.representatives) {
            bool base = is_nondegenerate(r);
            for (int k = 0; k < 5; ++k) {
                Cochain shifted = r + coboundary(random_cochain(1, A, q, rng()));
                EXPECT_EQ(is_nondegenerate(shifted), base);
            }
            EXPECT_EQ(base, !r.is_zero());
        }
    }
}

// The tilde cyclic cocycle sits in the class xi * d with d = (N-1)N(2N-1)/6.
TEST(CyclicH3, TildeVariantClass) {
    for (int N : {3, 5, 7}) {
        GroupPtr L = cyclic_group(N);
        Subgroup all = whole_group(*L);
        for (int xi = 0; xi < N; ++xi) {
            Cochain std_c = build_cyclic_cocycle(N, xi, CyclicVariant::Standard);
            Cochain til = build_cyclic_cocycle(N, xi, CyclicVariant::Tilde);
            EXPECT_TRUE(is_cocycle(til));
            EXPECT_EQ(cyclic_h3_class(std_c, all, 1), xi);
            EXPECT_EQ(cyclic_h3_class(til, all, 1), posmod(xi * tilde_factor(N), N)) << "N=" << N << " xi=" << xi;
        }
    }
}

TEST(CyclicH3, GeneratorChangeScalesBySquare) {
    int N = 5;
    Cochain w = build_cyclic_cocycle(N, 1, CyclicVariant::Standard);
    Subgroup all = whole_group(w.group());
    for (int g = 1; g < N; ++g) EXPECT_EQ(cyclic_h3_class(w, all, g), g * g % N) << g;
}
