#include <gtest/gtest.h>

#include <hopfgal/fiber.hpp>

using namespace hopfgal;

namespace {

int count(const std::string& spec, bool dual = false, const EnumerateOptions& opt = {}) {
    return count_galois(parse_family(spec), dual, opt).count;
}

std::string appp(int p, int z, int l) {
    return "appp:p=" + std::to_string(p) + ",zeta=" + std::to_string(z) + ",lambda=" + std::to_string(l);
}

}  // namespace

TEST(Category, RejectsInconsistentData) {
    GroupPtr G = ut3_group(3);
    Subgroup F = generate(*G, {1, 3});
    CategoryData ok = make_category(G, build_omega_zeta_lambda(3, 1, 0), F, "test");
    EXPECT_NO_THROW(check_category(ok));
    CategoryData bad = ok;
    bad.alpha.set(1, 3, 1);  // d alpha no longer matches omega on F
    EXPECT_THROW(check_category(bad), DomainError);
    CategoryData notsub = ok;
    notsub.F.elements = {0, 1};
    EXPECT_THROW(check_category(notsub), DomainError);
}

TEST(Enumerate, VerdictsFollowConditions) {
    auto [cat, desc] = galois_category(parse_family(appp(3, 1, 1)), false);
    auto rep = enumerate_fiber_functor_pairs(cat);
    const FiniteGroup& G = *cat.G;
    for (auto& c : rep.candidates) {
        const Subgroup& L = rep.subgroups[c.subgroup];
        bool whole = product_is_whole(G, L, cat.F);
        if (!whole) {
            EXPECT_EQ(c.verdict, Verdict::NotFactorization);
            continue;
        }
        EXPECT_NE(c.verdict, Verdict::NotFactorization);
        if (c.verdict == Verdict::OmegaNontrivial) {
            EXPECT_FALSE(is_trivial_class(restrict_to(cat.omega, L)));
        }
        if (c.beta) {
            // d beta = omega on L
            GroupPtr LG = subgroup_group(G, L);
            auto [db, w] = common_modulus(coboundary(restrict_to(*c.beta, L, LG)), restrict_to(cat.omega, L, LG));
            EXPECT_EQ(db, w);
        }
    }
}

// The comparison cocycle between conjugate candidates is closed, which pins
// down the sign of Omega_g.
TEST(Classify, ComparisonCocycleIsClosed) {
    for (const std::string& s : {appp(3, 1, 0), appp(3, 2, 1), std::string("h8")}) {
        auto [cat, desc] = galois_category(parse_family(s), false);
        auto rep = enumerate_fiber_functor_pairs(cat);
        const FiniteGroup& G = *cat.G;
        int checked = 0;
        for (auto& a : rep.candidates) {
            if (!a.beta) continue;
            const Subgroup& L = rep.subgroups[a.subgroup];
            for (auto& b : rep.candidates) {
                if (!b.beta) continue;
                const Subgroup& L2 = rep.subgroups[b.subgroup];
                for (int g = 0; g < G.order(); ++g) {
                    if (!(conjugate(G, L, g) == L2)) continue;
                    EXPECT_TRUE(is_cocycle(comparison_cocycle(cat.omega, L, *a.beta, *b.beta, g))) << s;
                    ++checked;
                    break;
                }
            }
        }
        EXPECT_GT(checked, 0) << s;
    }
}

TEST(Classify, OmegaGBoundsTheConjugationDefect) {
    Cochain w = build_omega_zeta_lambda(3, 1, 1);
    const FiniteGroup& G = w.group();
    for (int g : {1, 3, 9, 13}) {
        Cochain conj(3, w.group_ptr(), w.modulus());
        for (int a = 0; a < 27; ++a)
            for (int b = 0; b < 27; ++b)
                for (int c = 0; c < 27; ++c) conj.set(a, b, c, w(G.conj(g, a), G.conj(g, b), G.conj(g, c)));
        EXPECT_EQ(coboundary(omega_g(w, g)), w - conj) << g;
    }
}

TEST(Counts, PppAtThree) {
    for (int z : {1, 2})
        for (int l = 0; l < 3; ++l) {
            int expect = l == 0 ? 1 : 2;
            EXPECT_EQ(count(appp(3, z, l)), expect) << z << "," << l;
            EXPECT_EQ(count(appp(3, z, l), true), expect) << z << "," << l << " dual";
        }
}

TEST(Counts, PppAtFive) {
    EXPECT_EQ(count(appp(5, 1, 0)), 5);
    EXPECT_EQ(count(appp(5, 2, 0)), 5);
    EXPECT_EQ(count(appp(5, 3, 2)), 1);
}

TEST(Counts, ClassesAreCertified) {
    auto r = count_galois(parse_family(appp(3, 1, 1)), false);
    ASSERT_EQ(r.count, 2);
    for (auto& cls : r.report.classes) {
        ASSERT_EQ(cls.members.size(), cls.witnesses.size());
        ASSERT_EQ(cls.members.size(), cls.certificates.size());
        for (size_t k = 1; k < cls.members.size(); ++k) ASSERT_TRUE(cls.certificates[k].has_value());
    }
}

// Adding a random coboundary to every beta does not change the count.
TEST(CountsProperty, ReshuffleInvariance) {
    for (const std::string& s : {appp(3, 1, 0), appp(3, 1, 2), appp(5, 1, 0), std::string("bpqq:p=2,q=3"),
                                 std::string("apqq:p=3,q=2,l=0")}) {
        int base = count(s);
        for (std::uint64_t seed : {1u, 99u, 12345u}) {
            EnumerateOptions opt;
            opt.reshuffle_seed = seed;
            EXPECT_EQ(count(s, false, opt), base) << s << " seed " << seed;
        }
    }
}

TEST(CountsProperty, ParallelMatchesSerial) {
    EnumerateOptions par;
    par.jobs = 4;
    EXPECT_EQ(count(appp(5, 1, 0), false, par), 5);
    EXPECT_EQ(count("apqq:p=7,q=3,l=0", false, par), 3);
}

TEST(Counts, AFamily) {
    EXPECT_EQ(count("apqq:p=3,q=2,l=0"), 2);
    EXPECT_EQ(count("apqq:p=3,q=2,l=1"), 1);
    EXPECT_EQ(count("apqq:p=7,q=3,l=0"), 3);
    EXPECT_EQ(count("apqq:p=7,q=3,l=2"), 1);
}

// B*: q = r p + 1 gives r + 1 Galois objects.
TEST(Counts, BDual) {
    EXPECT_EQ(count("bpqq:p=2,q=3", true), 2);
    EXPECT_EQ(count("bpqq:p=2,q=5", true), 3);
    EXPECT_EQ(count("bpqq:p=3,q=7", true), 3);
    EXPECT_EQ(count("bpqq:p=3,q=7,lam=1", true), 3);
}

// The untwisted form C(G, 1, F, -psi|_F) agrees with C(G, omega, F, 1).
TEST(Counts, UntwistAgreesWithDirectCategory) {
    for (const char* s : {"bpqq:p=2,q=3", "bpqq:p=2,q=5", "bpqq:p=3,q=7,lam=1"}) {
        FamilyData fd = build_family(parse_family(s));
        CategoryData direct = category_of_rep(fd.mp, fd.cp, "kac");
        EXPECT_EQ(fiber_functors(direct).count, fiber_functors(untwist_category(direct)).count) << s;
    }
}

// In the comodule category of B the form alpha = -psi|_Gamma left over after
// untwisting is non-degenerate on Gamma = Z_q^2, so (G, 0) passes the
// non-degeneracy test next to (Z_p, 1) and the count is 1 + 1.
TEST(Counts, BComoduleFormIsNondegenerate) {
    for (const char* s : {"bpqq:p=2,q=3", "bpqq:p=2,q=5", "bpqq:p=3,q=7", "bpqq:p=3,q=7,lam=1"}) {
        auto [cat, desc] = galois_category(parse_family(s), false);
        CategoryData flat = untwist_category(cat);
        bool nondeg = is_nondegenerate(flat.alpha, flat.F);
        EXPECT_TRUE(nondeg) << s;
        auto rep = fiber_functors(cat);
        bool whole_passes = false;
        for (auto& c : rep.candidates)
            if (c.verdict == Verdict::Pass && rep.subgroups[c.subgroup].order() == cat.G->order()) whole_passes = true;
        EXPECT_EQ(whole_passes, nondeg) << s;
        EXPECT_EQ(rep.count, 1 + (nondeg ? 1 : 0)) << s;
    }
}

TEST(Counts, H8MergeWitness) {
    auto r = count_galois(parse_family("h8"), false);
    ASSERT_EQ(r.count, 1);
    const FiniteGroup& G = *r.report.category.G;
    ASSERT_EQ(r.report.classes.size(), 1u);
    auto& cls = r.report.classes[0];
    ASSERT_EQ(cls.members.size(), 2u);
    std::vector<std::string> labels;
    for (int m : cls.members) {
        auto gens = subgroup_generators(G, r.report.subgroups[r.report.candidates[m].subgroup]);
        ASSERT_EQ(gens.size(), 1u);
        labels.push_back(G.label(gens[0]));
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"t", "a b t"}));
    EXPECT_EQ(G.label(cls.witnesses[1]), "a");
    EXPECT_EQ(count("h8", true), 1);
}

TEST(Report, JsonShape) {
    auto r = count_galois(parse_family("h8"), false);
    auto j = to_json(r.report);
    EXPECT_EQ(j["galois_object_count"], 1);
    EXPECT_TRUE(j["category"].contains("group_order"));
    EXPECT_TRUE(j["category"].contains("F_generators"));
    ASSERT_FALSE(j["candidates"].empty());
    for (auto& c : j["candidates"]) {
        EXPECT_TRUE(c.contains("verdict"));
        EXPECT_TRUE(c.contains("subgroup_order"));
    }
    EXPECT_EQ(j["classes"][0]["members"][1]["witness"], "a");
    EXPECT_FALSE(to_json(r.report, false).contains("candidates"));
}

TEST(Names, AlgebraNames) {
    EXPECT_EQ(algebra_name(parse_family(appp(3, 1, 0)), false), "A_{zeta,1}");
    EXPECT_EQ(algebra_name(parse_family(appp(3, 1, 2)), true), "A_{zeta,g}*");
    EXPECT_EQ(algebra_name(parse_family("bpqq:p=2,q=3"), true), "B_lambda*");
}
