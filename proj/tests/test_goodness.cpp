#include "goodint/goodness.hpp"
#include "goodint/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace goodint {
namespace {

using testing::naive_admissible;

DecideOptions checked() {
    DecideOptions o;
    o.cross_check = true;
    return o;
}

TEST(Decide, PureGPart) {
    const GoodnessVerdict v = decide(18, 12, 72, checked());
    ASSERT_TRUE(v.good);
    EXPECT_EQ(v.context.ell, 1);
    EXPECT_EQ(v.context.gamma, 3u);
    const auto& p = *v.progression;
    EXPECT_EQ(p.residue, 0);
    EXPECT_EQ(p.modulus, 1);
    EXPECT_EQ(p.threshold, 3u);
    EXPECT_EQ(p.k_min, 3);
    EXPECT_TRUE(p.exceptions.empty());
    EXPECT_EQ(p.first(3), (std::vector<Int>{3, 4, 5}));
}

TEST(Decide, Step3SharesFactor) {
    const GoodnessVerdict v = decide(10, 15, 6, checked());
    EXPECT_FALSE(v.good);
    EXPECT_FALSE(v.progression);
    ASSERT_TRUE(v.failure_step);
    // a = 2, b = 3: gcd(ell, a) is tested first.
    EXPECT_EQ(*v.failure_step, FailureStep::step3_gcd_a);
    EXPECT_EQ(*v.offending_prime, 2);

    const GoodnessVerdict w = decide(10, 15, 3, checked());
    EXPECT_EQ(*w.failure_step, FailureStep::step3_gcd_b);
    EXPECT_EQ(*w.offending_prime, 3);
}

TEST(Decide, CoreDecidesGoodness) {
    const GoodnessVerdict v = decide(6, 3, 15, checked());
    ASSERT_TRUE(v.good);
    EXPECT_EQ(v.context.gamma, 1u);
    EXPECT_EQ(v.progression->modulus, 4);
    EXPECT_EQ(v.progression->residue, 2);
    EXPECT_EQ(v.progression->k_min, 2);

    const GoodnessVerdict bad = decide(2, 1, 7, checked());
    EXPECT_FALSE(bad.good);
    EXPECT_EQ(*bad.failure_step, FailureStep::step4_core_bad);
    EXPECT_EQ(bad.coprime_verdict->reason, CoprimeReason::odd_order);
}

TEST(Decide, TrivialModulus) {
    for (auto [A, B] : {std::pair{5L, 7L}, {18L, 12L}, {-4L, 4L}}) {
        const GoodnessVerdict v = decide(A, B, 1);
        ASSERT_TRUE(v.good);
        EXPECT_EQ(v.progression->residue, 0);
        EXPECT_EQ(v.progression->modulus, 1);
        EXPECT_EQ(v.progression->threshold, 0u);
        EXPECT_EQ(v.progression->k_min, 1);
    }
}

TEST(Decide, DomainErrors) {
    EXPECT_THROW(decide(0, 1, 5), DomainError);
    EXPECT_THROW(decide(1, 0, 5), DomainError);
    EXPECT_THROW(decide(1, 2, 0), DomainError);
}

TEST(Decide, StructuralMethodGivesSameProgression) {
    DecideOptions structural;
    structural.method = CoprimeMethod::structural;
    for (long L : {15L, 25L, 1200L, 3200L, 7L, 77L}) {
        const auto d = decide(18, 12, L);
        const auto s = decide(18, 12, L, structural);
        ASSERT_EQ(d.good, s.good) << L;
        EXPECT_EQ(d.progression, s.progression) << L;
    }
}

TEST(ExponentSet, Examples) {
    ExponentProgression p = exponent_set(18, 12, 3200);
    EXPECT_EQ(p.residue, 5);
    EXPECT_EQ(p.modulus, 10);
    EXPECT_EQ(p.threshold, 7u);
    EXPECT_EQ(p.k_min, 15);
    EXPECT_EQ(p.first(4), (std::vector<Int>{15, 25, 35, 45}));

    p = exponent_set(6, 3, 15);
    EXPECT_EQ(p.residue, 2);
    EXPECT_EQ(p.modulus, 4);
    EXPECT_EQ(p.threshold, 1u);
    EXPECT_EQ(p.k_min, 2);
    EXPECT_EQ(p.first(3), (std::vector<Int>{2, 6, 10}));

    p = exponent_set(18, 12, 1200);
    EXPECT_EQ(p.residue, 5);
    EXPECT_EQ(p.modulus, 10);
    EXPECT_EQ(p.threshold, 4u);
    EXPECT_EQ(p.k_min, 5);

    EXPECT_THROW(exponent_set(10, 15, 6), DomainError);
}

TEST(ExponentSet, AdmissibleBelowThreshold) {
    // 6 + 3 = 9: K = 1 works although gamma(9) = 2.
    ExponentProgression p = exponent_set(6, 3, 9);
    EXPECT_EQ(p.threshold, 2u);
    EXPECT_EQ(p.exceptions, (std::vector<Int>{1}));
    EXPECT_EQ(p.k_min, 1);

    // 6^K + 3^K = 3^K (2^K + 1) with nu_3(2^K + 1) = 1 + nu_3(K) for odd K.
    p = exponent_set(6, 3, 243);
    EXPECT_EQ(p.threshold, 5u);
    EXPECT_EQ(p.exceptions, (std::vector<Int>{3}));
    EXPECT_EQ(p.up_to(8), (std::vector<Int>{3, 5, 6, 7, 8}));

    // A = -B: every odd K gives zero, and 2 * 2^4 = 32 covers K = 4.
    p = exponent_set(-2, 2, 32);
    EXPECT_EQ(p.threshold, 5u);
    EXPECT_EQ(p.exceptions, (std::vector<Int>{1, 3, 4}));
    EXPECT_EQ(p.up_to(7), (std::vector<Int>{1, 3, 4, 5, 6, 7}));
    EXPECT_EQ(p.k_min, 1);
}

TEST(MinExponent, Examples) {
    EXPECT_EQ(min_exponent(18, 12, 3200), 15);
    EXPECT_EQ(min_exponent(18, 12, 72), 3);
    EXPECT_EQ(min_exponent(7, 9, 1), 1);
    EXPECT_THROW(min_exponent(2, 1, 7), DomainError);
}

TEST(FirstAtThreshold, Formula) {
    EXPECT_EQ(first_at_threshold(5, 10, 7), 15);
    EXPECT_EQ(first_at_threshold(2, 4, 1), 2);
    EXPECT_EQ(first_at_threshold(0, 1, 3), 3);
    EXPECT_EQ(first_at_threshold(0, 1, 0), 1);
    EXPECT_EQ(first_at_threshold(5, 10, 0), 5);
    EXPECT_EQ(first_at_threshold(15, 10, 0), 5);  // residue reduced first
}

TEST(ClassifySpecialCase, Examples) {
    SpecialCase s = classify_special_case(build_context(18, 12, 72));
    EXPECT_EQ(s.kind, SpecialCaseKind::pure_g_part);
    EXPECT_EQ(s.closed_form_gamma, 3u);

    s = classify_special_case(build_context(6, 3, 15));
    EXPECT_EQ(s.kind, SpecialCaseKind::g_contained);
    EXPECT_EQ(s.closed_form_gamma, 1u);

    s = classify_special_case(build_context(8, 27, 35));
    EXPECT_EQ(s.kind, SpecialCaseKind::general);
    EXPECT_FALSE(s.closed_form_gamma);

    s = classify_special_case(build_context(16, 8, 32 * 3));  // g = 8, alpha = 5
    EXPECT_EQ(s.kind, SpecialCaseKind::prime_power_g);
    EXPECT_EQ(s.closed_form_gamma, 2u);

    s = classify_special_case(build_context(18, 12, 3200));
    EXPECT_EQ(s.kind, SpecialCaseKind::squarefree_g);
    EXPECT_EQ(s.closed_form_gamma, 7u);

    // g_part = 1 is not g_contained: gamma is 0 there, not 1.
    s = classify_special_case(build_context(6, 3, 5));
    EXPECT_EQ(s.kind, SpecialCaseKind::prime_power_g);
    EXPECT_EQ(s.closed_form_gamma, 0u);

    s = classify_special_case(build_context(12, 24, 5 * 16));  // g = 12, not squarefree
    EXPECT_EQ(s.kind, SpecialCaseKind::general);
}

TEST(ClassifySpecialCase, ClosedFormMatchesGamma) {
    for (long A = 1; A <= 60; ++A) {
        for (long B = A; B <= 60; B += 3) {
            for (long L = 1; L <= 400; L += 3) {
                const SplitContext c = build_context(A, B, L);
                const SpecialCase s = classify_special_case(c);
                ASSERT_EQ(s.kind == SpecialCaseKind::pure_g_part, c.ell == 1);
                if (s.closed_form_gamma)
                    ASSERT_EQ(*s.closed_form_gamma, c.gamma) << A << " " << B << " " << L;
            }
        }
    }
}

TEST(EnumerateGood, Examples) {
    std::vector<Int> Ls;
    for (const auto& [L, p] : enumerate_good(2, 1, 12))
        Ls.push_back(L);
    EXPECT_EQ(Ls, (std::vector<Int>{1, 3, 5, 9, 11}));

    const auto one = enumerate_good(5, 7, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].first, 1);

    // 7 is good for (18, 12): ord_7(3 * 2^-1) = 6 and 5^3 = -1 mod 7.
    bool has7 = false, has72 = false;
    for (const auto& [L, p] : enumerate_good(18, 12, 80)) {
        has7 |= L == 7;
        has72 |= L == 72;
    }
    EXPECT_TRUE(has7);
    EXPECT_TRUE(has72);
    EXPECT_EQ(exponent_set(18, 12, 7).k_min, 3);
}

TEST(EnumerateGood, ParallelMatchesSequential) {
    const auto seq = enumerate_good(18, 12, 5000, 1);
    const auto par = enumerate_good(18, 12, 5000, 4);
    EXPECT_EQ(seq, par);
}

// Decision and exponent set against brute force, with both criteria
// cross-checked inside decide.
TEST(GoodnessProperties, AgreesWithOracle) {
    for (long A = -20; A <= 20; ++A) {
        if (A == 0)
            continue;
        for (long B = -20; B <= 20; B += (B == -1 ? 2 : 1)) {
            if (B == 0)
                continue;
            for (long L = 1; L <= 200; L += (std::abs(A) + std::abs(B) > 16 ? 5 : 1)) {
                const GoodnessVerdict v = decide(A, B, L, checked());
                const SplitContext& c = v.context;

                // Reduction: goodness of L is goodness of the core plus the gcd screen.
                ASSERT_EQ(v.good, is_good_coprime_direct(c.a, c.b, c.ell_factors).good);

                const long lam = carmichael_lambda(c.ell_factors).get_si();
                const long bound = std::max<long>(500, 4 * lam + long(c.gamma) + 4);
                const auto ks = naive_admissible(A, B, L, bound);
                ASSERT_EQ(v.good, !ks.empty()) << A << " " << B << " " << L;
                if (!v.good)
                    continue;
                const auto& p = *v.progression;
                ASSERT_EQ(p.k_min, ks.front());
                const auto expected = p.up_to(bound);
                ASSERT_EQ(expected.size(), ks.size()) << A << " " << B << " " << L;
                for (std::size_t i = 0; i < ks.size(); ++i)
                    ASSERT_EQ(expected[i], ks[i]);

                // Without sub-threshold exceptions the set is exactly the
                // truncated progression with the closed-form minimum.
                if (p.exceptions.empty())
                    ASSERT_EQ(p.k_min, first_at_threshold(p.residue, p.modulus, p.threshold));

                if (c.ell >= 3) {
                    const Int half = p.modulus / 2;
                    for (long k : ks)
                        ASSERT_EQ(k % 2, half.get_si() % 2);
                } else {
                    bool odd = false, even = false;
                    for (long k : ks) {
                        if (k > long(c.gamma) + 2)
                            break;
                        (k % 2 ? odd : even) = true;
                    }
                    ASSERT_TRUE(odd && even) << A << " " << B << " " << L;
                }

                // A^K + B^K is symmetric in A and B.
                const GoodnessVerdict w = decide(B, A, L);
                ASSERT_EQ(w.good, v.good);
                ASSERT_EQ(w.progression, v.progression);
            }
        }
    }
}

TEST(ExponentProgression, Navigation) {
    ExponentProgression p;
    p.residue = 5;
    p.modulus = 10;
    p.threshold = 7;
    p.exceptions = {2};
    p.k_min = 2;
    EXPECT_TRUE(p.contains(2));
    EXPECT_FALSE(p.contains(5));
    EXPECT_TRUE(p.contains(15));
    EXPECT_FALSE(p.contains(0));
    EXPECT_EQ(p.next_at_or_after(3), 15);
    EXPECT_EQ(p.next_at_or_after(-4), 2);
    EXPECT_EQ(p.up_to(40), (std::vector<Int>{2, 15, 25, 35}));
    EXPECT_EQ(p.first(3), (std::vector<Int>{2, 15, 25}));
}

} // namespace
} // namespace goodint
