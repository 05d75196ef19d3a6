#include <gtest/gtest.h>

#include <hasse/oracle.hpp>

#include "test_support.hpp"

using namespace hasse;

namespace {

Element e(std::initializer_list<int> idx) { return Element(Monomial(idx)); }

TEST(Leibniz, Examples) {
    EXPECT_EQ(oracle::d_h_leibniz(1, {1, 2}), e({1, 3}));
    EXPECT_EQ(oracle::d_h_leibniz(2, {1, 3}), e({1, 5}) + e({2, 4}));
    EXPECT_EQ(oracle::d_h_leibniz(0, {3, 8}), e({3, 8}));
    EXPECT_EQ(oracle::d_h_leibniz(4, {1}), e({5}));
}

TEST(Leibniz, WedgeIndicesSign) {
    EXPECT_EQ(oracle::wedge_indices({3, 1, 2}), (SignedMonomial{1, {1, 2, 3}}));
    EXPECT_EQ(oracle::wedge_indices({2, 1}), (SignedMonomial{-1, {1, 2}}));
    EXPECT_EQ(oracle::wedge_indices({2, 5, 2}).sign, 0);
}

TEST(WedgeQReduce, Examples) {
    // e2 ^ e5 with n = 4: e5 -> q e1, so e2 ^ q e1 = -q e1^e2
    EXPECT_EQ(oracle::wedge_q_reduce(4, e({2, 5})), Element(Monomial{1, 2}, -QPolynomial::q()));
    // e2 ^ e6 -> e2 ^ q e2 = 0
    EXPECT_TRUE(oracle::wedge_q_reduce(4, e({2, 6})).is_zero());
    // index n stays put
    EXPECT_EQ(oracle::wedge_q_reduce(4, e({1, 4})), e({1, 4}));
    EXPECT_EQ(oracle::wedge_q_reduce(4, e({9})), Element(Monomial{1}, QPolynomial::monomial(2)));
}

TEST(LittlewoodRichardson, Examples) {
    EXPECT_EQ(oracle::lr_coefficient({1}, {1}, {1, 1}), 1);
    EXPECT_EQ(oracle::lr_coefficient({1}, {1}, {2}), 1);
    EXPECT_EQ(oracle::lr_coefficient({1}, {1, 1}, {2, 1}), 1);
    EXPECT_EQ(oracle::lr_coefficient({2, 1}, {1}, {2, 2}), 1);
    EXPECT_EQ(oracle::lr_coefficient({2, 1}, {1}, {3, 1}), 1);
    EXPECT_EQ(oracle::lr_coefficient({2, 1}, {1}, {2, 1, 1}), 1);
    EXPECT_EQ(oracle::lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2);
    EXPECT_EQ(oracle::lr_coefficient({2, 1}, {1}, {4}), 0);
    EXPECT_EQ(oracle::lr_coefficient({2}, {}, {2}), 1);
    EXPECT_EQ(oracle::lr_coefficient({2}, {1}, {2}), 0);
    EXPECT_EQ(oracle::lr_coefficient({3}, {1}, {2, 2}), 0);
}

TEST(LittlewoodRichardson, PieriSpecialCase) {
    // c^nu_{lambda,(h)} = 1 exactly for horizontal strips
    for (const auto& lambda : partitions_in_box(3, 3)) {
        for (int h = 0; h <= 3; ++h) {
            for (const auto& nu : partitions_of(lambda.size() + h, 4, 7)) {
                bool strip = true;
                for (std::size_t r = 0; r < 4; ++r) {
                    if (nu[r] < lambda[r] || (r > 0 && nu[r] > lambda[r - 1])) strip = false;
                }
                ASSERT_EQ(oracle::lr_coefficient(lambda, Partition{h}, nu), strip ? 1 : 0);
            }
        }
    }
}

TEST(LittlewoodRichardson, Symmetric) {
    const auto small = partitions_in_box(3, 3);
    for (const auto& a : small) {
        for (const auto& b : small) {
            if (a.size() + b.size() > 7) continue;
            for (const auto& nu : partitions_of(a.size() + b.size(), 4, 6))
                ASSERT_EQ(oracle::lr_coefficient(a, b, nu), oracle::lr_coefficient(b, a, nu));
        }
    }
}

TEST(HookLength, Examples) {
    EXPECT_EQ(oracle::syt_rectangle_count(2, 2), 2);
    EXPECT_EQ(oracle::syt_rectangle_count(1, 7), 1);
    EXPECT_EQ(oracle::syt_rectangle_count(2, 3), 5);
    EXPECT_EQ(oracle::syt_rectangle_count(3, 3), 42);
    EXPECT_EQ(oracle::syt_rectangle_count(0, 4), 1);
    EXPECT_THROW(oracle::syt_rectangle_count(-1, 2), precondition_error);
}

TEST(HookLength, Transpose) {
    for (int r = 0; r <= 5; ++r)
        for (int c = 0; c <= 5; ++c) ASSERT_EQ(oracle::syt_rectangle_count(r, c), oracle::syt_rectangle_count(c, r));
}

TEST(HookLength, MatchesCatalanForTwoRows) {
    // 2 x m rectangles are counted by Catalan numbers
    const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int m = 0; m < 8; ++m) EXPECT_EQ(oracle::syt_rectangle_count(2, m), catalan[m]);
}

}  // namespace
