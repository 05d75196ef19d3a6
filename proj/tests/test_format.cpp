#include <gtest/gtest.h>

#include <hasse/format.hpp>

#include "test_support.hpp"

using namespace hasse;

namespace {

Element e(std::initializer_list<int> idx) { return Element(Monomial(idx)); }
const QPolynomial q = QPolynomial::q();

TEST(Render, Elements) {
    EXPECT_EQ(render(e({2, 3}) + e({1, 4})), "e2^e3 + e1^e4");
    EXPECT_EQ(render(e({2, 3}) + e({1, 4}), TextStyle{true}), "ε2∧ε3 + ε1∧ε4");
    EXPECT_EQ(render(Element::zero(2)), "0");
    EXPECT_EQ(render(Element(Monomial{1, 2}, -q)), "-q*e1^e2");
    EXPECT_EQ(render(e({3, 4}) - Element(Monomial{1, 2}, q)), "-q*e1^e2 + e3^e4");
    EXPECT_EQ(render(Element(Monomial{2, 4}, 2)), "2*e2^e4");
    EXPECT_EQ(render(Element(Monomial{1}, q + QPolynomial(1))), "(q + 1)*e1");
    EXPECT_EQ(render(Element(Monomial{})), "1");
}

TEST(Render, Classes) {
    EXPECT_EQ(render_as_classes(e({1, 2}), TextStyle{true}), "σ()");
    EXPECT_EQ(render_as_classes(Element(Monomial{1, 2}, q), TextStyle{true}), "q·σ()");
    const SchubertExpansion ss{{{2}, 1}, {{1, 1}, 1}};
    EXPECT_EQ(render(ss), "s(2) + s(1,1)");
    EXPECT_EQ(render(ss, TextStyle{true}), "σ(2) + σ(1,1)");
    EXPECT_EQ(render(SchubertExpansion{{{}, q}}), "q");
    EXPECT_EQ(render(SchubertExpansion{{{2, 2}, 1}, {{}, q}}), "s(2,2) + q");
    EXPECT_EQ(render(SchubertExpansion{}), "0");
}

TEST(Render, OperatorPolys) {
    const OperatorPoly p = OperatorPoly::generator(1) * OperatorPoly::generator(3) - OperatorPoly::generator(4);
    EXPECT_EQ(render(p), "D1*D3 - D4");
    EXPECT_EQ(render(p, TextStyle{true}), "D1·D3 − D4");
    EXPECT_EQ(render(OperatorPoly::identity()), "1");
    EXPECT_EQ(render(OperatorPoly::generator(1) * OperatorPoly::generator(1) - OperatorPoly::generator(2)),
              "D1^2 - D2");
}

TEST(Render, WidthWrapsAtTermBoundaries) {
    Element x = Element::zero(2);
    for (const auto& m : monomials_of_arity(2, 6)) x.add_term(m, 1);
    const std::string text = render(x, TextStyle{false, 20});
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        EXPECT_LE(end - start, 20u);
        start = end + 1;
    }
    EXPECT_NE(text.find('\n'), std::string::npos);
}

TEST(Json, ElementSchema) {
    const Element x = e({2, 5}) + Element(Monomial{1, 6}, q * QPolynomial(-3));
    const json j = to_json(x);
    EXPECT_EQ(j.at("grade"), 2);
    ASSERT_EQ(j.at("terms").size(), 2u);
    EXPECT_EQ(j.at("terms")[0].at("indices"), json({2, 5}));
    EXPECT_EQ(j.at("terms")[0].at("coeff")[0].at("value"), "1");
    EXPECT_EQ(j.at("terms")[1].at("coeff")[0].at("qdeg"), 1);
    EXPECT_EQ(j.at("terms")[1].at("coeff")[0].at("value"), "-3");
}

TEST(Json, BigIntegersAreStrings) {
    const Integer big = Integer(1) << 200;
    const Element x(Monomial{1, 2}, QPolynomial(big));
    const json j = to_json(x);
    EXPECT_EQ(j.at("terms")[0].at("coeff")[0].at("value"), to_string(big));
    EXPECT_EQ(element_from_json(j), x);
}

TEST(Json, OperatorSchema) {
    const OperatorPoly p = OperatorPoly::generator(1) * OperatorPoly::generator(3) - OperatorPoly::generator(4);
    const json j = to_json(p);
    EXPECT_EQ(j.at("terms").size(), 2u);
    EXPECT_EQ(j.at("terms")[0].at("gens"), json({1, 3}));
    EXPECT_EQ(j.at("terms")[0].at("value"), "1");
}

TEST(Json, RejectsMalformed) {
    EXPECT_THROW(element_from_json(json::parse(R"({"terms": []})")), parse_error);
    EXPECT_THROW(element_from_json(json::parse(R"({"grade": 2, "terms": [{"indices": [2, 1], "coeff": []}]})")),
                 parse_error);
    EXPECT_THROW(
        element_from_json(json::parse(R"({"grade": 1, "terms": [{"indices": [1], "coeff": [{"qdeg": 0, "value": 3}]}]})")),
        parse_error);
    EXPECT_THROW(operator_poly_from_json(json::parse(R"({"terms": [{"gens": [1], "value": "x1"}]})")), parse_error);
}

TEST(JsonProperty, RoundTrip) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> arity(0, 4), gen(0, 6), count(0, 3), coeff(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        Element x = test_util::random_element(rng, static_cast<std::size_t>(arity(rng)), 10, true);
        x = d_h_element(trial % 4, x) * QPolynomial(Integer(1) << (trial % 90));
        ASSERT_EQ(element_from_json(json::parse(to_json(x).dump())), x);

        OperatorPoly p;
        for (int t = 0; t < 3; ++t) {
            OperatorPoly::generator_list g;
            for (int c = count(rng); c > 0; --c) g.push_back(gen(rng));
            p.add_term(g, coeff(rng));
        }
        ASSERT_EQ(operator_poly_from_json(json::parse(to_json(p).dump())), p);
    }
    const GrassContext ctx(2, 5);
    for (const auto& a : partitions_in_box(2, 3)) {
        const SchubertExpansion s = schubert_product(ctx, a, {2, 1}, true);
        ASSERT_EQ(expansion_from_json(to_json(s)), s);
    }
}

TEST(Parse, Lists) {
    EXPECT_EQ(parse_int_list("1,3, 4"), (std::vector<int>{1, 3, 4}));
    EXPECT_TRUE(parse_int_list("").empty());
    EXPECT_THROW(parse_int_list("1,,2"), parse_error);
    EXPECT_THROW(parse_int_list("1,x"), parse_error);
    EXPECT_THROW(parse_int_list("1,2,"), parse_error);
    EXPECT_EQ(parse_monomial("2,5"), Monomial({2, 5}));
    EXPECT_THROW(parse_monomial("5,2"), parse_error);
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_THROW(parse_partition("1,2"), parse_error);
    const auto classes = parse_partition_list("2;1,1;2,2");
    ASSERT_EQ(classes.size(), 3u);
    EXPECT_EQ(classes[1], (Partition{1, 1}));
}

}  // namespace
