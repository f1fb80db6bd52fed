#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "mcclass/expr.hpp"
#include "mcclass/weightfn.hpp"

using namespace mcc;

namespace {

const composition F2 = composition::full_flag(2);

laurent_poly over_panel(const char* text, const composition& mu) {
    return parse_laurent(text, variable_panel(mu).vars());
}
laurent_poly over_torus(const char* text, int n) { return parse_laurent(text, torus_variables(n)); }

std::vector<composition> compositions_up_to(int n_max) {
    std::vector<composition> out;
    // All compositions of n with n <= n_max.
    for (int n = 1; n <= n_max; ++n)
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> parts{1};
            for (int i = 0; i < n - 1; ++i) {
                if (mask & (1 << i))
                    parts.push_back(1);
                else
                    ++parts.back();
            }
            out.emplace_back(parts);
        }
    return out;
}

// The global weight function has tens of thousands of terms for Fl(4), so
// only a few cells of the full flag variety take the slow route there.
std::vector<index_tuple> global_route_sample(const composition& mu) {
    auto ts = enumerate_index_tuples(mu);
    if (!(mu == composition::full_flag(4))) return ts;
    std::vector<index_tuple> out;
    for (auto w : {std::vector<int>{1, 2, 3, 4}, {2, 1, 4, 3}, {1, 4, 3, 2}, {3, 4, 1, 2}, {4, 3, 2, 1}})
        out.push_back(index_tuple::from_permutation(permutation(w)));
    return out;
}

// Sum of U_I(sigma alpha) with every term restricted to J first and added as a
// quotient; no common denominator and no sign bookkeeping.
laurent_poly oracle_restricted(const index_tuple& I, const index_tuple& J, weight_kind kind) {
    variable_panel P(I.mu());
    const torus_chart chart = torus_chart::identity(I.n());
    auto sub = fixed_point_substitution(P, J, chart);
    rational_expr u = u_term(I);
    std::vector<std::vector<int>> sigma;
    for (int j = 1; j < P.groups(); ++j) {
        std::vector<int> s(static_cast<std::size_t>(P.group_size(j)));
        std::iota(s.begin(), s.end(), 1);
        sigma.push_back(s);
    }
    rational_expr sum(laurent_poly(chart.target()));
    std::vector<std::size_t> perm(P.vars().size());
    std::iota(perm.begin(), perm.end(), 0);
    for (;;) {
        for (std::size_t j = 0; j < sigma.size(); ++j)
            for (int a = 1; a <= P.group_size(static_cast<int>(j) + 1); ++a)
                perm[P.index(static_cast<int>(j) + 1, a)] = P.index(static_cast<int>(j) + 1, sigma[j][a - 1]);
        rational_expr t(u.num().permute_variables(perm), u.den().permute_variables(perm));
        sum = sum + t.substitute(sub);
        std::size_t j = 0;
        while (j < sigma.size() && !std::next_permutation(sigma[j].begin(), sigma[j].end())) ++j;
        if (j == sigma.size()) break;
    }
    laurent_poly w = sum.to_laurent();
    if (kind == weight_kind::plain) return w;
    return exact_divide(w, sub.apply(chern_products(I.mu()).c));
}

}  // namespace

TEST(Psi, ThreeCases) {
    auto id = parse_index_tuple(F2, "{1},{2}");
    auto s = parse_index_tuple(F2, "{2},{1}");
    EXPECT_EQ(psi_factor(id, 1, 1, 1), psi_case::equal);
    EXPECT_EQ(psi_factor(id, 1, 1, 2), psi_case::above);
    EXPECT_EQ(psi_factor(s, 1, 1, 1), psi_case::below);
    variables v{"x"};
    EXPECT_EQ(apply_psi(psi_case::below, v, exponent{1}), parse_laurent("1 - x", v));
    EXPECT_EQ(apply_psi(psi_case::equal, v, exponent{1}), parse_laurent("(1 + y)*x", v));
    EXPECT_EQ(apply_psi(psi_case::above, v, exponent{1}), parse_laurent("1 + y*x", v));
}

TEST(UTerm, Examples) {
    auto u = u_term(parse_index_tuple(F2, "{1},{2}"));
    EXPECT_EQ(u.to_laurent(), over_panel("(1+y)*(a1_1/t1)*(1 + y*a1_1/t2)", F2));
    auto v = u_term(parse_index_tuple(F2, "{2},{1}"));
    EXPECT_EQ(v.to_laurent(), over_panel("(1 - a1_1/t1)*(1+y)*(a1_1/t2)", F2));
    composition one_block({2});
    EXPECT_EQ(u_term(parse_index_tuple(one_block, "{1,2}")).to_laurent(), over_panel("1", one_block));
}

TEST(WeightFunction, TwoByTwo) {
    EXPECT_EQ(weight_function(parse_index_tuple(F2, "{1},{2}")), over_panel("(1+y)*(a1_1/t1)*(1 + y*a1_1/t2)", F2));
    EXPECT_EQ(weight_function(parse_index_tuple(F2, "{2},{1}")), over_panel("(1 - a1_1/t1)*(1+y)*(a1_1/t2)", F2));
}

TEST(ChernProducts, Examples) {
    auto c2 = chern_products(F2);
    EXPECT_EQ(c2.c, over_panel("1 + y", F2));
    EXPECT_EQ(c2.c_prime, over_panel("(1 + y*a1_1/t1)*(1 + y*a1_1/t2)", F2));
    auto c1 = chern_products(composition({1}));
    EXPECT_EQ(c1.c, over_panel("1", composition({1})));
    EXPECT_EQ(c1.c_prime, over_panel("1", composition({1})));
    composition f3 = composition::full_flag(3);
    EXPECT_EQ(chern_products(f3).c, over_panel("(1+y)^3*(1 + y*a2_1/a2_2)*(1 + y*a2_2/a2_1)", f3));
}

TEST(Restriction, TwoByTwo) {
    auto id = parse_index_tuple(F2, "{1},{2}");
    auto s = parse_index_tuple(F2, "{2},{1}");
    auto chart = torus_chart::identity(2);
    EXPECT_EQ(restricted_weight(id, id, weight_kind::modified, chart), over_torus("1 + y*t1/t2", 2));
    EXPECT_EQ(restricted_weight(id, s, weight_kind::modified, chart), over_torus("(1+y)*t2/t1", 2));
    EXPECT_EQ(restricted_weight(s, id, weight_kind::modified, chart), over_torus("0", 2));
    EXPECT_EQ(restricted_weight(s, s, weight_kind::modified, chart), over_torus("1 - t2/t1", 2));
}

TEST(Restriction, OpenCellOfFl3) {
    composition f3 = composition::full_flag(3);
    auto id = parse_index_tuple(f3, "{1},{2},{3}");
    auto chart = torus_chart::identity(3);
    EXPECT_EQ(restricted_weight(id, id, weight_kind::plain, chart),
              over_torus("(1+y)^3*(1 + y*t1/t2)*(1 + y*t2/t1)*(1 + y*t1/t2)*(1 + y*t1/t3)*(1 + y*t2/t3)", 3));
    EXPECT_EQ(oracle_restricted(id, id, weight_kind::plain), restricted_weight(id, id, weight_kind::plain, chart));
}

TEST(Restriction, FastRouteMatchesGlobalRoute) {
    for (const auto& mu : compositions_up_to(4)) {
        auto chart = torus_chart::identity(mu.n());
        auto ts = enumerate_index_tuples(mu);
        const laurent_poly c = chern_products(mu).c;
        for (const auto& I : global_route_sample(mu)) {
            const laurent_poly w = weight_function(I);
            for (const auto& J : ts) {
                laurent_poly plain = restrict_to_fixed_point(w, J, chart);
                EXPECT_EQ(restricted_weight(I, J, weight_kind::plain, chart), plain)
                    << mu.to_string() << " " << I.to_string() << " at " << J.to_string();
                EXPECT_EQ(restricted_weight(I, J, weight_kind::modified, chart),
                          exact_divide(plain, restrict_to_fixed_point(c, J, chart)));
            }
        }
    }
    auto f2 = enumerate_index_tuples(F2);
    EXPECT_EQ(restrict_global(f2[0], f2[1], weight_kind::modified, torus_chart::identity(2)),
              over_torus("(1+y)*t2/t1", 2));
}

TEST(Restriction, FastRouteMatchesTermwiseOracle) {
    for (const auto& mu : compositions_up_to(3)) {
        auto chart = torus_chart::identity(mu.n());
        auto ts = enumerate_index_tuples(mu);
        for (const auto& I : ts)
            for (const auto& J : ts)
                EXPECT_EQ(restricted_weight(I, J, weight_kind::modified, chart),
                          oracle_restricted(I, J, weight_kind::modified))
                    << mu.to_string() << " " << I.to_string() << " at " << J.to_string();
    }
}

TEST(Restriction, CocharacterChartCommutes) {
    for (const auto& mu : {composition::full_flag(3), composition({2, 2}), composition({1, 2, 1})}) {
        auto id = torus_chart::identity(mu.n());
        std::vector<int> d;
        for (int i = 0; i < mu.n(); ++i) d.push_back(3 * i * i - 2 * i + 1);
        auto xi = torus_chart::cocharacter(d);
        auto ts = enumerate_index_tuples(mu);
        for (const auto& I : ts)
            for (const auto& J : ts)
                EXPECT_EQ(restricted_weight(I, J, weight_kind::modified, xi),
                          xi.apply(restricted_weight(I, J, weight_kind::modified, id)));
    }
}

TEST(WeightFunction, SymmetricInEachBlock) {
    for (const auto& mu : compositions_up_to(4)) {
        variable_panel P(mu);
        for (const auto& I : global_route_sample(mu)) {
            laurent_poly w = weight_function(I);
            for (int j = 1; j < P.groups(); ++j)
                for (int a = 1; a < P.group_size(j); ++a) {
                    std::vector<std::size_t> perm(P.vars().size());
                    std::iota(perm.begin(), perm.end(), 0);
                    std::swap(perm[P.index(j, a)], perm[P.index(j, a + 1)]);
                    EXPECT_EQ(w.permute_variables(perm), w) << I.to_string();
                }
        }
    }
}

TEST(Additivity, SumOfCellsIsLambdaYOfCotangent) {
    for (const auto& mu : compositions_up_to(4)) {
        auto chart = torus_chart::identity(mu.n());
        auto table = localization_table(mu, weight_kind::modified, chart);
        for (const auto& J : enumerate_index_tuples(mu)) {
            laurent_poly sum(chart.target());
            for (const auto& row : table) sum += row.at(J);
            EXPECT_EQ(sum, total_lambda_y(J, chart)) << mu.to_string() << " at " << J.to_string();
        }
    }
}

TEST(Support, VanishesOutsideClosure) {
    for (const auto& mu : compositions_up_to(4)) {
        auto chart = torus_chart::identity(mu.n());
        auto ts = enumerate_index_tuples(mu);
        auto table = localization_table(mu, weight_kind::modified, chart);
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t k = 0; k < ts.size(); ++k)
                EXPECT_EQ(table[i].values[k].is_zero(), !closure_leq(ts[i], ts[k]))
                    << ts[i].to_string() << " at " << ts[k].to_string();
    }
}

TEST(MotivicSegre, HatTimesTangentChernIsTilde) {
    for (const auto& mu : compositions_up_to(4)) {
        auto chart = torus_chart::identity(mu.n());
        auto ts = enumerate_index_tuples(mu);
        for (const auto& I : ts)
            for (const auto& J : ts) {
                rational_expr lhs = restricted_hat_weight(I, J, chart) * rational_expr(total_lambda_y(J, chart));
                rational_expr rhs(restricted_weight(I, J, weight_kind::modified, chart));
                EXPECT_TRUE(equivalent(lhs, rhs)) << I.to_string() << " at " << J.to_string();
            }
    }
}

TEST(LocalizationTable, IndependentOfThreadCount) {
    composition mu = composition::full_flag(3);
    auto chart = torus_chart::identity(3);
    auto a = localization_table(mu, weight_kind::modified, chart, 1);
    auto b = localization_table(mu, weight_kind::modified, chart, 4);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].values, b[i].values);
    auto single = localization_table(composition({1}), weight_kind::modified, torus_chart::identity(1));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].values[0], over_torus("1", 1));
}

TEST(TangentWeights, CountsMatchDimensionAndLength) {
    for (const auto& mu : compositions_up_to(5))
        for (const auto& J : enumerate_index_tuples(mu)) {
            auto ws = tangent_weights(J);
            int dim = 0;
            for (int j = 0; j < mu.blocks(); ++j)
                for (int k = j + 1; k < mu.blocks(); ++k) dim += mu.parts()[j] * mu.parts()[k];
            int normal = 0;
            for (const auto& w : ws) normal += w.normal;
            EXPECT_EQ(static_cast<int>(ws.size()), dim);
            EXPECT_EQ(normal, length(J));
        }
}
