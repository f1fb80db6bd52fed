#include <vector>

#include <gtest/gtest.h>

#include "mcclass/axioms.hpp"

using namespace mcc;

namespace {

std::vector<composition> compositions_up_to(int n_max) {
    std::vector<composition> out;
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

laurent_poly cone(const char* text) { return parse_laurent(text, cone_variables()); }

int dimension(const composition& mu) {
    int n = mu.n(), d = n * (n - 1) / 2;
    for (int p : mu.parts()) d -= p * (p - 1) / 2;
    return d;
}

}  // namespace

TEST(LocalData, FlagOfC2) {
    auto f2 = enumerate_index_tuples(composition::full_flag(2));
    auto open = local_data(f2[0]);
    ASSERT_EQ(open.tangent_cell.size(), 1u);
    EXPECT_TRUE(open.normal.empty());
    auto chart = torus_chart::identity(2);
    EXPECT_EQ(k_chern(open.tangent_cell, chart), parse_laurent("1 + y*t1/t2", chart.target()));

    auto point = local_data(f2[1]);
    EXPECT_TRUE(point.tangent_cell.empty());
    ASSERT_EQ(point.normal.size(), 1u);
    EXPECT_EQ(k_euler(point.normal, chart), parse_laurent("1 - t2/t1", chart.target()));

    auto one = local_data(enumerate_index_tuples(composition({1}))[0]);
    EXPECT_TRUE(one.tangent_cell.empty());
    EXPECT_TRUE(one.normal.empty());
}

TEST(LocalData, CountsMatchDimensionAndLength) {
    for (const auto& mu : compositions_up_to(5))
        for (const auto& I : enumerate_index_tuples(mu)) {
            auto d = local_data(I);
            EXPECT_EQ(static_cast<int>(d.tangent_cell.size() + d.normal.size()), dimension(mu));
            EXPECT_EQ(static_cast<int>(d.normal.size()), length(I)) << I.to_string();
        }
}

TEST(Axioms, FlagOfC2) {
    auto rep = check_axioms(composition::full_flag(2));
    EXPECT_EQ(rep.failures(), 0u);
    EXPECT_EQ(rep.count("normalization", true), 2u);
    EXPECT_EQ(rep.count("divisibility", true), 4u);
    // Only the open cell restricts nontrivially to the point.
    EXPECT_EQ(rep.count("smallness", true), 1u);
    auto j = to_json(only(rep, "smallness"));
    ASSERT_EQ(j["entries"].size(), 1u);
    EXPECT_EQ(j["entries"][0]["pair"], json::array({"{1},{2}", "{2},{1}"}));
    EXPECT_EQ(j["entries"][0]["pass"], true);
}

TEST(Axioms, AllHoldUpToFourPoints) {
    for (const auto& mu : compositions_up_to(4)) {
        auto rep = check_axioms(mu, 2);
        for (const auto& e : rep.entries)
            EXPECT_TRUE(e.pass) << mu.to_string() << " " << e.check << " " << e.cell << " at " << e.point << ": "
                                << e.witness;
        std::size_t m = enumerate_index_tuples(mu).size();
        EXPECT_EQ(rep.count("normalization", true), m);
        EXPECT_EQ(rep.count("divisibility", true), m * m);
        EXPECT_EQ(rep.count("support", true), m * m);
        EXPECT_EQ(rep.count("motivic_segre", true), m * m);
        EXPECT_EQ(rep.count("additivity", true), m);
        EXPECT_EQ(rep.count("euler_vertex", true), m);
    }
}

TEST(Axioms, SmallnessPairOfFl4) {
    auto rep = check_smallness_strict(composition::full_flag(4), 2);
    bool found = false;
    for (const auto& e : rep.entries)
        if (e.cell == "{3},{4},{1},{2}" && e.point == "{3},{4},{2},{1}") {
            found = true;
            EXPECT_TRUE(e.pass) << e.witness;
        }
    EXPECT_TRUE(found);
}

TEST(Axioms, ReportIndependentOfJobs) {
    composition mu({1, 2, 1});
    EXPECT_EQ(to_json(check_axioms(mu, 1)), to_json(check_axioms(mu, 3)));
}

TEST(QuadraticCone, ClassShape) {
    laurent_poly mc = quadratic_cone_class();
    EXPECT_TRUE(divides(cone("1 + y"), mc));
    EXPECT_TRUE(divides(cone("(1 + y)^2"), mc));
    // y = 0 part.
    laurent_poly at0(cone_variables());
    for (const auto& t : mc.terms())
        if (t.coeff.coeff(0) != 0) at0 += laurent_poly::monomial(cone_variables(), t.exp, ypoly(t.coeff.coeff(0)));
    EXPECT_EQ(at0, cone("alpha^-2"));
}

TEST(QuadraticCone, Euler) {
    EXPECT_EQ(quadratic_cone_euler(),
              cone("(1 - 1/(alpha*beta))*(1 - beta/alpha)*(1 - 1/(alpha*gamma))*(1 - gamma/alpha)"));
    auto P = newton_polytope(quadratic_cone_euler());
    EXPECT_EQ(P.points().size(), 15u);
    EXPECT_TRUE(is_vertex(P, lattice_point{0, 0, 0}));
}

TEST(QuadraticCone, LimitRows) {
    EXPECT_EQ(quadratic_cone_limit({{1, 0, 0}}), ypoly());
    EXPECT_EQ(quadratic_cone_limit({{-1, 0, 0}}), (ypoly{0, -1, -1, 1, 1}));
    EXPECT_EQ(quadratic_cone_limit({{-1, 2, 0}}), (ypoly{0, -1, -2, -1}));
}
