#include <wdom/closed_forms.hh>
#include <wdom/generators.hh>

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace wdom;
using namespace wdom::closed_forms;

namespace
{
    auto find(const std::vector<NamedBound> & bounds, const std::string & name) -> std::optional<int>
    {
        auto it = std::find_if(bounds.begin(), bounds.end(), [&](const auto & b) { return b.name == name; });
        if (it == bounds.end())
            return std::nullopt;
        return it->value;
    }
}

TEST_CASE("evaluators")
{
    CHECK(gamma_t_path(4) == 2);
    CHECK(gamma_t_path(6) == 4);
    CHECK(gamma_t_path(7) == 4);
    CHECK(gamma_222_path(8) == 8);
    CHECK(gamma_222_path(5) == 6);
    CHECK(gamma_222_cycle(9) == 9);
    CHECK(gamma_221_path(7) == 6);
    CHECK(gamma_221_path(8) == 8);
    CHECK(gamma_221_path(10) == 9);
    CHECK(gamma_221_cycle(10) == 9);
    CHECK(gamma_220_path(3) == 2);
    CHECK(gamma_220_path(4) == 4);
    CHECK(gamma_220_cycle(6) == 4);
    CHECK(gamma_210_cycle(4) == 3);
    CHECK(gamma_210_path(4) == 4);
    CHECK(gamma_210_cycle(6) == 4);
    CHECK(gamma_2220_path(5) == 6);
    CHECK(gamma_2220_path(9) == 9);
    CHECK(gamma_2220_cycle(5) == 5);
}

TEST_CASE("evaluators reject orders below three")
{
    for (auto fn : {gamma_t_path, gamma_222_path, gamma_222_cycle, gamma_221_path, gamma_221_cycle, gamma_220_path, gamma_220_cycle,
             gamma_210_path, gamma_210_cycle, gamma_2220_path, gamma_2220_cycle})
        CHECK_THROWS_AS(fn(2), std::domain_error);
}

TEST_CASE("lookup by family and vector")
{
    auto r = closed_form(Family::cycle, {2, 2, 1}, 9);
    REQUIRE(r);
    CHECK(r->value == 9);
    CHECK(r->source == "gamma_221_cycle");
    CHECK(closed_form(Family::path, {1, 1}, 4)->value == 2);
    CHECK_FALSE(closed_form(Family::cycle, {1, 1}, 4));
    CHECK_FALSE(closed_form(Family::path, {2, 1, 1}, 4));
    CHECK(formula_vectors(Family::path).size() == 6);
    CHECK(formula_vectors(Family::cycle).size() == 5);
}

TEST_CASE("closed forms match the solver beyond the acceptance range")
{
    for (int n = 3; n <= 16; ++n)
        for (auto family : {Family::path, Family::cycle}) {
            auto g = family == Family::path ? path(n) : cycle(n);
            for (const auto & w : formula_vectors(family))
                CHECK(gamma_value(g, w) == closed_form(family, w, n)->value);
        }
}

TEST_CASE("degree lower bounds")
{
    CHECK(lower_bound(cycle(5), {2, 2, 2}, LowerBoundClause::ii) == 5);
    CHECK(lower_bound(cycle(5), {2, 1, 0}, LowerBoundClause::iv) == 3);
    CHECK(lower_bound(path(4), {2, 2, 2}, LowerBoundClause::ii) == 4);
    CHECK(lower_bound(cycle(6), {2, 1, 0}, LowerBoundClause::i) == 4);
    CHECK(lower_bound(cycle(6), {2, 1}, LowerBoundClause::iii) == 4);
    CHECK_FALSE(lower_bound(cycle(5), {2, 2, 1}, LowerBoundClause::ii));
    CHECK_FALSE(lower_bound(path(3), {3, 3, 3}, LowerBoundClause::ii));
    CHECK_FALSE(lower_bound(empty_graph(3), {1, 0}, LowerBoundClause::iv));
}

TEST_CASE("lower bounds never exceed the solver value")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto & g : enumerate_labeled_graphs(n, {false, 1}))
            for (const auto & w : {WeightVector{2, 2, 2}, WeightVector{2, 2, 1}, WeightVector{2, 2, 0}, WeightVector{2, 1, 0}, WeightVector{2, 2, 2, 0},
                     WeightVector{1, 0}, WeightVector{2, 1}, WeightVector{3, 2, 1}})
                if (auto v = gamma_value(g, w))
                    for (const auto & b : lower_bound_suite(g, w))
                        CHECK(b.value <= *v);
}

TEST_CASE("upper bound suites")
{
    auto g3 = fixture("fig1_g3");
    CHECK(find(upper_bound_suite(g3, {2, 2, 2}), "2*gamma_t") == 8);
    CHECK(gamma_value(g3, {2, 2, 2}) == 8);

    auto star = subdivided_star(3);
    CHECK(find(upper_bound_suite(star, {2, 1, 0}), "gamma_x2-|L|+|S|") == 4);
    CHECK(gamma_value(star, {2, 1, 0}) == 4);

    auto fig3 = fixture("fig3");
    CHECK(find(upper_bound_suite(fig3, {2, 2, 1}), "3*gamma") == 9);
    CHECK(gamma_value(fig3, {2, 2, 1}) == 9);

    // gamma_x2t bounds need minimum degree two.
    CHECK_FALSE(find(upper_bound_suite(path(5), {2, 2, 2}), "gamma_x2t"));
    CHECK(find(upper_bound_suite(cycle(5), {2, 2, 2}), "gamma_x2t") == 5);
    CHECK(upper_bound_suite(empty_graph(3), {2, 2, 0}).empty());
}

TEST_CASE("the (2,2,1) dichotomy")
{
    CHECK(dichotomy_applies(4, 3, 2));
    CHECK_FALSE(dichotomy_applies(10, 2, 6));
    auto k4 = dichotomy_221(complete(4));
    REQUIRE(k4);
    CHECK(*k4 == std::pair{4, 3});
    CHECK(gamma_value(complete(4), {2, 2, 1}) == 3);
    CHECK_FALSE(dichotomy_221(empty_graph(2)));
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(0, 3) == 0);
}
