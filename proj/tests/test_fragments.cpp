#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include "slsc/checker.hpp"
#include "slsc/fragments.hpp"

#include <doctest.h>

#include <algorithm>

using namespace slsc;

namespace {

bool contains(const std::vector<Formula>& all, const std::string& text)
{
    return std::find(all.begin(), all.end(), parse_formula(text)) != all.end();
}

// Formulas first appearing at depth d are those with an operand of depth
// d-1; g counts the formulas built in one step from n candidates.
std::size_t by_recurrence(std::size_t base, std::size_t depth, std::size_t (*g)(std::size_t))
{
    std::size_t prev = 0;
    std::size_t cur = base;
    for (std::size_t d = 1; d <= depth; ++d) {
        const std::size_t next = cur + g(cur) - (d == 1 ? 0 : g(prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

std::size_t step_n(std::size_t n) { return 2 * n + n * (n + 1) / 2; }
std::size_t step_r(std::size_t n) { return n + n * (n + 1) / 2 + n * n; }

} // namespace

TEST_CASE("depth zero is the atoms and true")
{
    const auto all = enumerate_fragment({"a"}, 0, Fragment::neighborhood);
    CHECK(all.size() == 2);
    CHECK(contains(all, "a"));
    CHECK(contains(all, "true"));
}

TEST_CASE("depth one over a single atom")
{
    const auto n = enumerate_fragment({"a"}, 1, Fragment::neighborhood);
    for (const char* text : {"!a", "!true", "a & a", "a & true", "N a", "N true"}) {
        CHECK(contains(n, text));
    }
    CHECK_FALSE(contains(n, "true & a"));
    CHECK(std::none_of(n.begin(), n.end(), [](const Formula& f) { return fragment_of(f) == Fragment::reach; }));

    const auto r = enumerate_fragment({"a"}, 1, Fragment::reach);
    CHECK(contains(r, "a R true"));
    CHECK(contains(r, "true R a"));
    CHECK_FALSE(contains(r, "N a"));
}

TEST_CASE("fragment sizes")
{
    CHECK(enumerate_fragment({"a", "b"}, 1, Fragment::neighborhood).size() == 15);
    CHECK(enumerate_fragment({"a", "b"}, 2, Fragment::neighborhood).size() == 153);
    CHECK(enumerate_fragment({"a", "b"}, 3, Fragment::neighborhood).size() == 12090);
    CHECK(enumerate_fragment({"a", "b"}, 1, Fragment::reach).size() == 21);
    CHECK(enumerate_fragment({"a", "b"}, 2, Fragment::reach).size() == 696);

    for (std::size_t d = 0; d <= 3; ++d) {
        CHECK(enumerate_fragment({"a", "b"}, d, Fragment::neighborhood).size() == by_recurrence(3, d, step_n));
    }
    for (std::size_t d = 0; d <= 2; ++d) {
        CHECK(enumerate_fragment({"a", "b"}, d, Fragment::reach).size() == by_recurrence(3, d, step_r));
    }
    CHECK(by_recurrence(3, 3, step_r) == 727671);
}

TEST_CASE("enumerated formulas are distinct, bounded and in their fragment")
{
    for (auto fragment : {Fragment::neighborhood, Fragment::reach}) {
        const auto all = enumerate_fragment({"p", "q"}, 2, fragment);
        std::set<Formula> unique(all.begin(), all.end());
        CHECK(unique.size() == all.size());
        for (const auto& f : all) {
            CHECK(depth(f) <= 2);
            CHECK(in_fragment(f, fragment));
        }
    }
}

TEST_CASE("closure sets are exactly the satisfaction sets of the enumeration")
{
    testing::Rng rng(3);
    for (int round = 0; round < 40; ++round) {
        const auto m = testing::random_model(rng, 12, 2);
        const auto kind = all_adjacency_kinds[round % 3];
        for (auto fragment : {Fragment::neighborhood, Fragment::reach}) {
            for (std::size_t d : {0U, 1U, 2U}) {
                std::set<SimplexSet> expected;
                for (const auto& f : enumerate_fragment(m.atoms(), d, fragment)) {
                    expected.insert(sat(m, f, kind));
                }
                std::set<SimplexSet> got;
                const FragmentClosure closure(m, kind, fragment, d);
                closure.visit([&](const SimplexSet& s, const std::function<Formula()>& witness) {
                    got.insert(s);
                    const auto f = witness();
                    REQUIRE(depth(f) <= d);
                    REQUIRE(in_fragment(f, fragment));
                    REQUIRE(sat(m, f, kind) == s);
                    return true;
                });
                REQUIRE(got == expected);
            }
        }
    }
}

TEST_CASE("fragment distinguishers separate the requested pair")
{
    testing::Rng rng(4);
    for (int round = 0; round < 40; ++round) {
        const auto m = testing::random_model(rng, 12, 2);
        const auto kind = all_adjacency_kinds[round % 3];
        const auto n = static_cast<SimplexId>(m.complex().size());
        const auto a = static_cast<SimplexId>(testing::uniform(rng, 0, n - 1));
        const auto b = static_cast<SimplexId>(testing::uniform(rng, 0, n - 1));
        const auto f = find_fragment_distinguisher(m, kind, Fragment::reach, 2, a, b);
        if (f) {
            CHECK(in_fragment(*f, Fragment::reach));
            const auto s = sat(m, *f, kind);
            CHECK(s.test(a));
            CHECK_FALSE(s.test(b));
        } else {
            for (const auto& g : enumerate_fragment(m.atoms(), 2, Fragment::reach)) {
                const auto s = sat(m, g, kind);
                REQUIRE(s.test(a) == s.test(b));
            }
        }
    }
    CHECK_FALSE(find_fragment_distinguisher(testing::load_fixture("fig3.json"), AdjacencyKind::lower,
                                            Fragment::reach, 2, 0, 0));
}
