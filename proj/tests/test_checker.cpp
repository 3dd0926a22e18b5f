#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include "slsc/checker.hpp"
#include "slsc/error.hpp"
#include "slsc/semantics.hpp"

#include <doctest.h>

#include <thread>

using namespace slsc;
using slsc::testing::sx;

namespace {

std::set<Simplex> as_set(const SimplicialModel& m, const SimplexSet& bits)
{
    const auto v = m.complex().to_simplices(bits);
    return {v.begin(), v.end()};
}

std::set<Simplex> sat_set(const SimplicialModel& m, const std::string& text, AdjacencyKind kind)
{
    return as_set(m, sat(m, parse_formula(text), kind));
}

bool contains(const std::set<Simplex>& s, const Simplex& x) { return s.count(x) != 0; }

} // namespace

TEST_CASE("collaboration model queries")
{
    const auto m = testing::load_fixture("fig3.json");
    CHECK(contains(sat_set(m, "N t1", AdjacencyKind::spatial), sx({"a1", "a2", "a3"})));
    const auto reach_sp = sat_set(m, "t1 R t2", AdjacencyKind::spatial);
    CHECK(contains(reach_sp, sx({"a1", "a2", "a3"})));
    CHECK(contains(reach_sp, sx({"a2", "a4", "a5"})));
    for (auto kind : all_adjacency_kinds) {
        CHECK(sat(m, Formula::top(), kind) == m.complex().full_set());
        CHECK(sat(m, falsum(), kind).none());
    }
    CHECK(check(m, sx({"a1", "a2", "a3"}), parse_formula("N t1"), AdjacencyKind::spatial));
    CHECK(check(m, sx({"a6"}), Formula::top(), AdjacencyKind::lower));
    CHECK_FALSE(check(m, sx({"a5", "a6"}), parse_formula("t1"), AdjacencyKind::spatial));
}

TEST_CASE("lower flooding on the collaboration model")
{
    const auto m = testing::load_fixture("fig3.json");
    const auto trace = reach_traced(m, m.valuation("t1"), m.valuation("t2"), AdjacencyKind::lower);
    const std::vector<std::set<Simplex>> expected = {
        {sx({"a5", "a6"}), sx({"a4", "a6"})},
        {sx({"a5", "a6"}), sx({"a4", "a6"}), sx({"a4", "a5"}), sx({"a2", "a5"}), sx({"a2", "a4"})},
        {sx({"a5", "a6"}), sx({"a4", "a6"}), sx({"a4", "a5"}), sx({"a2", "a5"}), sx({"a2", "a4"}), sx({"a1", "a2"}),
         sx({"a2", "a3"})},
        {sx({"a5", "a6"}), sx({"a4", "a6"}), sx({"a4", "a5"}), sx({"a2", "a5"}), sx({"a2", "a4"}), sx({"a1", "a2"}),
         sx({"a2", "a3"}), sx({"a1", "a3"})},
    };
    REQUIRE(trace.layers.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(as_set(m, trace.layers[i]) == expected[i]);
    }
    CHECK(as_set(m, trace.result) == expected.back());
    CHECK(trace.visits <= m.complex().size());
    CHECK(sat_set(m, "t1 R t2", AdjacencyKind::lower) == expected.back());
    CHECK(denote(m, parse_formula("t1 R t2"), AdjacencyKind::lower) == expected.back());
}

TEST_CASE("face-closed topic labels put the shared authors in the first layer")
{
    const auto base = testing::load_fixture("fig3.json");
    const auto& k = base.complex();
    std::map<AtomName, SimplexSet> nu{{"t1", base.valuation("t1")}, {"t2", base.valuation("t2")}};
    for (const char* v : {"a4", "a5", "a6"}) {
        nu["t2"].set(k.id_of(sx({v})));
    }
    const SimplicialModel m(k, base.atoms(), nu);
    CHECK(label_of(m, sx({"a5"})) == std::set<AtomName>{"t1", "t2"});
    const auto trace = reach_traced(m, m.valuation("t1"), m.valuation("t2"), AdjacencyKind::lower);
    CHECK(as_set(m, trace.layers.front()) ==
          std::set<Simplex>{sx({"a4"}), sx({"a5"}), sx({"a6"}), sx({"a4", "a6"}), sx({"a5", "a6"})});
    // Points have no lower neighbours, so the flooded region is unchanged.
    auto expected = sat_set(base, "t1 R t2", AdjacencyKind::lower);
    expected.insert({sx({"a4"}), sx({"a5"}), sx({"a6"})});
    CHECK(as_set(m, trace.result) == expected);
}

TEST_CASE("adj_set and reach edge cases")
{
    const auto m = testing::load_fixture("fig3.json");
    const auto& k = m.complex();
    for (auto kind : all_adjacency_kinds) {
        CHECK(adj_set(k, kind, k.empty_set()).none());
        CHECK(reach(m, k.full_set(), k.empty_set(), kind).none());
        CHECK(reach(m, k.empty_set(), m.valuation("t2"), kind) == m.valuation("t2"));
    }
    const std::vector<Simplex> seed{sx({"a2", "a4", "a5"})};
    CHECK(adj_set(k, AdjacencyKind::spatial, k.to_set(seed)).test(k.id_of(sx({"a1", "a2", "a3"}))));

    const auto tri = close({sx({"a1", "a2", "a3"})});
    CHECK(adj_set(tri, AdjacencyKind::spatial, tri.full_set()) == tri.full_set());
}

TEST_CASE("errors")
{
    const auto m = testing::load_fixture("fig3.json");
    try {
        (void)sat(m, parse_formula("t1 & zebra"), AdjacencyKind::lower);
        FAIL("expected UnknownAtom");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownAtom);
    }
    CHECK_THROWS_AS((void)denote(m, parse_formula("zebra"), AdjacencyKind::lower), Error);
    try {
        (void)check(m, sx({"a1", "a6"}), Formula::top(), AdjacencyKind::lower);
        FAIL("expected SimplexNotInComplex");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SimplexNotInComplex);
    }
}

TEST_CASE("empty complex satisfies nothing")
{
    const SimplicialModel m(SimplicialComplex{}, {"p"}, std::map<AtomName, std::set<Simplex>>{});
    for (auto kind : all_adjacency_kinds) {
        CHECK(sat(m, parse_formula("true"), kind).none());
        CHECK(sat(m, parse_formula("!p R N p"), kind).none());
        CHECK(denote(m, parse_formula("!p"), kind).empty());
    }
}

TEST_CASE("sat agrees with the set-theoretic semantics on random inputs")
{
    testing::Rng rng(99);
    const auto atoms = testing::atom_names(3);
    for (int round = 0; round < 400; ++round) {
        const auto m = testing::random_model(rng, 40, 3);
        const auto f = testing::random_formula(rng, atoms, 6);
        for (auto kind : all_adjacency_kinds) {
            INFO(render(f));
            REQUIRE(as_set(m, sat(m, f, kind)) == denote(m, f, kind));
        }
    }
}

TEST_CASE("boolean clauses are set algebra")
{
    testing::Rng rng(4);
    const auto atoms = testing::atom_names(2);
    for (int round = 0; round < 200; ++round) {
        const auto m = testing::random_model(rng, 25, 2);
        const auto f = testing::random_formula(rng, atoms, 4);
        const auto g = testing::random_formula(rng, atoms, 4);
        const auto kind = all_adjacency_kinds[round % 3];
        const auto df = denote(m, f, kind);
        const auto dg = denote(m, g, kind);
        std::set<Simplex> complement;
        std::set<Simplex> both;
        for (const auto& s : m.complex().simplices()) {
            if (df.count(s) == 0) {
                complement.insert(s);
            }
            if (df.count(s) != 0 && dg.count(s) != 0) {
                both.insert(s);
            }
        }
        CHECK(denote(m, Formula::negation(f), kind) == complement);
        CHECK(denote(m, Formula::conjunction(f, g), kind) == both);
    }
}

TEST_CASE("reachability is the least fixed point containing the target")
{
    testing::Rng rng(17);
    const auto atoms = testing::atom_names(2);
    int checked = 0;
    while (checked < 150) {
        const auto m = testing::random_model(rng, 12, 2);
        const auto& k = m.complex();
        const auto f1 = testing::random_formula(rng, atoms, 2);
        const auto f2 = testing::random_formula(rng, atoms, 2);
        for (auto kind : all_adjacency_kinds) {
            const auto s1 = sat(m, f1, kind);
            const auto s2 = sat(m, f2, kind);
            const auto s = sat(m, Formula::reach(f1, f2), kind);
            const auto step = [&](const SimplexSet& x) { return s2 | (s1 & adj_set(k, kind, x)); };
            REQUIRE(step(s) == s);
            REQUIRE(s2.is_subset_of(s));
            REQUIRE(s.is_subset_of(s1 | s2));
            // Every set closed under the step contains s.
            const std::size_t n = k.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                SimplexSet x(n, mask);
                if (step(x).is_subset_of(x)) {
                    REQUIRE(s.is_subset_of(x));
                }
            }
        }
        ++checked;
    }
}

TEST_CASE("closure and surround sugar")
{
    testing::Rng rng(23);
    for (int round = 0; round < 200; ++round) {
        const auto m = testing::random_model(rng, 30, 2);
        const auto kind = all_adjacency_kinds[round % 3];
        const auto p = m.valuation("p");
        CHECK(sat(m, parse_formula("C p"), kind) == (p | adj_set(m.complex(), kind, p)));
        CHECK(sat(m, parse_formula("p S q"), kind) == sat(m, parse_formula("p & !(p R !(p | q))"), kind));
    }
}

TEST_CASE("reach expands each simplex at most once")
{
    testing::Rng rng(31);
    for (int round = 0; round < 300; ++round) {
        const auto m = testing::random_model(rng, 40, 2, 0.6);
        for (auto kind : all_adjacency_kinds) {
            const auto t = reach_traced(m, m.valuation("p"), m.valuation("q"), kind);
            CHECK(t.visits <= m.complex().size());
            CHECK(t.visits == t.result.count());
            for (std::size_t i = 1; i < t.layers.size(); ++i) {
                CHECK(t.layers[i - 1].is_proper_subset_of(t.layers[i]));
            }
        }
    }
}

TEST_CASE("concurrent queries on one model")
{
    testing::Rng rng(41);
    const auto m = testing::random_model(rng, 40, 3);
    const auto f = parse_formula("(p | N q) R (r & !N p)");
    std::vector<SimplexSet> results(6);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < results.size(); ++t) {
        threads.emplace_back([&, t] { results[t] = sat(m, f, all_adjacency_kinds[t % 3]); });
    }
    for (auto& th : threads) {
        th.join();
    }
    for (std::size_t t = 0; t < results.size(); ++t) {
        CHECK(as_set(m, results[t]) == denote(m, f, all_adjacency_kinds[t % 3]));
    }
}
