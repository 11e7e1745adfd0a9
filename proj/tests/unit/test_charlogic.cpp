#include <doctest.h>

#include <random>

#include "afkit/charlogic.hpp"
#include "afkit/error.hpp"

using namespace afkit;

namespace {

IdSet ids(int n, std::initializer_list<int> members) {
    IdSet s(n);
    for (int i : members) s.set(i);
    return s;
}

// Brute-force strong equivalence straight from the definition.
bool strong_eq_oracle(const FiniteLogic& l, Theory a, Theory b) {
    for (Theory u = 0; u < l.theory_count(); ++u)
        if (!(l.models(a | u) == l.models(b | u))) return false;
    return true;
}

bool intersection_oracle(const FiniteLogic& l) {
    int k = static_cast<int>(l.interpretations().size());
    if (!(l.models(0) == IdSet::full(k))) return false;
    for (Theory a = 0; a < l.theory_count(); ++a)
        for (Theory b = 0; b < l.theory_count(); ++b)
            if (!(l.models(a | b) == (l.models(a) & l.models(b)))) return false;
    return true;
}

// Random logic built from atom model sets, so it has the intersection property.
FiniteLogic generated_logic(int atoms, int interps, std::mt19937_64& rng) {
    std::vector<std::string> names, is;
    for (int i = 0; i < atoms; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i < interps; ++i) is.push_back(std::to_string(i + 1));
    std::vector<IdSet> atom_models;
    for (int a = 0; a < atoms; ++a) {
        IdSet m(interps);
        for (int i = 0; i < interps; ++i)
            if (rng() % 3) m.set(i);
        atom_models.push_back(m);
    }
    std::vector<IdSet> models;
    for (Theory t = 0; t < (Theory{1} << atoms); ++t) {
        IdSet m = IdSet::full(interps);
        for (int a = 0; a < atoms; ++a)
            if (t >> a & 1) m = m & atom_models[a];
        models.push_back(m);
    }
    return FiniteLogic(names, is, models);
}

}  // namespace

TEST_CASE("one-atom logic without antimonotonicity") {
    FiniteLogic l({"a"}, {"1"}, {ids(1, {}), ids(1, {0})});
    CHECK_FALSE(is_antimonotone(l));
    CHECK_FALSE(has_intersection_property(l));
    CHECK_FALSE(galois_check(l));
    CHECK(canonical_consequence(l, 0) == 1u);
    CHECK(canonical_consequence(l, 1) == 1u);
    auto p = consequence_properties(l);
    CHECK(p.monotone);
    CHECK(p.increasing);
}

TEST_CASE("three-atom logic whose consequence operator is not idempotent") {
    std::vector<IdSet> m;
    for (Theory t = 0; t < 8; ++t) m.push_back(t == 0 || t == 1 || t == 2 ? ids(1, {0}) : ids(1, {}));
    FiniteLogic l({"a", "b", "c"}, {"1"}, m);
    CHECK(is_antimonotone(l));
    CHECK(l.theory_name(canonical_consequence(l, 0)) == "{a,b}");
    CHECK(l.theory_name(canonical_consequence(l, l.parse_theory("a,b"))) == "{a,b,c}");
    CHECK_FALSE(consequence_properties(l).idempotent);
}

TEST_CASE("ordinary equivalence does not imply strong equivalence") {
    FiniteLogic l({"a", "b"}, {"1", "2"}, {ids(2, {0, 1}), ids(2, {0, 1}), ids(2, {1}), ids(2, {})});
    CHECK(is_antimonotone(l));
    CHECK(l.models(0) == l.models(1));
    CHECK_FALSE(strongly_equivalent(l, 0, 1));
}

TEST_CASE("strong equivalence classes over three atoms") {
    // Interpretations: e, a, b, c, t.
    std::vector<IdSet> m;
    for (Theory t = 0; t < 8; ++t) {
        int pc = __builtin_popcount(t);
        if (pc == 0)
            m.push_back(ids(5, {0}));
        else if (pc == 1)
            m.push_back(ids(5, {1 + __builtin_ctz(t)}));
        else
            m.push_back(ids(5, {4}));
    }
    FiniteLogic l({"a", "b", "c"}, {"e", "a", "b", "c", "t"}, m);
    auto part = strong_eq_classes(l);
    REQUIRE(part.blocks.size() == 5);
    std::vector<std::vector<std::string>> got;
    for (const auto& b : part.blocks) {
        std::vector<std::string> names;
        for (Theory t : b.members) names.push_back(l.theory_name(t));
        got.push_back(names);
    }
    CHECK(got == std::vector<std::vector<std::string>>{
                     {"{}"}, {"{a}"}, {"{b}"}, {"{c}"}, {"{a,b}", "{a,c}", "{b,c}", "{a,b,c}"}});
    auto c = canonical_characterization(l);
    CHECK(is_characterization(c, l));
    CHECK(has_intersection_property(c));
    IdSet u = c.models(l.parse_theory("b")) | c.models(l.parse_theory("c"));
    bool in_image = false;
    for (Theory t = 0; t < c.theory_count(); ++t) in_image = in_image || c.models(t) == u;
    CHECK_FALSE(in_image);
}

TEST_CASE("random logics: partition, canonical characterization and property chain") {
    std::mt19937_64 seeds(5);
    for (int round = 0; round < 500; ++round) {
        int atoms = 1 + round % 3;
        int interps = 1 + round % 4;
        FiniteLogic l = random_logic(atoms, interps, seeds());
        auto part = strong_eq_classes(l);
        for (Theory a = 0; a < l.theory_count(); ++a)
            for (Theory b = 0; b < l.theory_count(); ++b)
                REQUIRE((part.block_of[a] == part.block_of[b]) == strong_eq_oracle(l, a, b));
        for (const auto& blk : part.blocks) {
            Theory cover = 0;
            for (Theory t : blk.members) cover |= t;
            CHECK(blk.cover == cover);
            CHECK(part.block_of[cover] == part.block_of[blk.representative]);
            for (Theory t : blk.members)
                for (Theory x = 0; x < l.theory_count(); ++x)
                    if ((t & ~x) == 0 && (x & ~cover) == 0) CHECK(part.block_of[x] == part.block_of[t]);
        }
        auto c = canonical_characterization(l);
        CHECK(is_characterization(c, l));
        bool inter = has_intersection_property(l);
        CHECK(inter == intersection_oracle(l));
        CHECK(galois_check(l) == inter);
        if (inter) {
            CHECK(is_antimonotone(l));
            CHECK(has_binary_intersection(l));
            CHECK(is_characterization(l, l));
        }
        if (is_antimonotone(l)) CHECK(consequence_properties(l).monotone);
    }
}

TEST_CASE("logics built from atom models have every property") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 200; ++round) {
        FiniteLogic l = generated_logic(1 + round % 4, 1 + round % 5, rng);
        CHECK(has_intersection_property(l));
        CHECK(galois_check(l));
        CHECK(is_characterization(l, l));
        auto p = consequence_properties(l);
        CHECK(p.increasing);
        CHECK(p.monotone);
        CHECK(p.idempotent);
    }
}

TEST_CASE("theory names parse and print") {
    FiniteLogic l({"a", "b"}, {"1"}, {ids(1, {0}), ids(1, {0}), ids(1, {0}), ids(1, {0})});
    CHECK(l.parse_theory("{}") == 0u);
    CHECK(l.parse_theory("{a,b}") == 3u);
    CHECK(l.parse_theory("b") == 2u);
    CHECK(l.theory_name(3) == "{a,b}");
    CHECK_THROWS_AS(l.parse_theory("c"), InvalidArgument);
    CHECK_THROWS_AS(FiniteLogic({"a"}, {"1"}, {ids(1, {})}), InvalidArgument);
    CHECK_THROWS_AS(FiniteLogic({"a", "a"}, {"1"}, std::vector<IdSet>(4, ids(1, {}))), InvalidArgument);
}

TEST_CASE("the AF logic over small universes") {
    auto r = rho_logic({"a", "b"}, Semantics::stb);
    CHECK(r.kernel == KernelId::k_stb);
    CHECK(rho_characterization_holds(r));
    CHECK(rho_intersection_holds(r));
    for (size_t i = 0; i < r.frameworks.size(); ++i) CHECK(r.index_of(r.frameworks[i]) == static_cast<int>(i));
    CHECK(r.frameworks.front().empty());
    for (Semantics s : {Semantics::adm, Semantics::com, Semantics::grd, Semantics::prf}) {
        auto q = rho_logic({"a"}, s);
        CHECK(rho_characterization_holds(q));
        CHECK(rho_intersection_holds(q));
    }
    CHECK_THROWS_AS(rho_logic({"a", "b", "c", "d"}, Semantics::stb), InvalidArgument);
}
