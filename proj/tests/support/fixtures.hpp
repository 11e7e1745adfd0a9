#pragma once

// Framework pairs from the exact-verifiability examples together with the
// class at which they are claimed indistinguishable and the claimed outputs.

#include <string>
#include <vector>

#include "afkit/realizability.hpp"
#include "afkit/verifiability.hpp"
#include "support/helpers.hpp"

namespace fixtures {

struct Pair {
    std::string name;
    afkit::AF f, g;
};

struct Claim {
    std::string pair;
    afkit::Neighborhood cls;
    afkit::Semantics sigma;
    afkit::SetFamily f_out, g_out;
};

inline std::vector<Pair> pairs() {
    using testing::mk;
    return {
        {"F1", mk("a,b", "b>b b>a"), mk("a,b", "b>b")},
        {"F2", mk("a,b,c", "b>b b>c c>b"), mk("a,b,c", "b>b a>b c>b b>c")},
        {"F3", mk("a,b", "b>b a>b b>a"), mk("a,b", "b>b")},
        {"F4", mk("a,b", "b>b a>b b>a"), mk("a,b", "b>b b>a")},
        {"F5", mk("a,b", "b>b a>b b>a"), mk("a,b", "b>b a>b")},
        {"F6", mk("a,b", "b>b a>b"), mk("a,b", "b>b b>a")},
        {"F7", mk("a,b,c", "c>c b>a a>b b>c"), mk("a,b,c", "c>c b>a a>b")},
    };
}

inline const Pair& pair(const std::vector<Pair>& all, const std::string& name) {
    for (const auto& p : all)
        if (p.name == name) return p;
    return all.front();
}

inline std::vector<Claim> claims() {
    using N = afkit::Neighborhood;
    using S = afkit::Semantics;
    using F = afkit::SetFamily;
    return {
        {"F1", N::plus_pm, S::com, F{{}}, F{{"a"}}},
        {"F2", N::minus_mp, S::com, F{{"a"}, {"a", "c"}}, F{{"a", "c"}}},
        {"F3", N::pm_mp, S::com, F{{}, {"a"}}, F{{"a"}}},
        {"F4", N::minus_pm, S::com, F{{}, {"a"}}, F{{}}},
        {"F5", N::plus_mp, S::com, F{{}, {"a"}}, F{{"a"}}},
        {"F6", N::cap_cup, S::com, F{{"a"}}, F{{}}},

        {"F1", N::plus, S::semi, F{{}}, F{{"a"}}},
        {"F1", N::plus, S::eag, F{{}}, F{{"a"}}},
        {"F6", N::cup, S::semi, F{{"a"}}, F{{}}},
        {"F6", N::cup, S::eag, F{{"a"}}, F{{}}},
        {"F7", N::mp, S::semi, F{{"b"}}, F{{"a"}, {"b"}}},
        {"F7", N::mp, S::eag, F{{"b"}}, F{{}}},

        {"F1", N::pm, S::grd, F{{}}, F{{"a"}}},
        {"F1", N::pm, S::sad, F{{}}, F{{}, {"a"}}},
        {"F2", N::minus, S::grd, F{{"a"}}, F{{"a", "c"}}},
        {"F2", N::minus, S::sad, F{{}, {"a"}}, F{{}, {"a"}, {"a", "c"}}},
        {"F6", N::cup, S::grd, F{{"a"}}, F{{}}},
        {"F6", N::cup, S::sad, F{{}, {"a"}}, F{{}}},

        {"F4", N::eps, S::adm, F{{}, {"a"}}, F{{}}},
        {"F4", N::eps, S::stb, F{{"a"}}, F{}},
        {"F4", N::eps, S::stg, F{{"a"}}, F{{}}},
        {"F4", N::eps, S::prf, F{{"a"}}, F{{}}},
        {"F4", N::eps, S::id, F{{"a"}}, F{{}}},
    };
}

}  // namespace fixtures
