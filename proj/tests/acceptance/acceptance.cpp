// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "afkit/charlogic.hpp"
#include "afkit/error.hpp"
#include "afkit/kernels.hpp"
#include "afkit/realizability.hpp"
#include "afkit/semantics.hpp"
#include "afkit/verifiability.hpp"
#include "support/fixtures.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace afkit;
using testing::ext;
using testing::fam;
using testing::mk;

namespace {

struct Report {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
};

std::vector<AF> all_over(int n) {
    std::vector<AF> out;
    for (const auto& f : oracle::all_afs(n))
        if (f.size() == n) out.push_back(f);
    return out;
}

bool subset_family(const ExtensionList& a, const ExtensionList& b) {
    for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

const Semantics kGamma[] = {Semantics::nav, Semantics::stb, Semantics::stg, Semantics::adm,
                            Semantics::prf, Semantics::id,  Semantics::semi, Semantics::eag,
                            Semantics::grd, Semantics::sad, Semantics::com};

const Semantics kSig[] = {Semantics::cf,  Semantics::nav,  Semantics::stb, Semantics::stg, Semantics::adm,
                          Semantics::prf, Semantics::semi, Semantics::grd, Semantics::id,  Semantics::eag};

// 1: worked examples.
void criterion1(Report& r) {
    AF f = mk("a,b,c,d", "d>c c>c b>c b>a");
    AF g = mk("b,c,d", "c>c b>c c>b c>d");
    AF h = mk("b,e", "e>b");
    r.expect(ext(f, Semantics::stb) == fam({{"b", "d"}}) && ext(g, Semantics::stb) == fam({{"b", "d"}}),
             "six-AF example: stb(F) = stb(G) = {{b,d}}");
    r.expect(kernel(g, KernelId::k_stb) == mk("b,c,d", "c>c b>c") && !(kernel(f, KernelId::k_stb) == kernel(g, KernelId::k_stb)),
             "six-AF example: stable kernels differ");
    r.expect(ext(union_af(f, h), Semantics::stb) == fam({{"a", "d", "e"}}) && ext(union_af(g, h), Semantics::stb).empty(),
             "six-AF example: H separates");
    r.expect(decide_equivalence(f, g, Notion::E, Semantics::stb).answer == Answer::not_equivalent,
             "six-AF example: verdict not_equivalent");

    AF v = mk("a,b,c", "a>b b>a b>b c>b");
    auto tuples = [&](Neighborhood x) {
        std::set<std::vector<std::vector<std::string>>> out;
        for (const auto& e : verification_class(v, x).entries) out.insert({v.names_of(e.set), v.names_of(e.info[0])});
        return out;
    };
    using T = std::set<std::vector<std::vector<std::string>>>;
    r.expect(tuples(Neighborhood::plus) == T{{{}, {}}, {{"a"}, {"a", "b"}}, {{"c"}, {"b", "c"}}, {{"a", "c"}, {"a", "b", "c"}}},
             "verification class + tuples");
    r.expect(tuples(Neighborhood::pm) == T{{{}, {}}, {{"a"}, {}}, {{"c"}, {"b"}}, {{"a", "c"}, {}}},
             "verification class ± tuples");

    AF s = mk("a,b,c,d,e,f", "e>e a>b b>c c>e e>f f>e d>e");
    r.expect(named(s, strongly_admissible(s)) == fam({{},
                                                      {"a"},
                                                      {"d"},
                                                      {"a", "d"},
                                                      {"a", "c"},
                                                      {"d", "f"},
                                                      {"a", "c", "d"},
                                                      {"a", "d", "f"},
                                                      {"a", "c", "d", "f"},
                                                      {"a", "c", "f"}}),
             "strongly admissible sets (10)");

    SetFamily d = {{"a", "b"}, {"a", "d", "e"}, {"b", "c", "e"}};
    r.expect(defense_formula_cnf(d, "a") == fam({{"b", "d"}, {"b", "e"}}), "CDef_a");
    r.expect(defense_formula_cnf(d, "e") == fam({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}), "CDef_e");

    SetFamily four = {{"a1", "b2", "b3"}, {"a2", "b1", "b3"}, {"a3", "b1", "b2"}, {"b1", "b2", "b3"}};
    std::vector<Attack> expect;
    for (auto [x, y] : std::vector<std::pair<std::string, std::string>>{
             {"a1", "a2"}, {"a2", "a3"}, {"a1", "a3"}, {"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}}) {
        expect.emplace_back(x, y);
        expect.emplace_back(y, x);
    }
    auto nav = realize(four, Semantics::nav);
    r.expect(nav && *nav == AF({"a1", "a2", "a3", "b1", "b2", "b3"}, expect) && ext(*nav, Semantics::nav) == fam(four),
             "canonical nav realization of the four-set example");

    std::vector<IdSet> m;
    for (Theory t = 0; t < 8; ++t) {
        IdSet x(5);
        int pc = __builtin_popcount(t);
        x.set(pc == 0 ? 0 : pc == 1 ? 1 + __builtin_ctz(t) : 4);
        m.push_back(x);
    }
    FiniteLogic l({"a", "b", "c"}, {"e", "a", "b", "c", "t"}, m);
    FiniteLogic c = canonical_characterization(l);
    auto image = [&](const std::string& t) {
        std::vector<std::string> out;
        for (int i : c.models(l.parse_theory(t)).members()) out.push_back(c.interpretations()[i]);
        std::sort(out.begin(), out.end());
        return out;
    };
    using V = std::vector<std::string>;
    r.expect(image("{}") == V{"{a,b,c}", "{a,b}", "{a,c}", "{a}", "{b,c}", "{b}", "{c}", "{}"}, "σ′(∅)");
    r.expect(image("a") == V{"{a,b,c}", "{a,b}", "{a,c}", "{a}", "{b,c}"}, "σ′({a})");
    r.expect(image("b") == V{"{a,b,c}", "{a,b}", "{a,c}", "{b,c}", "{b}"}, "σ′({b})");
    r.expect(image("c") == V{"{a,b,c}", "{a,b}", "{a,c}", "{b,c}", "{c}"}, "σ′({c})");
    r.expect(image("{a,b,c}") == V{"{a,b,c}", "{a,b}", "{a,c}", "{b,c}"}, "σ′({a,b,c})");
    r.expect(is_characterization(c, l), "σ′ characterizes the L={a,b,c} logic");
}

// 2: exhaustive sweep over all frameworks on {a,b} and {a,b,c}.
void criterion2(Report& r) {
    int old = worker_count();
    set_worker_count(1);
    const std::vector<std::pair<Semantics, KernelId>> insensitive = {
        {Semantics::stb, KernelId::k_stb},  {Semantics::stg, KernelId::k_stb}, {Semantics::adm, KernelId::k_adm},
        {Semantics::prf, KernelId::k_adm},  {Semantics::semi, KernelId::k_adm}, {Semantics::id, KernelId::k_adm},
        {Semantics::eag, KernelId::k_adm},  {Semantics::grd, KernelId::k_grd}, {Semantics::sad, KernelId::k_grd},
        {Semantics::com, KernelId::k_com},  {Semantics::adm, KernelId::ks_adm}, {Semantics::grd, KernelId::ks_grd},
        {Semantics::com, KernelId::ks_com}, {Semantics::stg, KernelId::ks_stg}, {Semantics::nav, KernelId::k_nav}};
    for (int n : {2, 3}) {
        for (const auto& f : all_over(n)) {
            std::string tag = "n=" + std::to_string(n);
            auto e = [&](Semantics s) { return extensions(f, s); };
            auto stb = e(Semantics::stb), semi = e(Semantics::semi), prf = e(Semantics::prf), com = e(Semantics::com),
                 adm = e(Semantics::adm), cf = e(Semantics::cf), stg = e(Semantics::stg), nav = e(Semantics::nav),
                 grd = e(Semantics::grd), id = e(Semantics::id), eag = e(Semantics::eag), sad = e(Semantics::sad);
            bool diagram = subset_family(stb, semi) && subset_family(semi, prf) && subset_family(prf, com) &&
                           subset_family(com, adm) && subset_family(adm, cf) && subset_family(stb, stg) &&
                           subset_family(stg, nav) && subset_family(nav, cf) && subset_family(grd, com) &&
                           subset_family(id, com) && subset_family(eag, com) && subset_family(grd, sad) &&
                           subset_family(sad, adm) && grd.size() == 1 && id.size() == 1 && eag.size() == 1;
            r.expect(diagram, "(a) subset diagram " + tag);
            for (auto [s, k] : insensitive)
                r.expect(e(s) == extensions(kernel(f, k), s), "(b) " + to_string(s) + " vs " + to_string(k) + " " + tag);
            for (Semantics s : kGamma)
                r.expect(verify(s, verification_class(f, exact_class(s)), f.all()) == e(s),
                         "(c) reconstruction " + to_string(s) + " " + tag);
            for (Semantics s : kSig)
                r.expect(decide_signature(named(f, e(s)), s).holds, "(d) signature " + to_string(s) + " " + tag);
            r.expect(oracle::library(f, Semantics::sad) == oracle::reference(f, Semantics::sad), "(e) sad " + tag);
            for (KernelId k : kAllKernels) {
                AF kf = kernel(f, k);
                r.expect(kernel(kf, k) == kf && kf.names() == f.names() && kf.loop_set() == f.loop_set(),
                         "(f) kernel " + to_string(k) + " " + tag);
            }
        }
    }
    set_worker_count(old);
}

AF random_af(std::mt19937_64& rng) {
    const std::vector<std::string> pool = {"a", "b", "c"};
    std::vector<std::string> args;
    for (const auto& x : pool)
        if (rng() % 4) args.push_back(x);
    std::vector<Attack> atts;
    for (const auto& x : args)
        for (const auto& y : args)
            if (rng() % 3 == 0) atts.emplace_back(x, y);
    return AF(args, atts);
}

AF toggle_one(const AF& f, std::mt19937_64& rng) {
    if (f.empty()) return f;
    auto atts = f.attack_list();
    const auto& x = f.name(static_cast<int>(rng() % f.size()));
    const auto& y = f.name(static_cast<int>(rng() % f.size()));
    auto it = std::find(atts.begin(), atts.end(), Attack{x, y});
    if (it == atts.end())
        atts.emplace_back(x, y);
    else
        atts.erase(it);
    return AF(f.names(), atts);
}

// 3: equivalence verdicts against witness search.
void criterion3(Report& r, std::string& stats) {
    std::mt19937_64 rng(303);
    Budget b;
    b.fresh_args = 2;
    b.max_attacks = 4;
    b.max_candidates = 5'000'000;
    int cells = 0, eq = 0, neq = 0;
    for (Notion notion : {Notion::E, Notion::N, Notion::S})
        for (Semantics s : kAllSemantics) {
            if (!characterizing_kernel(notion, s)) continue;
            ++cells;
            for (int i = 0; i < 100; ++i) {
                AF f = random_af(rng);
                AF g = i % 2 ? toggle_one(f, rng) : random_af(rng);
                Verdict v = decide_equivalence(f, g, notion, s);
                Witness w = search_counterexample(f, g, notion, s, b);
                std::string tag = to_string(notion) + "/" + to_string(s) + " #" + std::to_string(i);
                if (v.answer == Answer::not_equivalent) {
                    ++neq;
                    std::string note;
                    if (w.status != SearchStatus::found) {
                        Budget wide = b;
                        wide.fresh_args = 3;
                        wide.max_attacks = 6;
                        auto w3 = search_counterexample(f, g, notion, s, wide);
                        note = w3.status == SearchStatus::found ? "; a witness exists with 3 fresh arguments"
                                                                : "; none with 3 fresh arguments either";
                    }
                    r.expect(w.status == SearchStatus::found, tag + ": not_equivalent without witness (" +
                                                                  to_string(w.status) + note + ")");
                } else {
                    ++eq;
                    r.expect(v.answer == Answer::equivalent && w.status != SearchStatus::found,
                             tag + ": equivalent but a witness was found");
                }
            }
        }
    stats = std::to_string(cells) + " cells, " + std::to_string(neq) + " not_equivalent, " + std::to_string(eq) +
            " equivalent";
}

SetFamily random_candidate(std::mt19937_64& rng) {
    int n = 1 + static_cast<int>(rng() % 4);
    auto names = oracle::names_abc(n);
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<uint32_t> masks;
    for (int i = 0; i < k; ++i) masks.push_back(static_cast<uint32_t>(rng() % (1u << n)));
    int shape = static_cast<int>(rng() % 3);
    std::set<uint32_t> sets;
    for (uint32_t m : masks) {
        if (shape == 1) {
            for (uint32_t sub = m;; sub = (sub - 1) & m) {
                sets.insert(sub);
                if (sub == 0) break;
            }
        } else {
            sets.insert(m);
        }
    }
    if (shape == 2) sets.insert(0);
    SetFamily out;
    for (uint32_t m : sets) {
        std::vector<std::string> s;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) s.push_back(names[i]);
        out.push_back(s);
    }
    return fam(out);
}

// 4: realize then re-enumerate.
void criterion4(Report& r, std::string& stats) {
    std::mt19937_64 rng(404);
    std::ostringstream os;
    for (Semantics s : kSig) {
        int realized = 0, tried = 0;
        while (realized < 200 && tried < 200000) {
            ++tried;
            SetFamily cand = random_candidate(rng);
            if (!decide_signature(cand, s).holds) continue;
            auto f = realize(cand, s);
            r.expect(f.has_value(), to_string(s) + ": candidate passed but was not realized");
            if (f) r.expect(ext(*f, s) == cand, to_string(s) + ": re-enumeration differs");
            ++realized;
        }
        r.expect(realized == 200, to_string(s) + ": only " + std::to_string(realized) + " passing candidates");
        os << to_string(s) << ' ' << realized << '/' << tried << ' ';
    }
    stats = os.str();
}

std::string show(const SetFamily& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        out += (i ? ",{" : "{");
        for (size_t j = 0; j < s[i].size(); ++j) out += (j ? "," : "") + s[i][j];
        out += "}";
    }
    return out + "}";
}

// 5: exactness fixtures.
void criterion5(Report& r) {
    const auto pairs = fixtures::pairs();
    for (const auto& c : fixtures::claims()) {
        const auto& p = fixtures::pair(pairs, c.pair);
        std::string tag = c.pair + " " + to_string(c.sigma) + " at " + to_symbol(c.cls);
        r.expect(more_informative(exact_class(c.sigma), c.cls) && !more_informative(c.cls, exact_class(c.sigma)),
                 tag + ": class is not strictly weaker");
        r.expect(verification_class(p.f, c.cls) == verification_class(p.g, c.cls), tag + ": classes differ");
        auto fo = ext(p.f, c.sigma), go = ext(p.g, c.sigma);
        r.expect(fo != go, tag + ": outputs coincide, both " + show(fo) + " (listed " + show(fam(c.g_out)) +
                               " for the primed framework)");
        r.expect(fo == fam(c.f_out) && (go == fam(c.g_out) || fo == go), tag + ": output differs from listing");
    }
}

// 6: characterization logics.
void criterion6(Report& r) {
    std::mt19937_64 seeds(606);
    for (int round = 0; round < 500; ++round) {
        FiniteLogic l = random_logic(1 + round % 3, 1 + round % 5, seeds());
        std::string tag = "logic #" + std::to_string(round);
        r.expect(is_characterization(canonical_characterization(l), l), tag + ": canonical characterization");
        auto part = strong_eq_classes(l);
        for (const auto& blk : part.blocks) {
            Theory cover = 0;
            for (Theory t : blk.members) cover |= t;
            bool convex = blk.cover == cover && part.block_of[cover] == part.block_of[blk.representative];
            for (Theory x = 0; x < l.theory_count(); ++x)
                if ((blk.representative & ~x) == 0 && (x & ~cover) == 0)
                    convex = convex && part.block_of[x] == part.block_of[blk.representative];
            r.expect(convex, tag + ": cover/convexity");
        }
        bool inter = has_intersection_property(l), anti = is_antimonotone(l);
        r.expect(!inter || anti, tag + ": intersection without antimonotonicity");
        r.expect(!anti || consequence_properties(l).monotone, tag + ": antimonotone with non-monotone Cn");
    }
    auto rho = rho_logic({"a", "b"}, Semantics::stb);
    r.expect(rho_characterization_holds(rho), "ρ′ over {a,b}/stb: characterization");
    r.expect(rho_intersection_holds(rho), "ρ′ over {a,b}/stb: intersection");
}

}  // namespace

int main() {
    bool all = true;
    auto run = [&](int id, const std::string& title, const std::function<void(Report&, std::string&)>& body) {
        Report r;
        std::string stats;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(r, stats);
        } catch (const std::exception& e) {
            r.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && r.ok();
        std::printf("criterion %d: %s  %s  [%d checks, %zu failed, %.2fs%s%s]\n", id, r.ok() ? "PASS" : "FAIL",
                    title.c_str(), r.checks, r.failures.size(), secs, stats.empty() ? "" : "; ",
                    stats.c_str());
        for (size_t i = 0; i < r.failures.size() && i < 20; ++i) std::printf("    %s\n", r.failures[i].c_str());
        std::fflush(stdout);
    };
    run(1, "worked examples", [](Report& r, std::string&) { criterion1(r); });
    run(2, "exhaustive sweep over {a,b} and {a,b,c}", [](Report& r, std::string&) { criterion2(r); });
    run(3, "equivalence verdicts vs witness search", criterion3);
    run(4, "realize then check", criterion4);
    run(5, "verification-class exactness fixtures", [](Report& r, std::string&) { criterion5(r); });
    run(6, "characterization logic properties", [](Report& r, std::string&) { criterion6(r); });
    return all ? 0 : 1;
}
