#include <algorithm>
#include <functional>

#include "afkit/error.hpp"
#include "afkit/kernels.hpp"

namespace afkit {

namespace {

struct Universe {
    std::vector<std::string> names;
    Graph gf, gg;
    ArgSet af, ag;
    ArgSet fresh;
};

int index_in(const std::vector<std::string>& names, const std::string& n) {
    return static_cast<int>(std::lower_bound(names.begin(), names.end(), n) - names.begin());
}

Universe build_universe(const AF& f, const AF& g, int fresh) {
    Universe u;
    std::vector<std::string> base = f.names();
    base.insert(base.end(), g.names().begin(), g.names().end());
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    std::vector<std::string> fresh_names;
    for (int i = 0; static_cast<int>(fresh_names.size()) < fresh; ++i) {
        std::string n = "_w" + std::to_string(i);
        if (!std::binary_search(base.begin(), base.end(), n)) fresh_names.push_back(n);
    }
    u.names = base;
    u.names.insert(u.names.end(), fresh_names.begin(), fresh_names.end());
    std::sort(u.names.begin(), u.names.end());
    if (static_cast<int>(u.names.size()) > kMaxArgs) throw LimitExceeded("witness universe too large");
    int n = static_cast<int>(u.names.size());
    u.gf = Graph(n);
    u.gg = Graph(n);
    for (const auto& x : f.names()) u.af.set(index_in(u.names, x));
    for (const auto& x : g.names()) u.ag.set(index_in(u.names, x));
    for (const auto& [a, b] : f.attack_list()) u.gf.add(index_in(u.names, a), index_in(u.names, b));
    for (const auto& [a, b] : g.attack_list()) u.gg.add(index_in(u.names, a), index_in(u.names, b));
    for (const auto& x : fresh_names) u.fresh.set(index_in(u.names, x));
    return u;
}

using Outcome = std::vector<std::pair<ArgSet, ArgSet>>;

Outcome evaluate(const Graph& g, const ArgSet& active, Semantics sigma, Flavor flavor) {
    Outcome out;
    for (const auto& e : extensions(g, active, sigma))
        out.emplace_back(e, flavor == Flavor::labelling ? g.plus(e, active) : ArgSet{});
    return out;
}

std::vector<std::vector<std::string>> outcome_names(const Universe& u, const Outcome& o) {
    std::vector<std::vector<std::string>> out;
    for (const auto& [e, _] : o) {
        std::vector<std::string> v;
        for (int i : e.members()) v.push_back(u.names[i]);
        out.push_back(v);
    }
    return out;
}

// Whether the added attack (a,b) respects the expansion kind relative to a
// framework with arguments `args` and graph `g`.
bool attack_allowed(Notion notion, const Graph& g, const ArgSet& args, int a, int b) {
    if (g.attacks(a, b)) return true;
    bool old_a = args.test(a), old_b = args.test(b);
    switch (notion) {
        case Notion::N:
            return !(old_a && old_b);
        case Notion::S:
            return !(old_a && old_b) && !(old_a && !old_b);
        case Notion::W:
            return !(old_a && old_b) && !(!old_a && old_b);
        default:
            return true;
    }
}

// Calls visit(combination) for every k-subset of [0,n) in lexicographic order;
// stops early when visit returns true.
bool for_combinations(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    if (k > n) return false;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        if (visit(c)) return true;
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return false;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

struct BudgetExhausted {};

}  // namespace

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found:
            return "found";
        case SearchStatus::none_within_budget:
            return "none_within_budget";
        default:
            return "budget_exhausted";
    }
}

bool searchable(Notion n) {
    switch (n) {
        case Notion::E:
        case Notion::N:
        case Notion::S:
        case Notion::W:
        case Notion::L:
        case Notion::ND:
        case Notion::D:
        case Notion::LD:
            return true;
        default:
            return false;
    }
}

Witness search_counterexample(const AF& f, const AF& g, Notion notion, Semantics sigma, const Budget& budget,
                              Flavor flavor) {
    if (!searchable(notion)) throw InvalidArgument("no witness search for notion " + to_string(notion));
    if (flavor == Flavor::labelling && !has_labellings(sigma))
        throw Unsupported("labellings are not defined for " + to_string(sigma));
    bool expansion = notion == Notion::E || notion == Notion::N || notion == Notion::S || notion == Notion::W ||
                     notion == Notion::L;
    int max_fresh = expansion && notion != Notion::L ? std::max(0, budget.fresh_args) : 0;
    Universe u = build_universe(f, g, max_fresh);
    int n = static_cast<int>(u.names.size());
    Witness w;

    auto tick = [&] {
        if (++w.candidates > budget.max_candidates) throw BudgetExhausted{};
    };

    try {
        if (expansion) {
            std::vector<int> fresh_order = u.fresh.members();
            ArgSet base = u.af | u.ag;
            std::vector<int> pool = (u.af ^ u.ag).members();
            for (int k = 0; k <= max_fresh; ++k) {
                ArgSet fresh_k;
                for (int i = 0; i < k; ++i) fresh_k.set(fresh_order[i]);
                ArgSet uk = base | fresh_k;
                std::vector<std::pair<int, int>> pairs;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        if (!uk.test(a) || !uk.test(b)) continue;
                        if (u.gf.attacks(a, b) && u.gg.attacks(a, b)) continue;
                        if (!attack_allowed(notion, u.gf, u.af, a, b)) continue;
                        if (!attack_allowed(notion, u.gg, u.ag, a, b)) continue;
                        pairs.emplace_back(a, b);
                    }
                for (int m = 0; m <= budget.max_attacks; ++m) {
                    bool hit = for_combinations(static_cast<int>(pairs.size()), m, [&](const std::vector<int>& combo) {
                        ArgSet ends;
                        for (int p : combo) {
                            ends.set(pairs[p].first);
                            ends.set(pairs[p].second);
                        }
                        if (!fresh_k.subset_of(ends)) return false;
                        std::vector<int> free_pool;
                        for (int x : pool)
                            if (!ends.test(x)) free_pool.push_back(x);
                        for (int x = 0; x <= static_cast<int>(free_pool.size()); ++x) {
                            bool done = for_combinations(static_cast<int>(free_pool.size()), x,
                                                         [&](const std::vector<int>& extra) {
                                tick();
                                ArgSet h_args = ends | fresh_k;
                                for (int e : extra) h_args.set(free_pool[e]);
                                Graph hf = u.gf, hg = u.gg;
                                for (int p : combo) {
                                    hf.add(pairs[p].first, pairs[p].second);
                                    hg.add(pairs[p].first, pairs[p].second);
                                }
                                Outcome of = evaluate(hf, u.af | h_args, sigma, flavor);
                                Outcome og = evaluate(hg, u.ag | h_args, sigma, flavor);
                                if (of == og) return false;
                                std::vector<std::string> names;
                                for (int i : h_args.members()) names.push_back(u.names[i]);
                                std::vector<Attack> atts;
                                for (int p : combo) atts.emplace_back(u.names[pairs[p].first], u.names[pairs[p].second]);
                                w.expansion = AF(names, atts);
                                w.f_result = outcome_names(u, of);
                                w.g_result = outcome_names(u, og);
                                return true;
                            });
                            if (done) return true;
                        }
                        return false;
                    });
                    if (hit) {
                        w.status = SearchStatus::found;
                        return w;
                    }
                }
            }
        } else {
            std::vector<int> args = (u.af | u.ag).members();
            std::vector<std::pair<int, int>> atts;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (u.gf.attacks(a, b) || u.gg.attacks(a, b)) atts.emplace_back(a, b);
            int max_b = notion == Notion::LD ? 0 : static_cast<int>(args.size());
            int max_s = notion == Notion::ND ? 0 : static_cast<int>(atts.size());
            for (int t = 0; t <= budget.max_attacks; ++t)
                for (int nb = 0; nb <= std::min(t, max_b); ++nb) {
                    int ns = t - nb;
                    if (ns > max_s) continue;
                    bool hit = for_combinations(static_cast<int>(args.size()), nb, [&](const std::vector<int>& bs) {
                        ArgSet removed;
                        for (int i : bs) removed.set(args[i]);
                        return for_combinations(static_cast<int>(atts.size()), ns, [&](const std::vector<int>& ss) {
                            tick();
                            Graph hf = u.gf, hg = u.gg;
                            for (int s : ss) {
                                auto [a, b] = atts[s];
                                hf.succ[a].reset(b);
                                hf.pred[b].reset(a);
                                hg.succ[a].reset(b);
                                hg.pred[b].reset(a);
                            }
                            Outcome of = evaluate(hf, u.af - removed, sigma, flavor);
                            Outcome og = evaluate(hg, u.ag - removed, sigma, flavor);
                            if (of == og) return false;
                            for (int i : removed.members()) w.removed_args.push_back(u.names[i]);
                            for (int s : ss) w.removed_attacks.emplace_back(u.names[atts[s].first], u.names[atts[s].second]);
                            w.f_result = outcome_names(u, of);
                            w.g_result = outcome_names(u, og);
                            return true;
                        });
                    });
                    if (hit) {
                        w.status = SearchStatus::found;
                        return w;
                    }
                }
        }
    } catch (const BudgetExhausted&) {
        w.status = SearchStatus::budget_exhausted;
        return w;
    }
    w.status = SearchStatus::none_within_budget;
    return w;
}

}  // namespace afkit
