#include "afkit/semantics.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "afkit/error.hpp"
#include "afkit/parallel.hpp"

namespace afkit {

namespace {

const char* const kNames[] = {"cf",  "nav", "adm",  "com", "grd", "stb", "stg",
                              "semi", "prf", "id",  "eag", "sad", "cf2", "stg2"};

void check_cap(const Graph& g, const ArgSet& active) {
    int n = (active - g.loops()).count();
    if (n > max_args())
        throw LimitExceeded("framework has " + std::to_string(n) +
                            " non-self-attacking arguments, above the enumeration cap of " +
                            std::to_string(max_args()) + " (set AFKIT_MAX_ARGS to raise it)");
}

void cf_branch(const Graph& g, const std::vector<int>& cand, size_t start, ArgSet cur, ArgSet blocked,
               ExtensionList& out) {
    out.push_back(cur);
    for (size_t k = start; k < cand.size(); ++k) {
        int i = cand[k];
        if (blocked.test(i)) continue;
        ArgSet b = blocked | g.succ[i] | g.pred[i];
        ArgSet c = cur;
        c.set(i);
        cf_branch(g, cand, k + 1, c, b, out);
    }
}

ExtensionList conflict_free_sets(const Graph& g, const ArgSet& active) {
    check_cap(g, active);
    std::vector<int> cand = (active - g.loops()).members();
    std::vector<ExtensionList> parts(cand.size());
    parallel_for(static_cast<int>(cand.size()), [&](int k) {
        int i = cand[k];
        ArgSet blocked;
        for (int j = 0; j < k; ++j) blocked.set(cand[j]);
        blocked |= g.succ[i] | g.pred[i];
        cf_branch(g, cand, k + 1, ArgSet::single(i), blocked, parts[k]);
    });
    ExtensionList out{ArgSet{}};
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool conflicts_with(const Graph& g, int a, const ArgSet& e) {
    return g.succ[a].intersects(e) || g.pred[a].intersects(e) || g.succ[a].test(a);
}

ExtensionList naive_of(const Graph& g, const ArgSet& active, const ExtensionList& cf) {
    ExtensionList out;
    for (const auto& e : cf) {
        bool maximal = true;
        ArgSet rest = active - e;
        for (int a = rest.first(); a >= 0; a = rest.next(a))
            if (!conflicts_with(g, a, e)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(e);
    }
    return out;
}

// Keeps the sets whose key (range or the set itself) is subset-maximal.
template <class Key>
ExtensionList keep_maximal_by(const ExtensionList& sets, Key key) {
    std::vector<ArgSet> keys;
    keys.reserve(sets.size());
    for (const auto& s : sets) keys.push_back(key(s));
    std::vector<ArgSet> uniq = keys;
    std::sort(uniq.begin(), uniq.end(), [](const ArgSet& a, const ArgSet& b) { return a.count() > b.count(); });
    std::vector<ArgSet> maxima;
    std::unordered_set<ArgSet, ArgSetHash> max_set;
    for (const auto& k : uniq) {
        bool dominated = false;
        for (const auto& m : maxima)
            if (k.subset_of(m) && !(k == m)) {
                dominated = true;
                break;
            }
        if (!dominated && max_set.insert(k).second) maxima.push_back(k);
    }
    ExtensionList out;
    for (size_t i = 0; i < sets.size(); ++i)
        if (max_set.count(keys[i])) out.push_back(sets[i]);
    return out;
}

bool admissible(const Graph& g, const ArgSet& active, const ArgSet& e) {
    return g.minus(e, active).subset_of(g.plus(e, active));
}

ArgSet grounded_of(const Graph& g, const ArgSet& active) {
    ArgSet cur;
    while (true) {
        ArgSet nxt = g.defended(cur, active);
        if (nxt == cur) return cur;
        cur = nxt;
    }
}

ExtensionList sad_of(const Graph& g, const ArgSet& active) {
    check_cap(g, active);
    std::unordered_set<ArgSet, ArgSetHash> seen{ArgSet{}};
    std::vector<ArgSet> todo{ArgSet{}};
    while (!todo.empty()) {
        ArgSet s = todo.back();
        todo.pop_back();
        ArgSet add = g.defended(s, active) - s;
        for (int t = add.first(); t >= 0; t = add.next(t)) {
            ArgSet n = s;
            n.set(t);
            if (seen.insert(n).second) todo.push_back(n);
        }
    }
    return ExtensionList(seen.begin(), seen.end());
}

// Largest admissible subset of `bound`: the union of all admissible subsets.
ArgSet max_admissible_within(const ExtensionList& adm, const ArgSet& bound) {
    ArgSet out;
    for (const auto& e : adm)
        if (e.subset_of(bound)) out |= e;
    return out;
}

class Recursive {
public:
    Recursive(const Graph& g, bool stage) : g_(g), stage_(stage) {}

    const ExtensionList& solve(const ArgSet& mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        ExtensionList res = compute(mask);
        return memo_.emplace(mask, std::move(res)).first->second;
    }

private:
    ExtensionList compute(const ArgSet& mask) {
        if (mask.empty()) return {ArgSet{}};
        auto comps = sccs(g_, mask);
        if (comps.size() == 1) {
            ExtensionList cf = conflict_free_sets(g_, mask);
            if (stage_) return keep_maximal_by(cf, [&](const ArgSet& e) { return e | g_.plus(e, mask); });
            return naive_of(g_, mask, cf);
        }
        auto order = topological(comps, mask);
        ExtensionList partial{ArgSet{}};
        for (int c : order) {
            const ArgSet& s = comps[c];
            ExtensionList next;
            for (const auto& e : partial) {
                ArgSet up = s - g_.plus(e, mask);
                ExtensionList sub = solve(up);
                for (const auto& x : sub) next.push_back(e | x);
            }
            partial = std::move(next);
        }
        return partial;
    }

    std::vector<int> topological(const std::vector<ArgSet>& comps, const ArgSet& mask) {
        int k = static_cast<int>(comps.size());
        std::vector<int> comp_of(g_.n, -1);
        for (int c = 0; c < k; ++c)
            for (int a : comps[c].members()) comp_of[a] = c;
        std::vector<std::vector<int>> out(k);
        std::vector<int> indeg(k, 0);
        for (int c = 0; c < k; ++c) {
            ArgSet reach = g_.plus(comps[c], mask) - comps[c];
            std::vector<char> hit(k, 0);
            for (int b = reach.first(); b >= 0; b = reach.next(b)) hit[comp_of[b]] = 1;
            for (int d = 0; d < k; ++d)
                if (hit[d]) {
                    out[c].push_back(d);
                    ++indeg[d];
                }
        }
        std::vector<int> order;
        std::vector<int> ready;
        for (int c = k - 1; c >= 0; --c)
            if (!indeg[c]) ready.push_back(c);
        while (!ready.empty()) {
            int c = ready.back();
            ready.pop_back();
            order.push_back(c);
            for (int d : out[c])
                if (--indeg[d] == 0) ready.push_back(d);
        }
        return order;
    }

    const Graph& g_;
    bool stage_;
    std::unordered_map<ArgSet, ExtensionList, ArgSetHash> memo_;
};

}  // namespace

std::string to_string(Semantics s) { return kNames[static_cast<int>(s)]; }

Semantics parse_semantics(std::string_view tag) {
    for (int i = 0; i < 14; ++i)
        if (tag == kNames[i]) return static_cast<Semantics>(i);
    throw InvalidArgument("unknown semantics '" + std::string(tag) + "'");
}

ExtensionList maximal_sets(ExtensionList sets) {
    auto out = keep_maximal_by(sets, [](const ArgSet& e) { return e; });
    canonicalize(out);
    return out;
}

ArgSet intersection_of(const ExtensionList& sets, const ArgSet& universe) {
    ArgSet out = universe;
    for (const auto& s : sets) out &= s;
    return out;
}

ExtensionList extensions(const Graph& g, const ArgSet& active, Semantics sigma) {
    ExtensionList out;
    auto adm_of = [&](const ExtensionList& cf) {
        ExtensionList r;
        for (const auto& e : cf)
            if (admissible(g, active, e)) r.push_back(e);
        return r;
    };
    auto range_of = [&](const ArgSet& e) { return e | g.plus(e, active); };
    switch (sigma) {
        case Semantics::grd:
            out = {grounded_of(g, active)};
            break;
        case Semantics::sad:
            out = sad_of(g, active);
            break;
        case Semantics::cf2:
        case Semantics::stg2:
            check_cap(g, active);
            out = Recursive(g, sigma == Semantics::stg2).solve(active);
            break;
        default: {
            ExtensionList cf = conflict_free_sets(g, active);
            switch (sigma) {
                case Semantics::cf:
                    out = std::move(cf);
                    break;
                case Semantics::nav:
                    out = naive_of(g, active, cf);
                    break;
                case Semantics::stb:
                    for (const auto& e : cf)
                        if (range_of(e) == active) out.push_back(e);
                    break;
                case Semantics::stg:
                    out = keep_maximal_by(cf, range_of);
                    break;
                case Semantics::adm:
                    out = adm_of(cf);
                    break;
                case Semantics::com:
                    for (const auto& e : adm_of(cf))
                        if (g.defended(e, active) == e) out.push_back(e);
                    break;
                case Semantics::prf:
                    out = keep_maximal_by(adm_of(cf), [](const ArgSet& e) { return e; });
                    break;
                case Semantics::semi:
                    out = keep_maximal_by(adm_of(cf), range_of);
                    break;
                case Semantics::id: {
                    auto adm = adm_of(cf);
                    auto prf = keep_maximal_by(adm, [](const ArgSet& e) { return e; });
                    out = {max_admissible_within(adm, intersection_of(prf, active))};
                    break;
                }
                case Semantics::eag: {
                    auto adm = adm_of(cf);
                    auto semi = keep_maximal_by(adm, range_of);
                    out = {max_admissible_within(adm, intersection_of(semi, active))};
                    break;
                }
                default:
                    break;
            }
        }
    }
    canonicalize(out);
    return out;
}

ExtensionList extensions(const AF& f, Semantics sigma) { return extensions(f.graph(), f.all(), sigma); }

GroundedTrace grounded_iteration(const AF& f) {
    GroundedTrace t;
    ArgSet cur;
    t.trace.push_back(cur);
    while (true) {
        ArgSet nxt = f.graph().defended(cur, f.all());
        if (nxt == cur) break;
        t.trace.push_back(nxt);
        cur = nxt;
    }
    t.extension = cur;
    return t;
}

ExtensionList strongly_admissible(const AF& f) { return extensions(f, Semantics::sad); }

bool has_labellings(Semantics sigma) {
    switch (sigma) {
        case Semantics::stb:
        case Semantics::semi:
        case Semantics::eag:
        case Semantics::prf:
        case Semantics::id:
        case Semantics::grd:
        case Semantics::com:
            return true;
        default:
            return false;
    }
}

Labelling labelling_of(const AF& f, const ArgSet& e) {
    ArgSet out = f.graph().plus(e, f.all());
    return {e, out, f.all() - e - out};
}

std::vector<Labelling> labellings(const AF& f, Semantics sigma) {
    if (!has_labellings(sigma))
        throw Unsupported("labellings are not defined for " + to_string(sigma) + " semantics");
    std::vector<Labelling> out;
    for (const auto& e : extensions(f, sigma)) out.push_back(labelling_of(f, e));
    return out;
}

}  // namespace afkit
