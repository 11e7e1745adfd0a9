#include "afkit/realizability.hpp"

#include <algorithm>
#include <set>

#include "afkit/error.hpp"

namespace afkit {

namespace {

bool family_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Index view of a family over its sorted argument names.
struct Indexed {
    std::vector<std::string> args;
    std::vector<ArgSet> sets;
};

Indexed index_family(const SetFamily& s) {
    Indexed ix;
    for (const auto& m : s) ix.args.insert(ix.args.end(), m.begin(), m.end());
    std::sort(ix.args.begin(), ix.args.end());
    ix.args.erase(std::unique(ix.args.begin(), ix.args.end()), ix.args.end());
    if (static_cast<int>(ix.args.size()) > kMaxArgs) throw LimitExceeded("too many arguments in set family");
    for (const auto& m : s) {
        ArgSet a;
        for (const auto& n : m)
            a.set(static_cast<int>(std::lower_bound(ix.args.begin(), ix.args.end(), n) - ix.args.begin()));
        ix.sets.push_back(a);
    }
    return ix;
}

// partner[a] = args occurring together with a in some member.
std::vector<ArgSet> pair_table(const std::vector<ArgSet>& sets, int n) {
    std::vector<ArgSet> partner(n);
    for (const auto& s : sets)
        for (int a = s.first(); a >= 0; a = s.next(a)) partner[a] |= s;
    return partner;
}

bool contains(const std::set<std::vector<int>>& members, const ArgSet& s) { return members.count(s.members()) > 0; }

bool tight_of(const std::vector<ArgSet>& sets, int n) {
    auto partner = pair_table(sets, n);
    std::set<std::vector<int>> members;
    for (const auto& s : sets) members.insert(s.members());
    for (const auto& s : sets)
        for (int a = 0; a < n; ++a) {
            ArgSet t = s;
            t.set(a);
            if (contains(members, t)) continue;
            if (s.subset_of(partner[a])) return false;
        }
    return true;
}

std::vector<ArgSet> downward_closure(const std::vector<ArgSet>& sets) {
    std::set<std::vector<int>> seen;
    std::vector<ArgSet> out;
    for (const auto& s : sets) {
        std::vector<int> m = s.members();
        if (m.size() > 30) throw LimitExceeded("member too large for downward closure");
        uint64_t total = uint64_t{1} << m.size();
        for (uint64_t bits = 0; bits < total; ++bits) {
            ArgSet sub;
            for (size_t i = 0; i < m.size(); ++i)
                if (bits >> i & 1) sub.set(m[i]);
            if (seen.insert(sub.members()).second) out.push_back(sub);
        }
    }
    return out;
}

AF build(std::vector<std::string> names, const std::vector<Attack>& atts) { return AF(std::move(names), atts); }

}  // namespace

SetFamily canonical_family(SetFamily s) {
    for (auto& m : s) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    std::sort(s.begin(), s.end(), family_less);
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

SetAnalysis analyze(const SetFamily& fam) {
    SetFamily s = canonical_family(fam);
    Indexed ix = index_family(s);
    int n = static_cast<int>(ix.args.size());
    SetAnalysis r;
    r.args = ix.args;
    r.nonempty = !s.empty();
    r.singleton = s.size() == 1;
    r.contains_empty = !s.empty() && s.front().empty();

    auto partner = pair_table(ix.sets, n);
    for (int a = 0; a < n; ++a)
        for (int b = partner[a].next(a - 1); b >= 0; b = partner[a].next(b)) r.pairs.emplace_back(ix.args[a], ix.args[b]);

    r.incomparable = true;
    for (size_t i = 0; i < ix.sets.size() && r.incomparable; ++i)
        for (size_t j = 0; j < ix.sets.size(); ++j)
            if (i != j && ix.sets[i].subset_of(ix.sets[j])) {
                r.incomparable = false;
                break;
            }

    std::set<std::vector<int>> members;
    for (const auto& m : ix.sets) members.insert(m.members());
    auto dcl = downward_closure(ix.sets);
    r.downward_closed = dcl.size() == ix.sets.size();
    r.tight = tight_of(ix.sets, n);
    r.dcl_tight = tight_of(dcl, n);

    r.conflict_sensitive = true;
    for (size_t i = 0; i < ix.sets.size() && r.conflict_sensitive; ++i)
        for (size_t j = i + 1; j < ix.sets.size(); ++j) {
            ArgSet u = ix.sets[i] | ix.sets[j];
            if (contains(members, u)) continue;
            bool has_conflict = false;
            for (int a = u.first(); a >= 0; a = u.next(a))
                if (!u.subset_of(partner[a])) {
                    has_conflict = true;
                    break;
                }
            if (!has_conflict) {
                r.conflict_sensitive = false;
                break;
            }
        }
    return r;
}

std::string to_string(Variant v) {
    switch (v) {
        case Variant::finite:
            return "finite";
        case Variant::finite_compact:
            return "compact";
        default:
            return "analytic";
    }
}

Variant parse_variant(std::string_view tag) {
    if (tag == "finite") return Variant::finite;
    if (tag == "compact" || tag == "finite_compact") return Variant::finite_compact;
    if (tag == "analytic" || tag == "finite_analytic") return Variant::finite_analytic;
    throw InvalidArgument("unknown variant '" + std::string(tag) + "'");
}

bool has_signature(Semantics sigma) {
    switch (sigma) {
        case Semantics::cf:
        case Semantics::nav:
        case Semantics::stb:
        case Semantics::stg:
        case Semantics::adm:
        case Semantics::prf:
        case Semantics::semi:
        case Semantics::grd:
        case Semantics::id:
        case Semantics::eag:
            return true;
        default:
            return false;
    }
}

SignatureVerdict decide_signature(const SetFamily& s, Semantics sigma, Variant variant) {
    if (sigma == Semantics::com) throw Unsupported("the complete signature is an open problem");
    if (!has_signature(sigma)) throw Unsupported("no signature result for " + to_string(sigma));
    SetAnalysis a = analyze(s);
    SignatureVerdict v;
    switch (sigma) {
        case Semantics::cf:
            v.holds = a.nonempty && a.downward_closed && a.tight;
            v.condition = "non-empty, downward-closed, tight";
            break;
        case Semantics::nav:
            v.holds = a.nonempty && a.incomparable && a.dcl_tight;
            v.condition = "non-empty, incomparable, downward closure tight";
            break;
        case Semantics::stb:
            v.holds = a.incomparable && a.tight;
            v.condition = "incomparable, tight";
            break;
        case Semantics::stg:
            v.holds = a.nonempty && a.incomparable && a.tight;
            v.condition = "non-empty, incomparable, tight";
            break;
        case Semantics::adm:
            v.holds = a.contains_empty && a.conflict_sensitive;
            v.condition = "contains the empty set, conflict-sensitive";
            break;
        case Semantics::prf:
        case Semantics::semi:
            v.holds = a.nonempty && a.incomparable && a.conflict_sensitive;
            v.condition = "non-empty, incomparable, conflict-sensitive";
            break;
        default:
            v.holds = a.singleton;
            v.condition = "exactly one set";
            break;
    }
    bool exact_always = sigma == Semantics::cf || sigma == Semantics::nav || sigma == Semantics::grd ||
                        sigma == Semantics::id || sigma == Semantics::eag;
    if (variant == Variant::finite_compact && !exact_always) v.decided = false;
    if (variant == Variant::finite_analytic && !exact_always && sigma != Semantics::stb && sigma != Semantics::stg)
        v.decided = false;
    return v;
}

AF canonical_cf(const SetFamily& fam) {
    Indexed ix = index_family(canonical_family(fam));
    int n = static_cast<int>(ix.args.size());
    auto partner = pair_table(ix.sets, n);
    std::vector<Attack> atts;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!partner[a].test(b)) atts.emplace_back(ix.args[a], ix.args[b]);
    return build(ix.args, atts);
}

AF canonical_stb(const SetFamily& fam) {
    SetFamily s = canonical_family(fam);
    AF cf = canonical_cf(s);
    SetFamily undesired;
    for (const auto& e : named_extensions(cf, Semantics::stb))
        if (!std::binary_search(s.begin(), s.end(), e, family_less)) undesired.push_back(e);
    std::vector<std::string> names = cf.names();
    std::vector<Attack> atts = cf.attack_list();
    for (size_t i = 0; i < undesired.size(); ++i) {
        std::string blocker = "_bE" + std::to_string(i);
        names.push_back(blocker);
        atts.emplace_back(blocker, blocker);
        for (const auto& a : cf.names())
            if (!std::binary_search(undesired[i].begin(), undesired[i].end(), a)) atts.emplace_back(a, blocker);
    }
    return build(names, atts);
}

SetFamily defense_formula_cnf(const SetFamily& fam, const std::string& a) {
    SetFamily s = canonical_family(fam);
    std::vector<std::vector<std::string>> terms;
    for (const auto& m : s)
        if (std::binary_search(m.begin(), m.end(), a)) {
            std::vector<std::string> t;
            for (const auto& x : m)
                if (x != a) t.push_back(x);
            terms.push_back(t);
        }
    if (terms.empty()) throw InvalidArgument("argument '" + a + "' does not occur in the set family");
    for (const auto& t : terms)
        if (t.empty()) return {};
    // Distribute the disjunction of terms into clauses, pruning subsumed ones.
    std::vector<std::set<std::string>> clauses{{}};
    for (const auto& t : terms) {
        std::vector<std::set<std::string>> next;
        for (const auto& c : clauses)
            for (const auto& lit : t) {
                auto d = c;
                d.insert(lit);
                next.push_back(std::move(d));
            }
        std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        clauses.clear();
        for (const auto& c : next) {
            bool subsumed = false;
            for (const auto& k : clauses)
                if (std::includes(c.begin(), c.end(), k.begin(), k.end())) {
                    subsumed = true;
                    break;
                }
            if (!subsumed) clauses.push_back(c);
        }
    }
    SetFamily out;
    for (const auto& c : clauses) out.emplace_back(c.begin(), c.end());
    return canonical_family(out);
}

AF canonical_def(const SetFamily& fam) {
    SetFamily s = canonical_family(fam);
    AF cf = canonical_cf(s);
    std::vector<std::string> names = cf.names();
    std::vector<Attack> atts = cf.attack_list();
    for (const auto& a : cf.names()) {
        SetFamily cnf = defense_formula_cnf(s, a);
        for (size_t j = 0; j < cnf.size(); ++j) {
            std::string alpha = "_alpha_" + a + "_" + std::to_string(j);
            names.push_back(alpha);
            atts.emplace_back(alpha, alpha);
            atts.emplace_back(alpha, a);
            for (const auto& b : cnf[j]) atts.emplace_back(b, alpha);
        }
    }
    return build(names, atts);
}

AF semi_translation(const AF& f) {
    std::vector<std::string> names = f.names();
    std::vector<Attack> atts = f.attack_list();
    for (const auto& a : f.names()) {
        std::string p = "_p_" + a;
        names.push_back(p);
        atts.emplace_back(a, p);
        atts.emplace_back(p, p);
    }
    return build(names, atts);
}

SetFamily named_extensions(const AF& f, Semantics sigma) {
    SetFamily out;
    for (const auto& e : extensions(f, sigma)) out.push_back(f.names_of(e));
    return out;
}

std::optional<AF> realize(const SetFamily& fam, Semantics sigma) {
    SetFamily s = canonical_family(fam);
    if (!decide_signature(s, sigma, Variant::finite).holds) return std::nullopt;
    AF out;
    switch (sigma) {
        case Semantics::cf:
        case Semantics::nav:
            out = canonical_cf(s);
            break;
        case Semantics::stb:
        case Semantics::stg:
            out = canonical_stb(s);
            break;
        case Semantics::adm:
            out = canonical_def(s);
            break;
        case Semantics::prf:
        case Semantics::semi: {
            SetFamily with_empty = s;
            with_empty.push_back({});
            out = canonical_def(canonical_family(with_empty));
            if (sigma == Semantics::semi) out = semi_translation(out);
            break;
        }
        default:
            out = AF(s.front(), {});
            break;
    }
    if (named_extensions(out, sigma) != s)
        throw Defect("realization of the set family under " + to_string(sigma) + " failed verification");
    return out;
}

bool is_compact(const AF& f, Semantics sigma) {
    ArgSet covered;
    for (const auto& e : extensions(f, sigma)) covered |= e;
    return covered == f.all();
}

std::vector<std::pair<std::string, std::string>> implicit_conflicts(const AF& f, Semantics sigma) {
    auto exts = extensions(f, sigma);
    auto partner = pair_table(exts, f.size());
    std::vector<std::pair<std::string, std::string>> out;
    for (int a = 0; a < f.size(); ++a)
        for (int b = a; b < f.size(); ++b)
            if (!partner[a].test(b) && !f.attacks(a, b) && !f.attacks(b, a)) out.emplace_back(f.name(a), f.name(b));
    return out;
}

bool is_analytic(const AF& f, Semantics sigma) { return implicit_conflicts(f, sigma).empty(); }

}  // namespace afkit
