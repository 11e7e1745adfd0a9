#include "afkit/kernels.hpp"

#include "afkit/error.hpp"

namespace afkit {

namespace {

const char* const kKernelNames[] = {"k_stb",  "k_adm",  "k_grd",  "k_com", "ks_adm",
                                    "ks_grd", "ks_com", "ks_stg", "k_nav", "identity"};
const char* const kNotionNames[] = {"ordinary", "E", "N", "S", "W", "L", "ND", "D", "LD", "U"};

// forall c: (b,c) in R -> one of the listed attacks exists.
template <class Pred>
bool all_targets(const Graph& g, int b, Pred ok) {
    const ArgSet& t = g.succ[b];
    for (int c = t.first(); c >= 0; c = t.next(c))
        if (!ok(c)) return false;
    return true;
}

bool redundant(const Graph& g, KernelId k, int a, int b) {
    auto R = [&](int x, int y) { return g.attacks(x, y); };
    switch (k) {
        case KernelId::k_stb:
            return R(a, a);
        case KernelId::k_adm:
            return R(a, a) && (R(b, a) || R(b, b));
        case KernelId::k_grd:
            return R(b, b) && (R(a, a) || R(b, a));
        case KernelId::k_com:
            return R(a, a) && R(b, b);
        case KernelId::ks_adm:
            return (R(a, a) && (R(b, a) || R(b, b))) ||
                   (R(b, b) && all_targets(g, b, [&](int c) { return R(a, c) || R(c, a) || R(c, c) || R(c, b); }));
        case KernelId::ks_grd:
            return (R(b, b) && (R(a, a) || R(b, a))) ||
                   (R(b, b) && all_targets(g, b, [&](int c) { return R(a, c) || R(c, a) || R(c, c); }));
        case KernelId::ks_com:
            return (R(a, a) && R(b, b)) ||
                   (R(b, b) && !R(b, a) &&
                    all_targets(g, b, [&](int c) { return R(a, c) || R(c, a) || R(c, c); }));
        case KernelId::ks_stg: {
            if (R(a, a)) return true;
            for (int c = 0; c < g.n; ++c)
                if (c != a && !R(c, c)) return false;
            return true;
        }
        default:
            return false;
    }
}

}  // namespace

std::string to_string(KernelId k) { return kKernelNames[static_cast<int>(k)]; }
std::string to_string(Notion n) { return kNotionNames[static_cast<int>(n)]; }
std::string to_string(Flavor f) { return f == Flavor::extension ? "extension" : "labelling"; }

std::string to_string(Answer a) {
    switch (a) {
        case Answer::equivalent:
            return "equivalent";
        case Answer::not_equivalent:
            return "not_equivalent";
        default:
            return "unsupported";
    }
}

std::string to_string(Method m) {
    switch (m) {
        case Method::kernel:
            return "kernel";
        case Method::identity:
            return "identity";
        case Method::criterion:
            return "criterion";
        default:
            return "none";
    }
}

KernelId parse_kernel(std::string_view tag) {
    for (int i = 0; i < 10; ++i)
        if (tag == kKernelNames[i]) return static_cast<KernelId>(i);
    throw InvalidArgument("unknown kernel '" + std::string(tag) + "'");
}

Notion parse_notion(std::string_view tag) {
    for (int i = 0; i < 10; ++i)
        if (tag == kNotionNames[i]) return static_cast<Notion>(i);
    throw InvalidArgument("unknown notion '" + std::string(tag) + "'");
}

AF kernel(const AF& f, KernelId k) {
    if (k == KernelId::identity) return f;
    const Graph& g = f.graph();
    Graph out(g.n);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            bool keep;
            if (k == KernelId::k_nav)
                keep = g.attacks(a, b) || (a != b && (g.attacks(a, a) || g.attacks(b, a) || g.attacks(b, b)));
            else
                keep = g.attacks(a, b) && (a == b || !redundant(g, k, a, b));
            if (keep) out.add(a, b);
        }
    return AF::from_graph(f.names(), std::move(out));
}

std::optional<KernelId> characterizing_kernel(Notion notion, Semantics sigma, Flavor flavor) {
    using S = Semantics;
    using K = KernelId;
    if (flavor == Flavor::labelling) {
        if (!has_labellings(sigma) && sigma != S::adm) return std::nullopt;
        switch (notion) {
            case Notion::D:
            case Notion::LD:
            case Notion::U:
                return K::identity;
            case Notion::E:
            case Notion::N:
            case Notion::S:
            case Notion::ND:
            case Notion::L:
                break;
            default:
                return std::nullopt;
        }
        switch (sigma) {
            case S::stb:
                if (notion == Notion::L) return std::nullopt;
                return K::k_stb;
            case S::semi:
            case S::eag:
            case S::prf:
            case S::id:
                return K::k_adm;
            case S::adm:
                return K::k_com;
            case S::grd:
                if (notion == Notion::L) return std::nullopt;
                return K::k_grd;
            case S::com:
                if (notion == Notion::L) return std::nullopt;
                return K::k_com;
            default:
                return std::nullopt;
        }
    }

    if (sigma == S::cf) return std::nullopt;
    if (sigma == S::sad) return notion == Notion::E ? std::optional(K::k_grd) : std::nullopt;
    switch (notion) {
        case Notion::D:
        case Notion::LD:
        case Notion::U:
            return K::identity;
        case Notion::E:
        case Notion::N:
            switch (sigma) {
                case S::stg:
                case S::stb:
                    return K::k_stb;
                case S::semi:
                case S::eag:
                case S::adm:
                case S::prf:
                case S::id:
                    return K::k_adm;
                case S::grd:
                    return K::k_grd;
                case S::com:
                    return K::k_com;
                case S::nav:
                    return K::k_nav;
                case S::cf2:
                case S::stg2:
                    return K::identity;
                default:
                    return std::nullopt;
            }
        case Notion::S:
            switch (sigma) {
                case S::stg:
                case S::stb:
                    return K::k_stb;
                case S::semi:
                case S::eag:
                    return K::k_adm;
                case S::adm:
                case S::prf:
                case S::id:
                    return K::ks_adm;
                case S::grd:
                    return K::ks_grd;
                case S::com:
                    return K::ks_com;
                case S::nav:
                    return K::k_nav;
                default:
                    return std::nullopt;
            }
        case Notion::L:
            switch (sigma) {
                case S::stg:
                    return K::ks_stg;
                case S::semi:
                case S::eag:
                case S::adm:
                case S::prf:
                case S::id:
                    return K::k_adm;
                case S::nav:
                    return K::k_nav;
                default:
                    return std::nullopt;
            }
        case Notion::ND:
            if (sigma == S::stb) return K::k_stb;
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::vector<std::vector<std::string>> named(const AF& f, const ExtensionList& list) {
    std::vector<std::vector<std::string>> out;
    for (const auto& e : list) out.push_back(f.names_of(e));
    return out;
}

namespace {

using NamedLabelling = std::vector<std::vector<std::string>>;

std::vector<NamedLabelling> named_labellings(const AF& f, Semantics sigma) {
    std::vector<NamedLabelling> out;
    for (const auto& l : labellings(f, sigma)) out.push_back({f.names_of(l.in), f.names_of(l.out), f.names_of(l.undec)});
    return out;
}

bool normal_deletion_criterion(const AF& f, const AF& g, Semantics sigma, std::string& detail) {
    ArgSet shared_f, shared_g;
    for (int i = 0; i < f.size(); ++i)
        if (g.contains(f.name(i))) shared_f.set(i);
    for (int i = 0; i < g.size(); ++i)
        if (f.contains(g.name(i))) shared_g.set(i);

    for (const AF* x : {&f, &g}) {
        const ArgSet& shared = x == &f ? shared_f : shared_g;
        ArgSet own = x->all() - shared;
        if (!own.subset_of(x->loop_set())) {
            detail = "a non-shared argument is not self-attacking";
            return false;
        }
        ArgSet nl = shared - x->loop_set();
        for (int b = own.first(); b >= 0; b = own.next(b))
            for (int a = nl.first(); a >= 0; a = nl.next(a)) {
                if (!x->attacks(b, a)) continue;
                if (sigma == Semantics::adm) {
                    if (!x->attacks(a, b)) {
                        detail = "attack (" + x->name(b) + "," + x->name(a) + ") is not counter-attacked";
                        return false;
                    }
                } else {
                    detail = "non-shared argument " + x->name(b) + " attacks " + x->name(a);
                    return false;
                }
            }
    }
    KernelId k = sigma == Semantics::adm ? KernelId::ks_adm
                 : sigma == Semantics::com ? KernelId::ks_com
                                           : KernelId::ks_grd;
    if (!(kernel(f.restrict_to(shared_f), k) == kernel(g.restrict_to(shared_g), k))) {
        detail = "kernels of the shared part differ (" + to_string(k) + ")";
        return false;
    }
    detail = "shared part kernels agree (" + to_string(k) + ")";
    return true;
}

}  // namespace

Verdict decide_equivalence(const AF& f, const AF& g, Notion notion, Semantics sigma, Flavor flavor) {
    Verdict v;
    if (notion == Notion::ordinary) {
        bool same;
        if (flavor == Flavor::labelling) {
            if (!has_labellings(sigma)) {
                v.detail = "labellings are not defined for " + to_string(sigma);
                return v;
            }
            same = named_labellings(f, sigma) == named_labellings(g, sigma);
        } else {
            same = named(f, extensions(f, sigma)) == named(g, extensions(g, sigma));
        }
        v.answer = same ? Answer::equivalent : Answer::not_equivalent;
        v.method = Method::criterion;
        v.detail = flavor == Flavor::labelling ? "labellings compared" : "extensions compared";
        return v;
    }
    if (auto k = characterizing_kernel(notion, sigma, flavor)) {
        v.kernel = k;
        v.method = *k == KernelId::identity ? Method::identity : Method::kernel;
        v.answer = kernel(f, *k) == kernel(g, *k) ? Answer::equivalent : Answer::not_equivalent;
        return v;
    }
    if (flavor == Flavor::extension && notion == Notion::W && sigma == Semantics::stb) {
        auto ef = extensions(f, Semantics::stb), eg = extensions(g, Semantics::stb);
        bool both_none = ef.empty() && eg.empty();
        bool same = f.names() == g.names() && named(f, ef) == named(g, eg);
        v.method = Method::criterion;
        v.answer = both_none || same ? Answer::equivalent : Answer::not_equivalent;
        v.detail = both_none ? "neither has a stable extension"
                   : same    ? "same arguments and same stable extensions"
                             : "stable extensions or arguments differ";
        return v;
    }
    if (flavor == Flavor::extension && notion == Notion::ND &&
        (sigma == Semantics::adm || sigma == Semantics::com || sigma == Semantics::grd)) {
        v.method = Method::criterion;
        v.answer = normal_deletion_criterion(f, g, sigma, v.detail) ? Answer::equivalent : Answer::not_equivalent;
        return v;
    }
    v.detail = "no characterization for " + to_string(notion) + "/" + to_string(sigma) + " (" +
               to_string(flavor) + ")";
    return v;
}

}  // namespace afkit
