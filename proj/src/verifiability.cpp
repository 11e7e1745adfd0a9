#include "afkit/verifiability.hpp"

#include <algorithm>

#include "afkit/error.hpp"

namespace afkit {

namespace {

// Venn regions of (P, Q): bit 0 = P∩Q, bit 1 = P∖Q, bit 2 = Q∖P.
constexpr int kPlus = 0b011, kMinus = 0b101, kPm = 0b010, kMp = 0b100, kCap = 0b001, kCup = 0b111, kDelta = 0b110;

struct NodeInfo {
    const char* tag;
    const char* symbol;
    std::vector<int> coords;
};

const std::vector<NodeInfo>& nodes() {
    static const std::vector<NodeInfo> n = {
        {"eps", "ε", {}},
        {"plus", "+", {kPlus}},
        {"minus", "−", {kMinus}},
        {"pm", "±", {kPm}},
        {"mp", "∓", {kMp}},
        {"cap", "∩", {kCap}},
        {"cup", "∪", {kCup}},
        {"delta", "Δ", {kDelta}},
        {"plus_pm", "+±", {kPlus, kPm}},
        {"plus_mp", "+∓", {kPlus, kMp}},
        {"pm_mp", "±∓", {kPm, kMp}},
        {"cap_cup", "∩∪", {kCap, kCup}},
        {"minus_pm", "−±", {kMinus, kPm}},
        {"minus_mp", "−∓", {kMinus, kMp}},
        {"plus_minus", "+−", {kPlus, kMinus}},
    };
    return n;
}

const std::vector<int>& coords(Neighborhood x) { return nodes()[static_cast<int>(x)].coords; }

int signature(Neighborhood x, int region) {
    int sig = 0;
    const auto& c = coords(x);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] >> region & 1) sig |= 1 << i;
    return sig;
}

ArgSet apply(int mask, const ArgSet& p, const ArgSet& q) {
    ArgSet out;
    if (mask & 1) out |= p & q;
    if (mask & 2) out |= p - q;
    if (mask & 4) out |= q - p;
    return out;
}

bool maximal_in(const ArgSet& s, const std::vector<ArgSet>& pool) {
    for (const auto& t : pool)
        if (s.subset_of(t) && !(s == t)) return false;
    return true;
}

}  // namespace

std::string to_string(Neighborhood x) { return nodes()[static_cast<int>(x)].tag; }
std::string to_symbol(Neighborhood x) { return nodes()[static_cast<int>(x)].symbol; }
Neighborhood neighborhood_at(int i) { return static_cast<Neighborhood>(i); }

Neighborhood parse_neighborhood(std::string_view tag) {
    std::string t(tag);
    // Accept ASCII minus for the symbol forms.
    std::string alt;
    for (char c : t) alt += c == '-' ? std::string("−") : std::string(1, c);
    for (int i = 0; i < kNeighborhoodCount; ++i)
        if (t == nodes()[i].tag || t == nodes()[i].symbol || alt == nodes()[i].symbol)
            return static_cast<Neighborhood>(i);
    throw InvalidArgument("unknown neighborhood function '" + t + "'");
}

int arity(Neighborhood x) { return static_cast<int>(coords(x).size()); }

std::vector<ArgSet> neighborhood(Neighborhood x, const ArgSet& s_plus, const ArgSet& s_minus) {
    std::vector<ArgSet> out;
    for (int m : coords(x)) out.push_back(apply(m, s_plus, s_minus));
    return out;
}

bool more_informative(Neighborhood x, Neighborhood y) {
    for (int c : coords(y))
        for (int r = 0; r < 3; ++r) {
            if (!(c >> r & 1)) continue;
            int sig = signature(x, r);
            if (sig == 0) return false;
            for (int r2 = 0; r2 < 3; ++r2)
                if (signature(x, r2) == sig && !(c >> r2 & 1)) return false;
        }
    return true;
}

std::vector<std::pair<Neighborhood, Neighborhood>> lattice_arcs() {
    using N = Neighborhood;
    std::vector<std::pair<N, N>> arcs = {
        {N::plus, N::plus_pm},   {N::plus, N::plus_mp},   {N::pm, N::plus_pm},      {N::pm, N::pm_mp},
        {N::pm, N::minus_pm},    {N::cap, N::plus_pm},    {N::cap, N::cap_cup},     {N::cap, N::minus_mp},
        {N::delta, N::pm_mp},    {N::delta, N::cap_cup},  {N::cup, N::plus_mp},     {N::cup, N::cap_cup},
        {N::cup, N::minus_pm},   {N::mp, N::plus_mp},     {N::mp, N::pm_mp},        {N::mp, N::minus_mp},
        {N::minus, N::minus_pm}, {N::minus, N::minus_mp},
    };
    for (N two : {N::plus_pm, N::plus_mp, N::pm_mp, N::cap_cup, N::minus_pm, N::minus_mp})
        arcs.emplace_back(two, N::plus_minus);
    for (N one : {N::plus, N::minus, N::pm, N::mp, N::cap, N::cup, N::delta}) arcs.emplace_back(N::eps, one);
    return arcs;
}

VerificationClassData verification_class(const AF& f, Neighborhood x) {
    VerificationClassData d;
    d.cls = x;
    for (const auto& s : extensions(f, Semantics::cf))
        d.entries.push_back({s, neighborhood(x, range(f, s), anti_range(f, s))});
    return d;
}

VerificationClassData reduce(const VerificationClassData& data, Neighborhood y) {
    Neighborhood x = data.cls;
    if (!more_informative(x, y))
        throw InsufficientClass("class " + to_symbol(x) + " is not at least as informative as " + to_symbol(y));
    int k = arity(x);
    VerificationClassData out;
    out.cls = y;
    for (const auto& e : data.entries) {
        VerificationEntry r{e.set, {}};
        for (int c : coords(y)) {
            ArgSet val;
            int done = 0;
            for (int reg = 0; reg < 3; ++reg) {
                if (!(c >> reg & 1)) continue;
                int sig = signature(x, reg);
                if (done >> sig & 1) continue;
                done |= 1 << sig;
                ArgSet part = ArgSet::range(kMaxArgs);
                ArgSet others;
                for (int i = 0; i < k; ++i) {
                    if (sig >> i & 1)
                        part &= e.info[i];
                    else
                        others |= e.info[i];
                }
                val |= part - others;
            }
            r.info.push_back(val);
        }
        out.entries.push_back(std::move(r));
    }
    return out;
}

bool has_exact_class(Semantics sigma) {
    switch (sigma) {
        case Semantics::nav:
        case Semantics::stb:
        case Semantics::stg:
        case Semantics::adm:
        case Semantics::prf:
        case Semantics::id:
        case Semantics::semi:
        case Semantics::eag:
        case Semantics::grd:
        case Semantics::sad:
        case Semantics::com:
            return true;
        default:
            return false;
    }
}

Neighborhood exact_class(Semantics sigma) {
    switch (sigma) {
        case Semantics::nav:
            return Neighborhood::eps;
        case Semantics::stb:
        case Semantics::stg:
            return Neighborhood::plus;
        case Semantics::adm:
        case Semantics::prf:
        case Semantics::id:
            return Neighborhood::mp;
        case Semantics::semi:
        case Semantics::eag:
            return Neighborhood::plus_mp;
        case Semantics::grd:
        case Semantics::sad:
            return Neighborhood::minus_pm;
        case Semantics::com:
            return Neighborhood::plus_minus;
        default:
            throw Unsupported("no verification class for " + to_string(sigma));
    }
}

namespace {

// Admissible entries from ∓ data (coordinate index `mp`).
std::vector<size_t> admissible_entries(const VerificationClassData& d, int mp) {
    std::vector<size_t> out;
    for (size_t i = 0; i < d.entries.size(); ++i)
        if (d.entries[i].info[mp].empty()) out.push_back(i);
    return out;
}

ExtensionList maximal_subsets_of(const VerificationClassData& d, const std::vector<size_t>& adm, const ArgSet& bound) {
    std::vector<ArgSet> pool;
    for (size_t i : adm)
        if (d.entries[i].set.subset_of(bound)) pool.push_back(d.entries[i].set);
    ExtensionList out;
    for (const auto& s : pool)
        if (maximal_in(s, pool)) out.push_back(s);
    return out;
}

// Strongly admissible entries of −± data via the chain criterion.
std::vector<char> chain_reachable(const VerificationClassData& d) {
    size_t n = d.entries.size();
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return d.entries[a].set.count() < d.entries[b].set.count(); });
    std::vector<char> ok(n, 0);
    for (size_t oi = 0; oi < n; ++oi) {
        size_t i = order[oi];
        const auto& s = d.entries[i];
        if (s.set.empty()) {
            ok[i] = 1;
            continue;
        }
        ArgSet attackers = s.info[0] - s.set;
        for (size_t oj = 0; oj < oi && !ok[i]; ++oj) {
            size_t j = order[oj];
            const auto& t = d.entries[j];
            if (!ok[j] || !t.set.subset_of(s.set) || t.set == s.set) continue;
            if (attackers.subset_of(t.info[1] | t.info[0])) ok[i] = 1;
        }
    }
    return ok;
}

}  // namespace

ExtensionList verify(Semantics sigma, const VerificationClassData& data, const ArgSet& args) {
    Neighborhood e = exact_class(sigma);
    VerificationClassData d = reduce(data, e);
    ExtensionList out;
    const auto& en = d.entries;
    switch (sigma) {
        case Semantics::nav: {
            std::vector<ArgSet> pool;
            for (const auto& x : en) pool.push_back(x.set);
            for (const auto& s : pool)
                if (maximal_in(s, pool)) out.push_back(s);
            break;
        }
        case Semantics::stb:
            for (const auto& x : en)
                if (x.info[0] == args) out.push_back(x.set);
            break;
        case Semantics::stg: {
            std::vector<ArgSet> ranges;
            for (const auto& x : en) ranges.push_back(x.info[0]);
            for (const auto& x : en)
                if (maximal_in(x.info[0], ranges)) out.push_back(x.set);
            break;
        }
        case Semantics::adm:
        case Semantics::prf:
        case Semantics::id: {
            auto adm = admissible_entries(d, 0);
            if (sigma == Semantics::adm) {
                for (size_t i : adm) out.push_back(en[i].set);
                break;
            }
            auto prf = maximal_subsets_of(d, adm, args);
            if (sigma == Semantics::prf) {
                out = prf;
                break;
            }
            out = maximal_subsets_of(d, adm, intersection_of(prf, args));
            break;
        }
        case Semantics::semi:
        case Semantics::eag: {
            auto adm = admissible_entries(d, 1);
            std::vector<ArgSet> ranges;
            for (size_t i : adm) ranges.push_back(en[i].info[0]);
            ExtensionList semi;
            for (size_t i : adm)
                if (maximal_in(en[i].info[0], ranges)) semi.push_back(en[i].set);
            if (sigma == Semantics::semi) {
                out = semi;
                break;
            }
            out = maximal_subsets_of(d, adm, intersection_of(semi, args));
            break;
        }
        case Semantics::sad:
        case Semantics::grd: {
            auto ok = chain_reachable(d);
            for (size_t i = 0; i < en.size(); ++i) {
                if (!ok[i]) continue;
                if (sigma == Semantics::sad) {
                    out.push_back(en[i].set);
                    continue;
                }
                ArgSet hit = en[i].info[1] | en[i].info[0];
                bool extendable = false;
                for (const auto& b : en)
                    if (en[i].set.subset_of(b.set) && !(b.set == en[i].set) && (b.info[0] - b.set).subset_of(hit)) {
                        extendable = true;
                        break;
                    }
                if (!extendable) out.push_back(en[i].set);
            }
            break;
        }
        case Semantics::com:
            for (const auto& x : en) {
                ArgSet out_s = x.info[0] - x.set;
                if (!(x.info[1] - x.set).subset_of(out_s)) continue;
                bool extendable = false;
                for (const auto& b : en)
                    if (x.set.subset_of(b.set) && !(b.set == x.set) && (b.info[1] - b.set).subset_of(out_s)) {
                        extendable = true;
                        break;
                    }
                if (!extendable) out.push_back(x.set);
            }
            break;
        default:
            throw Unsupported("no verification criterion for " + to_string(sigma));
    }
    canonicalize(out);
    return out;
}

}  // namespace afkit
