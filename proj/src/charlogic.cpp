#include "afkit/charlogic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "afkit/error.hpp"

namespace afkit {

IdSet IdSet::full(int n) {
    IdSet s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
}

bool IdSet::subset_of(const IdSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

IdSet IdSet::operator&(const IdSet& o) const {
    IdSet r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
}

IdSet IdSet::operator|(const IdSet& o) const {
    IdSet r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
    return r;
}

std::vector<int> IdSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

FiniteLogic::FiniteLogic(std::vector<std::string> atoms, std::vector<std::string> interpretations,
                         std::vector<IdSet> models)
    : atoms_(std::move(atoms)), interps_(std::move(interpretations)), models_(std::move(models)) {
    if (atom_count() > kMaxAtoms)
        throw LimitExceeded("language has " + std::to_string(atom_count()) + " atoms, the cap is " +
                            std::to_string(kMaxAtoms));
    auto sorted = atoms_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidArgument("duplicate atom");
    if (models_.size() != theory_count()) throw InvalidArgument("model table must cover every theory");
    for (const auto& m : models_)
        if (m.size() != static_cast<int>(interps_.size()))
            throw InvalidArgument("model set sized for a different interpretation count");
}

std::string FiniteLogic::theory_name(Theory t) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < atom_count(); ++i)
        if (t >> i & 1) {
            if (!first) out += ",";
            out += atoms_[i];
            first = false;
        }
    return out + "}";
}

Theory FiniteLogic::parse_theory(const std::string& text) const {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '{' && c != '}') s += c;
    Theory t = 0;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto it = std::find(atoms_.begin(), atoms_.end(), tok);
        if (it == atoms_.end()) throw InvalidArgument("unknown atom '" + tok + "'");
        t |= Theory{1} << (it - atoms_.begin());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return t;
}

namespace {

bool theory_less(Theory a, Theory b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
}

// Interns model sets so that equal sets share an id.
std::vector<int> model_ids(const FiniteLogic& logic) {
    std::map<IdSet, int> ids;
    std::vector<int> out(logic.theory_count());
    for (Theory t = 0; t < logic.theory_count(); ++t)
        out[t] = ids.emplace(logic.models(t), static_cast<int>(ids.size())).first->second;
    return out;
}

}  // namespace

EquivalencePartition strong_eq_classes(const FiniteLogic& logic) {
    auto ids = model_ids(logic);
    Theory n = logic.theory_count();
    std::map<std::vector<int>, int> by_sig;
    EquivalencePartition p;
    p.block_of.assign(n, -1);
    std::vector<Theory> order(n);
    for (Theory t = 0; t < n; ++t) order[t] = t;
    std::sort(order.begin(), order.end(), theory_less);
    for (Theory t : order) {
        std::vector<int> sig(n);
        for (Theory u = 0; u < n; ++u) sig[u] = ids[t | u];
        auto [it, fresh] = by_sig.emplace(std::move(sig), static_cast<int>(p.blocks.size()));
        if (fresh) p.blocks.push_back({{}, t, 0});
        auto& b = p.blocks[it->second];
        b.members.push_back(t);
        b.cover |= t;
        p.block_of[t] = it->second;
    }
    return p;
}

bool strongly_equivalent(const FiniteLogic& logic, Theory a, Theory b) {
    for (Theory u = 0; u < logic.theory_count(); ++u)
        if (!(logic.models(a | u) == logic.models(b | u))) return false;
    return true;
}

FiniteLogic canonical_characterization(const FiniteLogic& logic) {
    auto part = strong_eq_classes(logic);
    Theory n = logic.theory_count();
    std::vector<std::string> interps;
    for (Theory h = 0; h < n; ++h) interps.push_back(logic.theory_name(h));
    std::vector<IdSet> models;
    for (Theory t = 0; t < n; ++t) {
        IdSet m(static_cast<int>(n));
        for (Theory h = 0; h < n; ++h)
            if ((t & ~part.blocks[part.block_of[h]].cover) == 0) m.set(static_cast<int>(h));
        models.push_back(std::move(m));
    }
    return FiniteLogic(logic.atoms(), std::move(interps), std::move(models));
}

bool has_intersection_property(const FiniteLogic& logic) {
    int k = static_cast<int>(logic.interpretations().size());
    for (Theory t = 0; t < logic.theory_count(); ++t) {
        IdSet acc = IdSet::full(k);
        for (int i = 0; i < logic.atom_count(); ++i)
            if (t >> i & 1) acc = acc & logic.models(Theory{1} << i);
        if (!(acc == logic.models(t))) return false;
    }
    return true;
}

bool has_binary_intersection(const FiniteLogic& logic) {
    Theory n = logic.theory_count();
    for (Theory a = 0; a < n; ++a)
        for (Theory b = a; b < n; ++b)
            if (!(logic.models(a | b) == (logic.models(a) & logic.models(b)))) return false;
    return true;
}

bool is_antimonotone(const FiniteLogic& logic) {
    Theory n = logic.theory_count();
    for (Theory b = 0; b < n; ++b)
        for (Theory a = b;; a = (a - 1) & b) {
            if (!logic.models(b).subset_of(logic.models(a))) return false;
            if (a == 0) break;
        }
    return true;
}

bool is_characterization(const FiniteLogic& candidate, const FiniteLogic& target) {
    if (candidate.atoms() != target.atoms()) throw InvalidArgument("logics have different languages");
    auto part = strong_eq_classes(target);
    auto ids = model_ids(candidate);
    std::map<int, int> id_to_block, block_to_id;
    for (Theory t = 0; t < target.theory_count(); ++t) {
        int b = part.block_of[t], id = ids[t];
        if (id_to_block.emplace(id, b).first->second != b) return false;
        if (block_to_id.emplace(b, id).first->second != id) return false;
    }
    return has_intersection_property(candidate);
}

Theory canonical_consequence(const FiniteLogic& logic, Theory t) {
    Theory out = 0;
    for (Theory s = 0; s < logic.theory_count(); ++s)
        if (logic.models(t).subset_of(logic.models(s))) out |= s;
    return out;
}

ConsequenceProperties consequence_properties(const FiniteLogic& logic) {
    Theory n = logic.theory_count();
    std::vector<Theory> cn(n);
    for (Theory t = 0; t < n; ++t) cn[t] = canonical_consequence(logic, t);
    ConsequenceProperties p{true, true, true};
    for (Theory t = 0; t < n; ++t) {
        if ((t & ~cn[t]) != 0) p.increasing = false;
        if (cn[cn[t]] != cn[t]) p.idempotent = false;
        for (Theory a = t;; a = (a - 1) & t) {
            if ((cn[a] & ~cn[t]) != 0) p.monotone = false;
            if (a == 0) break;
        }
    }
    return p;
}

Theory canonical_theory(const FiniteLogic& logic, const IdSet& k) {
    Theory out = 0;
    for (Theory t = 0; t < logic.theory_count(); ++t)
        if (k.subset_of(logic.models(t))) out |= t;
    return out;
}

bool galois_check(const FiniteLogic& logic) {
    if (!is_antimonotone(logic)) return false;
    int k = static_cast<int>(logic.interpretations().size());
    auto check = [&](const IdSet& s) { return s.subset_of(logic.models(canonical_theory(logic, s))); };
    std::vector<IdSet> family;
    if (k <= 16) {
        for (uint32_t bits = 0; bits < (uint32_t{1} << k); ++bits) {
            IdSet s(k);
            for (int i = 0; i < k; ++i)
                if (bits >> i & 1) s.set(i);
            family.push_back(std::move(s));
        }
    } else {
        family.emplace_back(k);
        for (int i = 0; i < k; ++i) {
            IdSet s(k);
            s.set(i);
            family.push_back(std::move(s));
        }
        for (Theory t = 0; t < logic.theory_count(); ++t) family.push_back(logic.models(t));
    }
    // th is antimonotone and th(sigma(T)) contains T by construction; the
    // remaining conditions are checked here.
    for (const auto& s : family)
        if (!check(s)) return false;
    for (Theory t = 0; t < logic.theory_count(); ++t)
        if ((t & ~canonical_theory(logic, logic.models(t))) != 0) return false;
    return true;
}

FiniteLogic random_logic(int atoms, int interps, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> names, ids;
    for (int i = 0; i < atoms; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i < interps; ++i) ids.push_back(std::to_string(i + 1));
    std::vector<IdSet> models;
    for (Theory t = 0; t < (Theory{1} << atoms); ++t) {
        IdSet m(interps);
        for (int i = 0; i < interps; ++i)
            if (rng() & 1) m.set(i);
        models.push_back(std::move(m));
    }
    return FiniteLogic(std::move(names), std::move(ids), std::move(models));
}

int RhoLogic::index_of(const AF& f) const {
    for (size_t i = 0; i < frameworks.size(); ++i)
        if (frameworks[i] == f) return static_cast<int>(i);
    return -1;
}

namespace {

bool subframework(const AF& f, const AF& g) {
    for (const auto& n : f.names())
        if (!g.contains(n)) return false;
    for (const auto& [a, b] : f.attack_list())
        if (!g.attacks(a, b)) return false;
    return true;
}

}  // namespace

RhoLogic rho_logic(const std::vector<std::string>& universe, Semantics sigma) {
    std::vector<std::string> u = universe;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (static_cast<int>(u.size()) > kMaxRhoUniverse)
        throw InvalidArgument("rho-logic universe is limited to " + std::to_string(kMaxRhoUniverse) + " arguments");
    auto k = characterizing_kernel(Notion::E, sigma);
    if (!k) throw Unsupported("no expansion-equivalence kernel for " + to_string(sigma));
    RhoLogic r;
    r.universe = u;
    r.sigma = sigma;
    r.kernel = *k;
    int n = static_cast<int>(u.size());
    for (uint32_t am = 0; am < (uint32_t{1} << n); ++am) {
        std::vector<std::string> args;
        for (int i = 0; i < n; ++i)
            if (am >> i & 1) args.push_back(u[i]);
        std::vector<Attack> pairs;
        for (const auto& a : args)
            for (const auto& b : args) pairs.emplace_back(a, b);
        for (uint32_t rm = 0; rm < (uint32_t{1} << pairs.size()); ++rm) {
            std::vector<Attack> atts;
            for (size_t i = 0; i < pairs.size(); ++i)
                if (rm >> i & 1) atts.push_back(pairs[i]);
            r.frameworks.emplace_back(args, atts);
        }
    }
    std::sort(r.frameworks.begin(), r.frameworks.end(), [](const AF& a, const AF& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (a.names() != b.names()) return a.names() < b.names();
        if (a.attack_count() != b.attack_count()) return a.attack_count() < b.attack_count();
        return a.attack_list() < b.attack_list();
    });
    size_t m = r.frameworks.size();
    std::vector<AF> kernels;
    for (const auto& f : r.frameworks) kernels.push_back(kernel(f, r.kernel));
    std::vector<int> cls(m, -1);
    int next = 0;
    for (size_t i = 0; i < m; ++i) {
        if (cls[i] >= 0) continue;
        for (size_t j = i; j < m; ++j)
            if (cls[j] < 0 && kernels[j] == kernels[i]) cls[j] = next;
        ++next;
    }
    r.rho_prime.resize(m);
    for (size_t i = 0; i < m; ++i) {
        std::vector<char> hit(next, 0);
        for (size_t j = 0; j < m; ++j)
            if (subframework(r.frameworks[i], r.frameworks[j])) hit[cls[j]] = 1;
        for (size_t h = 0; h < m; ++h)
            if (hit[cls[h]]) r.rho_prime[i].push_back(static_cast<int>(h));
    }
    return r;
}

bool rho_characterization_holds(const RhoLogic& r) {
    size_t m = r.frameworks.size();
    std::vector<AF> kernels;
    for (const auto& f : r.frameworks) kernels.push_back(kernel(f, r.kernel));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if ((r.rho_prime[i] == r.rho_prime[j]) != (kernels[i] == kernels[j])) return false;
    return true;
}

bool rho_intersection_holds(const RhoLogic& r) {
    size_t m = r.frameworks.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) {
            int k = r.index_of(union_af(r.frameworks[i], r.frameworks[j]));
            if (k < 0) return false;
            std::vector<int> both;
            std::set_intersection(r.rho_prime[i].begin(), r.rho_prime[i].end(), r.rho_prime[j].begin(),
                                  r.rho_prime[j].end(), std::back_inserter(both));
            if (both != r.rho_prime[k]) return false;
        }
    return true;
}

}  // namespace afkit
