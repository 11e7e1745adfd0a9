#include "afkit/af.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "afkit/error.hpp"

namespace afkit {

void canonicalize(ExtensionList& list) {
    std::sort(list.begin(), list.end(), canonical_less);
    list.erase(std::unique(list.begin(), list.end()), list.end());
}

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

AF::AF(std::vector<std::string> args, const std::vector<Attack>& attacks) {
    for (const auto& a : args)
        if (!valid_name(a)) throw InvalidArgument("invalid argument name '" + a + "'");
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    if (static_cast<int>(args.size()) > kMaxArgs)
        throw LimitExceeded("framework has more than " + std::to_string(kMaxArgs) + " arguments");
    names_ = std::move(args);
    g_ = Graph(size());
    for (const auto& [a, b] : attacks) {
        int ia = index(a), ib = index(b);
        if (ia < 0 || ib < 0)
            throw InvalidArgument("attack (" + a + "," + b + ") has an undeclared endpoint");
        g_.add(ia, ib);
    }
}

AF AF::from_graph(std::vector<std::string> sorted_names, Graph g) {
    AF f;
    f.names_ = std::move(sorted_names);
    f.g_ = std::move(g);
    return f;
}

int AF::index(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == names_.end() || *it != name) return -1;
    return static_cast<int>(it - names_.begin());
}

bool AF::attacks(std::string_view a, std::string_view b) const {
    int ia = index(a), ib = index(b);
    return ia >= 0 && ib >= 0 && g_.attacks(ia, ib);
}

int AF::attack_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i) c += g_.succ[i].count();
    return c;
}

std::vector<std::pair<int, int>> AF::attack_indices() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j : g_.succ[i].members()) out.emplace_back(i, j);
    return out;
}

std::vector<Attack> AF::attack_list() const {
    std::vector<Attack> out;
    for (auto [i, j] : attack_indices()) out.emplace_back(names_[i], names_[j]);
    return out;
}

ArgSet AF::set_of(const std::vector<std::string>& names) const {
    ArgSet s;
    for (const auto& n : names) {
        int i = index(n);
        if (i < 0) throw InvalidArgument("unknown argument '" + n + "'");
        s.set(i);
    }
    return s;
}

std::vector<std::string> AF::names_of(const ArgSet& s) const {
    std::vector<std::string> out;
    for (int i = s.first(); i >= 0; i = s.next(i)) out.push_back(names_[i]);
    return out;
}

AF AF::restrict_to(const ArgSet& keep) const {
    std::vector<int> old;
    std::vector<std::string> names;
    std::vector<int> remap(size(), -1);
    for (int i = keep.first(); i >= 0 && i < size(); i = keep.next(i)) {
        remap[i] = static_cast<int>(old.size());
        old.push_back(i);
        names.push_back(names_[i]);
    }
    Graph g(static_cast<int>(old.size()));
    for (size_t k = 0; k < old.size(); ++k)
        for (int j : g_.succ[old[k]].members())
            if (remap[j] >= 0) g.add(static_cast<int>(k), remap[j]);
    return from_graph(std::move(names), std::move(g));
}

bool AF::operator==(const AF& o) const {
    if (names_ != o.names_) return false;
    for (int i = 0; i < size(); ++i)
        if (!(g_.succ[i] == o.g_.succ[i])) return false;
    return true;
}

AF union_af(const AF& f, const AF& g) {
    std::vector<std::string> names = f.names();
    names.insert(names.end(), g.names().begin(), g.names().end());
    std::vector<Attack> atts = f.attack_list();
    auto ga = g.attack_list();
    atts.insert(atts.end(), ga.begin(), ga.end());
    return AF(std::move(names), atts);
}

AF delete_af(const AF& f, const std::vector<std::string>& b, const std::vector<Attack>& s) {
    std::vector<std::string> names;
    for (const auto& n : f.names())
        if (std::find(b.begin(), b.end(), n) == b.end()) names.push_back(n);
    std::vector<Attack> atts;
    for (const auto& at : f.attack_list()) {
        if (std::find(s.begin(), s.end(), at) != s.end()) continue;
        if (std::find(b.begin(), b.end(), at.first) != b.end()) continue;
        if (std::find(b.begin(), b.end(), at.second) != b.end()) continue;
        atts.push_back(at);
    }
    return AF(std::move(names), atts);
}

static void check_subset(const AF& f, const ArgSet& e) {
    if (!e.subset_of(f.all())) throw InvalidArgument("set is not a subset of the framework's arguments");
}

ArgSet range(const AF& f, const ArgSet& e) {
    check_subset(f, e);
    return e | f.graph().plus(e, f.all());
}

ArgSet anti_range(const AF& f, const ArgSet& e) {
    check_subset(f, e);
    return e | f.graph().minus(e, f.all());
}

ArgSet range(const AF& f, const std::vector<std::string>& e) { return range(f, f.set_of(e)); }
ArgSet anti_range(const AF& f, const std::vector<std::string>& e) { return anti_range(f, f.set_of(e)); }

std::vector<ArgSet> sccs(const Graph& g, const ArgSet& active) {
    // Tarjan, iterative.
    std::vector<int> idx(g.n, -1), low(g.n, 0);
    std::vector<char> on_stack(g.n, 0);
    std::vector<int> stack;
    std::vector<ArgSet> out;
    int counter = 0;
    struct Frame {
        int v;
        int it;
    };
    for (int root = active.first(); root >= 0; root = active.next(root)) {
        if (idx[root] >= 0) continue;
        std::vector<Frame> call{{root, -1}};
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& fr = call.back();
            ArgSet nb = g.succ[fr.v] & active;
            int w = nb.next(fr.it);
            if (w >= 0) {
                fr.it = w;
                if (idx[w] < 0) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, -1});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], idx[w]);
                }
                continue;
            }
            int v = fr.v;
            if (low[v] == idx[v]) {
                ArgSet comp;
                int x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = 0;
                    comp.set(x);
                } while (x != v);
                out.push_back(comp);
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    std::sort(out.begin(), out.end(), [](const ArgSet& a, const ArgSet& b) { return a.first() < b.first(); });
    return out;
}

std::vector<ArgSet> sccs(const AF& f) { return sccs(f.graph(), f.all()); }

ArgSet loops(const AF& f) { return f.loop_set(); }

namespace {
std::atomic<int> g_max_args{-1};
std::atomic<int> g_workers{-1};

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long x = std::strtol(v, &end, 10);
    if (*end != '\0' || x <= 0) return fallback;
    return static_cast<int>(x);
}
}  // namespace

int max_args() {
    int v = g_max_args.load();
    if (v < 0) {
        v = std::min(env_int("AFKIT_MAX_ARGS", 24), kMaxArgs);
        g_max_args.store(v);
    }
    return v;
}

void set_max_args(int n) { g_max_args.store(std::clamp(n, 0, kMaxArgs)); }

int worker_count() {
    int v = g_workers.load();
    if (v < 0) {
        v = env_int("AFKIT_WORKERS", 1);
        g_workers.store(v);
    }
    return v;
}

void set_worker_count(int n) { g_workers.store(std::max(1, n)); }

}  // namespace afkit
