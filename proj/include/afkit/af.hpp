#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "afkit/argset.hpp"

namespace afkit {

using Attack = std::pair<std::string, std::string>;

// Index-level attack graph. succ[a] holds what a attacks, pred[a] what attacks a.
struct Graph {
    int n = 0;
    std::vector<ArgSet> succ;
    std::vector<ArgSet> pred;

    explicit Graph(int size = 0) : n(size), succ(size), pred(size) {}

    void add(int a, int b) {
        succ[a].set(b);
        pred[b].set(a);
    }
    bool attacks(int a, int b) const { return succ[a].test(b); }
    ArgSet loops() const {
        ArgSet out;
        for (int i = 0; i < n; ++i)
            if (succ[i].test(i)) out.set(i);
        return out;
    }
    // E+ and E- restricted to the active arguments.
    ArgSet plus(const ArgSet& e, const ArgSet& active) const {
        ArgSet out;
        for (int i = e.first(); i >= 0; i = e.next(i)) out |= succ[i];
        return out & active;
    }
    ArgSet minus(const ArgSet& e, const ArgSet& active) const {
        ArgSet out;
        for (int i = e.first(); i >= 0; i = e.next(i)) out |= pred[i];
        return out & active;
    }
    bool conflict_free(const ArgSet& e) const {
        for (int i = e.first(); i >= 0; i = e.next(i))
            if (succ[i].intersects(e)) return false;
        return true;
    }
    // Arguments of `active` defended by e.
    ArgSet defended(const ArgSet& e, const ArgSet& active) const {
        ArgSet p = plus(e, active);
        ArgSet out;
        for (int i = active.first(); i >= 0; i = active.next(i))
            if ((pred[i] & active).subset_of(p)) out.set(i);
        return out;
    }
};

// A finite argumentation framework. Arguments are kept sorted by name and an
// argument's index is its position in that order.
class AF {
public:
    AF() = default;
    AF(std::vector<std::string> args, const std::vector<Attack>& attacks);

    int size() const { return static_cast<int>(names_.size()); }
    bool empty() const { return names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    const Graph& graph() const { return g_; }

    int index(std::string_view name) const;  // -1 when absent
    bool contains(std::string_view name) const { return index(name) >= 0; }
    bool attacks(int a, int b) const { return g_.attacks(a, b); }
    bool attacks(std::string_view a, std::string_view b) const;

    ArgSet all() const { return ArgSet::range(size()); }
    ArgSet loop_set() const { return g_.loops(); }
    int attack_count() const;
    std::vector<std::pair<int, int>> attack_indices() const;
    std::vector<Attack> attack_list() const;

    // Throws InvalidArgument on unknown names.
    ArgSet set_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(const ArgSet& s) const;

    AF restrict_to(const ArgSet& keep) const;

    bool operator==(const AF& o) const;

    // Builds from already sorted unique names and an index graph over them.
    static AF from_graph(std::vector<std::string> sorted_names, Graph g);

private:
    std::vector<std::string> names_;
    Graph g_;
};

bool valid_name(std::string_view name);

AF union_af(const AF& f, const AF& g);
// F minus [B,S]: drop attacks in s, then restrict to args outside b.
AF delete_af(const AF& f, const std::vector<std::string>& b, const std::vector<Attack>& s);
ArgSet range(const AF& f, const ArgSet& e);
ArgSet anti_range(const AF& f, const ArgSet& e);
ArgSet range(const AF& f, const std::vector<std::string>& e);
ArgSet anti_range(const AF& f, const std::vector<std::string>& e);
std::vector<ArgSet> sccs(const AF& f);
std::vector<ArgSet> sccs(const Graph& g, const ArgSet& active);
ArgSet loops(const AF& f);

// Soft cap on non-self-attacking arguments for exhaustive enumeration.
int max_args();
void set_max_args(int n);
int worker_count();
void set_worker_count(int n);

}  // namespace afkit
