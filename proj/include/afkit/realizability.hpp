#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afkit/af.hpp"
#include "afkit/semantics.hpp"

namespace afkit {

// A finite collection of argument sets, by name.
using SetFamily = std::vector<std::vector<std::string>>;

// Sorts members, drops duplicates, orders sets by size then lexicographically.
SetFamily canonical_family(SetFamily s);

struct SetAnalysis {
    bool nonempty = false;
    bool contains_empty = false;
    bool singleton = false;
    bool incomparable = false;
    bool downward_closed = false;
    bool tight = false;
    bool dcl_tight = false;
    bool conflict_sensitive = false;
    std::vector<std::string> args;
    // Unordered pairs (a <= b) occurring together in some member.
    std::vector<std::pair<std::string, std::string>> pairs;
};

SetAnalysis analyze(const SetFamily& s);

enum class Variant { finite, finite_compact, finite_analytic };
std::string to_string(Variant v);
Variant parse_variant(std::string_view tag);

struct SignatureVerdict {
    // False when only a necessary condition is known for this cell;
    // `holds` is then the truth value of that condition, not a decision.
    bool decided = true;
    bool holds = false;
    std::string condition;
};

bool has_signature(Semantics sigma);
// Throws Unsupported for com and for semantics without a signature result.
SignatureVerdict decide_signature(const SetFamily& s, Semantics sigma, Variant variant = Variant::finite);

AF canonical_cf(const SetFamily& s);
AF canonical_stb(const SetFamily& s);
AF canonical_def(const SetFamily& s);
// Adds a self-attacking `_p_<a>` attacked by a for every argument a.
AF semi_translation(const AF& f);

// Subsumption-minimal CNF of the defense formula of a; empty when tautological.
SetFamily defense_formula_cnf(const SetFamily& s, const std::string& a);

// The canonical realization, checked against the semantics before returning.
// nullopt when s is not in the finite signature. Throws Defect on a failed check.
std::optional<AF> realize(const SetFamily& s, Semantics sigma);

SetFamily named_extensions(const AF& f, Semantics sigma);

bool is_compact(const AF& f, Semantics sigma);
std::vector<std::pair<std::string, std::string>> implicit_conflicts(const AF& f, Semantics sigma);
bool is_analytic(const AF& f, Semantics sigma);

}  // namespace afkit
