#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "afkit/af.hpp"
#include "afkit/semantics.hpp"

namespace afkit {

// The 15 representative neighborhood functions, applied to (range, anti-range).
enum class Neighborhood {
    eps,
    plus,
    minus,
    pm,
    mp,
    cap,
    cup,
    delta,
    plus_pm,
    plus_mp,
    pm_mp,
    cap_cup,
    minus_pm,
    minus_mp,
    plus_minus
};

inline constexpr int kNeighborhoodCount = 15;

std::string to_string(Neighborhood x);   // ASCII tag, e.g. "plus_mp"
std::string to_symbol(Neighborhood x);   // e.g. "+∓"
// Accepts ASCII tags or symbols.
Neighborhood parse_neighborhood(std::string_view tag);
Neighborhood neighborhood_at(int i);

// Number of coordinates produced by r^x.
int arity(Neighborhood x);
std::vector<ArgSet> neighborhood(Neighborhood x, const ArgSet& s_plus, const ArgSet& s_minus);

// x is at least as informative as y.
bool more_informative(Neighborhood x, Neighborhood y);
// Immediate arcs (less, more) of the informativeness diagram.
std::vector<std::pair<Neighborhood, Neighborhood>> lattice_arcs();

struct VerificationEntry {
    ArgSet set;
    std::vector<ArgSet> info;
    bool operator==(const VerificationEntry&) const = default;
};

struct VerificationClassData {
    Neighborhood cls = Neighborhood::eps;
    std::vector<VerificationEntry> entries;  // one per conflict-free set, canonical order
    bool operator==(const VerificationClassData&) const = default;
};

VerificationClassData verification_class(const AF& f, Neighborhood x);
// Rewrites data into a less informative class. Throws InsufficientClass.
VerificationClassData reduce(const VerificationClassData& data, Neighborhood y);

bool has_exact_class(Semantics sigma);
Neighborhood exact_class(Semantics sigma);
// Reconstructs sigma from the data. Throws InsufficientClass when data.cls is
// not at least as informative as exact_class(sigma).
ExtensionList verify(Semantics sigma, const VerificationClassData& data, const ArgSet& args);

}  // namespace afkit
