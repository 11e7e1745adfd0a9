#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afkit/af.hpp"

namespace afkit {

enum class Semantics { cf, nav, adm, com, grd, stb, stg, semi, prf, id, eag, sad, cf2, stg2 };

inline constexpr Semantics kAllSemantics[] = {
    Semantics::cf,  Semantics::nav,  Semantics::adm, Semantics::com, Semantics::grd,
    Semantics::stb, Semantics::stg,  Semantics::semi, Semantics::prf, Semantics::id,
    Semantics::eag, Semantics::sad,  Semantics::cf2, Semantics::stg2};

std::string to_string(Semantics s);
// Throws InvalidArgument on unknown tags.
Semantics parse_semantics(std::string_view tag);

struct Labelling {
    ArgSet in, out, undec;
    bool operator==(const Labelling&) const = default;
};

// All sigma-extensions, in canonical order.
ExtensionList extensions(const AF& f, Semantics sigma);
// Same over the sub-framework induced by `active`; results use g's indices.
ExtensionList extensions(const Graph& g, const ArgSet& active, Semantics sigma);

struct GroundedTrace {
    ArgSet extension;
    std::vector<ArgSet> trace;
};
GroundedTrace grounded_iteration(const AF& f);

ExtensionList strongly_admissible(const AF& f);

bool has_labellings(Semantics sigma);
// Throws Unsupported for semantics outside the one-to-one family.
std::vector<Labelling> labellings(const AF& f, Semantics sigma);
Labelling labelling_of(const AF& f, const ArgSet& e);

// Helpers shared with other modules.
ExtensionList maximal_sets(ExtensionList sets);
ArgSet intersection_of(const ExtensionList& sets, const ArgSet& universe);

}  // namespace afkit
