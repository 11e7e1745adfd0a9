#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "afkit/af.hpp"
#include "afkit/realizability.hpp"
#include "afkit/semantics.hpp"

namespace testing {

// mk("a,b,c", "a>b b>b") builds ({a,b,c}, {(a,b),(b,b)}).
inline afkit::AF mk(const std::string& args, const std::string& attacks = "") {
    std::vector<std::string> names;
    std::stringstream as(args);
    for (std::string tok; std::getline(as, tok, ',');)
        if (!tok.empty()) names.push_back(tok);
    std::vector<afkit::Attack> atts;
    std::stringstream ss(attacks);
    for (std::string tok; ss >> tok;) {
        auto p = tok.find('>');
        atts.emplace_back(tok.substr(0, p), tok.substr(p + 1));
    }
    return afkit::AF(names, atts);
}

inline afkit::SetFamily fam(afkit::SetFamily s) { return afkit::canonical_family(std::move(s)); }

inline afkit::SetFamily ext(const afkit::AF& f, afkit::Semantics sigma) { return afkit::named_extensions(f, sigma); }

}  // namespace testing
