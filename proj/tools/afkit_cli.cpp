#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "afkit/af.hpp"
#include "afkit/charlogic.hpp"
#include "afkit/error.hpp"
#include "afkit/io.hpp"
#include "afkit/kernels.hpp"
#include "afkit/realizability.hpp"
#include "afkit/semantics.hpp"
#include "afkit/verifiability.hpp"

using json = nlohmann::json;
using namespace afkit;

namespace {

enum Exit { kYes = 0, kNo = 1, kError = 2, kUnsupported = 3 };

struct Options {
    std::string format = "apx";
    std::string output = "text";
    bool json() const { return output == "json"; }
};

std::string brace(const std::vector<std::string>& names) {
    std::string s = "{";
    for (size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
    return s + "}";
}

json af_json(const AF& f) {
    json atts = json::array();
    for (const auto& [a, b] : f.attack_list()) atts.push_back({a, b});
    return {{"arguments", f.names()}, {"attacks", atts}};
}

json family_json(const SetFamily& s) {
    json out = json::array();
    for (const auto& e : s) out.push_back(e);
    return out;
}

AF load_af(const std::string& path, const Options& o) { return parse_af(read_file(path), parse_format(o.format)); }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_enumerate(const Options& o, const std::string& sem, const std::string& file) {
    auto sigma = parse_semantics(sem);
    AF f = load_af(file, o);
    SetFamily exts = named(f, extensions(f, sigma));
    if (o.json())
        print_json({{"semantics", to_string(sigma)}, {"extensions", family_json(exts)}});
    else
        std::cout << emit_extension_sets(exts);
    return kYes;
}

int cmd_labellings(const Options& o, const std::string& sem, const std::string& file) {
    auto sigma = parse_semantics(sem);
    if (!has_labellings(sigma)) throw Unsupported("no labelling enumeration for " + to_string(sigma));
    AF f = load_af(file, o);
    auto labs = labellings(f, sigma);
    if (o.json()) {
        json arr = json::array();
        for (const auto& l : labs)
            arr.push_back({{"in", f.names_of(l.in)}, {"out", f.names_of(l.out)}, {"undec", f.names_of(l.undec)}});
        print_json({{"semantics", to_string(sigma)}, {"labellings", arr}});
    } else {
        for (const auto& l : labs)
            std::cout << "in=" << brace(f.names_of(l.in)) << " out=" << brace(f.names_of(l.out))
                      << " undec=" << brace(f.names_of(l.undec)) << "\n";
    }
    return kYes;
}

int cmd_kernel(const Options& o, const std::string& kind, const std::string& file) {
    auto k = parse_kernel(kind);
    AF f = load_af(file, o);
    AF kf = kernel(f, k);
    if (o.json()) {
        json j = af_json(kf);
        j["kernel"] = to_string(k);
        print_json(j);
    } else {
        std::cout << emit_af(kf, parse_format(o.format));
    }
    return kYes;
}

int cmd_equiv(const Options& o, const std::string& notion_tag, const std::string& sem, bool labelling,
              const std::string& ff, const std::string& gf) {
    auto notion = parse_notion(notion_tag);
    auto sigma = parse_semantics(sem);
    auto flavor = labelling ? Flavor::labelling : Flavor::extension;
    AF f = load_af(ff, o), g = load_af(gf, o);
    Verdict v = decide_equivalence(f, g, notion, sigma, flavor);
    if (o.json()) {
        print_json({{"answer", to_string(v.answer)},
                    {"method", to_string(v.method)},
                    {"kernel", v.kernel ? json(to_string(*v.kernel)) : json(nullptr)},
                    {"detail", v.detail},
                    {"notion", to_string(notion)},
                    {"semantics", to_string(sigma)},
                    {"flavor", to_string(flavor)}});
    } else {
        std::cout << to_string(v.answer) << "\n";
        std::cout << "method: " << to_string(v.method);
        if (v.kernel) std::cout << " " << to_string(*v.kernel);
        std::cout << "\n";
        if (!v.detail.empty()) std::cout << "detail: " << v.detail << "\n";
    }
    switch (v.answer) {
        case Answer::equivalent: return kYes;
        case Answer::not_equivalent: return kNo;
        default: return kUnsupported;
    }
}

int cmd_witness(const Options& o, const std::string& notion_tag, const std::string& sem, bool labelling,
                int fresh, int max_attacks, const std::string& ff, const std::string& gf) {
    auto notion = parse_notion(notion_tag);
    auto sigma = parse_semantics(sem);
    if (!searchable(notion)) throw Unsupported("no witness search for notion " + to_string(notion));
    auto flavor = labelling ? Flavor::labelling : Flavor::extension;
    AF f = load_af(ff, o), g = load_af(gf, o);
    Budget budget;
    budget.fresh_args = fresh;
    budget.max_attacks = max_attacks;
    Witness w = search_counterexample(f, g, notion, sigma, budget, flavor);
    if (o.json()) {
        json j = {{"status", to_string(w.status)}, {"candidates", w.candidates}};
        if (w.status == SearchStatus::found) {
            if (w.expansion) j["expansion"] = af_json(*w.expansion);
            else {
                json atts = json::array();
                for (const auto& [a, b] : w.removed_attacks) atts.push_back({a, b});
                j["removed_arguments"] = w.removed_args;
                j["removed_attacks"] = atts;
            }
            j["f_result"] = family_json(w.f_result);
            j["g_result"] = family_json(w.g_result);
        }
        print_json(j);
    } else if (w.status == SearchStatus::found) {
        if (w.expansion) {
            std::cout << "expansion:\n" << emit_af(*w.expansion, parse_format(o.format));
        } else {
            std::vector<std::string> atts;
            for (const auto& [a, b] : w.removed_attacks) atts.push_back("(" + a + "," + b + ")");
            std::cout << "remove arguments: " << brace(w.removed_args) << "\n";
            std::cout << "remove attacks: " << brace(atts) << "\n";
        }
        std::cout << "f:\n" << emit_extension_sets(w.f_result) << "g:\n" << emit_extension_sets(w.g_result);
    } else if (w.status == SearchStatus::none_within_budget) {
        std::cout << "none within budget\n";
    } else {
        std::cout << "budget exhausted after " << w.candidates << " candidates\n";
    }
    switch (w.status) {
        case SearchStatus::found: return kYes;
        case SearchStatus::none_within_budget: return kNo;
        default: return kUnsupported;
    }
}

int cmd_analyze_set(const Options& o, const std::string& file) {
    auto s = parse_extension_sets(read_file(file));
    auto a = analyze(s);
    std::vector<std::pair<std::string, bool>> flags = {
        {"conflict_sensitive", a.conflict_sensitive}, {"contains_empty", a.contains_empty},
        {"dcl_tight", a.dcl_tight},                   {"downward_closed", a.downward_closed},
        {"incomparable", a.incomparable},             {"nonempty", a.nonempty},
        {"singleton", a.singleton},                   {"tight", a.tight}};
    if (o.json()) {
        json j;
        for (const auto& [k, v] : flags) j[k] = v;
        j["arguments"] = a.args;
        print_json(j);
    } else {
        for (const auto& [k, v] : flags) std::cout << k << ": " << (v ? "yes" : "no") << "\n";
        std::cout << "arguments: " << brace(a.args) << "\n";
    }
    return kYes;
}

int cmd_realize(const Options& o, const std::string& sem, const std::string& variant_tag, const std::string& file) {
    auto sigma = parse_semantics(sem);
    auto variant = parse_variant(variant_tag);
    auto s = parse_extension_sets(read_file(file));
    auto v = decide_signature(s, sigma, variant);
    std::optional<AF> witness;
    if (v.decided && v.holds && variant == Variant::finite) witness = realize(s, sigma);
    if (o.json()) {
        json j = {{"semantics", to_string(sigma)},
                  {"variant", to_string(variant)},
                  {"decided", v.decided},
                  {"holds", v.holds},
                  {"condition", v.condition}};
        j["witness"] = witness ? af_json(*witness) : json(nullptr);
        print_json(j);
    } else {
        if (!v.decided)
            std::cout << "undecided: necessary condition " << (v.holds ? "holds" : "fails") << "\n";
        else
            std::cout << (v.holds ? "realizable" : "not realizable") << "\n";
        std::cout << "condition: " << v.condition << "\n";
        if (witness) std::cout << emit_af(*witness, parse_format(o.format));
    }
    if (!v.decided) return v.holds ? kUnsupported : kNo;
    return v.holds ? kYes : kNo;
}

int cmd_classify(const Options& o, const std::string& sem, const std::string& file) {
    auto sigma = parse_semantics(sem);
    AF f = load_af(file, o);
    bool compact = is_compact(f, sigma);
    auto implicit = implicit_conflicts(f, sigma);
    if (o.json()) {
        json pairs = json::array();
        for (const auto& [a, b] : implicit) pairs.push_back({a, b});
        print_json({{"semantics", to_string(sigma)},
                    {"compact", compact},
                    {"analytic", implicit.empty()},
                    {"implicit_conflicts", pairs}});
    } else {
        std::cout << "compact: " << (compact ? "yes" : "no") << "\n";
        std::cout << "analytic: " << (implicit.empty() ? "yes" : "no") << "\n";
        std::cout << "implicit conflicts:";
        for (const auto& [a, b] : implicit) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
    }
    return kYes;
}

std::string tuple_text(const AF& f, const std::vector<ArgSet>& info) {
    std::string s = "(";
    for (size_t i = 0; i < info.size(); ++i) s += (i ? "," : "") + brace(f.names_of(info[i]));
    return s + ")";
}

int cmd_verify_class(const Options& o, const std::string& sem, const std::string& cls, const std::string& file) {
    auto sigma = parse_semantics(sem);
    if (!has_exact_class(sigma)) throw Unsupported("no exact verification class for " + to_string(sigma));
    AF f = load_af(file, o);
    Neighborhood exact = exact_class(sigma);
    Neighborhood x = cls.empty() ? exact : parse_neighborhood(cls);
    auto data = verification_class(f, x);
    std::optional<SetFamily> rebuilt;
    std::string error;
    try {
        rebuilt = named(f, verify(sigma, data, f.all()));
    } catch (const InsufficientClass& e) {
        error = e.what();
    }
    SetFamily actual = named(f, extensions(f, sigma));
    if (o.json()) {
        json entries = json::array();
        for (const auto& e : data.entries) {
            json info = json::array();
            for (const auto& s : e.info) info.push_back(f.names_of(s));
            entries.push_back({{"set", f.names_of(e.set)}, {"info", info}});
        }
        json j = {{"semantics", to_string(sigma)},
                  {"exact_class", to_string(exact)},
                  {"class", to_string(x)},
                  {"data", entries}};
        j["reconstructed"] = rebuilt ? family_json(*rebuilt) : json(nullptr);
        if (!error.empty()) j["error"] = error;
        j["matches"] = rebuilt && *rebuilt == actual;
        print_json(j);
    } else {
        std::cout << "exact class: " << to_symbol(exact) << "\n";
        std::cout << "class: " << to_symbol(x) << "\n";
        std::cout << "data:\n";
        for (const auto& e : data.entries)
            std::cout << "  " << brace(f.names_of(e.set)) << " " << tuple_text(f, e.info) << "\n";
        if (rebuilt) {
            std::cout << "reconstructed:\n" << emit_extension_sets(*rebuilt);
            std::cout << "matches: " << (*rebuilt == actual ? "yes" : "no") << "\n";
        } else {
            std::cout << "insufficient: " << error << "\n";
        }
    }
    return rebuilt ? kYes : kNo;
}

int cmd_charlogic(const Options& o, const std::string& file, bool characterize, bool check_intersection,
                  const std::string& consequence) {
    FiniteLogic logic = parse_logic(read_file(file));
    if (check_intersection) {
        bool full = has_intersection_property(logic);
        bool binary = has_binary_intersection(logic);
        bool anti = is_antimonotone(logic);
        bool galois = galois_check(logic);
        if (o.json())
            print_json({{"intersection", full}, {"binary_intersection", binary}, {"antimonotone", anti},
                        {"galois", galois}});
        else
            std::cout << "intersection: " << (full ? "yes" : "no") << "\nbinary intersection: "
                      << (binary ? "yes" : "no") << "\nantimonotone: " << (anti ? "yes" : "no")
                      << "\ngalois: " << (galois ? "yes" : "no") << "\n";
        return full ? kYes : kNo;
    }
    if (!consequence.empty()) {
        Theory t = logic.parse_theory(consequence);
        Theory cn = canonical_consequence(logic, t);
        auto p = consequence_properties(logic);
        if (o.json())
            print_json({{"theory", logic.theory_name(t)}, {"consequence", logic.theory_name(cn)},
                        {"increasing", p.increasing}, {"monotone", p.monotone}, {"idempotent", p.idempotent}});
        else
            std::cout << "Cn(" << logic.theory_name(t) << ") = " << logic.theory_name(cn) << "\nincreasing: "
                      << (p.increasing ? "yes" : "no") << "\nmonotone: " << (p.monotone ? "yes" : "no")
                      << "\nidempotent: " << (p.idempotent ? "yes" : "no") << "\n";
        return kYes;
    }
    auto part = strong_eq_classes(logic);
    if (characterize) {
        FiniteLogic c = canonical_characterization(logic);
        bool ok = is_characterization(c, logic);
        if (o.json()) {
            json table;
            for (Theory t = 0; t < c.theory_count(); ++t) {
                json ms = json::array();
                for (int h : c.models(t).members()) ms.push_back(c.interpretations()[h]);
                table[c.theory_name(t)] = ms;
            }
            print_json({{"models", table}, {"is_characterization", ok}});
        } else {
            for (Theory t = 0; t < c.theory_count(); ++t) {
                std::vector<std::string> ms;
                for (int h : c.models(t).members()) ms.push_back(c.interpretations()[h]);
                std::cout << "sigma'(" << c.theory_name(t) << ") = " << brace(ms) << "\n";
            }
            std::cout << "is characterization: " << (ok ? "yes" : "no") << "\n";
        }
        return ok ? kYes : kNo;
    }
    if (o.json()) {
        json blocks = json::array();
        for (const auto& b : part.blocks) {
            json members = json::array();
            for (Theory t : b.members) members.push_back(logic.theory_name(t));
            blocks.push_back({{"members", members},
                              {"representative", logic.theory_name(b.representative)},
                              {"cover", logic.theory_name(b.cover)}});
        }
        print_json({{"classes", blocks}});
    } else {
        for (const auto& b : part.blocks) {
            std::vector<std::string> members;
            for (Theory t : b.members) members.push_back(logic.theory_name(t));
            std::cout << "[" << logic.theory_name(b.representative) << "] cover=" << logic.theory_name(b.cover)
                      << " members=";
            for (size_t i = 0; i < members.size(); ++i) std::cout << (i ? " " : "") << members[i];
            std::cout << "\n";
        }
    }
    return kYes;
}

std::string af_label(const AF& f) {
    std::vector<std::string> atts;
    for (const auto& [a, b] : f.attack_list()) atts.push_back("(" + a + "," + b + ")");
    return brace(f.names()) + "|" + brace(atts);
}

int cmd_rho(const Options& o, const std::string& universe, const std::string& sem) {
    std::vector<std::string> u;
    std::stringstream ss(universe);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) {
            if (!valid_name(tok) || tok[0] == '_') throw InvalidArgument("invalid argument name '" + tok + "'");
            u.push_back(tok);
        }
    auto r = rho_logic(u, parse_semantics(sem));
    bool chr = rho_characterization_holds(r);
    bool inter = rho_intersection_holds(r);
    if (o.json()) {
        json rows = json::array();
        for (size_t i = 0; i < r.frameworks.size(); ++i)
            rows.push_back({{"index", i}, {"framework", af_json(r.frameworks[i])}, {"rho_prime", r.rho_prime[i]}});
        print_json({{"universe", r.universe},
                    {"semantics", to_string(r.sigma)},
                    {"kernel", to_string(r.kernel)},
                    {"frameworks", rows},
                    {"characterization", chr},
                    {"intersection", inter}});
    } else {
        std::cout << "kernel: " << to_string(r.kernel) << "\n";
        for (size_t i = 0; i < r.frameworks.size(); ++i) {
            std::cout << i << " " << af_label(r.frameworks[i]) << " ->";
            for (int j : r.rho_prime[i]) std::cout << " " << j;
            std::cout << "\n";
        }
        std::cout << "characterization: " << (chr ? "yes" : "no") << "\n";
        std::cout << "intersection: " << (inter ? "yes" : "no") << "\n";
    }
    return chr && inter ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abstract argumentation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Framework file format")->check(CLI::IsMember({"apx", "tgf"}));
    app.add_option("--output", o.output, "Output style")->check(CLI::IsMember({"text", "json"}));

    std::function<int()> run;
    std::string sem, file, file2, kind, notion, variant = "finite", cls, consequence, universe;
    bool labelling = false, characterize = false, check_intersection = false;
    int fresh = 1, max_attacks = 4;

    auto* en = app.add_subcommand("enumerate", "List the extensions of a framework");
    en->add_option("--semantics", sem)->required();
    en->add_option("file", file)->required();
    en->callback([&] { run = [&] { return cmd_enumerate(o, sem, file); }; });

    auto* lb = app.add_subcommand("labellings", "List labellings");
    lb->add_option("--semantics", sem)->required();
    lb->add_option("file", file)->required();
    lb->callback([&] { run = [&] { return cmd_labellings(o, sem, file); }; });

    auto* kn = app.add_subcommand("kernel", "Print a kernel of a framework");
    kn->add_option("--kind", kind)->required();
    kn->add_option("file", file)->required();
    kn->callback([&] { run = [&] { return cmd_kernel(o, kind, file); }; });

    auto* eq = app.add_subcommand("equiv", "Decide an equivalence notion");
    eq->add_option("--notion", notion)->required();
    eq->add_option("--semantics", sem)->required();
    eq->add_flag("--labelling", labelling);
    eq->add_option("f", file)->required();
    eq->add_option("g", file2)->required();
    eq->callback([&] { run = [&] { return cmd_equiv(o, notion, sem, labelling, file, file2); }; });

    auto* wt = app.add_subcommand("witness", "Search for a separating modification");
    wt->add_option("--notion", notion)->required();
    wt->add_option("--semantics", sem)->required();
    wt->add_option("--fresh", fresh)->check(CLI::Range(0, 4));
    wt->add_option("--max-attacks", max_attacks)->check(CLI::Range(0, 16));
    wt->add_flag("--labelling", labelling);
    wt->add_option("f", file)->required();
    wt->add_option("g", file2)->required();
    wt->callback(
        [&] { run = [&] { return cmd_witness(o, notion, sem, labelling, fresh, max_attacks, file, file2); }; });

    auto* an = app.add_subcommand("analyze-set", "Structural properties of an extension-set");
    an->add_option("setfile", file)->required();
    an->callback([&] { run = [&] { return cmd_analyze_set(o, file); }; });

    auto* rz = app.add_subcommand("realize", "Decide realizability and build a witness");
    rz->add_option("--semantics", sem)->required();
    rz->add_option("--variant", variant)->check(CLI::IsMember({"finite", "compact", "analytic"}));
    rz->add_option("setfile", file)->required();
    rz->callback([&] { run = [&] { return cmd_realize(o, sem, variant, file); }; });

    auto* cl = app.add_subcommand("classify", "Compactness and analyticity of a framework");
    cl->add_option("--semantics", sem)->required();
    cl->add_option("file", file)->required();
    cl->callback([&] { run = [&] { return cmd_classify(o, sem, file); }; });

    auto* vc = app.add_subcommand("verify-class", "Verification class data and reconstruction");
    vc->add_option("--semantics", sem)->required();
    vc->add_option("--class", cls);
    vc->add_option("file", file)->required();
    vc->callback([&] { run = [&] { return cmd_verify_class(o, sem, cls, file); }; });

    auto* cg = app.add_subcommand("charlogic", "Strong equivalence and characterization of a finite logic");
    cg->add_option("logicfile", file)->required();
    auto* c1 = cg->add_flag("--characterize", characterize);
    auto* c2 = cg->add_flag("--check-intersection", check_intersection);
    auto* c3 = cg->add_option("--consequence", consequence);
    c1->excludes(c2)->excludes(c3);
    c2->excludes(c3);
    cg->callback([&] { run = [&] { return cmd_charlogic(o, file, characterize, check_intersection, consequence); }; });

    auto* rh = app.add_subcommand("rho-logic", "The AF logic over a small universe");
    rh->add_option("--universe", universe)->required();
    rh->add_option("--semantics", sem)->required();
    rh->callback([&] { run = [&] { return cmd_rho(o, universe, sem); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }
    try {
        return run();
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
