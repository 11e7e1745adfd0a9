#include "afkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "afkit/error.hpp"

namespace afkit {

Format parse_format(std::string_view tag) {
    if (tag == "apx") return Format::apx;
    if (tag == "tgf") return Format::tgf;
    throw InvalidArgument("unknown format '" + std::string(tag) + "'");
}

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(text) {}

    void skip_space() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '%') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
    bool done() {
        skip_space();
        return pos_ >= s_.size();
    }
    void expect(char c) {
        skip_space();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        advance();
    }
    std::string ident() {
        skip_space();
        size_t start = pos_;
        while (pos_ < s_.size() && name_char(s_[pos_])) advance();
        if (start == pos_) fail("expected a name");
        return std::string(s_.substr(start, pos_ - start));
    }
    int line() const { return line_; }
    int col() const { return col_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

private:
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view s_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

void check_name(const std::string& name, bool allow_reserved, int line, int col) {
    if (!valid_name(name)) throw ParseError(line, col, "invalid argument name '" + name + "'");
    if (!allow_reserved && name[0] == '_')
        throw ParseError(line, col, "names starting with '_' are reserved: '" + name + "'");
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::string strip_comment(const std::string& line) {
    auto p = line.find('#');
    return p == std::string::npos ? line : line.substr(0, p);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string body = trim(s);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(trim(tok));
    return out;
}

}  // namespace

AF parse_apx(std::string_view text, bool allow_reserved) {
    Cursor c(text);
    std::vector<std::string> args;
    std::set<std::string> declared;
    struct Pending {
        std::string name;
        int line, col;
    };
    std::vector<Pending> atts;
    while (!c.done()) {
        int line = c.line(), col = c.col();
        std::string kw = c.ident();
        if (kw == "arg") {
            c.expect('(');
            int nl = c.line(), nc = c.col();
            std::string a = c.ident();
            check_name(a, allow_reserved, nl, nc);
            c.expect(')');
            c.expect('.');
            if (declared.insert(a).second) args.push_back(a);
        } else if (kw == "att") {
            c.expect('(');
            Pending a{"", c.line(), c.col()};
            a.name = c.ident();
            c.expect(',');
            Pending b{"", c.line(), c.col()};
            b.name = c.ident();
            c.expect(')');
            c.expect('.');
            atts.push_back(a);
            atts.push_back(b);
        } else {
            throw ParseError(line, col, "unknown statement '" + kw + "'");
        }
    }
    std::vector<Attack> attacks;
    for (size_t i = 0; i < atts.size(); i += 2) {
        for (const auto& p : {atts[i], atts[i + 1]})
            if (!declared.count(p.name))
                throw ParseError(p.line, p.col, "attack endpoint '" + p.name + "' is not declared");
        attacks.emplace_back(atts[i].name, atts[i + 1].name);
    }
    return AF(args, attacks);
}

std::string emit_apx(const AF& f) {
    std::string out;
    for (const auto& n : f.names()) out += "arg(" + n + ").\n";
    for (const auto& [a, b] : f.attack_list()) out += "att(" + a + "," + b + ").\n";
    return out;
}

AF parse_tgf(std::string_view text, bool allow_reserved) {
    auto lines = split_lines(text);
    std::map<std::string, std::string> label_of;
    std::vector<std::string> args;
    std::vector<Attack> attacks;
    bool edges = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        int line = static_cast<int>(i) + 1;
        std::string l = trim(lines[i]);
        if (l.empty()) continue;
        if (l == "#") {
            if (edges) throw ParseError(line, 1, "second '#' separator");
            edges = true;
            continue;
        }
        std::istringstream ss(l);
        std::string x, y;
        ss >> x;
        ss >> y;
        int col = static_cast<int>(lines[i].find(x)) + 1;
        if (!edges) {
            std::string name = y.empty() ? x : y;
            check_name(name, allow_reserved, line, col);
            auto [it, fresh] = label_of.emplace(x, name);
            if (!fresh && it->second != name)
                throw ParseError(line, col, "node id '" + x + "' redeclared with a different label");
            if (fresh) args.push_back(name);
        } else {
            if (y.empty()) throw ParseError(line, col, "edge needs two node ids");
            auto a = label_of.find(x), b = label_of.find(y);
            if (a == label_of.end()) throw ParseError(line, col, "undeclared node id '" + x + "'");
            if (b == label_of.end()) throw ParseError(line, col, "undeclared node id '" + y + "'");
            attacks.emplace_back(a->second, b->second);
        }
    }
    return AF(args, attacks);
}

std::string emit_tgf(const AF& f) {
    std::string out;
    for (int i = 0; i < f.size(); ++i) out += std::to_string(i + 1) + " " + f.name(i) + "\n";
    out += "#\n";
    for (const auto& [a, b] : f.attack_indices())
        out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

AF parse_af(std::string_view text, Format fmt, bool allow_reserved) {
    return fmt == Format::apx ? parse_apx(text, allow_reserved) : parse_tgf(text, allow_reserved);
}

std::string emit_af(const AF& f, Format fmt) { return fmt == Format::apx ? emit_apx(f) : emit_tgf(f); }

SetFamily parse_extension_sets(std::string_view text) {
    auto lines = split_lines(text);
    SetFamily out;
    for (size_t i = 0; i < lines.size(); ++i) {
        int line = static_cast<int>(i) + 1;
        std::string l = trim(strip_comment(lines[i]));
        if (l.empty()) continue;
        if (l == "-") {
            out.emplace_back();
            continue;
        }
        std::vector<std::string> set;
        for (auto& tok : split_list(l)) {
            int col = static_cast<int>(lines[i].find(tok)) + 1;
            check_name(tok, false, line, col);
            set.push_back(tok);
        }
        out.push_back(std::move(set));
    }
    return canonical_family(std::move(out));
}

std::string emit_extension_sets(const SetFamily& s) {
    std::string out;
    for (const auto& set : canonical_family(s)) {
        if (set.empty()) {
            out += "-\n";
            continue;
        }
        for (size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + set[i];
        out += "\n";
    }
    return out;
}

FiniteLogic parse_logic(std::string_view text) {
    auto lines = split_lines(text);
    std::optional<std::vector<std::string>> atoms, interps;
    std::map<uint32_t, std::vector<std::string>> table;
    for (size_t i = 0; i < lines.size(); ++i) {
        int line = static_cast<int>(i) + 1;
        std::string l = trim(strip_comment(lines[i]));
        if (l.empty()) continue;
        if (l.rfind("atoms:", 0) == 0) {
            atoms = split_list(l.substr(6));
            for (const auto& a : *atoms) check_name(a, false, line, 1);
        } else if (l.rfind("interpretations:", 0) == 0) {
            interps = split_list(l.substr(16));
        } else if (l.rfind("models(", 0) == 0) {
            if (!atoms || !interps) throw ParseError(line, 1, "models line before atoms and interpretations");
            auto close = l.find(')');
            auto eq = l.find('=', close == std::string::npos ? 0 : close);
            if (close == std::string::npos || eq == std::string::npos)
                throw ParseError(line, 1, "expected models(<theory>) = {<ids>}");
            std::string th = l.substr(7, close - 7);
            th.erase(std::remove_if(th.begin(), th.end(), [](char c) { return c == '{' || c == '}'; }), th.end());
            uint32_t mask = 0;
            for (const auto& a : split_list(th)) {
                auto it = std::find(atoms->begin(), atoms->end(), a);
                if (it == atoms->end()) throw ParseError(line, 8, "unknown atom '" + a + "'");
                mask |= uint32_t{1} << (it - atoms->begin());
            }
            std::string rhs = trim(l.substr(eq + 1));
            if (rhs.size() < 2 || rhs.front() != '{' || rhs.back() != '}')
                throw ParseError(line, static_cast<int>(eq) + 2, "model set must be written {...}");
            if (!table.emplace(mask, split_list(rhs.substr(1, rhs.size() - 2))).second)
                throw ParseError(line, 1, "theory listed twice");
        } else {
            throw ParseError(line, 1, "unrecognized line");
        }
    }
    if (!atoms) throw ParseError(1, 1, "missing atoms line");
    if (!interps) throw ParseError(1, 1, "missing interpretations line");
    if (static_cast<int>(atoms->size()) > kMaxAtoms)
        throw LimitExceeded("language has " + std::to_string(atoms->size()) + " atoms, the cap is " +
                            std::to_string(kMaxAtoms));
    int k = static_cast<int>(interps->size());
    std::vector<IdSet> models;
    for (uint32_t t = 0; t < (uint32_t{1} << atoms->size()); ++t) {
        auto it = table.find(t);
        if (it == table.end()) {
            std::string name = "{";
            for (size_t i = 0, first = 1; i < atoms->size(); ++i)
                if (t >> i & 1) name += (first ? "" : ",") + (*atoms)[i], first = 0;
            throw ParseError(static_cast<int>(lines.size()), 1, "no models line for theory " + name + "}");
        }
        IdSet m(k);
        for (const auto& id : it->second) {
            auto p = std::find(interps->begin(), interps->end(), id);
            if (p == interps->end()) throw InvalidArgument("unknown interpretation '" + id + "'");
            m.set(static_cast<int>(p - interps->begin()));
        }
        models.push_back(std::move(m));
    }
    return FiniteLogic(*atoms, *interps, std::move(models));
}

std::string emit_logic(const FiniteLogic& logic) {
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
        return s;
    };
    std::string out = "atoms: " + join(logic.atoms()) + "\ninterpretations: " + join(logic.interpretations()) + "\n";
    for (Theory t = 0; t < logic.theory_count(); ++t) {
        std::vector<std::string> ids;
        for (int i : logic.models(t).members()) ids.push_back(logic.interpretations()[i]);
        out += "models(" + logic.theory_name(t) + ") = {" + join(ids) + "}\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace afkit
