#pragma once

#include <string>
#include <string_view>

#include "afkit/af.hpp"
#include "afkit/charlogic.hpp"
#include "afkit/realizability.hpp"

namespace afkit {

enum class Format { apx, tgf };
Format parse_format(std::string_view tag);

// Names starting with '_' are reserved for generated arguments and rejected
// unless allow_reserved is set.
AF parse_apx(std::string_view text, bool allow_reserved = false);
std::string emit_apx(const AF& f);
AF parse_tgf(std::string_view text, bool allow_reserved = false);
std::string emit_tgf(const AF& f);
AF parse_af(std::string_view text, Format fmt, bool allow_reserved = false);
std::string emit_af(const AF& f, Format fmt);

// One set per line, comma separated, "-" for the empty set, '#' comments.
SetFamily parse_extension_sets(std::string_view text);
std::string emit_extension_sets(const SetFamily& s);

// atoms: a,b
// interpretations: i1,i2
// models({a}) = {i1}
// Every theory of the language needs exactly one models line.
FiniteLogic parse_logic(std::string_view text);
std::string emit_logic(const FiniteLogic& logic);

std::string read_file(const std::string& path);

}  // namespace afkit
