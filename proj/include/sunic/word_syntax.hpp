#pragma once

#include <string>
#include <string_view>

#include "sunic/element.hpp"

namespace sunic {

/// Parses a word. Atoms: `a`, `b0`..`b{m-1}`, `B<v0,...>`, `1`, `b` (the
/// dihedral witness, p = 2), `c` and `d` (from find_cd), `( ... )`,
/// `[x,y]`. Postfix `^k` (k may be negative) and `^atom` (conjugation).
Element parse_word(const SpecPtr& spec, std::string_view text);

/// Space separated letters, e.g. "a b0 a^2 B<1,1>"; identity prints as "1".
std::string format_word(const Element& x);

std::string format_vertex(const Vertex& v);
Vertex parse_vertex(const GroupSpec& spec, std::string_view text);

}  // namespace sunic
