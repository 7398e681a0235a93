#pragma once

// Shared reader/writer for the canonical polynomial text form.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lucaspoly/integer.hpp"

namespace lucaspoly::detail {

struct ParsedTerm {
  std::array<unsigned, 2> exponents{0, 0};
  Integer coeff;
};

/// Grammar: [sign] term { sign term }, term := factor { ['*'] factor },
/// factor := integer | var ['^' integer]. Whitespace is ignored. `variables`
/// holds one or two variable letters; exponents index into it.
std::vector<ParsedTerm> parse_terms(std::string_view text, std::string_view variables);

/// Append one term in canonical form. `first` suppresses the leading " + ".
void append_term(std::string& out, const Integer& coeff, std::string_view variables,
                 const std::array<unsigned, 2>& exponents, bool first);

}  // namespace lucaspoly::detail
