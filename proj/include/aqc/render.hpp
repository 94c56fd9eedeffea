#pragma once

// Text output for the command-line tool. Every count is written as an exact
// decimal integer; in JSON the values are strings so that no consumer rounds
// them through a double.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqc/counts.hpp"
#include "aqc/polynomial.hpp"

namespace aqc {

enum class Format { kPlain, kCsv, kJson };

std::optional<Format> parse_format(const std::string& name);

/// "1,2,5" -> MultiSpec{1,2,5}; throws InvalidArgument on bad input.
MultiSpec parse_lengths(const std::string& text);

/// plain: one row per n, aligned, zero-padded to the widest row;
/// csv: "n,k,value" per entry; json: {"q":q,"rows":[["1"],...]}.
std::string render_triangle(const CountTable& table, Format format);

/// plain: "v0,v1,..."; csv: "n,k,value" with k = 0;
/// json: {"q":q,"method":m,"values":[...]}.
std::string render_free(unsigned q, const std::string& method, const std::vector<Nat>& values,
                        Format format);

/// plain: "(k1,...,km) value" per line; csv: "n,k_<q1>,...,value";
/// json: {"n":n,"lengths":[...],"terms":[{"ks":[...],"value":"..."}]}.
std::string render_multi(unsigned n, const MultiSpec& lengths,
                         const std::vector<std::pair<KVector, Nat>>& terms, Format format);

/// plain: the polynomial; csv: "monomial,value"; json: {"terms":[...]}.
std::string render_polynomial(const MPoly& p, const FamilyTable& families, Format format);

}  // namespace aqc
