#pragma once

#include <string>

#include "halftwist/clifford.hpp"
#include "halftwist/hodge.hpp"
#include "halftwist/polar.hpp"

namespace halftwist {

// Canonical table text: a JSON object with keys "half_degree", "cm_type",
// "weight" and "entries", entries sorted by (embedding, p, q), exact
// integers only.  Parsing a canonical file and printing it back is
// byte-stable.
std::string table_to_text(const HodgeTable& t);
HodgeTable table_from_text(const std::string& text);

// Form text: {"d": <integer>, "diag": ["p/q", ...]}.
std::string form_to_text(const QuadFormDiag& f);
QuadFormDiag form_from_text(const std::string& text);

// Period text: a JSON list of complex numbers as ["re", "im"] pairs of
// decimal strings.
std::string period_to_text(const PeriodVector& p);
PeriodVector period_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace halftwist
