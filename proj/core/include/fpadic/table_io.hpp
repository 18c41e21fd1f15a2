#pragma once

#include <iosfwd>
#include <string>

#include "fpadic/measure.hpp"

namespace fpadic {

/// Level-table text format. Header line "p N L kind", then one line per
/// cylinder "a n value" with n ascending from 0 to L and a ascending within
/// each level. Values are exact integer or num/den rational literals.
/// Blank lines and lines starting with '#' are ignored on input.

// Serializes the first `depth + 1` levels of any evaluable measure; the
// written kind is always "tabulated".
void write_table(std::ostream& os, const Measure& mu, int depth);

struct LoadedTable {
    Context ctx;
    int depth;
    Measure measure;
};

// Parses a table written by write_table (or by hand) into a Tabulated
// measure; construction re-runs the weak-measure Cauchy validation.
LoadedTable read_table(std::istream& is);

LoadedTable read_table_file(const std::string& path);
void write_table_file(const std::string& path, const Measure& mu, int depth);

} // namespace fpadic
