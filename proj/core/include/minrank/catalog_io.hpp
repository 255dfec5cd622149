#pragma once

// Line-oriented catalog files and graph6 streams.
//
// A catalog file starts with '#' header lines carrying the search
// parameters, followed by one canonical graph6 code per member sorted by
// (order, canonical form). No timestamps are written, so equal searches give
// byte-identical files.

#include "minrank/forbidden.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace minrank {

class CatalogFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_catalog(std::ostream& out, const ForbiddenCatalog& catalog);
[[nodiscard]] std::string catalog_text(const ForbiddenCatalog& catalog);
/// Members are re-canonicalized and re-sorted; throws CatalogFormatError on
/// a missing header field or a bad graph6 line.
[[nodiscard]] ForbiddenCatalog read_catalog(std::istream& in);

/// One graph per non-empty line; lines starting with '#' are skipped. Throws
/// CatalogFormatError naming the line number on bad input.
[[nodiscard]] std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace minrank
