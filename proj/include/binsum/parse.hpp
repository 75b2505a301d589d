#pragma once

// Exact parsing of command-line numbers, ranges and vertex-set files.
// Malformed input raises DomainError.

#include "binsum/certified.hpp"
#include "binsum/energy.hpp"

#include <istream>
#include <string>

namespace binsum {

/// "p/q", an integer, or a decimal with optional exponent ("2.57", "1e-3"),
/// converted without rounding.
ExactRational parse_rational(const std::string& text);

/// Inclusive integer range "lo..hi", or a single integer.
struct Range {
    unsigned long lo = 0;
    unsigned long hi = 0;

    std::string str() const;
};

Range parse_range(const std::string& text);

unsigned long parse_unsigned(const std::string& text);

/// One vertex per line as a 0/1 string; blank lines and '#' lines skipped.
/// Dimension comes from the first vertex and must be uniform; a repeated
/// vertex is rejected.
HypercubeSubset parse_set(std::istream& in);
HypercubeSubset read_set_file(const std::string& path);

}  // namespace binsum
