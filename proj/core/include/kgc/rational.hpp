#ifndef KGC_RATIONAL_HPP
#define KGC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kgc {

/// Exact rational coefficient. GMP keeps it canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Coefficient = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Coefficient parse_coefficient(std::string_view text);

/// Always "p/q" with q >= 1, e.g. "3/1", "-1/2".
std::string format_coefficient(const Coefficient& c);

}  // namespace kgc

#endif  // KGC_RATIONAL_HPP
