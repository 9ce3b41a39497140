#pragma once

#include <string>

#include <json.hpp>

#include "mpa/msp.hpp"
#include "mpa/poly.hpp"

namespace mpa {

/// Parse failure with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(size_t position, const std::string& what)
        : std::runtime_error("at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Canonical text form of a two-row multiset partition: blocks as bracketed
/// value lists, barred values with a trailing apostrophe, e.g.
/// [[1],[1,1],[2,1',1'],[4,2',4'],[4']].  The parser accepts arbitrary block
/// and value order and canonicalizes; the printer emits canonical order.
MultisetPartition parse_msp(const std::string& text, int k);
std::string format_msp(const MultisetPartition& pi);

/// Integer partitions as comma-separated parts, e.g. "3,1,1".
std::vector<int> parse_int_partition(const std::string& text);
std::string format_int_partition(const std::vector<int>& parts);

/// Machine-readable export of a two-row partition: {"r":..,"k":..,"blocks":
/// [[1,-1],...]} with negative values for barred entries.
nlohmann::json msp_to_json(const MultisetPartition& pi);
nlohmann::json poly_to_json(const PolyX& p);
nlohmann::json rational_to_json(const Rational& q);

}  // namespace mpa
