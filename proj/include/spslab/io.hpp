#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "spslab/sps.hpp"

namespace spslab {

using Instance = std::variant<FiniteClosureSpace, StatePropertySystem>;

/// Parse failures, distinctly coded: malformed text, schema violations, or
/// axiom violations found by the validators.
class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, Schema, Axiom };
    ParseError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Parses a version-1 instance document (closure-space or sps) and validates
/// it. Throws ParseError; never returns an invalid object.
Instance parse_instance(const std::string& text);

/// Canonical form: sorted labels, canonical family order, fixed key order,
/// two-space indentation, newline-terminated. Deterministic, and
/// parse(serialize(x)) reconstructs x exactly.
std::string serialize_instance(const Instance& instance);

std::string serialize_instance(const FiniteClosureSpace& space);
std::string serialize_instance(const StatePropertySystem& sps);

/// FNV-1a 64-bit digest, used for corpus fingerprints in golden files.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

} // namespace spslab
