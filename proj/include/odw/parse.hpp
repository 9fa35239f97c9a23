#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "odw/diagram.hpp"
#include "odw/pi_system.hpp"
#include "odw/veblen.hpp"

namespace odw {

/// Parse failure with the input offset where it happened and the expected
/// production, suitable for a caret diagnostic.
struct ParseError : std::runtime_error {
  ParseError(std::size_t at, std::string what_expected)
      : std::runtime_error("expected " + what_expected + " at offset " +
                           std::to_string(at)),
        offset(at),
        expected(std::move(what_expected)) {}
  std::size_t offset;
  std::string expected;
};

/**
 * Grammars (whitespace is ignored between tokens; sums associate left and
 * are parsed into one flat sum node):
 *
 *   term   := '0' | 'W' | 'w^(' term ')' | 'd(' term ')' | term ' + ' term
 *   vterm  := '0' | 'phi(' vterm ',' vterm ')' | vterm ' + ' vterm
 *   piterm := '0' | 's' | 's+' | 'p' | 'p+' | 'phi(' piterm ',' piterm ')'
 *           | 'D1(' piterm ')' | 'D0(' piterm ')' | piterm ' + ' piterm
 *
 * In piterm the '+' of 's+'/'p+' must follow the letter immediately; a
 * spaced '+' is always the sum operator.
 *
 * Parsers accept non-normal input and return the raw tree; callers
 * normalize as needed.  A normal term's printed form parses back to an
 * identical tree.
 */
Diagram parse_diagram(std::string_view text);
VTerm parse_vterm(std::string_view text);
PiTerm parse_piterm(std::string_view text);

}  // namespace odw
