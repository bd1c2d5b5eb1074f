#pragma once

#include "alpfeas/model.hpp"

#include <stdexcept>
#include <string>

namespace alpfeas {

/// Position of a token in the source text, 1-based line, byte columns.
struct SourceSpan {
    int line = 0;
    int col_begin = 0;
    int col_end = 0;

    std::string str() const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, const std::string& message);
    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

/// Parses the .lsys line format:
///   - optional "vars NAME..." declaration line
///   - one constraint per line: a signed sum of terms, one relational
///     operator (<=, <, =, !=, >=, > or their unicode forms), another
///     signed sum; terms are "coeff var", "coeff * var", "var" or a bare
///     rational constant
///   - '#' starts a comment
/// Constraints are normalized (>= and > eliminated, variables left,
/// constant right) and the result validated.
LinearSystem parse_system(const std::string& text);

/// Canonical text for a validated system; parse_system(render_system(s))
/// reproduces s, and rendering is a fixed point. Only plain (degree-0)
/// systems are renderable.
std::string render_system(const LinearSystem& system);

/// Text form of one generated ALP, one row per line with everything
/// moved to the left of "<= 0" the way the gadget rows are usually
/// written, e.g. "(K+2) ~y2 - ~z2 <= 0" and "1 - K ~e <= 0". The header
/// comments record the case descriptor and the variable order.
std::string render_alp(const AlpProblem& alp);

} // namespace alpfeas
