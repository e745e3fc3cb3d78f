#pragma once

#include "lexer.hpp"
#include "nfpc/vsl.hpp"

namespace nfpc::vsl {

// Parses one expression starting at the lexer's current token and leaves the
// lexer positioned on the first token after it. Used by parse_vsl and by the
// model-file parser, where expressions appear mid-stream.
Result<ExprPtr, ParseError> parse_expression(Lexer& lexer);

}  // namespace nfpc::vsl
