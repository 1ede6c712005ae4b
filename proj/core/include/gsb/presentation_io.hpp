#pragma once

#include <nlohmann/json.hpp>

#include "gsb/quotients.hpp"

namespace gsb {

using Json = nlohmann::ordered_json;

/// Syntax or semantic error in a presentation file or expression, with a
/// 1-based position when one is known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// Recursive-descent parser for the relation grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nonneg-integer)?
///   atom   := identifier | integer ['/' integer] | '(' expr ')'
/// Juxtaposition is not multiplication; '*' is required.
Poly parse_poly_expr(const std::string& text, const Context& ctx);

/// Expression string that parse_poly_expr maps back to the same polynomial.
std::string print_poly_expr(const Poly& p);

/// A parsed presentation file: the semantic Presentation plus the free-form
/// metadata block, kept so printing is faithful.
struct PresentationFile {
    Presentation presentation;
    Json meta;
};

/// Parses the JSON presentation format. Keys: field ("rational" or
/// {"prime": p}), generators ([{name, weight}]), relations (expression
/// strings), orders ({classical, series}, each {kind, precedence}), meta.
/// The series order must be an admissible N-order; theta-lex weights come
/// from the generator weights.
PresentationFile parse_presentation(const std::string& text);

std::string print_presentation(const PresentationFile& f);

Json order_to_json(const OrderSpec& order);

}  // namespace gsb
