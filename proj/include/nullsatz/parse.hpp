#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nullsatz/leftideal.hpp"
#include "nullsatz/polymod.hpp"

namespace nullsatz {

// Grammar (whitespace ignored):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ['^' integer]
//   atom   := integer ['/' integer] | name | '(' expr ')'
// Names are variables, then algebra basis names, then the field generator.
// Errors are ParseError with the character offset in the message.

template <class F>
MPoly<F> parse_polynomial(const F& field, const std::vector<std::string>& vars, std::string_view text);

// "[p1, p2, ...]"
template <class F>
ModVector<F> parse_vector(const F& field, const std::vector<std::string>& vars, std::string_view text);

template <class F>
AlgPoly<F> parse_algpoly(const FinDimAlgebra<F>& alg, const std::vector<std::string>& vars, std::string_view text);

// Variable names used by a generator list: "x" alone, or x1..xn. Other names must be basis or field names.
std::vector<std::string> infer_variables(std::string_view text, std::size_t min_vars = 1);

// Generators separated by newlines or ';'. Lines starting with '#' are comments.
std::vector<std::string> split_generators(std::string_view text);

template <class F>
struct ParsedIdeal {
  std::vector<std::string> vars;
  std::vector<std::string> sources;
  std::vector<AlgPoly<F>> generators;
};

// nvars = 0 infers the variable count
template <class F>
ParsedIdeal<F> parse_generators(const FinDimAlgebra<F>& alg, std::string_view text, std::size_t nvars = 0);

}  // namespace nullsatz
