#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ucplab/cnf.hpp"
#include "ucplab/parse_error.hpp"

namespace ucplab {

// DIMACS CNF reader. Comment lines start with 'c'; the header is
// "p cnf <vars> <clauses>"; clauses are whitespace-separated signed integers
// terminated by 0 and may span lines. The declared clause count refers to the
// clauses as written; duplicates collapse afterwards (formulas are sets).
// Tautological clauses, out-of-range variables and malformed input raise
// ParseError with the line number.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

// Writer: clauses in canonical sorted order, literals sorted by variable.
// parse_dimacs(emit_dimacs(f)) == f.
void emit_dimacs(const CnfFormula& f, std::ostream& out);
std::string emit_dimacs(const CnfFormula& f);

}  // namespace ucplab
