#include "ucplab/dimacs.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace ucplab {

namespace {

bool parse_int(const std::string& token, long long& out) {
  if (token.empty()) return false;
  std::size_t i = token[0] == '-' ? 1 : 0;
  if (i == token.size()) return false;
  for (; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return false;
  }
  try {
    out = std::stoll(token);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  bool got_header = false;
  long long num_vars = 0;
  long long declared = 0;
  long long raw_count = 0;
  std::vector<Clause> clauses;
  std::vector<Lit> current;
  bool current_taut = false;
  int line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      if (token == "c") break;  // trailing comment on a line
      if (!got_header) {
        if (token != "p") throw ParseError(line_no, "expected DIMACS header before clauses");
        std::string fmt;
        if (!(ls >> fmt) || fmt != "cnf") throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
        std::string a, b;
        if (!(ls >> a >> b) || !parse_int(a, num_vars) || !parse_int(b, declared) ||
            num_vars < 0 || declared < 0) {
          throw ParseError(line_no, "malformed DIMACS header");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(line_no, "trailing tokens after header");
        got_header = true;
        continue;
      }
      long long code;
      if (!parse_int(token, code)) throw ParseError(line_no, "not an integer: '" + token + "'");
      if (code == 0) {
        ++raw_count;
        if (current_taut) throw ParseError(line_no, "tautological clause");
        std::sort(current.begin(), current.end());
        current.erase(std::unique(current.begin(), current.end()), current.end());
        clauses.emplace_back(current);
        current.clear();
        continue;
      }
      const long long v = code < 0 ? -code : code;
      if (v > num_vars) {
        throw ParseError(line_no, "variable " + std::to_string(v) + " exceeds declared count " +
                                      std::to_string(num_vars));
      }
      const Lit l(static_cast<int>(code));
      if (std::find(current.begin(), current.end(), -l) != current.end()) current_taut = true;
      current.push_back(l);
    }
  }
  if (!got_header) throw ParseError(line_no, "missing DIMACS header");
  if (!current.empty()) throw ParseError(line_no, "unterminated clause at end of input");
  if (raw_count != declared) {
    throw ParseError(line_no, "clause count mismatch: header declares " + std::to_string(declared) +
                                  ", found " + std::to_string(raw_count));
  }
  return CnfFormula(static_cast<int>(num_vars), std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

void emit_dimacs(const CnfFormula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars() << ' ' << f.size() << '\n';
  for (const Clause& c : f) {
    for (Lit l : c) out << l.code << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  emit_dimacs(f, out);
  return out.str();
}

}  // namespace ucplab
