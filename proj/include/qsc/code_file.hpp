#ifndef QSC_CODE_FILE_HPP
#define QSC_CODE_FILE_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qsc/code_model.hpp"

namespace qsc {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parsed contents of a code file:
//   linear <q> <k> <n>     followed by k rows of n symbols, or
//   nonlinear <q> <n> <M>  followed by M rows of n symbols.
// '#' comment lines and blank lines are ignored.
using ParsedCode = std::variant<GeneratorMatrix, CodewordList>;

ParsedCode parse_code_stream(std::istream& in);
ParsedCode parse_code_file(const std::string& path);

// Canonical writer; output re-parses to an identical code.
void write_code_stream(std::ostream& out, const ParsedCode& code);

struct CurveRow {
    double p, pue, pue_perp, good_bound, bad_bound;
};

// Header `p,pue,pue_perp,good_bound,bad_bound`, 17 significant digits,
// LF line endings.
void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows);

}  // namespace qsc

#endif
