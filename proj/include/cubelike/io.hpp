// File formats and reports.
//
// Matrix format: '#' comment lines, then "d m", then d rows of m
// space-separated bits (row i = coordinate i of every element).
// Set format: one d-character bit string per line, one element each.
// In every bit string the leftmost character is coordinate 1, which is
// the least significant bit of the integer encoding (so "00001" at
// d = 5 is the vector e5, integer 16).
//
// Reports serialize to JSON with a fixed key order and fixed float
// formatting (17 significant digits), so identical inputs yield
// byte-identical documents.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cubelike/pst.hpp"
#include "cubelike/profile.hpp"
#include "cubelike/walk.hpp"

namespace cubelike {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

enum class FileFormat { matrix, set };

// Elements come back sorted ascending (the canonical ordering); pass
// keep_order = true to preserve file (column) order instead.
ConnectionSet parse_connection_set(std::istream& in, FileFormat format,
                                   bool keep_order = false);
ConnectionSet load_connection_set(const std::string& path, FileFormat format,
                                  bool keep_order = false);
void print_connection_set(std::ostream& out, const ConnectionSet& C,
                          FileFormat format);

std::string bit_string(const BitVec& v);
BitVec parse_bit_string(const std::string& s, int expected_dim = 0);

// Everything `analyze` reports about one graph.
struct Report {
    ConnectionSet input;
    CodeProfile profile;
    Spectrum spec;
    PstVerdict pst;
    PeriodInfo period;
    double tolerance = 0;
};

// Runs the full analysis pipeline (classify, spectrum, detect_pst,
// min_period).  tol = 0 picks the dimension default.
Report analyze(const ConnectionSet& C, double tol = 0.0);

std::string report_json(const Report& r);
std::string report_text(const Report& r);

// "p/q·π" (or "p·π" when q = 1), as used in reports.
std::string time_string(const RationalPi& t);

// %.17g rendering used for every float in JSON output.
std::string float_repr(double x);

}  // namespace cubelike
