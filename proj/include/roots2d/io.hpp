#pragma once

// Text interfaces shared by the CLI and its tests: the complex literal
// grammar ("a+bi", whitespace-free), run records, and CSV/JSON emission.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "roots2d/core.hpp"

namespace roots2d {

/// Parse a complex literal: optional sign, decimal real part, optional signed
/// imaginary part with trailing 'i'. Examples: "0.17+0.97i", "-5.4", "3i".
/// Throws std::invalid_argument on malformed input.
Complex parse_complex(const std::string& text);

/// Parse "x,y" as a point pair of two complex literals.
PointPair parse_point(const std::string& text);

/// Format with 12 significant digits so that parse(format(z)) round-trips
/// the printed precision.
std::string format_complex(Complex z);
std::string format_real(double v);

/// One benchmark/solve record; columns mirror the CSV layout exactly.
struct RunRecord {
    std::string system;
    std::string method;
    PointPair start;
    RootResult result;
    std::optional<std::string> matched_known_root;
    double wall_time_ms = 0.0;
};

/// Match an exit point against a system's cataloged roots; returns the label
/// of the first root within its stated tolerance (max coordinate distance).
std::optional<std::string> match_known_root(const SystemSpec& sys, PointPair p);

extern const char* const kCsvHeader;

std::string to_csv_row(const RunRecord& r);
void write_csv(std::ostream& os, const std::vector<RunRecord>& records);
void write_json(std::ostream& os, const std::vector<RunRecord>& records);

}  // namespace roots2d
