#ifndef ORDLOC_IO_HPP
#define ORDLOC_IO_HPP

#include <string>
#include <vector>

#include "ordloc/core.hpp"

namespace ordloc {

// Instance documents look like:
//   {"model": "multiplicative",
//    "alpha": ["1", "3"],
//    "agents": [{"x": "0",   "pref": [1, 2]},
//               {"x": "0.4", "pref": [2, 1]}]}
// Numbers are carried as strings (decimals or "p/q") so they stay exact;
// bare JSON integers are accepted too, JSON floats are rejected. Facility
// indices are 1-based on this surface.
Instance parse_instance_text(const std::string& text);
Instance load_instance_file(const std::string& path);
std::string instance_to_text(const Instance& inst);

// "1/5,4/5" -> placement; emitted back in the same shape.
Placement parse_placement(const std::string& list, std::size_t expected_size);
std::string placement_to_string(const Placement& y);

std::string alpha_to_string(const std::vector<Rat>& alpha);  // ';'-joined

// ---- CSV reporting ----------------------------------------------------------

// The column set is frozen; downstream tooling keys on this exact header.
extern const char* const kCsvHeader;

struct CsvRow {
    std::string command;
    std::string mechanism;   // "" -> "-"
    std::string objective;   // likewise for the rest
    std::string alpha;
    std::string n;
    std::string seed;
    std::string value_lo, value_hi;
    std::string opt_lo, opt_hi;
    std::string ratio_lo, ratio_hi;
    std::string verdict;
};

std::string csv_line(const CsvRow& row);

}  // namespace ordloc

#endif
