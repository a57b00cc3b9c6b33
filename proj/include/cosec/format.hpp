#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace cosec {

// Shortest decimal string that round-trips to the same double (<= 17
// significant digits); the basis of byte-identical CSV/JSON output.
std::string format_double(double v);

// One row of CLI output; column order is fixed, absent fields serialize as NA.
struct OutputRecord {
    std::int64_t n = 0;
    std::optional<std::int64_t> nu;
    std::string method;
    std::optional<double> value;
    std::optional<double> bracket_lo;
    std::optional<double> bracket_hi;
    std::optional<double> residual;
    std::string error;  // empty when the row succeeded
};

inline const char* output_record_header() {
    return "n,nu,method,value,bracket_lo,bracket_hi,residual,error";
}

void write_csv_row(std::ostream& os, const OutputRecord& rec);
std::string record_to_json(const OutputRecord& rec);  // single JSON object

}  // namespace cosec
