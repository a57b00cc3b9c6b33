#include "cosec/format.hpp"

#include <charconv>

#include <json.hpp>

namespace cosec {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {
std::string opt_str(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string("NA");
}
}  // namespace

void write_csv_row(std::ostream& os, const OutputRecord& rec) {
    os << rec.n << ',';
    if (rec.nu)
        os << *rec.nu;
    else
        os << "NA";
    os << ',' << rec.method << ',' << opt_str(rec.value) << ',' << opt_str(rec.bracket_lo)
       << ',' << opt_str(rec.bracket_hi) << ',' << opt_str(rec.residual) << ','
       << rec.error << '\n';
}

std::string record_to_json(const OutputRecord& rec) {
    nlohmann::ordered_json j;
    j["n"] = rec.n;
    if (rec.nu)
        j["nu"] = *rec.nu;
    else
        j["nu"] = nullptr;
    j["method"] = rec.method;
    if (rec.value)
        j["value"] = *rec.value;
    else
        j["value"] = nullptr;
    if (rec.bracket_lo) j["bracket_lo"] = *rec.bracket_lo; else j["bracket_lo"] = nullptr;
    if (rec.bracket_hi) j["bracket_hi"] = *rec.bracket_hi; else j["bracket_hi"] = nullptr;
    if (rec.residual) j["residual"] = *rec.residual; else j["residual"] = nullptr;
    j["error"] = rec.error;
    return j.dump();
}

}  // namespace cosec
