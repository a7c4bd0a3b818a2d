#include "roots2d/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace roots2d {

namespace {

// Consume one signed decimal number (with optional exponent) from s[pos...].
double parse_number(const std::string& s, size_t& pos) {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw std::invalid_argument("malformed complex literal: " + s);
    pos += size_t(end - begin);
    return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("complex literal must be whitespace-free: " + text);

    size_t pos = 0;
    // pure imaginary with implicit magnitude: "i", "-i", "+i"
    auto bare_i = [&](size_t p) {
        return p + 1 == text.size() && text[p] == 'i';
    };
    double sign0 = 1.0;
    size_t p0 = 0;
    if (text[0] == '+' || text[0] == '-') {
        sign0 = text[0] == '-' ? -1.0 : 1.0;
        p0 = 1;
    }
    if (bare_i(p0)) return {0.0, sign0};

    const double first = parse_number(text, pos);
    if (pos == text.size()) return {first, 0.0};
    if (text[pos] == 'i') {
        if (pos + 1 != text.size())
            throw std::invalid_argument("trailing characters in complex literal: " + text);
        return {0.0, first};
    }
    if (text[pos] != '+' && text[pos] != '-')
        throw std::invalid_argument("malformed complex literal: " + text);
    if (bare_i(pos + 1)) return {first, text[pos] == '-' ? -1.0 : 1.0};
    const double second = parse_number(text, pos);
    if (pos + 1 != text.size() || text[pos] != 'i')
        throw std::invalid_argument("imaginary part must end in 'i': " + text);
    return {first, second};
}

PointPair parse_point(const std::string& text) {
    const size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("point literal must be \"x,y\": " + text);
    return {parse_complex(text.substr(0, comma)), parse_complex(text.substr(comma + 1))};
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_complex(Complex z) {
    std::string s = format_real(z.real());
    const std::string im = format_real(z.imag());
    if (!im.empty() && im[0] != '-') s += '+';
    s += im;
    s += 'i';
    return s;
}

std::optional<std::string> match_known_root(const SystemSpec& sys, PointPair p) {
    for (const KnownRoot& r : sys.known_roots) {
        const double d = std::max(std::abs(p.x - r.pair.x), std::abs(p.y - r.pair.y));
        if (d <= r.tolerance) return r.provenance;
    }
    return std::nullopt;
}

const char* const kCsvHeader =
    "system,method,x0,y0,x_final,y_final,outer_iters,inner_iters,"
    "f1_abs,f2_abs,status,matched_root,wall_time_ms";

std::string to_csv_row(const RunRecord& r) {
    std::string row;
    row += r.system;
    row += ',';
    row += r.method;
    row += ',';
    row += format_complex(r.start.x);
    row += ',';
    row += format_complex(r.start.y);
    row += ',';
    row += format_complex(r.result.root.x);
    row += ',';
    row += format_complex(r.result.root.y);
    row += ',';
    row += std::to_string(r.result.outer_iterations);
    row += ',';
    row += std::to_string(r.result.inner_iterations_total);
    row += ',';
    row += format_real(r.result.residual_f1);
    row += ',';
    row += format_real(r.result.residual_f2);
    row += ',';
    row += to_string(r.result.exit_reason);
    row += ',';
    row += r.matched_known_root.value_or("");
    row += ',';
    row += format_real(r.wall_time_ms);
    return row;
}

void write_csv(std::ostream& os, const std::vector<RunRecord>& records) {
    os << kCsvHeader << '\n';
    for (const RunRecord& r : records) os << to_csv_row(r) << '\n';
}

void write_json(std::ostream& os, const std::vector<RunRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RunRecord& r : records) {
        nlohmann::json o;
        o["system"] = r.system;
        o["method"] = r.method;
        o["x0"] = format_complex(r.start.x);
        o["y0"] = format_complex(r.start.y);
        o["x_final"] = format_complex(r.result.root.x);
        o["y_final"] = format_complex(r.result.root.y);
        o["outer_iters"] = r.result.outer_iterations;
        o["inner_iters"] = r.result.inner_iterations_total;
        o["f1_abs"] = r.result.residual_f1;
        o["f2_abs"] = r.result.residual_f2;
        o["status"] = to_string(r.result.exit_reason);
        o["matched_root"] = r.matched_known_root.value_or("");
        o["wall_time_ms"] = r.wall_time_ms;
        arr.push_back(std::move(o));
    }
    os << arr.dump(2) << '\n';
}

}  // namespace roots2d
