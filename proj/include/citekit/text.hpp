#pragma once

// Small text utilities shared across the toolkit: case folding, trimming,
// tokenizing, UTF-8 repair and RFC-4180 CSV reading/writing.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace citekit {

// Toolkit-wide error type. Parse and configuration failures throw this.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace text {

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string fold(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(ascii_lower(c));
    return out;
}

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

inline std::string_view trim_view(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

inline std::string trim(std::string_view s) { return std::string(trim_view(s)); }

inline std::vector<std::string> split(std::string_view s, std::string_view sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.emplace_back(s.substr(pos));
            break;
        }
        out.emplace_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
    return out;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Case/punctuation-insensitive comparison form: lowercase alphanumerics only.
inline std::string alnum_fold(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) out.push_back(ascii_lower(c));
    }
    return out;
}

// Replaces invalid UTF-8 bytes by their Latin-1 interpretation and counts the
// repairs. WoS exports mix encodings, so this keeps downstream JSON valid.
inline std::string repair_utf8(std::string_view in, size_t& repaired) {
    std::string out;
    out.reserve(in.size());
    size_t i = 0;
    auto is_cont = [&](size_t k) {
        return k < in.size() && (static_cast<uint8_t>(in[k]) & 0xC0) == 0x80;
    };
    auto emit_latin1 = [&](uint8_t b) {
        out.push_back(static_cast<char>(0xC0 | (b >> 6)));
        out.push_back(static_cast<char>(0x80 | (b & 0x3F)));
        ++repaired;
    };
    while (i < in.size()) {
        uint8_t b = static_cast<uint8_t>(in[i]);
        if (b < 0x80) {
            out.push_back(in[i]);
            ++i;
        } else if ((b & 0xE0) == 0xC0 && is_cont(i + 1)) {
            out.append(in.substr(i, 2));
            i += 2;
        } else if ((b & 0xF0) == 0xE0 && is_cont(i + 1) && is_cont(i + 2)) {
            out.append(in.substr(i, 3));
            i += 3;
        } else if ((b & 0xF8) == 0xF0 && is_cont(i + 1) && is_cont(i + 2) && is_cont(i + 3)) {
            out.append(in.substr(i, 4));
            i += 4;
        } else {
            emit_latin1(b);
            ++i;
        }
    }
    return out;
}

inline std::string strip_bom(std::string s) {
    if (s.size() >= 3 && static_cast<uint8_t>(s[0]) == 0xEF &&
        static_cast<uint8_t>(s[1]) == 0xBB && static_cast<uint8_t>(s[2]) == 0xBF) {
        s.erase(0, 3);
    }
    return s;
}

// Fixed-precision double formatting; keeps file output byte-stable.
inline std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

// ---- RFC-4180 CSV ----------------------------------------------------------

using CsvRow = std::vector<std::string>;

// Parses a full CSV document. Handles quoted fields with embedded commas,
// quotes ("") and newlines; accepts both \n and \r\n.
inline std::vector<CsvRow> parse_csv(std::string_view in) {
    std::vector<CsvRow> rows;
    CsvRow row;
    std::string field;
    bool in_quotes = false;
    bool row_has_data = false;
    size_t i = 0;
    auto end_field = [&]() {
        row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&]() {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        row_has_data = false;
    };
    while (i < in.size()) {
        char c = in[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < in.size() && in[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                field.push_back(c);
                ++i;
            }
        } else if (c == '"') {
            in_quotes = true;
            row_has_data = true;
            ++i;
        } else if (c == ',') {
            end_field();
            row_has_data = true;
            ++i;
        } else if (c == '\r' && i + 1 < in.size() && in[i + 1] == '\n') {
            end_row();
            i += 2;
        } else if (c == '\n') {
            end_row();
            ++i;
        } else {
            field.push_back(c);
            row_has_data = true;
            ++i;
        }
    }
    if (in_quotes) throw Error("csv: unterminated quoted field at end of input");
    if (row_has_data || !field.empty() || !row.empty()) end_row();
    return rows;
}

inline std::string csv_escape(std::string_view s) {
    bool needs = s.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline void write_csv_row(std::ostream& os, const CsvRow& row) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(row[i]);
    }
    os << '\n';
}

inline std::string read_stream(std::istream& is) {
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace text
}  // namespace citekit
