#ifndef MAMMOAGE_CSV_HPP
#define MAMMOAGE_CSV_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "mammoage/errors.hpp"

// Small RFC-4180-ish CSV layer: quoted fields, embedded commas/quotes/newlines.
// The writer quotes only when needed so a write -> load -> write cycle is
// byte-stable.

namespace mammoage::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0; // 1-based line where the row started
};

inline std::vector<Row> parse(std::istream& in) {
    std::vector<Row> rows;
    std::string field;
    Row current;
    std::size_t line = 1;
    current.line = 1;
    bool in_quotes = false;
    bool row_started = false;

    auto end_field = [&] {
        current.fields.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(current));
        current = Row{};
        current.line = line;
        row_started = false;
    };

    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field.empty()) {
                throw FormatError("line " + std::to_string(line) + ": stray quote inside unquoted field");
            }
            in_quotes = true;
            row_started = true;
            break;
        case ',':
            end_field();
            row_started = true;
            break;
        case '\r':
            break;
        case '\n':
            ++line;
            if (row_started || !field.empty() || !current.fields.empty()) {
                end_row();
            } else {
                current.line = line;
            }
            break;
        default:
            field.push_back(c);
            row_started = true;
            break;
        }
    }
    if (in_quotes) {
        throw FormatError("line " + std::to_string(line) + ": unterminated quoted field");
    }
    if (row_started || !field.empty() || !current.fields.empty()) {
        end_row();
    }
    return rows;
}

inline std::vector<Row> parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return parse(in);
}

inline std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

inline void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << escape(fields[i]);
    }
    out << '\n';
}

} // namespace mammoage::csv

#endif // MAMMOAGE_CSV_HPP
