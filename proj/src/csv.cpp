// SPDX-License-Identifier: Apache-2.0
#include "lifeline/csv.hpp"

#include "lifeline/errors.hpp"

namespace lifeline::csv {

std::string escape_field(std::string_view field) {
    bool needs_quotes = false;
    for (char c : field) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') {
            needs_quotes = true;
            break;
        }
    }
    if (!needs_quotes)
        return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out.push_back(',');
        out += escape_field(fields[i]);
    }
    return out;
}

std::vector<std::string> split_row(std::string_view line) {
    auto records = parse_records(line);
    if (records.empty())
        return {};
    if (records.size() > 1)
        throw CsvSchemaError("expected a single CSV record");
    return records.front();
}

std::vector<std::vector<std::string>> parse_records(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        records.push_back(std::move(row));
        row.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field.empty())
                throw CsvSchemaError("stray quote inside unquoted CSV field");
            in_quotes = true;
            field_started = true;
            break;
        case ',':
            end_field();
            field_started = false;
            break;
        case '\r':
            if (i + 1 < text.size() && text[i + 1] == '\n') {
                end_row();
                ++i;
            } else {
                field.push_back(c);
            }
            break;
        case '\n':
            end_row();
            break;
        default:
            field.push_back(c);
            field_started = true;
            break;
        }
    }
    if (in_quotes)
        throw CsvSchemaError("unterminated quoted CSV field");
    if (field_started || !field.empty() || !row.empty())
        end_row();
    return records;
}

}  // namespace lifeline::csv
