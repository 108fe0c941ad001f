// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lifeline::csv {

// RFC 4180 style quoting: fields containing commas, quotes or newlines are
// wrapped in double quotes with inner quotes doubled.
std::string escape_field(std::string_view field);

std::string join_row(const std::vector<std::string>& fields);

// Splits one logical CSV record. `text` must contain the full record
// (embedded newlines inside quotes are allowed when passing whole files to
// parse_records).
std::vector<std::string> split_row(std::string_view line);

// Parses a whole CSV document into records, honoring quoted fields that
// span commas and newlines. Trailing '\r' of CRLF input is stripped.
std::vector<std::vector<std::string>> parse_records(std::string_view text);

}  // namespace lifeline::csv
