#pragma once

#include <string>
#include <string_view>

#include "nearring/maps.hpp"
#include "nearring/table.hpp"

namespace nearring {

/// N lines of N comma-separated ranks, each line ending in '\n'.
std::string table_to_csv(const OperationTable& table);
/// Throws MapFormatError on ragged or non-numeric input.
OperationTable table_from_csv(std::string_view text);

/// {"order":N,"table":[[...],...]} followed by a newline.
std::string table_to_json(const OperationTable& table);
OperationTable table_from_json(std::string_view text);

/// Reads the rows back off column rank(b) of a multiplication table and
/// checks that they regenerate the whole table. Throws MapFormatError if not.
MapTriple maps_from_mul_table(const GroupParams& g, const OperationTable& table);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace nearring
