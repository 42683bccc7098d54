#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "runconfig.hpp"

namespace ringwalk::cli {

using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

OutputFormat output_format_from_string(const std::string& name);

/// Writes the table plus a header recording the effective configuration.
/// CSV gets a leading '#' comment block; JSON mirrors config and records.
/// The file is written to <path>.tmp and renamed into place, and the byte
/// stream is a pure function of (config, table).
void write_table(const std::filesystem::path& path, const RunConfig& config,
                 const Table& table, OutputFormat format);

std::string render_table(const RunConfig& config, const Table& table, OutputFormat format);

}  // namespace ringwalk::cli
