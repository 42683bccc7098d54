#include "report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ringwalk/errors.hpp"
#include "ringwalk/version.hpp"

namespace ringwalk::cli {
namespace {

std::string cell_to_string(const Cell& cell) {
    if (std::holds_alternative<long long>(cell)) return format_int(std::get<long long>(cell));
    if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
    return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_to_json(const Cell& cell) {
    if (std::holds_alternative<long long>(cell)) return std::get<long long>(cell);
    if (std::holds_alternative<double>(cell)) return std::get<double>(cell);
    return std::get<std::string>(cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw NumericError("table row width does not match the column set");
    }
    rows.push_back(std::move(row));
}

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ConstraintError("unknown output format '" + name + "' (expected csv|json)");
}

std::string render_table(const RunConfig& config, const Table& table, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "# ringwalk " << kVersion << "\n";
        std::istringstream cfg(config.text());
        std::string line;
        while (std::getline(cfg, line)) os << "# " << line << "\n";
        for (size_t c = 0; c < table.columns.size(); ++c) {
            os << (c ? "," : "") << table.columns[c];
        }
        os << "\n";
        for (const auto& row : table.rows) {
            for (size_t c = 0; c < row.size(); ++c) {
                os << (c ? "," : "") << cell_to_string(row[c]);
            }
            os << "\n";
        }
        return os.str();
    }

    nlohmann::ordered_json doc;
    doc["version"] = kVersion;
    nlohmann::ordered_json cfg;
    cfg["subcommand"] = config.subcommand;
    for (const auto& [key, value] : config.options) cfg[key] = value;
    doc["config"] = cfg;
    doc["columns"] = table.columns;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json rec;
        for (size_t c = 0; c < row.size(); ++c) rec[table.columns[c]] = cell_to_json(row[c]);
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

void write_table(const std::filesystem::path& path, const RunConfig& config,
                 const Table& table, OutputFormat format) {
    const std::string body = render_table(config, table, format);
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw NumericError("cannot open '" + tmp.string() + "' for writing");
        }
        out << body;
        if (!out.flush()) {
            throw NumericError("short write to '" + tmp.string() + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace ringwalk::cli
