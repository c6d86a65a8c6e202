#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nmctl {

enum class Format { csv, json };

using Value = std::variant<double, bool, std::string>;

// Column-ordered result table. Doubles are written with the shortest
// representation that round-trips; NaN becomes "nan" in CSV and null in JSON.
class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::vector<Value> row);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Value>>& rows() const noexcept { return rows_; }

    std::string to_csv() const;
    std::string to_json() const;
    std::string render(Format format) const { return format == Format::csv ? to_csv() : to_json(); }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Value>> rows_;
};

std::string format_double(double v);

// Relative paths resolve against $NMCTL_OUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& path);

// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace nmctl
