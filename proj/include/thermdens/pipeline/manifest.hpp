#pragma once

#include <string>
#include <vector>

namespace thermdens::pipeline {

// Small CSV table without quoting (values never contain commas or
// newlines). Lines starting with '#' are comments; the first comment is
// kept as the table's provenance line.
class CsvTable {
public:
    CsvTable() = default;
    explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    static CsvTable load(const std::string& path);
    void save(const std::string& path) const;
    std::string str() const;

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    std::size_t rows() const noexcept { return rows_.size(); }

    // Throws DataError for an unknown column.
    std::size_t column(const std::string& name) const;
    bool has_column(const std::string& name) const;
    const std::string& get(std::size_t row, const std::string& name) const;

    // Adds the column (empty for every row) when missing.
    void set(std::size_t row, const std::string& name, const std::string& value);
    void add_row(std::vector<std::string> values);

    std::string comment;  // written as "# <comment>"

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

std::vector<std::string> split(const std::string& s, char sep);
std::string join(const std::vector<std::string>& parts, char sep);

}  // namespace thermdens::pipeline
