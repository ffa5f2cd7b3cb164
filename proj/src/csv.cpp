#include "bifurc/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "bifurc/error.hpp"

namespace bifurc {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    require(ec == std::errc(), ErrorCode::IoError, "number formatting failed");
    return std::string(buf, end);
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header) : out_(out), columns_(header.size()) {
    require(!header.empty(), ErrorCode::IoError, "CSV header must not be empty");
    for (const std::string& h : header) cell(h);
    end_row();
}

void CsvWriter::cell(std::string_view text) {
    require(text.find_first_of(",\n\r\"") == std::string_view::npos, ErrorCode::IoError,
            "CSV cell contains a separator: " + std::string(text));
    if (filled_ > 0) out_ << ',';
    out_ << text;
    ++filled_;
}

CsvWriter& CsvWriter::operator<<(double x) {
    cell(format_number(x));
    return *this;
}

CsvWriter& CsvWriter::operator<<(long x) {
    cell(std::to_string(x));
    return *this;
}

CsvWriter& CsvWriter::operator<<(std::string_view text) {
    cell(text);
    return *this;
}

void CsvWriter::end_row() {
    require(filled_ == columns_, ErrorCode::IoError,
            "CSV row has " + std::to_string(filled_) + " cells, header has " + std::to_string(columns_));
    out_ << '\n';
    filled_ = 0;
    require(static_cast<bool>(out_), ErrorCode::IoError, "CSV write failed");
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw Error(ErrorCode::IoError, "CSV has no column '" + std::string(name) + "'");
}

CsvTable read_csv(std::istream& in) {
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::size_t begin = 0;
        for (;;) {
            const std::size_t comma = line.find(',', begin);
            cells.push_back(line.substr(begin, comma - begin));
            if (comma == std::string::npos) break;
            begin = comma + 1;
        }
        return cells;
    };
    CsvTable table;
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), ErrorCode::IoError, "CSV is empty");
    table.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        table.rows.push_back(split(line));
        require(table.rows.back().size() == table.header.size(), ErrorCode::IoError,
                "ragged CSV row " + std::to_string(table.rows.size()));
    }
    return table;
}

}  // namespace bifurc
