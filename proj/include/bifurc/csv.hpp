#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bifurc {

/// Shortest round-trip decimal form ('.' separator, "nan"/"inf"/"-inf" for specials).
std::string format_number(double x);

/// Comma-separated writer with a mandatory header and '\n' line endings.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::vector<std::string> header);

    CsvWriter& operator<<(double x);
    CsvWriter& operator<<(long x);
    CsvWriter& operator<<(int x) { return *this << static_cast<long>(x); }
    CsvWriter& operator<<(std::string_view text);
    CsvWriter& operator<<(const char* text) { return *this << std::string_view(text); }
    /// Ends the row; throws IoError if the cell count differs from the header.
    void end_row();

private:
    void cell(std::string_view text);

    std::ostream& out_;
    std::size_t columns_;
    std::size_t filled_ = 0;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name; throws IoError when missing.
    std::size_t column(std::string_view name) const;
};

/// Parses what CsvWriter produces (no quoting). Ragged rows throw IoError.
CsvTable read_csv(std::istream& in);

}  // namespace bifurc
