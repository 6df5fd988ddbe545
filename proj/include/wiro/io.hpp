#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wiro::io {

/// Shortest round-trippable decimal form (printf %.17g trimmed is not
/// portable across libcs; fixed %.17g keeps outputs byte-stable).
std::string format_double(double v);

struct Table {
    std::vector<std::string> header;   // '#'-prefixed metadata lines, prefix stripped
    std::vector<std::string> columns;  // column names
    std::vector<std::vector<double>> rows;
};

/// CSV layout: '#'-prefixed header lines, one comma-separated column-name
/// line, then numeric rows; UTF-8, LF endings.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows);

Table read_csv(std::istream& is);
Table read_csv_file(const std::string& path);

}  // namespace wiro::io
