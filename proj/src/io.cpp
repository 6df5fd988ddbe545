#include "wiro/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wiro::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
    for (const std::string& h : header) os << "# " << h << "\n";
    for (size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "") << columns[i];
    }
    os << "\n";
    for (const std::vector<double>& row : rows) {
        if (row.size() != columns.size()) {
            throw std::invalid_argument("write_csv: row width mismatch");
        }
        for (size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << format_double(row[i]);
        }
        os << "\n";
    }
}

void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_csv_file: cannot open " + path);
    write_csv(os, header, columns, rows);
    if (!os) throw std::runtime_error("write_csv_file: write failed for " + path);
}

Table read_csv(std::istream& is) {
    Table t;
    std::string line;
    bool have_columns = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            size_t start = 1;
            if (start < line.size() && line[start] == ' ') ++start;
            t.header.push_back(line.substr(start));
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!have_columns) {
            t.columns = fields;
            have_columns = true;
            continue;
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& f : fields) {
            char* end = nullptr;
            const double v = std::strtod(f.c_str(), &end);
            if (end == f.c_str()) throw std::runtime_error("read_csv: non-numeric field '" + f + "'");
            row.push_back(v);
        }
        if (row.size() != t.columns.size()) throw std::runtime_error("read_csv: row width mismatch");
        t.rows.push_back(std::move(row));
    }
    if (!have_columns) throw std::runtime_error("read_csv: no column line");
    return t;
}

Table read_csv_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_csv_file: cannot open " + path);
    return read_csv(is);
}

}  // namespace wiro::io
