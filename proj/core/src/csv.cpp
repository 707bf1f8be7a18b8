#include "dstorus/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dst::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : path_(path), columns_(header.size()) {
    std::string line;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) line += ",";
        line += header[i];
    }
    buffer_ = line + "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw std::invalid_argument("CsvWriter: column count mismatch");
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += ",";
        line += format_double(values[i]);
    }
    buffer_ += line + "\n";
}

void CsvWriter::raw_row(const std::string& line) { buffer_ += line + "\n"; }

CsvWriter::~CsvWriter() {
    std::ofstream out(path_);
    if (out) out << buffer_;
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return columns[i];
    }
    throw std::invalid_argument("CsvTable: no column named '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty file " + path);
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
    t.columns.resize(t.header.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::size_t col = 0;
        while (std::getline(ls, cell, ',')) {
            if (col >= t.columns.size()) throw std::runtime_error("read_csv: ragged row in " + path);
            t.columns[col++].push_back(std::stod(cell));
        }
        if (col != t.columns.size()) throw std::runtime_error("read_csv: ragged row in " + path);
    }
    return t;
}

}  // namespace dst::io
