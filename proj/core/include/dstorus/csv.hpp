#ifndef DSTORUS_CSV_HPP
#define DSTORUS_CSV_HPP

#include <map>
#include <string>
#include <vector>

namespace dst::io {

// Minimal CSV writer; floating-point cells at 17 significant digits so doubles
// round-trip losslessly.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<double>& values);
    void raw_row(const std::string& line);

  private:
    std::string path_;
    std::string buffer_;
    std::size_t columns_;

  public:
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;
};

std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    const std::vector<double>& column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace dst::io

#endif
