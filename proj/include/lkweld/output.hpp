#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace lkweld {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// %.17g: round-trips every double and is locale-independent here.
std::string format_number(double v);

// Header line plus one line per row, comma-separated, '\n' line endings.
std::string format_csv(const CsvTable& table);

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Static SVG line plot; log-log axes when loglog is set (non-positive points
// are dropped). Byte-identical for identical inputs.
std::string render_svg_plot(const std::string& title, const std::string& xlabel,
                            const std::string& ylabel, const std::vector<PlotSeries>& series,
                            bool loglog);

// True when the library was built with plot support (LKWELD_PLOTS).
bool plots_available();

// Writes result files under one directory. Throws IoFailure when the
// directory cannot be created or a file cannot be written.
class OutputSink {
 public:
  explicit OutputSink(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path write_csv(const std::string& filename, const CsvTable& table) const;
  std::filesystem::path write_text(const std::string& filename, const std::string& content) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace lkweld
