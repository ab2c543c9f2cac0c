#include "lkweld/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "lkweld/errors.hpp"

namespace lkweld {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

bool plots_available() {
#ifdef LKWELD_HAVE_PLOTS
  return true;
#else
  return false;
#endif
}

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg_plot(const std::string& title, const std::string& xlabel,
                            const std::string& ylabel, const std::vector<PlotSeries>& series,
                            bool loglog) {
  constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  auto tx = [loglog](double v) { return loglog ? std::log10(v) : v; };

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  std::vector<std::vector<std::pair<double, double>>> pts(series.size());
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& ser = series[s];
    for (std::size_t i = 0; i < std::min(ser.x.size(), ser.y.size()); ++i) {
      if (loglog && !(ser.x[i] > 0.0 && ser.y[i] > 0.0)) continue;
      if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) continue;
      const double x = tx(ser.x[i]), y = tx(ser.y[i]);
      pts[s].emplace_back(x, y);
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!(xmin < xmax)) { xmin -= 1.0; xmax += 1.0; }
  if (!(ymin < ymax)) { ymin -= 1.0; ymax += 1.0; }
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fixed(W / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(title) << "</text>\n";
  svg << "<rect x=\"" << fixed(L) << "\" y=\"" << fixed(T) << "\" width=\"" << fixed(W - L - R)
      << "\" height=\"" << fixed(H - T - B) << "\" fill=\"none\" stroke=\"black\"/>\n";
  const std::string xl = loglog ? "log10 " + xlabel : xlabel;
  const std::string yl = loglog ? "log10 " + ylabel : ylabel;
  svg << "<text x=\"" << fixed(W / 2) << "\" y=\"" << fixed(H - 12)
      << "\" text-anchor=\"middle\">" << escape(xl) << "</text>\n";
  svg << "<text x=\"16\" y=\"" << fixed(H / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fixed(H / 2) << ")\">" << escape(yl) << "</text>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    char lab[32];
    std::snprintf(lab, sizeof lab, "%.3g", fx);
    svg << "<text x=\"" << fixed(px(fx)) << "\" y=\"" << fixed(H - B + 16)
        << "\" text-anchor=\"middle\">" << lab << "</text>\n";
    std::snprintf(lab, sizeof lab, "%.3g", fy);
    svg << "<text x=\"" << fixed(L - 6) << "\" y=\"" << fixed(py(fy) + 4)
        << "\" text-anchor=\"end\">" << lab << "</text>\n";
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = colors[s % 5];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts[s].size(); ++i) {
      if (i) svg << ' ';
      svg << fixed(px(pts[s][i].first)) << ',' << fixed(py(pts[s][i].second));
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << fixed(L + 10) << "\" y=\"" << fixed(T + 16 + 14.0 * s) << "\" fill=\""
        << color << "\">" << escape(series[s].label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

OutputSink::OutputSink(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_)) {
    throw IoFailure("cannot create output directory " + dir_.string() +
                    (ec ? ": " + ec.message() : std::string()));
  }
}

std::filesystem::path OutputSink::write_text(const std::string& filename,
                                             const std::string& content) const {
  const auto path = dir_ / filename;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoFailure("write failed for " + path.string());
  return path;
}

std::filesystem::path OutputSink::write_csv(const std::string& filename, const CsvTable& table) const {
  return write_text(filename, format_csv(table));
}

}  // namespace lkweld
