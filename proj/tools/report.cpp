#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace substkit::cli {

namespace {

std::string scalar(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalar(const Report& v) {
  return std::all_of(v.begin(), v.end(), [](const Report& x) {
    return x.is_primitive() && !(x.is_string() && x.get<std::string>().find(' ') != std::string::npos);
  });
}

void walk(const Report& node, int depth, std::ostringstream& out) {
  const std::string pad(2 * depth, ' ');
  for (auto it = node.begin(); it != node.end(); ++it) {
    const auto& v = it.value();
    out << pad << it.key() << ":";
    if (v.is_primitive()) {
      out << ' ' << scalar(v) << '\n';
    } else if (v.is_array() && all_scalar(v)) {
      for (const auto& x : v) out << ' ' << scalar(x);
      out << '\n';
    } else if (v.is_object()) {
      out << '\n';
      walk(v, depth + 1, out);
    } else {
      out << '\n';
      for (const auto& x : v) {
        if (x.is_object()) {
          out << pad << "  -\n";
          walk(x, depth + 2, out);
        } else if (x.is_array()) {
          out << pad << "  -";
          for (const auto& y : x) out << ' ' << (y.is_primitive() ? scalar(y) : y.dump());
          out << '\n';
        } else {
          out << pad << "  - " << scalar(x) << '\n';
        }
      }
    }
  }
}

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  walk(report, 0, out);
  return out.str();
}

std::string render_json(const Report& report) { return report.dump(2) + "\n"; }

Report complex_value(Complex z) {
  Report r;
  r["re"] = z.real();
  r["im"] = z.imag();
  r["abs"] = std::abs(z);
  return r;
}

std::string render_csv(const CorrelationReport& report) {
  std::string out = "N,re,im,abs\n";
  for (std::size_t i = 0; i < report.checkpoints.size(); ++i) {
    const auto z = report.partial_means[i];
    out += std::to_string(report.checkpoints[i]) + ',' + number(z.real()) + ',' + number(z.imag()) + ',' +
           number(std::abs(z)) + '\n';
  }
  return out;
}

std::string render_svg(const CorrelationReport& report, const std::string& title) {
  constexpr double width = 640, height = 400, margin = 50;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < report.checkpoints.size(); ++i) {
    xs.push_back(std::log10(double(report.checkpoints[i])));
    ys.push_back(std::log10(std::max(std::abs(report.partial_means[i]), 1e-16)));
  }
  auto [xmin, xmax] = xs.empty() ? std::pair{0.0, 1.0} : std::pair{*std::min_element(xs.begin(), xs.end()),
                                                                   *std::max_element(xs.begin(), xs.end())};
  auto [ymin, ymax] = ys.empty() ? std::pair{0.0, 1.0} : std::pair{*std::min_element(ys.begin(), ys.end()),
                                                                   *std::max_element(ys.begin(), ys.end())};
  if (xmax - xmin < 1e-9) xmax = xmin + 1;
  if (ymax - ymin < 1e-9) ymax = ymin + 1;
  auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
  auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"25\" font-family=\"sans-serif\" font-size=\"14\">" << title
      << "</text>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width - margin << "\" y=\"" << height - 15
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">log10 N</text>\n";
  out << "<text x=\"5\" y=\"" << margin - 10 << "\" font-family=\"sans-serif\" font-size=\"12\">log10 |mean|</text>\n";
  char label[64];
  std::snprintf(label, sizeof label, "%.2f", ymax);
  out << "<text x=\"5\" y=\"" << py(ymax) + 4 << "\" font-family=\"sans-serif\" font-size=\"10\">" << label
      << "</text>\n";
  std::snprintf(label, sizeof label, "%.2f", ymin);
  out << "<text x=\"5\" y=\"" << py(ymin) + 4 << "\" font-family=\"sans-serif\" font-size=\"10\">" << label
      << "</text>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << px(xs[i]) << ',' << py(ys[i]);
  out << "\"/>\n</svg>\n";
  return out.str();
}

}  // namespace substkit::cli
