#include "cnf/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace cnf {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_angle(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty angle");
  }
  std::size_t idx = 0;
  double sign = 1.0;
  if (text[0] == '+' || text[0] == '-') {
    sign = (text[0] == '-') ? -1.0 : 1.0;
    idx = 1;
  }
  const std::string body = text.substr(idx);
  const std::size_t pos = body.find("pi");
  if (pos == std::string::npos) {
    // Plain decimal number; reuse the sign we already consumed.
    const char* begin = body.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (begin == end || *end != '\0' || !std::isfinite(value) || body.empty()) {
      throw std::invalid_argument("cannot parse angle: " + text);
    }
    return sign * value;
  }
  const std::string num = body.substr(0, pos);
  const std::string rest = body.substr(pos + 2);
  double n = 1.0;
  if (!num.empty()) {
    if (num.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("cannot parse angle: " + text);
    }
    n = std::strtod(num.c_str(), nullptr);
  }
  double d = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/' || rest.size() < 2 ||
        rest.find_first_not_of("0123456789", 1) != std::string::npos) {
      throw std::invalid_argument("cannot parse angle: " + text);
    }
    d = std::strtod(rest.c_str() + 1, nullptr);
    if (d == 0.0) {
      throw std::invalid_argument("zero denominator in angle: " + text);
    }
  }
  return sign * (n * std::numbers::pi) / d;
}

std::string trace_csv(std::span<const TrackSample> samples) {
  std::string out = "param,t,s,x,y,theta,r,vx,vy\n";
  for (const TrackSample& smp : samples) {
    out += format_double(smp.param);
    out += ',';
    out += format_double(smp.t);
    out += ',';
    out += format_double(smp.s);
    out += ',';
    out += format_double(smp.x);
    out += ',';
    out += format_double(smp.y);
    out += ',';
    out += format_double(smp.theta);
    out += ',';
    out += format_double(smp.r);
    out += ',';
    out += format_double(smp.vx);
    out += ',';
    out += format_double(smp.vy);
    out += '\n';
  }
  return out;
}

std::string trace_json(std::span<const TrackSample> samples,
                       const TrackParams& params, const CaseClass& cls,
                       const AnomalyRange& range) {
  nlohmann::ordered_json doc;
  doc["params"] = {
      {"case", case_name(cls.kind)}, {"lambda", params.lambda},
      {"theta0", params.theta0},     {"lo", range.lo},
      {"hi", range.hi},              {"samples", range.n},
  };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TrackSample& smp : samples) {
    rows.push_back({
        {"param", smp.param}, {"t", smp.t},   {"s", smp.s},
        {"x", smp.x},         {"y", smp.y},   {"theta", smp.theta},
        {"r", smp.r},         {"vx", smp.vx}, {"vy", smp.vy},
    });
  }
  doc["samples"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string metrics_json(double lambda, const PhysicalScale& scale,
                         const LoopMetrics& metrics) {
  nlohmann::ordered_json doc = {
      {"lambda", lambda},
      {"v0", scale.v0},
      {"g", scale.g},
      {"T", metrics.period},
      {"L", metrics.track_length},
      {"W", metrics.width},
      {"H", metrics.height},
      {"v_top", metrics.top_speed},
  };
  return doc.dump(2) + "\n";
}

std::string classify_json(const TrackParams& params, const CaseClass& cls) {
  nlohmann::ordered_json doc = {
      {"lambda", params.lambda},
      {"theta0", params.theta0},
      {"case", case_name(cls.kind)},
      {"theta_range", {cls.theta_min, cls.theta_max}},
  };
  return doc.dump(2) + "\n";
}

std::string report_json(const VerificationReport& report) {
  nlohmann::ordered_json doc = {
      {"max_energy_residual", report.max_energy_residual},
      {"max_momentum_residual", report.max_momentum_residual},
      {"max_position_error_vs_oracle", report.max_position_error_vs_oracle},
      {"max_lambda_recovery_error", report.max_lambda_recovery_error},
      {"samples_checked", report.samples_checked},
      {"passed", report.passed},
  };
  return doc.dump(2) + "\n";
}

namespace {

constexpr const char* kPalette[] = {"#d62728", "#2ca02c", "#8c564b",
                                    "#1f77b4", "#9467bd", "#ff7f0e"};
constexpr int kPaletteSize = 6;

} // namespace

std::string plot_svg(std::span<const Polyline> curves) {
  if (curves.empty()) {
    throw std::invalid_argument("nothing to plot");
  }
  double minx = 0.0, maxx = 0.0, miny = 0.0, maxy = 0.0;
  bool first = true;
  for (const Polyline& c : curves) {
    if (c.xs.size() != c.ys.size() || c.xs.size() < 2) {
      throw std::invalid_argument("each curve needs matching xs/ys with >= 2 points");
    }
    for (std::size_t k = 0; k < c.xs.size(); ++k) {
      const double px = c.xs[k];
      const double py = -c.ys[k]; // screen y grows downward
      if (!std::isfinite(px) || !std::isfinite(py)) {
        throw std::invalid_argument("non-finite plot coordinate");
      }
      if (first) {
        minx = maxx = px;
        miny = maxy = py;
        first = false;
      } else {
        minx = std::min(minx, px);
        maxx = std::max(maxx, px);
        miny = std::min(miny, py);
        maxy = std::max(maxy, py);
      }
    }
  }
  const double w = maxx - minx;
  const double h = maxy - miny;
  const double dim = std::max(std::max(w, h), 1e-9);
  const double margin = 0.08 * dim;
  const double font = 0.035 * dim;
  const double stroke = 0.004 * dim;
  const double top = margin + (1.0 + 1.3 * static_cast<double>(curves.size())) * font;
  const double vb_x = minx - margin;
  const double vb_y = miny - top;
  const double vb_w = w + 2.0 * margin;
  const double vb_h = h + margin + top;
  const long px_w = 900;
  const long px_h = std::lround(900.0 * vb_h / vb_w);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
  svg += std::to_string(px_w);
  svg += "\" height=\"";
  svg += std::to_string(px_h);
  svg += "\" viewBox=\"";
  svg += format_double(vb_x);
  svg += ' ';
  svg += format_double(vb_y);
  svg += ' ';
  svg += format_double(vb_w);
  svg += ' ';
  svg += format_double(vb_h);
  svg += "\">\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    svg += "  <polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"";
    svg += format_double(stroke);
    svg += "\" points=\"";
    const Polyline& c = curves[i];
    for (std::size_t k = 0; k < c.xs.size(); ++k) {
      if (k) svg += ' ';
      svg += format_double(c.xs[k]);
      svg += ',';
      svg += format_double(-c.ys[k]);
    }
    svg += "\"/>\n";
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    svg += "  <text x=\"";
    svg += format_double(minx - margin + font);
    svg += "\" y=\"";
    svg += format_double(miny - top + (1.3 * static_cast<double>(i) + 1.3) * font);
    svg += "\" font-size=\"";
    svg += format_double(font);
    svg += "\" font-family=\"sans-serif\" fill=\"";
    svg += color;
    svg += "\">\xCE\xBB = ";
    svg += format_double(curves[i].lambda);
    svg += "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

} // namespace cnf
