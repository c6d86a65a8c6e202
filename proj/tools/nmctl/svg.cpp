#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "table.hpp"

namespace nmctl {
namespace {

std::string num(double v) {
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

SvgPlot::SvgPlot(double x_min, double x_max, double y_min, double y_max, int width, int height)
    : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max), width_(width), height_(height) {}

double SvgPlot::px(double x) const {
    return margin_ + (x - x_min_) / (x_max_ - x_min_) * (width_ - 2 * margin_);
}

double SvgPlot::py(double y) const {
    return height_ - margin_ - (y - y_min_) / (y_max_ - y_min_) * (height_ - 2 * margin_);
}

void SvgPlot::labels(std::string x, std::string y) {
    body_.push_back("<text x=\"" + num(width_ / 2.0) + "\" y=\"" + num(height_ - 12.0) +
                    "\" text-anchor=\"middle\" font-size=\"14\">" + escape(x) + "</text>");
    body_.push_back("<text x=\"14\" y=\"" + num(height_ / 2.0) + "\" text-anchor=\"middle\" font-size=\"14\" " +
                    "transform=\"rotate(-90 14 " + num(height_ / 2.0) + ")\">" + escape(y) + "</text>");
}

void SvgPlot::axes() {
    const double x0 = std::clamp(0.0, x_min_, x_max_);
    const double y0 = std::clamp(0.0, y_min_, y_max_);
    body_.push_back("<line x1=\"" + num(px(x_min_)) + "\" y1=\"" + num(py(y0)) + "\" x2=\"" + num(px(x_max_)) +
                    "\" y2=\"" + num(py(y0)) + "\" stroke=\"#999\"/>");
    body_.push_back("<line x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(y_min_)) + "\" x2=\"" + num(px(x0)) +
                    "\" y2=\"" + num(py(y_max_)) + "\" stroke=\"#999\"/>");
    for (double v : {x_min_, x_max_})
        body_.push_back("<text x=\"" + num(px(v)) + "\" y=\"" + num(py(y_min_) + 16) +
                        "\" text-anchor=\"middle\" font-size=\"11\">" + format_double(v) + "</text>");
    for (double v : {y_min_, y_max_})
        body_.push_back("<text x=\"" + num(px(x_min_) - 6) + "\" y=\"" + num(py(v) + 4) +
                        "\" text-anchor=\"end\" font-size=\"11\">" + format_double(v) + "</text>");
}

void SvgPlot::unit_circle(const std::string& stroke) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= 360; ++i) {
        const double a = 2.0 * std::numbers::pi * i / 360.0;
        pts.emplace_back(std::cos(a), std::sin(a));
    }
    polyline(pts, stroke, 1.0);
}

void SvgPlot::polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke, double width) {
    if (pts.empty()) return;
    std::string d = "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\" points=\"";
    for (const auto& [x, y] : pts) d += num(px(x)) + "," + num(py(y)) + " ";
    d += "\"/>";
    body_.push_back(std::move(d));
}

void SvgPlot::cell(double x, double y, double w, double h, const std::string& fill) {
    const double left = px(x - 0.5 * w);
    const double top = py(y + 0.5 * h);
    body_.push_back("<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(px(x + 0.5 * w) - left) +
                    "\" height=\"" + num(py(y - 0.5 * h) - top) + "\" fill=\"" + fill + "\"/>");
}

void SvgPlot::legend(const std::string& text, const std::string& color) { legend_.emplace_back(text, color); }

std::string SvgPlot::render() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_) + "\" height=\"" +
                      std::to_string(height_) + "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
                      std::to_string(height_) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title_.empty())
        out += "<text x=\"" + num(width_ / 2.0) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
               escape(title_) + "</text>\n";
    for (const auto& line : body_) out += line + "\n";
    double y = margin_ + 10.0;
    for (const auto& [text, color] : legend_) {
        out += "<rect x=\"" + num(width_ - margin_ - 150.0) + "\" y=\"" + num(y - 9) +
               "\" width=\"12\" height=\"12\" fill=\"" + color + "\"/>\n";
        out += "<text x=\"" + num(width_ - margin_ - 132.0) + "\" y=\"" + num(y + 2) + "\" font-size=\"12\">" +
               escape(text) + "</text>\n";
        y += 18.0;
    }
    out += "</svg>\n";
    return out;
}

std::string diverging_color(double v) {
    v = std::clamp(v, -1.0, 1.0);
    const int fade = static_cast<int>(std::lround(255.0 * (1.0 - std::fabs(v))));
    char buf[8];
    if (v >= 0.0) std::snprintf(buf, sizeof buf, "#%02x%02xff", fade, fade);
    else std::snprintf(buf, sizeof buf, "#ff%02x%02x", fade, fade);
    return buf;
}

}  // namespace nmctl
