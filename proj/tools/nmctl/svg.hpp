#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nmctl {

// Minimal SVG canvas mapping a data rectangle onto a fixed-size plot area.
class SvgPlot {
public:
    SvgPlot(double x_min, double x_max, double y_min, double y_max, int width = 640, int height = 640);

    void title(std::string text) { title_ = std::move(text); }
    void labels(std::string x, std::string y);
    void axes();
    void unit_circle(const std::string& stroke = "#444");
    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke, double width = 1.5);
    void cell(double x, double y, double w, double h, const std::string& fill);
    void legend(const std::string& text, const std::string& color);

    std::string render() const;

private:
    double px(double x) const;
    double py(double y) const;

    double x_min_, x_max_, y_min_, y_max_;
    int width_, height_;
    int margin_{50};
    std::string title_;
    std::vector<std::string> body_;
    std::vector<std::pair<std::string, std::string>> legend_;
};

// Diverging colour for a value in [-1, 1]: blue for positive, red for negative.
std::string diverging_color(double v);

}  // namespace nmctl
