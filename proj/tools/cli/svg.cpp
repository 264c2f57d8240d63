#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace femtomkt::cli {

namespace {

struct Series {
    const char* label;
    const char* color;
    std::function<double(const ResultRow&)> value;
};

struct Panel {
    const char* title;
    std::vector<Series> series;
};

void draw_panel(std::ostringstream& os, const Panel& panel,
                const std::vector<ResultRow>& rows,
                const std::function<double(const ResultRow&)>& x_of, double ox,
                double oy, double w, double h) {
    double xmin = x_of(rows.front()), xmax = x_of(rows.back());
    double ymin = 1e300, ymax = -1e300;
    for (const auto& s : panel.series) {
        for (const auto& r : rows) {
            ymin = std::min(ymin, s.value(r));
            ymax = std::max(ymax, s.value(r));
        }
    }
    if (!(ymax > ymin)) {
        ymax = ymin + 1.0;
    }
    double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    auto sx = [&](double x) { return ox + (x - xmin) / (xmax - xmin) * w; };
    auto sy = [&](double y) { return oy + h - (y - ymin) / (ymax - ymin) * h; };

    os << "<rect x='" << ox << "' y='" << oy << "' width='" << w << "' height='" << h
       << "' fill='none' stroke='#888'/>\n";
    os << "<text x='" << ox + 4 << "' y='" << oy - 6 << "' font-size='12'>"
       << panel.title << "</text>\n";
    os << "<text x='" << ox << "' y='" << oy + h + 14 << "' font-size='9'>"
       << format_number(xmin) << "</text>\n";
    os << "<text x='" << ox + w - 30 << "' y='" << oy + h + 14 << "' font-size='9'>"
       << format_number(xmax) << "</text>\n";
    os << "<text x='" << ox - 2 << "' y='" << oy + h << "' font-size='9' text-anchor='end'>"
       << format_number(ymin + pad) << "</text>\n";
    os << "<text x='" << ox - 2 << "' y='" << oy + 8 << "' font-size='9' text-anchor='end'>"
       << format_number(ymax - pad) << "</text>\n";

    double ly = oy + 12;
    for (const auto& s : panel.series) {
        os << "<polyline fill='none' stroke='" << s.color << "' stroke-width='1.2' points='";
        for (const auto& r : rows) {
            os << sx(x_of(r)) << ',' << sy(s.value(r)) << ' ';
        }
        os << "'/>\n";
        os << "<text x='" << ox + w - 70 << "' y='" << ly << "' font-size='9' fill='"
           << s.color << "'>" << s.label << "</text>\n";
        ly += 11;
    }
}

}  // namespace

std::string sweep_svg(const std::vector<ResultRow>& rows, SweepParameter parameter) {
    std::function<double(const ResultRow&)> x_of;
    switch (parameter) {
        case SweepParameter::Capacity:
            x_of = [](const ResultRow& r) { return r.params.capacity; };
            break;
        case SweepParameter::Cost:
            x_of = [](const ResultRow& r) { return r.params.cost; };
            break;
        case SweepParameter::Coverage:
            x_of = [](const ResultRow& r) { return r.params.coverage; };
            break;
    }

    std::vector<Panel> panels = {
        {"prices",
         {{"p_M", "#1f77b4", [](const ResultRow& r) { return r.eq.stage1.price_macro; }},
          {"p_F", "#d62728", [](const ResultRow& r) { return r.eq.stage2.price_femto; }}}},
        {"bands",
         {{"B_F", "#1f77b4", [](const ResultRow& r) { return r.eq.stage1.band_femto; }},
          {"B_M", "#d62728", [](const ResultRow& r) { return r.eq.stage1.band_macro; }},
          {"B_R", "#2ca02c", [](const ResultRow& r) { return r.eq.stage2.band_leased; }}}},
        {"profits",
         {{"macro", "#1f77b4", [](const ResultRow& r) { return r.eq.profit_macro; }},
          {"femto", "#d62728", [](const ResultRow& r) { return r.eq.profit_femto; }}}},
        {"surplus",
         {{"cs dual", "#1f77b4", [](const ResultRow& r) { return r.cs_dual; }},
          {"cs bench", "#d62728", [](const ResultRow& r) { return r.cs_bench; }},
          {"welfare dual", "#2ca02c", [](const ResultRow& r) { return r.welfare_dual; }},
          {"welfare bench", "#9467bd", [](const ResultRow& r) { return r.welfare_bench; }}}}};

    constexpr double kW = 340, kH = 200, kGapX = 70, kGapY = 50, kMargin = 50;
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='"
       << 2 * kW + kGapX + 2 * kMargin << "' height='" << 2 * kH + kGapY + 2 * kMargin
       << "' font-family='sans-serif'>\n";
    os << "<text x='" << kMargin << "' y='20' font-size='13'>sweep over "
       << to_string(parameter) << "</text>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        double ox = kMargin + (i % 2) * (kW + kGapX);
        double oy = kMargin + (i / 2) * (kH + kGapY);
        draw_panel(os, panels[i], rows, x_of, ox, oy, kW, kH);
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace femtomkt::cli
