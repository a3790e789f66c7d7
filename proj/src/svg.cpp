#include "scribe/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "scribe/report_io.hpp"

namespace scribe::svg {

namespace {

// Okabe-Ito palette plus fallbacks; colorblind-safe for the usual corpus
// of a handful of scribes.
const char* kPalette[] = {"#0072B2", "#D55E00", "#009E73", "#CC79A7", "#E69F00",
                          "#56B4E9", "#F0E442", "#000000", "#999999", "#8B4513"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Canvas {
    std::string body;
    double width;
    double height;

    Canvas(double w, double h) : width(w), height(h) {}

    void text(double x, double y, const std::string& s, int size = 12,
              const char* anchor = "start", const char* style = "") {
        body += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" +
                std::to_string(size) + "\" font-family=\"sans-serif\" text-anchor=\"" +
                anchor + "\"" + style + ">" + xml_escape(s) + "</text>\n";
    }
    void line(double x1, double y1, double x2, double y2, const char* stroke = "#444",
              double width_px = 1.0) {
        body += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                num(width_px) + "\"/>\n";
    }
    void rect(double x, double y, double w, double h, const std::string& fill,
              const char* stroke = "#333") {
        body += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
                "\" height=\"" + num(h) + "\" fill=\"" + fill + "\" stroke=\"" +
                stroke + "\"/>\n";
    }
    void circle(double cx, double cy, double r, const std::string& fill) {
        body += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
                "\" fill=\"" + fill + "\" fill-opacity=\"0.8\"/>\n";
    }
    std::string finish() const {
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<!-- scribeprof chart -->\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
               "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
               num(height) + "\">\n";
        out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

struct LinScale {
    double lo, hi, out_lo, out_hi;
    double operator()(double v) const {
        if (hi == lo)
            return (out_lo + out_hi) / 2.0;
        return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
    }
};

} // namespace

std::string scatter_plot(const analyze::EmbeddingResult& result,
                         const std::string& title) {
    const double W = 760, H = 560;
    const double ml = 50, mr = 170, mt = 40, mb = 40;
    Canvas c(W, H);
    c.text(W / 2, 22, title, 14, "middle");

    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    if (result.coords.rows > 0) {
        xlo = xhi = result.coords.at(0, 0);
        ylo = yhi = result.coords.at(0, 1);
        for (std::size_t i = 0; i < result.coords.rows; ++i) {
            xlo = std::min(xlo, result.coords.at(i, 0));
            xhi = std::max(xhi, result.coords.at(i, 0));
            ylo = std::min(ylo, result.coords.at(i, 1));
            yhi = std::max(yhi, result.coords.at(i, 1));
        }
    }
    const double xpad = (xhi - xlo) * 0.05 + 1e-9;
    const double ypad = (yhi - ylo) * 0.05 + 1e-9;
    const LinScale sx{xlo - xpad, xhi + xpad, ml, W - mr};
    const LinScale sy{ylo - ypad, yhi + ypad, H - mb, mt}; // y grows upward

    c.rect(ml, mt, W - ml - mr, H - mt - mb, "none", "#888");

    std::set<std::string> scribe_set;
    for (const SegmentRef& ref : result.labels)
        scribe_set.insert(ref.scribe);
    std::map<std::string, std::size_t> color_of;
    for (const std::string& s : scribe_set)
        color_of.emplace(s, color_of.size());

    for (std::size_t i = 0; i < result.coords.rows; ++i) {
        const std::string& scribe = result.labels[i].scribe;
        c.circle(sx(result.coords.at(i, 0)), sy(result.coords.at(i, 1)), 3.5,
                 kPalette[color_of[scribe] % kPaletteSize]);
    }

    double ly = mt + 10;
    for (const auto& [scribe, idx] : color_of) {
        c.circle(W - mr + 18, ly - 4, 5, kPalette[idx % kPaletteSize]);
        c.text(W - mr + 30, ly, scribe, 12);
        ly += 20;
    }
    return c.finish();
}

namespace {

void draw_hbox(Canvas& c, const metrics::BoxStats& box, const LinScale& sx, double yc,
               double half, const std::string& fill) {
    c.line(sx(box.min), yc, sx(box.q1), yc);
    c.line(sx(box.q3), yc, sx(box.max), yc);
    c.line(sx(box.min), yc - half * 0.6, sx(box.min), yc + half * 0.6);
    c.line(sx(box.max), yc - half * 0.6, sx(box.max), yc + half * 0.6);
    c.rect(sx(box.q1), yc - half, std::max(sx(box.q3) - sx(box.q1), 1.0), 2 * half,
           fill);
    c.line(sx(box.median), yc - half, sx(box.median), yc + half, "#000", 1.5);
}

} // namespace

std::string density_boxplot(const metrics::DensityReport& report,
                            const std::string& title) {
    const double row_h = 34;
    const double ml = 180, mr = 30, mt = 50, mb = 40;
    const double W = 760;
    const double H = mt + mb + row_h * static_cast<double>(report.rows.size());
    Canvas c(W, H);
    c.text(W / 2, 22, title, 14, "middle");

    double hi = 0.0;
    for (const metrics::DensityRow& row : report.rows)
        for (double v : row.per_sample)
            hi = std::max(hi, v);
    hi = hi > 0 ? hi * 1.08 : 1.0;
    const LinScale sx{0.0, hi, ml, W - mr};

    for (int t = 0; t <= 5; ++t) {
        const double v = hi * t / 5.0;
        c.line(sx(v), mt - 4, sx(v), H - mb, "#ddd");
        c.text(sx(v), H - mb + 16, num(v), 10, "middle");
    }

    double y = mt;
    std::size_t idx = 0;
    for (const metrics::DensityRow& row : report.rows) {
        const double yc = y + row_h / 2;
        c.text(ml - 8, yc + 4, row.key, 11, "end");
        draw_hbox(c, metrics::box_stats(row.per_sample), sx, yc, 9,
                  kPalette[idx++ % kPaletteSize]);
        y += row_h;
    }
    return c.finish();
}

std::string outlier_bars(const analyze::OutlierReport& report,
                         const std::string& title) {
    const double row_h = 34;
    const double ml = 220, mr = 80, mt = 50, mb = 40;
    const double W = 760;
    const double H = mt + mb + row_h * static_cast<double>(report.rows.size());
    Canvas c(W, H);
    c.text(W / 2, 22, title, 14, "middle");
    const LinScale sx{0.0, 1.0, ml, W - mr};

    double y = mt;
    for (const analyze::OutlierRow& row : report.rows) {
        const std::string label =
            row.unit_id.empty() ? row.codex_id : row.codex_id + " / " + row.unit_id;
        const double frac_in = 1.0 - row.outlier_fraction;
        c.text(ml - 8, y + row_h / 2 + 4, label, 11, "end");
        c.rect(sx(0), y + 6, sx(frac_in) - sx(0), row_h - 12, "#0072B2");
        c.rect(sx(frac_in), y + 6, sx(1.0) - sx(frac_in), row_h - 12, "#D55E00");
        c.text(sx(1.0) + 6, y + row_h / 2 + 4,
               std::to_string(row.n_outliers) + "/" + std::to_string(row.n_segments),
               10);
        y += row_h;
    }
    c.rect(ml, H - mb + 8, 12, 12, "#0072B2");
    c.text(ml + 18, H - mb + 18, "inliers", 11);
    c.rect(ml + 90, H - mb + 8, 12, 12, "#D55E00");
    c.text(ml + 108, H - mb + 18, "outliers", 11);
    return c.finish();
}

std::string importance_boxplot(const analyze::ImportanceReport& report,
                               const std::string& title) {
    const std::size_t m = std::min(report.top_m, report.features.size());
    const double row_h = 44;
    const double ml = 120, mr = 30, mt = 56, mb = 40;
    const double W = 760;
    const double H = mt + mb + row_h * static_cast<double>(m);
    Canvas c(W, H);
    c.text(W / 2, 22, title, 14, "middle");

    double hi = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        hi = std::max(hi, report.features[i].target_box.max);
        hi = std::max(hi, report.features[i].rest_box.max);
    }
    hi = hi > 0 ? hi * 1.08 : 1.0;
    const LinScale sx{0.0, hi, ml, W - mr};

    c.rect(ml, 32, 12, 12, "#D55E00");
    c.text(ml + 18, 42, "target unit", 11);
    c.rect(ml + 110, 32, 12, 12, "#0072B2");
    c.text(ml + 128, 42, "rest of corpus", 11);

    double y = mt;
    for (std::size_t i = 0; i < m; ++i) {
        const analyze::ImportanceFeature& f = report.features[i];
        c.text(ml - 8, y + row_h / 2 + 4,
               f.bigram.repr() + "  (" + io::fmt_double(f.mdi).substr(0, 6) + ")", 11,
               "end");
        draw_hbox(c, f.target_box, sx, y + row_h * 0.32, 7, "#D55E00");
        draw_hbox(c, f.rest_box, sx, y + row_h * 0.72, 7, "#0072B2");
        y += row_h;
    }
    return c.finish();
}

} // namespace scribe::svg
