#pragma once

// Static SVG pictures of path families on the (column, spectral) grid. The
// vertical axis is flipped: larger spectral values draw lower. Output is
// fully deterministic: integer geometry, fixed palette, elements emitted in
// a fixed order (grid, labels, paths).

#include <algorithm>
#include <string>
#include <vector>

#include "core.hpp"
#include "paths.hpp"

namespace epschar {

inline std::string render_svg(const std::vector<Path>& paths, const LatticeConfig& cfg) {
    const int cell = 36;
    const int mleft = 64, mtop = 28, mright = 20, mbottom = 20;
    int smin = 0, smax = cfg.root_of_unity() ? cfg.period() : 4;
    if (!paths.empty()) {
        smin = paths[0].ys[0];
        smax = paths[0].ys[0];
        for (const Path& p : paths)
            for (int y : p.ys) {
                smin = std::min(smin, y);
                smax = std::max(smax, y);
            }
    }
    const int cols = cfg.n + 1;  // columns 0..n+1
    const int width = mleft + cols * cell + mright;
    const int height = mtop + (smax - smin) * cell + mbottom;
    auto X = [&](int col) { return mleft + col * cell; };
    auto Y = [&](int s) { return mtop + (s - smin) * cell; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\"/>\n";

    // grid: one vertical line per column, one horizontal line per spectral row
    for (int c = 0; c <= cols; ++c)
        out += "<line x1=\"" + std::to_string(X(c)) + "\" y1=\"" + std::to_string(Y(smin)) +
               "\" x2=\"" + std::to_string(X(c)) + "\" y2=\"" + std::to_string(Y(smax)) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    for (int s = smin; s <= smax; ++s)
        out += "<line x1=\"" + std::to_string(X(0)) + "\" y1=\"" + std::to_string(Y(s)) +
               "\" x2=\"" + std::to_string(X(cols)) + "\" y2=\"" + std::to_string(Y(s)) +
               "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";

    // node labels along the top for the interior columns
    for (int c = 1; c <= cfg.n; ++c)
        out += "<text x=\"" + std::to_string(X(c)) + "\" y=\"" + std::to_string(mtop - 10) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
               std::to_string(c) + "</text>\n";

    // spectral labels along the left; rows outside [0, 2*ell) repeat their
    // canonical representative in parentheses
    for (int s = smin; s <= smax; ++s) {
        std::string label = std::to_string(s);
        if (cfg.root_of_unity() && (s < 0 || s >= cfg.period()))
            label += "(" + std::to_string(canonical_index(s, cfg)) + ")";
        out += "<text x=\"" + std::to_string(mleft - 8) + "\" y=\"" + std::to_string(Y(s) + 4) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" + label +
               "</text>\n";
    }

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    for (size_t t = 0; t < paths.size(); ++t) {
        const Path& p = paths[t];
        const char* color = palette[t % 5];
        std::string pts;
        for (size_t c = 0; c < p.ys.size(); ++c) {
            if (!pts.empty()) pts += " ";
            pts += std::to_string(X(static_cast<int>(c))) + "," + std::to_string(Y(p.ys[c]));
        }
        out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        CornerSet cs = corners(p);
        for (auto [j, l] : cs.upper)
            out += "<circle cx=\"" + std::to_string(X(j)) + "\" cy=\"" + std::to_string(Y(l)) +
                   "\" r=\"3\" fill=\"" + std::string(color) + "\"/>\n";
        for (auto [j, l] : cs.lower)
            out += "<circle cx=\"" + std::to_string(X(j)) + "\" cy=\"" + std::to_string(Y(l)) +
                   "\" r=\"3\" fill=\"white\" stroke=\"" + std::string(color) +
                   "\" stroke-width=\"2\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace epschar
