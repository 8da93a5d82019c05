#include "shivar/svg_plot.hpp"

#include <cmath>
#include <deque>
#include <iomanip>
#include <sstream>
#include <unordered_set>

namespace shivar {

namespace {

constexpr const char* kPalette[] = {
    "#e6735c", "#f2c14e", "#6fa8dc", "#93c47d", "#c27ba0", "#76a5af",
    "#8e7cc3", "#f6b26b", "#a2c4c9", "#d5a6bd", "#b4a7d6", "#ffd966",
    "#87b974", "#d98a7a", "#7a9dc9", "#c9b27a",
};
constexpr int kPaletteSize = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));

struct Vec2 {
    double x;
    double y;
};

}  // namespace

std::string alcove_svg(const RootSystem& rs, const ComponentTable& table,
                       const PlotOptions& options) {
    if (rs.rank() != 2)
        throw InvalidTypeError("alcove plots are only available for rank-2 types, not " +
                               rs.name());

    // Embed the simple roots with their exact Gram data: |alpha_1| along the
    // x-axis, alpha_2 at the angle the Cartan matrix dictates.
    const double n1 = rs.norm_sq(rs.simple_position(0)).to_double();
    const double n2 = rs.norm_sq(rs.simple_position(1)).to_double();
    const double inner = 0.5 * static_cast<double>(rs.cartan()(0, 1)) * n1;  // (alpha_1, alpha_2)
    const Vec2 e1{std::sqrt(n1), 0.0};
    const Vec2 e2{inner / e1.x, std::sqrt(n2 - inner * inner / n1)};
    auto embed = [&](double c1, double c2) {
        return Vec2{c1 * e1.x + c2 * e2.x, c1 * e1.y + c2 * e2.y};
    };

    // Fundamental alcove vertices in simple coordinates: 0, omega_1/d_1,
    // omega_2/d_2, where d is the coroot of the highest short root (the wall
    // of the affine generator).
    const IntVector d = rs.coroot_coordinates(rs.highest_short_root_index());
    const RationalMatrix& weights = rs.fundamental_weights();
    double base[3][2] = {{0.0, 0.0},
                         {weights(0, 0).to_double() / static_cast<double>(d[0]),
                          weights(1, 0).to_double() / static_cast<double>(d[0])},
                         {weights(0, 1).to_double() / static_cast<double>(d[1]),
                          weights(1, 1).to_double() / static_cast<double>(d[1])}};

    struct Drawn {
        Vec2 corners[3];
        int component;
        IntVector tuple;
    };
    std::vector<Drawn> drawn;

    std::unordered_set<std::vector<Int>, KeyHash> seen;
    std::deque<AffineElement> frontier;
    const AffineElement e = identity_element(rs);
    frontier.push_back(e);
    seen.insert(to_key(shi_vector(rs, e)));

    const double limit = options.radius;
    while (!frontier.empty() && static_cast<int>(drawn.size()) < options.max_alcoves) {
        const AffineElement at = std::move(frontier.front());
        frontier.pop_front();

        Drawn item;
        double cx = 0.0;
        double cy = 0.0;
        for (int v = 0; v < 3; ++v) {
            const double c1 = static_cast<double>(at.finite(0, 0)) * base[v][0] +
                              static_cast<double>(at.finite(0, 1)) * base[v][1] +
                              static_cast<double>(at.translation[0]);
            const double c2 = static_cast<double>(at.finite(1, 0)) * base[v][0] +
                              static_cast<double>(at.finite(1, 1)) * base[v][1] +
                              static_cast<double>(at.translation[1]);
            item.corners[v] = embed(c1, c2);
            cx += item.corners[v].x / 3.0;
            cy += item.corners[v].y / 3.0;
        }
        if (std::hypot(cx, cy) > limit) continue;

        item.tuple = shi_vector(rs, at);
        item.component = table.component_index(lambda_of_tuple(rs, item.tuple));
        drawn.push_back(item);

        for (int i = 0; i <= rs.rank(); ++i) {
            AffineElement next = multiply(at, generator(rs, i));
            auto key = to_key(shi_vector(rs, next));
            if (seen.count(key)) continue;
            seen.insert(std::move(key));
            frontier.push_back(std::move(next));
        }
    }

    const double scale = 80.0;
    const double span = (limit + 1.0) * scale;
    std::ostringstream svg;
    svg << std::fixed << std::setprecision(2);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "viewBox=\"" << -span << ' ' << -span << ' ' << 2 * span << ' ' << 2 * span << "\">\n"
        << "<title>" << rs.name() << " alcoves by component</title>\n";
    for (const Drawn& item : drawn) {
        const char* fill =
            item.component >= 0 ? kPalette[item.component % kPaletteSize] : "#cccccc";
        svg << "<polygon points=\"";
        for (int v = 0; v < 3; ++v) {
            if (v) svg << ' ';
            svg << item.corners[v].x * scale << ',' << -item.corners[v].y * scale;
        }
        svg << "\" fill=\"" << fill << "\" stroke=\"#ffffff\" stroke-width=\"1\">"
            << "<title>" << format_tuple(item.tuple) << " component " << item.component
            << "</title></polygon>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace shivar
