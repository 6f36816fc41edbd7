#include "rpr/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rpr {

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    // Avoid "-0.000".
    if (std::string_view(buf) == "-0.000") return "0.000";
    return buf;
}

class Frame {
public:
    Frame(std::span<const ComplexFloat> pts, const SvgOptions& opts)
    {
        double minx = pts[0].real(), maxx = minx, miny = pts[0].imag(), maxy = miny;
        for (auto p : pts) {
            minx = std::min(minx, p.real());
            maxx = std::max(maxx, p.real());
            miny = std::min(miny, p.imag());
            maxy = std::max(maxy, p.imag());
        }
        double extent = std::max({maxx - minx, maxy - miny, 1e-9});
        double pad = opts.margin * extent;
        double span = extent + 2 * pad;
        scale_ = opts.width / span;
        // Centre the smaller extent.
        x0_ = minx - pad - 0.5 * (extent - (maxx - minx));
        y1_ = maxy + pad + 0.5 * (extent - (maxy - miny));
    }

    double x(ComplexFloat p) const { return (p.real() - x0_) * scale_; }
    double y(ComplexFloat p) const { return (y1_ - p.imag()) * scale_; }
    double scale() const { return scale_; }
    std::string point(ComplexFloat p) const { return num(x(p)) + "," + num(y(p)); }

private:
    double scale_ = 1.0;
    double x0_ = 0.0;
    double y1_ = 0.0;
};

std::string fixed2(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_posture_svg(const ManipulatorProblem& problem, const SolutionTuple& tuple,
                               const PostureAngles& angles, const SvgOptions& opts)
{
    const PlatformVertices v = platform_vertices(problem, tuple.coords);
    const ComplexFloat base_a = 0.0, base_b = problem.d_ab.to_float(), base_c = problem.d_ac.to_float();
    const std::array<ComplexFloat, 6> pts{base_a, base_b, base_c, v.a, v.b, v.c};
    const Frame frame(pts, opts);

    const double gap_b = std::abs(v.b - v.b_via_a) * frame.scale();
    const double gap_c = std::abs(v.c - v.c_via_a) * frame.scale();
    if (gap_b > opts.vertex_tol || gap_c > opts.vertex_tol)
        throw SvgError("platform vertex routes disagree (B: " + std::to_string(gap_b) +
                       ", C: " + std::to_string(gap_c) + " drawing units)");

    const double height = opts.width + opts.legend_height;
    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(opts.width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(opts.width) << " " << num(height)
      << "\">\n";
    s << "  <title>3RPR assembly configuration</title>\n";
    s << "  <rect x=\"0\" y=\"0\" width=\"" << num(opts.width) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";

    s << "  <g id=\"base\" fill=\"#dddddd\" stroke=\"#555555\" stroke-width=\"2\">\n"
      << "    <polygon points=\"" << frame.point(base_a) << " " << frame.point(base_b) << " "
      << frame.point(base_c) << "\"/>\n";
    for (auto p : {base_a, base_b, base_c})
        s << "    <circle cx=\"" << num(frame.x(p)) << "\" cy=\"" << num(frame.y(p)) << "\" r=\"5\"/>\n";
    s << "  </g>\n";

    s << "  <g id=\"connectors\" stroke=\"#1f5fa8\" stroke-width=\"3\">\n";
    const std::array<std::pair<ComplexFloat, ComplexFloat>, 3> legs{
        {{base_a, v.a}, {base_b, v.b}, {base_c, v.c}}};
    for (const auto& [from, to] : legs)
        s << "    <line x1=\"" << num(frame.x(from)) << "\" y1=\"" << num(frame.y(from)) << "\" x2=\""
          << num(frame.x(to)) << "\" y2=\"" << num(frame.y(to)) << "\"/>\n";
    s << "  </g>\n";

    s << "  <g id=\"platform\" fill=\"#f2b134\" fill-opacity=\"0.6\" stroke=\"#a05a00\" stroke-width=\"2\">\n"
      << "    <polygon points=\"" << frame.point(v.a) << " " << frame.point(v.b) << " " << frame.point(v.c)
      << "\"/>\n";
    for (auto p : {v.a, v.b, v.c})
        s << "    <circle cx=\"" << num(frame.x(p)) << "\" cy=\"" << num(frame.y(p)) << "\" r=\"4\"/>\n";
    s << "  </g>\n";

    const double ly = opts.width + 24.0;
    s << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"16\" fill=\"black\">\n"
      << "    <text x=\"16\" y=\"" << num(ly) << "\">theta_a = " << fixed2(angles.theta_a)
      << " deg, theta_b = " << fixed2(angles.theta_b) << " deg</text>\n"
      << "    <text x=\"16\" y=\"" << num(ly + 24.0) << "\">theta_c = " << fixed2(angles.theta_c)
      << " deg, alpha = " << fixed2(angles.alpha) << " deg</text>\n"
      << "    <text x=\"16\" y=\"" << num(ly + 48.0) << "\">s_a = " << problem.s_a.to_string()
      << ", s_b = " << problem.s_b.to_string() << ", s_c = " << problem.s_c.to_string() << "</text>\n"
      << "  </g>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace rpr
