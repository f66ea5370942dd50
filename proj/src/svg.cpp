#include "tmdim/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "tmdim/segments.hpp"

namespace tmdim {

namespace {

constexpr double kSize = 480.0;
constexpr double kPad = 20.0;

struct Frame {
    double x0, y0, scale;
    double X(const Rational& x) const { return kPad + (x.get_d() - x0) * scale; }
    double Y(const Rational& y) const { return kPad + kSize - (y.get_d() - y0) * scale; }
};

const char* shade(Bidegree d, Bidegree max) {
    static const char* ramp[] = {"#f7fbff", "#c6dbef", "#6baed6", "#2171b5", "#08306b"};
    int total = max.m1 + max.m2;
    if (total == 0) return ramp[0];
    int k = (4 * (d.m1 + d.m2) + total - 1) / total;
    return ramp[std::clamp(k, 0, 4)];
}

int find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

}  // namespace

std::string render_level_svg(const TMesh& mesh, const LeveledProfile& profile, const SmoothnessProfile& smooth,
                             const ActiveLevel& level) {
    Rational minx = mesh.faces[0].rect.x0, miny = mesh.faces[0].rect.y0;
    Rational maxx = mesh.faces[0].rect.x1, maxy = mesh.faces[0].rect.y1;
    for (const Face& f : mesh.faces) {
        minx = std::min(minx, f.rect.x0, RationalLess());
        miny = std::min(miny, f.rect.y0, RationalLess());
        maxx = std::max(maxx, f.rect.x1, RationalLess());
        maxy = std::max(maxy, f.rect.y1, RationalLess());
    }
    double span = std::max(Rational(maxx - minx).get_d(), Rational(maxy - miny).get_d());
    Frame fr{minx.get_d(), miny.get_d(), kSize / span};
    Bidegree dmax = profile.deficit_set.back();

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize + 2 * kPad << "\" height=\""
       << kSize + 2 * kPad + 24 << "\">\n";
    os << "<defs><pattern id=\"off\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
          "<path d=\"M0,6 L6,0\" stroke=\"#bbbbbb\" stroke-width=\"1\"/></pattern></defs>\n";
    for (size_t k = 0; k < mesh.faces.size(); ++k) {
        const Rect& r = mesh.faces[k].rect;
        double x = fr.X(r.x0), y = fr.Y(r.y1), w = fr.X(r.x1) - x, h = fr.Y(r.y0) - y;
        const char* fill = level.face_active[k] ? shade(profile.face_deficit[k], dmax) : "url(#off)";
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h << "\" fill=\"" << fill
           << "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
        Bidegree d = profile.face_deficit[k];
        os << "<text x=\"" << x + w / 2 << "\" y=\"" << y + h / 2 << "\" font-size=\"10\" text-anchor=\"middle\">("
           << d.m1 << "," << d.m2 << ")</text>\n";
    }

    // an edge is on the active boundary when exactly one incident face is active
    for (int e : level.edges) {
        const Edge& ed = mesh.edges[e];
        int active = 0;
        for (int f : ed.faces) active += level.face_active[f];
        if (active != 1) continue;
        bool horiz = ed.orient == Orientation::Horizontal;
        double x1 = horiz ? fr.X(ed.a) : fr.X(ed.line), y1 = horiz ? fr.Y(ed.line) : fr.Y(ed.a);
        double x2 = horiz ? fr.X(ed.b) : fr.X(ed.line), y2 = horiz ? fr.Y(ed.line) : fr.Y(ed.b);
        os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
           << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    }

    auto segs = maximal_segments(mesh, profile, smooth, level);
    for (const MaxSegment& s : segs) {
        bool horiz = s.orient == Orientation::Horizontal;
        double x1 = horiz ? fr.X(s.a) : fr.X(s.line), y1 = horiz ? fr.Y(s.line) : fr.Y(s.a);
        double x2 = horiz ? fr.X(s.b) : fr.X(s.line), y2 = horiz ? fr.Y(s.line) : fr.Y(s.b);
        os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
           << (s.interior ? "#d62728" : "#ff9896") << "\" stroke-width=\"" << (s.interior ? 2.5 : 1.0) << "\"/>\n";
    }

    // face components glued along interior active edges; those with no edge on
    // the domain boundary are islands
    std::vector<int> parent(mesh.faces.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (int e : level.interior_edges) {
        const Edge& ed = mesh.edges[e];
        if (ed.faces.size() == 2 && level.face_active[ed.faces[0]] && level.face_active[ed.faces[1]])
            parent[find(parent, ed.faces[0])] = find(parent, ed.faces[1]);
    }
    std::vector<char> touches(mesh.faces.size(), 0);
    for (int e : level.boundary_trace)
        for (int f : mesh.edges[e].faces)
            if (level.face_active[f]) touches[find(parent, f)] = 1;
    std::vector<char> labelled(mesh.faces.size(), 0);
    for (int f : level.faces) {
        int root = find(parent, f);
        if (touches[root] || labelled[root]) continue;
        labelled[root] = 1;
        const Rect& r = mesh.faces[f].rect;
        os << "<text x=\"" << fr.X(r.x0) + 3 << "\" y=\"" << fr.Y(r.y1) + 12
           << "\" font-size=\"11\" fill=\"#2ca02c\">island</text>\n";
    }
    os << "<text x=\"" << kPad << "\" y=\"" << kSize + 2 * kPad + 14 << "\" font-size=\"12\">level " << level.index
       << ": active deficit <= (" << level.threshold.m1 << "," << level.threshold.m2 << "), c=" << level.c
       << " h=" << level.h << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace tmdim
