#include "kcr/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace kcr {

void RunConfig::set_delta(const std::string& s) {
    if (s == "full") {
        delta_mode = DeltaMode::Full;
        return;
    }
    BigRational d;
    try {
        d = rat_parse(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("--delta: expected 'full' or a rational, got " + s);
    }
    if (d <= 0 || d >= 1) throw std::invalid_argument("--delta: must lie in (0,1)");
    delta_mode = DeltaMode::Relaxed;
    delta = d;
}

void RunConfig::set_limits(const std::string& s) {
    auto comma = s.find(',');
    try {
        limits.max_candidates = std::stoull(s.substr(0, comma));
        if (comma != std::string::npos) limits.max_nodes = std::stoull(s.substr(comma + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--limits: expected 'candidates[,nodes]', got " + s);
    }
}

EpsScale RunConfig::scale(long n_eff) const {
    return delta_mode == DeltaMode::Full ? EpsScale::full(n_eff) : EpsScale::relaxed(n_eff, delta);
}

namespace {

std::vector<std::string> words(const std::string& line) {
    std::istringstream l(line);
    std::vector<std::string> out;
    std::string w;
    while (l >> w) out.push_back(w);
    return out;
}

long to_long(const std::string& s) {
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got " + s);
    }
    if (used != s.size()) throw ParseError("expected an integer, got " + s);
    return v;
}

// Lines of a file after the first, blank lines skipped, stopping at "end".
std::vector<std::vector<std::string>> body(const std::string& text, const std::string& magic) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || words(line).empty() || words(line)[0] != magic)
        throw ParseError("expected a '" + magic + "' file");
    std::vector<std::vector<std::string>> out;
    bool ended = false;
    while (std::getline(in, line)) {
        auto w = words(line);
        if (w.empty()) continue;
        if (w[0] == "end") {
            ended = true;
            break;
        }
        out.push_back(std::move(w));
    }
    if (!ended) throw ParseError(magic + ": missing end line");
    return out;
}

}  // namespace

namespace {

void common_header(GeometricFile& g, const EpsScale& s, RadiusMode m) {
    g.header["n"] = std::to_string(s.n);
    g.header["delta"] = rat_str(s.delta);
    g.header["radius_mode"] = radius_mode_name(m);
    g.header["points"] = std::to_string(g.inst.points.size());
}

}  // namespace

GeometricFile to_file(const TwoCenter3D& t) {
    GeometricFile g;
    g.inst.dim = 3;
    g.inst.k = 2;
    g.inst.sq_radius = t.sq_radius;
    g.inst.points = t.points;
    common_header(g, t.scale, t.mode);
    g.header["construction"] = "2center3d";
    g.header["t"] = rat_str(t.t);
    return g;
}

GeometricFile to_file(const PlanarInstance& p) {
    GeometricFile g;
    g.inst.dim = 2;
    g.inst.k = p.k;
    g.inst.sq_radius = p.sq_radius;
    g.inst.points = p.points;
    common_header(g, p.scale, p.mode);
    g.header["construction"] = p.k == 6 ? "6center" : "10center";
    g.header["Delta"] = rat_str(anchor_delta(p.scale));
    if (p.constants) g.header["gamma"] = fe_str(p.constants->gamma);
    for (const auto& d : p.disks) g.marks.push_back(d.expected);
    return g;
}

GeometricFile to_file(const KCenter2D& k) {
    GeometricFile g;
    g.inst = k.geometric;
    common_header(g, k.scale, k.mode);
    g.header["construction"] = "kcenter2d";
    g.header["Delta"] = rat_str(anchor_delta(k.scale));
    g.header["curves"] = std::to_string(k.layout.curves.size());
    g.header["shared_edges"] = std::to_string(k.layout.shared.size());
    for (const auto& d : k.disks) g.marks.push_back(d.expected);
    return g;
}

std::string write_geometric(const GeometricFile& g) {
    std::ostringstream o;
    o << "kcr-geometric " << GeometricFile::kSchema << "\n";
    o << "dim " << g.inst.dim << "\n";
    o << "k " << g.inst.k << "\n";
    o << "sq_radius " << fe_str(g.inst.sq_radius) << "\n";
    for (const auto& [k, v] : g.header) o << "header " << k << " " << v << "\n";
    for (const auto& m : g.marks) o << "mark " << point_str(m) << "\n";
    for (const auto& p : g.inst.points)
        o << "point " << (p.tag.empty() ? "-" : p.tag) << " " << (p.index ? std::to_string(*p.index) : "-") << " "
          << point_str(p.p) << "\n";
    o << "end\n";
    return o.str();
}

GeometricFile parse_geometric(const std::string& text) {
    GeometricFile g;
    bool have_dim = false, have_r = false;
    for (const auto& w : body(text, "kcr-geometric")) {
        const std::string& key = w[0];
        if (key == "dim" && w.size() == 2) {
            g.inst.dim = int(to_long(w[1]));
            have_dim = true;
        } else if (key == "k" && w.size() == 2) {
            g.inst.k = int(to_long(w[1]));
        } else if (key == "sq_radius" && w.size() == 2) {
            g.inst.sq_radius = fe_parse(w[1]);
            have_r = true;
        } else if (key == "header" && w.size() >= 3) {
            std::string v = w[2];
            for (size_t i = 3; i < w.size(); ++i) v += " " + w[i];
            g.header[w[1]] = v;
        } else if (key == "mark" && have_dim) {
            g.marks.push_back(point_parse(g.inst.dim, {w.begin() + 1, w.end()}));
        } else if (key == "point" && have_dim && w.size() >= 3) {
            LabeledPoint p;
            p.tag = w[1] == "-" ? "" : w[1];
            if (w[2] != "-") p.index = to_long(w[2]);
            p.p = point_parse(g.inst.dim, {w.begin() + 3, w.end()});
            g.inst.points.push_back(std::move(p));
        } else {
            throw ParseError("kcr-geometric: bad line starting with " + key);
        }
    }
    if (!have_dim || !have_r) throw ParseError("kcr-geometric: dim and sq_radius are required");
    g.inst.validate();
    return g;
}

std::string write_witness(const CoverWitness& w, int dim) {
    std::ostringstream o;
    o << "kcr-witness 1\n";
    o << "dim " << dim << "\n";
    for (const auto& c : w.centers) o << "center " << point_str(c) << "\n";
    o << "end\n";
    return o.str();
}

CoverWitness parse_witness(const std::string& text) {
    CoverWitness w;
    int dim = 0;
    for (const auto& l : body(text, "kcr-witness")) {
        if (l[0] == "dim" && l.size() == 2) dim = int(to_long(l[1]));
        else if (l[0] == "center" && dim) w.centers.push_back(point_parse(dim, {l.begin() + 1, l.end()}));
        else throw ParseError("kcr-witness: bad line starting with " + l[0]);
    }
    return w;
}

/*
 *   sumset
 *   n 2
 *   v I J COLOR : d d d
 *   e U V : d d
 *   end
 */
std::string write_sumset(const SumSetInstance& s) {
    std::ostringstream o;
    o << "sumset\n";
    o << "n " << s.n << "\n";
    for (size_t v = 0; v < s.vertices.size(); ++v) {
        o << "v " << s.vertices[v].first << " " << s.vertices[v].second << " " << s.color[v] << " :";
        for (long d : s.dv[v]) o << " " << d;
        o << "\n";
    }
    for (size_t e = 0; e < s.edges.size(); ++e) {
        o << "e " << s.edges[e].first << " " << s.edges[e].second << " :";
        for (long d : s.de[e]) o << " " << d;
        o << "\n";
    }
    o << "end\n";
    return o.str();
}

SumSetInstance parse_sumset(const std::string& text) {
    SumSetInstance s;
    for (const auto& w : body(text, "sumset")) {
        if (w[0] == "n" && w.size() == 2) {
            s.n = to_long(w[1]);
        } else if (w[0] == "v" && w.size() >= 5 && w[4] == ":") {
            s.vertices.push_back({to_long(w[1]), to_long(w[2])});
            s.color.push_back(int(to_long(w[3])));
            std::set<long> d;
            for (size_t i = 5; i < w.size(); ++i) d.insert(to_long(w[i]));
            s.dv.push_back(std::move(d));
        } else if (w[0] == "e" && w.size() >= 4 && w[3] == ":") {
            s.edges.push_back({int(to_long(w[1])), int(to_long(w[2]))});
            std::set<long> d;
            for (size_t i = 4; i < w.size(); ++i) d.insert(to_long(w[i]));
            s.de.push_back(std::move(d));
        } else {
            throw ParseError("sumset: bad line starting with " + w[0]);
        }
    }
    s.validate();
    return s;
}

/*
 *   csp
 *   n 3
 *   v I J
 *   e U V : a,b a,b
 *   end
 */
std::string write_csp(const CSPInstance& c) {
    std::ostringstream o;
    o << "csp\n";
    o << "n " << c.n << "\n";
    for (const auto& v : c.vertices) o << "v " << v.first << " " << v.second << "\n";
    for (size_t e = 0; e < c.edges.size(); ++e) {
        o << "e " << c.edges[e].first << " " << c.edges[e].second << " :";
        for (auto [a, b] : c.relations[e]) o << " " << a << "," << b;
        o << "\n";
    }
    o << "end\n";
    return o.str();
}

CSPInstance parse_csp(const std::string& text) {
    CSPInstance c;
    for (const auto& w : body(text, "csp")) {
        if (w[0] == "n" && w.size() == 2) {
            c.n = to_long(w[1]);
        } else if (w[0] == "v" && w.size() == 3) {
            c.vertices.push_back({to_long(w[1]), to_long(w[2])});
        } else if (w[0] == "e" && w.size() >= 4 && w[3] == ":") {
            c.edges.push_back({int(to_long(w[1])), int(to_long(w[2]))});
            std::set<std::pair<long, long>> r;
            for (size_t i = 4; i < w.size(); ++i) {
                auto comma = w[i].find(',');
                if (comma == std::string::npos) throw ParseError("csp: relation pair needs a comma: " + w[i]);
                r.insert({to_long(w[i].substr(0, comma)), to_long(w[i].substr(comma + 1))});
            }
            c.relations.push_back(std::move(r));
        } else {
            throw ParseError("csp: bad line starting with " + w[0]);
        }
    }
    c.validate();
    return c;
}

std::string file_kind(const std::string& text) {
    std::istringstream in(text);
    std::string w;
    in >> w;
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + path);
    std::ostringstream o;
    o << f.rdbuf();
    return o.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << text;
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Frame {
    double x0, y0, s;
    double h;
    double X(double x) const { return 20 + (x - x0) * s; }
    double Y(double y) const { return h - 20 - (y - y0) * s; }
};

std::string draw(const GeometricFile& g, int ax, int ay, const RenderOptions& opt) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : g.inst.points) pts.push_back({p.p[ax].approx(), p.p[ay].approx()});
    double r = std::sqrt(std::max(0.0, g.inst.sq_radius.approx()));
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    auto grow = [&](double x, double y, double pad) {
        if (first) x0 = x1 = x, y0 = y1 = y, first = false;
        x0 = std::min(x0, x - pad), x1 = std::max(x1, x + pad);
        y0 = std::min(y0, y - pad), y1 = std::max(y1, y + pad);
    };
    for (auto [x, y] : pts) grow(x, y, 0);
    if (opt.witness)
        for (const auto& c : opt.witness->centers) grow(c[ax].approx(), c[ay].approx(), r);
    double span = std::max({x1 - x0, y1 - y0, 1e-9});
    Frame f{x0, y0, (opt.px - 40) / span, 0};
    f.h = (y1 - y0) * f.s + 40;

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(opt.px) << "\" height=\"" << num(f.h)
      << "\" viewBox=\"0 0 " << num(opt.px) << " " << num(f.h) << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (opt.witness)
        for (const auto& c : opt.witness->centers)
            o << "<circle class=\"disk\" cx=\"" << num(f.X(c[ax].approx())) << "\" cy=\"" << num(f.Y(c[ay].approx()))
              << "\" r=\"" << num(r * f.s) << "\" fill=\"none\" stroke=\"#4a7ab5\"/>\n";
    for (const auto& m : g.marks)
        o << "<circle class=\"vertex\" cx=\"" << num(f.X(m[ax].approx())) << "\" cy=\"" << num(f.Y(m[ay].approx()))
          << "\" r=\"4\" fill=\"none\" stroke=\"#999\"/>\n";
    for (size_t i = 0; i < pts.size(); ++i) {
        double x = f.X(pts[i].first), y = f.Y(pts[i].second);
        const std::string& tag = g.inst.points[i].tag;
        if (tag == "ANCHOR") {
            o << "<path class=\"anchor\" d=\"M" << num(x - 3) << " " << num(y - 3) << "L" << num(x + 3) << " "
              << num(y + 3) << "M" << num(x - 3) << " " << num(y + 3) << "L" << num(x + 3) << " " << num(y - 3)
              << "\" stroke=\"#b33\"/>\n";
        } else if (tag == "CONSISTENCY") {
            o << "<rect class=\"consistency\" x=\"" << num(x - 2.5) << "\" y=\"" << num(y - 2.5)
              << "\" width=\"5\" height=\"5\" fill=\"#3a3\"/>\n";
        } else {
            o << "<circle class=\"family\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"1.5\" fill=\"#222\"/>\n";
        }
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace

std::string render_svg(const GeometricFile& g, const RenderOptions& opt) {
    if (g.inst.dim != 2) throw Render3DUnsupported();
    return draw(g, 0, 1, opt);
}

std::vector<std::pair<std::string, std::string>> render_projections(const GeometricFile& g, const RenderOptions& opt) {
    if (g.inst.dim != 3) throw DimensionMismatch();
    return {{"xy", draw(g, 0, 1, opt)}, {"xz", draw(g, 0, 2, opt)}, {"yz", draw(g, 1, 2, opt)}};
}

}  // namespace kcr
