#include "socs/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace socs {

namespace {

using nlohmann::json;

std::string dec(const BigInt& v) { return v.str(); }

// Shortest round-trippable plain-decimal form of a double: fixed notation
// only, no exponent anywhere in emitted files.
std::string fmt_double(double v) {
    if (v == 0.0) return "0";  // also normalizes -0
    char buf[512];
    for (int prec = 0; prec <= 350; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.350f", v);
    return buf;
}

json record(const char* command, json payload) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"payload", std::move(payload)}};
}

json solution_row(const SolutionTriple& t) {
    GapPair g = gaps(t);
    auto k = classify_parameterized(t);
    json row{{"a", dec(t.a)}, {"b", dec(t.b)},       {"c", dec(t.c)},
             {"N", dec(t.c - t.a)}, {"ell", dec(g.ell)}, {"m", dec(g.m)}};
    row["k"] = k ? json(dec(*k)) : json(nullptr);
    return row;
}

json report_json(const PolygonReport& rep) {
    json degen = json::array();
    for (std::size_t i : rep.degenerate_vertices) degen.push_back(i);
    return json{{"max_side_residual", rep.max_side_residual},
                {"max_perp_residual", rep.max_perp_residual},
                {"degenerate_vertices", degen},
                {"self_intersecting", rep.self_intersecting},
                {"mu", rep.mu},
                {"convex", rep.convex},
                {"closure_residual", rep.closure_residual}};
}

}  // namespace

std::string solutions_to_csv(const std::vector<SolutionTriple>& sols) {
    std::ostringstream os;
    os << "a,b,c,N,ell,m,k\n";
    for (const SolutionTriple& t : sols) {
        GapPair g = gaps(t);
        auto k = classify_parameterized(t);
        os << dec(t.a) << ',' << dec(t.b) << ',' << dec(t.c) << ',' << dec(t.c - t.a) << ','
           << dec(g.ell) << ',' << dec(g.m) << ',' << (k ? dec(*k) : "") << '\n';
    }
    return os.str();
}

std::string solutions_to_json(const std::vector<SolutionTriple>& sols) {
    json rows = json::array();
    for (const SolutionTriple& t : sols) rows.push_back(solution_row(t));
    return record("solve", json{{"solutions", rows}}).dump(2) + "\n";
}

std::string orbit_to_csv(const PellContext& ctx, const std::vector<GeneratedEntry>& entries,
                         std::size_t cf_period_length) {
    std::ostringstream os;
    os << "# base=(" << dec(ctx.base.a) << ',' << dec(ctx.base.b) << ',' << dec(ctx.base.c)
       << ")\n";
    os << "# A=" << dec(ctx.A) << " B=" << dec(ctx.B) << " u0=" << dec(ctx.u0)
       << " v0=" << dec(ctx.v0) << "\n";
    os << "# p=" << dec(ctx.unit.p) << " q=" << dec(ctx.unit.q)
       << " cf_period_length=" << cf_period_length << "\n";
    os << "n,a_n,b_n,c_n,valid,parity\n";
    for (const GeneratedEntry& e : entries) {
        os << e.n << ',' << dec(e.triple.a) << ',' << dec(e.triple.b) << ',' << dec(e.triple.c)
           << ',' << (e.valid ? "true" : "false") << ','
           << ((e.triple.c - e.triple.a) % 2 == 0 ? "even" : "odd") << '\n';
    }
    return os.str();
}

std::string orbit_to_json(const PellContext& ctx, const std::vector<GeneratedEntry>& entries,
                          std::size_t cf_period_length) {
    json context{{"base", solution_row(ctx.base)},
                 {"A", dec(ctx.A)},
                 {"B", dec(ctx.B)},
                 {"u0", dec(ctx.u0)},
                 {"v0", dec(ctx.v0)},
                 {"p", dec(ctx.unit.p)},
                 {"q", dec(ctx.unit.q)},
                 {"cf_period_length", cf_period_length}};
    json rows = json::array();
    for (const GeneratedEntry& e : entries) {
        rows.push_back(json{{"n", e.n},
                            {"a_n", dec(e.triple.a)},
                            {"b_n", dec(e.triple.b)},
                            {"c_n", dec(e.triple.c)},
                            {"p_n", dec(e.p_n)},
                            {"q_n", dec(e.q_n)},
                            {"valid", e.valid},
                            {"parity", (e.triple.c - e.triple.a) % 2 == 0 ? "even" : "odd"}});
    }
    return record("generate", json{{"context", context}, {"orbit", rows}}).dump(2) + "\n";
}

std::string census_to_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "a,b,c,N,k,built,convex,mu,self_intersecting\n";
    for (const CensusRow& r : rows) {
        os << dec(r.triple.a) << ',' << dec(r.triple.b) << ',' << dec(r.triple.c) << ','
           << dec(r.triple.c - r.triple.a) << ','
           << (r.parameterized_k ? dec(*r.parameterized_k) : "") << ','
           << (r.candidate_built ? "true" : "false") << ',' << (r.convex ? "true" : "false")
           << ',' << r.mu << ',' << (r.self_intersecting ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string census_to_json(const std::vector<CensusRow>& rows) {
    json arr = json::array();
    for (const CensusRow& r : rows) {
        json row{{"triple", solution_row(r.triple)},
                 {"built", r.candidate_built},
                 {"convex", r.convex},
                 {"mu", r.mu},
                 {"self_intersecting", r.self_intersecting}};
        row["k"] = r.parameterized_k ? json(dec(*r.parameterized_k)) : json(nullptr);
        arr.push_back(std::move(row));
    }
    return record("census", json{{"rows", arr}}).dump(2) + "\n";
}

std::string polygon_to_json(const PolygonPath& path, const SolutionTriple& t,
                            const PolygonReport& report) {
    json verts = json::array();
    for (const Point2& p : path.vertices) verts.push_back(json::array({p.x, p.y}));
    json targets = json::array();
    for (const BigInt& s : path.side_targets) targets.push_back(dec(s));
    json diags = json::array();
    for (const BigInt& d : exact_squared_diagonals(t)) diags.push_back(dec(d));
    json payload{{"triple", solution_row(t)},
                 {"vertices", verts},
                 {"side_targets", targets},
                 {"squared_diagonals", diags},
                 {"report", report_json(report)}};
    return record("polygon", std::move(payload)).dump(2) + "\n";
}

std::string polygon_to_svg(const PolygonPath& path, const SolutionTriple& t,
                           const PolygonReport& report) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const Point2& p : path.vertices) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, -p.y);  // y flipped: "above the axis" renders up
        ymax = std::max(ymax, -p.y);
    }
    const double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
    xmin -= margin; ymin -= margin;
    const double w = xmax - xmin + 2 * margin, h = ymax - ymin + 2 * margin;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
       << fmt_double(xmin) << ' ' << fmt_double(ymin) << ' ' << fmt_double(w) << ' '
       << fmt_double(h) << "\">\n";
    os << "<!--\n  triple: (" << t.a.str() << ", " << t.b.str() << ", " << t.c.str() << ")\n"
       << "  sides: " << path.side_targets.front().str() << ".." << path.side_targets.back().str()
       << "\n  max_side_residual: " << fmt_double(report.max_side_residual)
       << "\n  max_perp_residual: " << fmt_double(report.max_perp_residual)
       << "\n  closure_residual: " << fmt_double(report.closure_residual)
       << "\n  degenerate_vertices: " << report.degenerate_vertices.size()
       << "\n  self_intersecting: " << (report.self_intersecting ? "true" : "false")
       << "\n  mu: " << report.mu << "\n  convex: " << (report.convex ? "true" : "false")
       << "\n-->\n";
    os << "<path fill=\"none\" stroke=\"black\" stroke-width=\""
       << fmt_double(std::max(w, h) / 600.0) << "\" d=\"";
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        const Point2& p = path.vertices[i];
        os << (i == 0 ? "M " : " L ") << fmt_double(p.x) << ' ' << fmt_double(-p.y);
    }
    os << " Z\"/>\n";
    const Point2& origin = path.vertices[path.origin_index];
    os << "<circle cx=\"" << fmt_double(origin.x) << "\" cy=\"" << fmt_double(-origin.y)
       << "\" r=\"" << fmt_double(std::max(w, h) / 150.0) << "\" fill=\"red\"/>\n";
    os << "<text x=\"" << fmt_double(origin.x + std::max(w, h) / 100.0) << "\" y=\""
       << fmt_double(-origin.y - std::max(w, h) / 100.0) << "\" font-size=\""
       << fmt_double(std::max(w, h) / 40.0) << "\">O</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace socs
