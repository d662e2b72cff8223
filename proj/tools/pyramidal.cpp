#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "socs/census.hpp"
#include "socs/geometry.hpp"
#include "socs/pell.hpp"
#include "socs/search.hpp"
#include "socs/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBadTriple = 3;
constexpr int kExitValidation = 4;
constexpr int kExitCensusSelfTest = 5;

unsigned thread_cap() {
    if (const char* env = std::getenv("PYRAMIDAL_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

bool parse_bigint(const std::string& s, socs::BigInt& out) {
    try {
        out = socs::BigInt(s);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitUsage;
    }
    os << text;
    return kExitOk;
}

// Exit 3 with a diagnostic naming the check that failed.
int reject_triple(const socs::SolutionTriple& t) {
    using socs::pyramidal;
    if (!(0 < t.a + 1 && t.a + 1 < t.b && t.b < t.c))
        std::cerr << "error: ordering 0 < a+1 < b < c violated\n";
    else
        std::cerr << "error: pyramidal identity P_a + P_c = 2*P_b violated ("
                  << pyramidal(t.a).str() << " + " << pyramidal(t.c).str()
                  << " != 2*" << pyramidal(t.b).str() << ")\n";
    return kExitBadTriple;
}

int cmd_solve(const std::string& max_n, const std::string& exact_n, const std::string& format,
              const std::string& out_path) {
    socs::BigInt bound;
    const std::string& arg = max_n.empty() ? exact_n : max_n;
    if (!parse_bigint(arg, bound) || bound < 2) {
        std::cerr << "error: bound must be an integer >= 2\n";
        return kExitUsage;
    }
    std::vector<socs::SolutionTriple> sols;
    if (!max_n.empty())
        sols = socs::enumerate_up_to(bound, thread_cap());
    else
        sols = socs::solve_fixed_length(bound);
    return write_output(format == "json" ? socs::solutions_to_json(sols)
                                         : socs::solutions_to_csv(sols),
                        out_path);
}

int cmd_generate(const socs::SolutionTriple& base, long count, const std::string& format,
                 const std::string& out_path) {
    if (!socs::is_socs_solution(base)) return reject_triple(base);
    socs::PellContext ctx = socs::pell_context(base);
    std::size_t period = socs::cf_sqrt(ctx.A).period.size();
    auto entries = socs::generate(base, 1, count);
    return write_output(format == "json" ? socs::orbit_to_json(ctx, entries, period)
                                         : socs::orbit_to_csv(ctx, entries, period),
                        out_path);
}

int cmd_polygon(const socs::SolutionTriple& t, const std::string& mode, const std::string& bits,
                const std::string& format, const std::string& out_path) {
    if (!socs::is_socs_solution(t)) return reject_triple(t);
    socs::PolygonPath path;
    if (mode == "chainsaw") {
        path = socs::construct_chainsaw(t);
    } else {
        const std::size_t need = (t.c - t.a - 2).convert_to<std::size_t>();
        if (bits.size() != need) {
            std::cerr << "error: --bits must be a 0/1 string of length c-a-2 = " << need << "\n";
            return kExitUsage;
        }
        socs::TurnSequence turns;
        for (char ch : bits) {
            if (ch != '0' && ch != '1') {
                std::cerr << "error: --bits may contain only 0 and 1\n";
                return kExitUsage;
            }
            turns.bits.push_back(ch == '1');
        }
        path = socs::construct_generic(t, turns);
    }
    socs::PolygonReport rep = socs::validate(path, t);
    int rc = write_output(format == "json" ? socs::polygon_to_json(path, t, rep)
                                           : socs::polygon_to_svg(path, t, rep),
                          out_path);
    if (rc != kExitOk) return rc;

    bool failed = rep.max_side_residual > socs::kLengthTol ||
                  rep.max_perp_residual > socs::kLengthTol ||
                  rep.closure_residual > socs::kLengthTol;
    if (mode == "chainsaw")
        failed = failed || rep.self_intersecting || !rep.degenerate_vertices.empty();
    if (failed) {
        std::cerr << "validation failure: side_residual=" << rep.max_side_residual
                  << " perp_residual=" << rep.max_perp_residual
                  << " closure_residual=" << rep.closure_residual
                  << " degenerate=" << rep.degenerate_vertices.size()
                  << " self_intersecting=" << (rep.self_intersecting ? "true" : "false") << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_census(const std::string& format, const std::string& out_path) {
    auto rows = socs::run_census();
    int rc = write_output(format == "json" ? socs::census_to_json(rows)
                                           : socs::census_to_csv(rows),
                          out_path);
    if (rc != kExitOk) return rc;
    long convex = 0;
    bool winners_ok = true;
    for (const auto& r : rows)
        if (r.convex) {
            ++convex;
            winners_ok = winners_ok && (r.triple == socs::SolutionTriple{2, 4, 5} ||
                                        r.triple == socs::SolutionTriple{9, 12, 14});
        }
    if (rows.size() != 67 || convex != 2 || !winners_ok) {
        std::cerr << "census self-test failure: rows=" << rows.size() << " convex=" << convex
                  << "\n";
        return kExitCensusSelfTest;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sums-of-consecutive-squares solutions and arithmetic polygons"};
    app.require_subcommand(1);

    std::string max_n, exact_n, format = "csv", out_path;
    auto* solve = app.add_subcommand("solve", "Enumerate solutions by fixed difference c-a");
    auto* opt_max = solve->add_option("--max-n", max_n, "All solutions with c-a <= bound");
    auto* opt_exact = solve->add_option("--n", exact_n, "Solutions with c-a = bound exactly");
    solve->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    solve->add_option("--out", out_path, "Write to file instead of stdout");
    opt_max->excludes(opt_exact);

    std::string ga, gb, gc;
    long count = 5;
    std::string gen_format = "csv", gen_out;
    auto* gen = app.add_subcommand("generate", "Orbit of a base solution under the Pell unit");
    gen->add_option("a", ga, "base a")->required();
    gen->add_option("b", gb, "base b")->required();
    gen->add_option("c", gc, "base c")->required();
    gen->add_option("--count", count, "Generate n = 1..count")->check(CLI::PositiveNumber);
    gen->add_option("--format", gen_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    gen->add_option("--out", gen_out, "Write to file instead of stdout");

    std::string pa, pb, pc, mode = "chainsaw", bits, poly_format = "svg", poly_out;
    auto* poly = app.add_subcommand("polygon", "Construct and validate an arithmetic polygon");
    poly->add_option("a", pa, "a")->required();
    poly->add_option("b", pb, "b")->required();
    poly->add_option("c", pc, "c")->required();
    poly->add_option("--mode", mode, "chainsaw|turns")
        ->check(CLI::IsMember({"chainsaw", "turns"}));
    poly->add_option("--bits", bits, "Turn bits (0/1 string, length c-a-2) for --mode turns");
    poly->add_option("--format", poly_format, "svg|json")
        ->check(CLI::IsMember({"svg", "json"}));
    poly->add_option("--out", poly_out, "Write to file instead of stdout");

    std::string census_format = "csv", census_out;
    auto* census = app.add_subcommand("census", "Convexity census of all candidate solutions");
    census->add_option("--format", census_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    census->add_option("--out", census_out, "Write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) {
            if (max_n.empty() == exact_n.empty()) {
                std::cerr << "error: pass exactly one of --max-n or --n\n";
                return kExitUsage;
            }
            return cmd_solve(max_n, exact_n, format, out_path);
        }
        if (gen->parsed()) {
            socs::SolutionTriple t;
            if (!parse_bigint(ga, t.a) || !parse_bigint(gb, t.b) || !parse_bigint(gc, t.c)) {
                std::cerr << "error: a, b, c must be integers\n";
                return kExitUsage;
            }
            return cmd_generate(t, count, gen_format, gen_out);
        }
        if (poly->parsed()) {
            socs::SolutionTriple t;
            if (!parse_bigint(pa, t.a) || !parse_bigint(pb, t.b) || !parse_bigint(pc, t.c)) {
                std::cerr << "error: a, b, c must be integers\n";
                return kExitUsage;
            }
            return cmd_polygon(t, mode, bits, poly_format, poly_out);
        }
        if (census->parsed()) return cmd_census(census_format, census_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
