#include "polypol/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "polypol/acceptance.hpp"
#include "polypol/canonical.hpp"
#include "polypol/harmonic.hpp"

namespace polypol {

namespace {

/// Bad input detected after parsing (unknown shape, unreadable region file, ...).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Args {
    std::string tier = "exact", format;
    std::optional<double> quad_rtol, root_tol, proximity_tol, blowup;
    std::optional<std::uint64_t> seed;

    std::string shape, region, vertices;
    int order = 4;
    double u = 0.0, v = 0.0;
    double umin = -0.5, umax = 0.5;
    std::optional<double> vmin, vmax;
    int n = 21;
    double tol = 1e-9;
    int component = 0;
    std::vector<double> base, dir;
    int grid = 101;
    std::vector<double> window{-2.0, 2.0};
    std::string suite = "paper-examples";
    std::vector<int> criteria;
};

RunConfig make_config(const Args& a) {
    RunConfig c;
    try {
        c = RunConfig::from_environment();
        c.tier = parse_tier(a.tier);
        if (!a.format.empty()) c.format = parse_format(a.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (a.quad_rtol) c.quad_rel_tol = *a.quad_rtol;
    if (a.root_tol) c.root_tol = *a.root_tol;
    if (a.proximity_tol) c.proximity_tol = *a.proximity_tol;
    if (a.blowup) c.blowup = *a.blowup;
    if (a.seed) c.seed = *a.seed;
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return c;
}

Polypol load_region(const Args& a, const RunConfig& cfg) {
    if (a.shape.empty() == a.region.empty()) throw UsageError("give exactly one of --shape or --region");
    Polypol p;
    try {
        if (!a.shape.empty()) {
            p = builder_by_name(a.shape);
        } else {
            std::ifstream in(a.region);
            if (!in) throw std::invalid_argument("cannot read region file '" + a.region + "'");
            p = from_json(nlohmann::json::parse(in));
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (cfg.tier == Tier::float_tier && p.tier() != Tier::float_tier)
        p = Polypol(p.arcs(), Tier::float_tier, p.name());
    return p;
}

std::vector<Point2> parse_vertices(const std::string& text) {
    std::vector<Point2> pts;
    std::stringstream ss(text);
    std::string pair;
    try {
        while (std::getline(ss, pair, ';')) {
            auto comma = pair.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("expected x,y");
            pts.push_back({Rational::parse(pair.substr(0, comma)), Rational::parse(pair.substr(comma + 1))});
        }
    } catch (const std::exception& e) {
        throw UsageError("--vertices must look like x1,y1;x2,y2;... (" + std::string(e.what()) + ")");
    }
    return pts;
}

nlohmann::json document(const RunConfig& cfg, const std::string& command, nlohmann::json result) {
    return {{"config", cfg.to_json()}, {"command", command}, {"result", std::move(result)}};
}

void emit_csv(std::ostream& out, const RunConfig& cfg, const std::string& csv) {
    out << "# config " << cfg.to_json().dump() << "\n" << csv;
}

std::string csv_number(double v) { return format_double(v); }

nlohmann::json error_json(const RunConfig& cfg, const std::string& type, const std::string& message) {
    return {{"config", cfg.to_json()}, {"error", {{"type", type}, {"message", message}}}};
}

nlohmann::json adjoint_json(const Adjoint& a) {
    return {{"numerator", poly2_to_json(a.numerator)},
            {"degree", a.degree},
            {"exact", a.exact},
            {"residual", a.residual},
            {"residual_points", a.points.to_json()}};
}

// Evaluates F with the grid status vocabulary of the scan.
std::pair<double, std::string> grid_value(const Polypol& p, DualPoint w, const TransformOptions& opts) {
    try {
        return {transform_eval(p, w, opts).value, "ok"};
    } catch (const KernelOnBoundary&) {
        return {std::numeric_limits<double>::quiet_NaN(), "refused"};
    } catch (const QuadratureError&) {
        return {std::numeric_limits<double>::quiet_NaN(), "quadrature"};
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Args a;
    CLI::App app{"Moments, Fantappie transforms, canonical forms and dual loci of plane polypols", "polypol"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tier", a.tier, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--quad-rtol", a.quad_rtol, "quadrature relative tolerance [POLYPOL_QUAD_RTOL]");
    app.add_option("--root-tol", a.root_tol, "kernel root margin [POLYPOL_ROOT_TOL]");
    app.add_option("--proximity-tol", a.proximity_tol, "scan proximity tolerance [POLYPOL_PROXIMITY_TOL]");
    app.add_option("--blowup", a.blowup, "scan blow-up threshold [POLYPOL_BLOWUP]");
    app.add_option("--seed", a.seed, "seed for randomized checks [POLYPOL_SEED]");

    auto shaped = [&](CLI::App* sub) {
        sub->add_option("--shape", a.shape, "builder name, e.g. triangle, disk, rectangle:3,1/2, sector:0.3,2.5");
        sub->add_option("--region", a.region, "region JSON file");
        return sub;
    };

    auto* validate_cmd = shaped(app.add_subcommand("validate", "validate a region"));
    auto* area_cmd = shaped(app.add_subcommand("area", "signed area"));
    auto* moments_cmd = shaped(app.add_subcommand("moments", "moments m_ij with i + j <= order"));
    moments_cmd->add_option("--order", a.order)->check(CLI::NonNegativeNumber);
    auto* mgf_cmd = shaped(app.add_subcommand("mgf-series", "normalized moment-generating series"));
    mgf_cmd->add_option("--order", a.order)->check(CLI::NonNegativeNumber);

    auto* transform_cmd = app.add_subcommand("transform", "Fantappie transform F(u,v)");
    transform_cmd->require_subcommand(1);
    auto* eval_cmd = shaped(transform_cmd->add_subcommand("eval", "evaluate at one point"));
    eval_cmd->add_option("--u", a.u)->required();
    eval_cmd->add_option("--v", a.v)->required();
    auto* grid_cmd = shaped(transform_cmd->add_subcommand("grid", "CSV grid u,v,F,status"));
    grid_cmd->add_option("--umin", a.umin);
    grid_cmd->add_option("--umax", a.umax);
    grid_cmd->add_option("--vmin", a.vmin, "defaults to --umin");
    grid_cmd->add_option("--vmax", a.vmax, "defaults to --umax");
    grid_cmd->add_option("--n", a.n, "points per axis")->check(CLI::PositiveNumber);
    auto* series_cmd = shaped(transform_cmd->add_subcommand("series", "Taylor series of F"));
    series_cmd->add_option("--order", a.order)->check(CLI::NonNegativeNumber);

    auto* polar_cmd = shaped(app.add_subcommand("polygon-polar", "exact polygon transform and polar adjoint"));
    polar_cmd->add_option("--vertices", a.vertices, "x1,y1;x2,y2;... counterclockwise");

    auto* canonical_cmd = shaped(app.add_subcommand("canonical", "canonical form"));
    auto* residues_cmd = shaped(app.add_subcommand("residues", "iterated residues at the genuine vertices"));
    auto* adjoint_cmd = shaped(app.add_subcommand("adjoint", "adjoint curve"));

    auto* harmonic_cmd = shaped(app.add_subcommand("harmonic", "harmonic moments and S, G coefficients"));
    harmonic_cmd->add_option("--order", a.order)->check(CLI::NonNegativeNumber);
    harmonic_cmd->require_subcommand(0, 1);
    auto* restriction_cmd = shaped(harmonic_cmd->add_subcommand("check-restriction", "restriction identity report"));
    restriction_cmd->add_option("--order", a.order)->check(CLI::NonNegativeNumber);
    restriction_cmd->add_option("--tol", a.tol, "float-tier tolerance")->check(CLI::PositiveNumber);

    auto* dual_cmd = shaped(app.add_subcommand("dual-locus", "singular support: vertex lines and dual curves"));
    auto* probe_cmd = shaped(app.add_subcommand("probe", "local exponent of F at a support component"));
    probe_cmd->add_option("--component", a.component, "index into the support components")->check(CLI::NonNegativeNumber);
    probe_cmd->add_option("--base", a.base, "u,v")->delimiter(',')->expected(2)->required();
    probe_cmd->add_option("--dir", a.dir, "du,dv")->delimiter(',')->expected(2)->required();
    auto* scan_cmd = shaped(app.add_subcommand("scan", "grid scan of |F| against the support (CSV)"));
    scan_cmd->add_option("--grid", a.grid, "points per axis")->check(CLI::Range(2, 2001));
    scan_cmd->add_option("--window", a.window, "lo,hi")->delimiter(',')->expected(2);

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    verify_cmd->add_option("--suite", a.suite)->check(CLI::IsMember({"paper-examples"}));
    verify_cmd->add_option("--criteria", a.criteria, "subset, e.g. 1,2,9")
        ->delimiter(',')
        ->check(CLI::Range(1, acceptance_criterion_count));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    RunConfig cfg;
    try {
        cfg = make_config(a);
        const bool csv = cfg.format == OutputFormat::csv;
        auto print = [&](const std::string& command, nlohmann::json result) {
            out << document(cfg, command, std::move(result)).dump(2) << "\n";
        };

        if (*verify_cmd) {
            AcceptanceReport rep = run_acceptance(cfg, a.criteria);
            if (a.format == "json") {
                print("verify", rep.to_json());
            } else {
                out << "# config " << cfg.to_json().dump() << "\n" << rep.table();
                out << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.results.size() << " criteria)\n";
            }
            return rep.passed() ? 0 : 1;
        }

        if (*polar_cmd && !a.vertices.empty()) {
            if (!a.shape.empty() || !a.region.empty()) throw UsageError("give --vertices or a region, not both");
            Polypol p;
            try {
                p = polygon(parse_vertices(a.vertices));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            print("polygon-polar", polar_duality_check(p).to_json());
            return 0;
        }

        Polypol p = load_region(a, cfg);
        const auto topts = cfg.transform_options();
        const auto qopts = cfg.quadrature_options();

        if (*validate_cmd) {
            auto rep = validate(p);
            print("validate", rep.to_json());
            return rep.ok() ? 0 : 1;
        }
        if (*area_cmd) {
            print("area", {{"area", number_to_json(signed_area(p, qopts))}});
        } else if (*moments_cmd) {
            auto table = moment_table(p, a.order, qopts);
            if (csv) emit_csv(out, cfg, table.to_csv());
            else print("moments", table.to_json());
        } else if (*mgf_cmd) {
            print("mgf-series", normalized_mgf_series(p, a.order, qopts).to_json());
        } else if (*eval_cmd) {
            print("transform eval", transform_eval(p, {a.u, a.v}, topts).to_json());
        } else if (*grid_cmd) {
            const double vmin = a.vmin.value_or(a.umin), vmax = a.vmax.value_or(a.umax);
            std::ostringstream os;
            os << "u,v,F,status\n";
            for (int i = 0; i < a.n; ++i)
                for (int j = 0; j < a.n; ++j) {
                    double u = a.n == 1 ? a.umin : a.umin + (a.umax - a.umin) * i / (a.n - 1);
                    double v = a.n == 1 ? vmin : vmin + (vmax - vmin) * j / (a.n - 1);
                    auto [f, status] = grid_value(p, {u, v}, topts);
                    os << csv_number(u) << "," << csv_number(v) << "," << csv_number(f) << "," << status << "\n";
                }
            emit_csv(out, cfg, os.str());
        } else if (*series_cmd) {
            print("transform series", transform_series(p, a.order, qopts).to_json());
        } else if (*polar_cmd) {
            print("polygon-polar", polar_duality_check(p).to_json());
        } else if (*canonical_cmd) {
            print("canonical", canonical_form(p).to_json());
        } else if (*residues_cmd) {
            auto form = canonical_form(p);
            nlohmann::json rows = nlohmann::json::array();
            std::ostringstream os;
            os << "x,y,residue,contour_re,contour_im\n";
            for (const auto& vtx : p.genuine_vertices()) {
                Number r = iterated_residue(form, vtx);
                auto c = iterated_residue_contour(form, vtx);
                rows.push_back({{"vertex", {rational_to_json(vtx.point.x), rational_to_json(vtx.point.y)}},
                                {"incoming", vtx.incoming},
                                {"outgoing", vtx.outgoing},
                                {"residue", number_to_json(r)},
                                {"contour", {c.real(), c.imag()}}});
                os << vtx.point.x.to_string() << "," << vtx.point.y.to_string() << "," << r.to_string() << ","
                   << csv_number(c.real()) << "," << csv_number(c.imag()) << "\n";
            }
            if (csv) emit_csv(out, cfg, os.str());
            else print("residues", rows);
        } else if (*adjoint_cmd) {
            print("adjoint", adjoint_json(adjoint_curve(p)));
        } else if (*restriction_cmd) {
            auto rep = restriction_identity_check(p, a.order, a.tol, qopts);
            print("harmonic check-restriction", rep.to_json());
            return rep.passed() ? 0 : 1;
        } else if (*harmonic_cmd) {
            print("harmonic", harmonic_moments(p, a.order, qopts).to_json());
        } else if (*dual_cmd) {
            print("dual-locus", singular_support(p).to_json());
        } else if (*probe_cmd) {
            auto comps = singular_support(p).components();
            if (a.component >= static_cast<int>(comps.size()))
                throw UsageError("component index " + std::to_string(a.component) + " out of range (support has " +
                                 std::to_string(comps.size()) + " components)");
            ProbeOptions po;
            po.transform.root_margin = cfg.root_tol;
            auto est = probe_exponent(p, comps[static_cast<std::size_t>(a.component)], {a.base[0], a.base[1]},
                                      {a.dir[0], a.dir[1]}, po);
            print("probe", est.to_json());
        } else if (*scan_cmd) {
            if (!(a.window[0] < a.window[1])) throw UsageError("--window needs lo < hi");
            auto rep = conjecture_scan(p, a.grid, a.window[0], a.window[1], cfg.scan_options());
            out << "# summary " << rep.summary().dump() << "\n";
            emit_csv(out, cfg, rep.to_csv());
        }
        return 0;
    } catch (const UsageError& e) {
        err << error_json(cfg, "usage", e.what()).dump() << "\n";
        return 2;
    } catch (const KernelOnBoundary& e) {
        auto j = error_json(cfg, "kernel_on_boundary", e.what());
        j["error"]["arc"] = e.arc();
        j["error"]["tau"] = e.tau();
        err << j.dump() << "\n";
        return 1;
    } catch (const QuadratureError& e) {
        auto j = error_json(cfg, "quadrature", e.what());
        j["error"]["error_estimate"] = e.error_estimate();
        err << j.dump() << "\n";
        return 1;
    } catch (const ProbeError& e) {
        err << error_json(cfg, "probe", e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << error_json(cfg, "computation", e.what()).dump() << "\n";
        return 1;
    }
}

}  // namespace polypol
