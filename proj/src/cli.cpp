#include "orbitgeo/cli.hpp"

#include "orbitgeo/geodesics.hpp"
#include "orbitgeo/hyperboloid.hpp"
#include "orbitgeo/io_util.hpp"
#include "orbitgeo/metric.hpp"
#include "orbitgeo/parallel.hpp"
#include "orbitgeo/semidirect.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace orbitgeo::cli {

namespace {

using nlohmann::json;

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Grid {
    double t0 = 0.0, t1 = two_pi;
    int steps = 201;
};

json load_config(const std::string& path) {
    std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config parse failure in " + path + ": " + e.what());
    }
}

DiagonalMetric metric_from_config(const json& cfg) {
    if (!cfg.contains("n") || !cfg.at("n").is_number_integer())
        throw std::invalid_argument("config needs an integer field \"n\"");
    int n = cfg.at("n").get<int>();
    if (cfg.contains("mu") && cfg.contains("equal_mu"))
        throw std::invalid_argument("give either \"mu\" or \"equal_mu\", not both");
    if (cfg.contains("equal_mu")) return equal_metric(n, cfg.at("equal_mu").get<double>());
    json m;
    m["n"] = n;
    if (cfg.contains("mu")) m["mu"] = cfg.at("mu");
    return metric_from_json(m.dump());
}

Grid grid_from_config(const json& cfg, const Grid& defaults) {
    Grid g = defaults;
    if (cfg.contains("grid")) {
        const json& j = cfg.at("grid");
        g.t0 = j.value("t0", g.t0);
        g.t1 = j.value("t1", g.t1);
        g.steps = j.value("steps", g.steps);
    }
    if (g.steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
    if (!(g.t1 > g.t0)) throw std::invalid_argument("grid range must be increasing");
    return g;
}

double grid_time(const Grid& g, int k) { return g.t0 + (g.t1 - g.t0) * k / (g.steps - 1); }

std::pair<int, int> parse_index_key(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("index key \"" + key + "\" is not of the form \"i,j\"");
    try {
        return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("index key \"" + key + "\" is not of the form \"i,j\"");
    }
}

void ensure_outdir(const std::string& out) {
    std::filesystem::create_directories(out);
}

std::string csv_header(int n) {
    std::ostringstream os;
    os << 't';
    for (int k = 0; k < basis_dim(n); ++k) {
        auto [i, j] = basis_pair(n, k);
        os << ",x_" << i << '_' << j;
    }
    os << '\n';
    return os.str();
}

FieldAlongBase field_from_config(const DiagonalMetric& g, const json& cfg, int bi, int bj,
                                 const std::string& family, const Grid& grid) {
    if (family == "horizontal1") {
        int s = cfg.at("partner").get<int>();
        double a = cfg.at("a").get<double>();
        double b = cfg.at("b").get<double>();
        double c0 = cfg.value("base_coeff", 0.0);
        return family_horizontal_I(g, bi, bj, s, regime_of(bi, bj, s), a, b, c0);
    }
    if (family == "horizontal2") {
        std::vector<IndexCoeff> entries;
        for (const auto& [key, val] : cfg.at("coeffs").items()) {
            auto [r, s] = parse_index_key(key);
            entries.push_back({r, s, val.get<double>()});
        }
        return horizontal_family_II(g, bi, bj, entries);
    }
    if (family == "oblique") {
        std::vector<ObliqueComponent> comps;
        for (const auto& item : cfg.at("components")) {
            const auto& idx = item.at("index");
            comps.push_back({idx.at(0).get<int>(), idx.at(1).get<int>(), item.value("x0", 0.0), item.value("v0", 0.0)});
        }
        return family_oblique(g, bi, bj, comps, grid.t0, grid.t1);
    }
    throw std::invalid_argument("unknown family \"" + family + "\" (expected horizontal1, horizontal2, oblique)");
}

int cmd_family(const std::string& config_path, const std::string& out, double tol_flag) {
    json cfg = load_config(config_path);
    DiagonalMetric g = metric_from_config(cfg);
    if (!cfg.contains("base")) throw std::invalid_argument("family config needs \"base\": [i, j]");
    int bi = cfg.at("base").at(0).get<int>();
    int bj = cfg.at("base").at(1).get<int>();
    std::string family = cfg.at("family").get<std::string>();
    Grid grid = grid_from_config(cfg, Grid{});
    double tol = (tol_flag > 0.0) ? tol_flag : cfg.value("tol", 1e-7);

    FieldAlongBase field = field_from_config(g, cfg, bi, bj, family, grid);
    bool oblique = (family == "oblique");

    std::vector<std::string> rows(grid.steps);
    std::vector<double> fam_res(grid.steps), base_defect(grid.steps), fiber_defect(grid.steps);
    parallel_for(grid.steps, [&](int k) {
        double t = grid_time(grid, k);
        AlgebraVector x = field.eval(t);
        std::ostringstream row;
        row << g17(t);
        for (int d = 0; d < x.c.size(); ++d) row << ',' << g17(x.c[d]);
        row << '\n';
        rows[k] = row.str();
        Vector r = oblique ? oblique_system_residual(g, field, t) : horizontal_residual(g, field, t);
        fam_res[k] = r.cwiseAbs().maxCoeff();
        auto [s1, s2] = sasaki_residual(g, field, t);
        base_defect[k] = s1.c.cwiseAbs().maxCoeff();
        fiber_defect[k] = s2.c.cwiseAbs().maxCoeff();
    });

    ensure_outdir(out);
    std::string csv = csv_header(g.n);
    for (const auto& row : rows) csv += row;
    write_text_file(out + "/trajectory.csv", csv);

    auto vmax = [](const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); };
    double max_family = vmax(fam_res), max_base = vmax(base_defect), max_fiber = vmax(fiber_defect);
    bool pass = max_family <= tol && max_base <= tol && max_fiber <= tol;

    json summary;
    summary["family"] = family;
    summary["n"] = g.n;
    summary["base"] = {bi, bj};
    summary["rows"] = grid.steps;
    summary["grid"] = {{"t0", grid.t0}, {"t1", grid.t1}, {"steps", grid.steps}};
    summary["max_family_residual"] = max_family;
    summary["max_base_defect"] = max_base;
    summary["max_fiber_defect"] = max_fiber;
    summary["tolerance"] = tol;
    summary["pass"] = pass;
    write_text_file(out + "/summary.json", summary.dump(2) + "\n");
    std::cout << summary.dump(2) << std::endl;
    return pass ? 0 : 1;
}

std::string case_name(GeodesicCase c) {
    switch (c) {
        case GeodesicCase::Horizontal:
            return "horizontal";
        case GeodesicCase::Vertical:
            return "vertical";
        case GeodesicCase::Oblique:
            return "oblique";
    }
    return "?";
}

int cmd_hyperboloid(const std::string& config_path, const std::string& out) {
    json cfg = load_config(config_path);
    double mu = cfg.value("mu", 1.0);
    bool has_line = cfg.contains("line"), has_between = cfg.contains("between");
    if (has_line == has_between)
        throw std::invalid_argument("hyperboloid config needs exactly one of \"line\" or \"between\"");

    HyperboloidCurve curve;
    json meta;
    Grid grid;
    if (has_line) {
        const auto& l = cfg.at("line");
        ChartLine line{l.at(0).get<double>(), l.at(1).get<double>(), l.at(2).get<double>()};
        curve = geodesic_from_line(line, mu, cfg.value("unit_speed", false));
        grid = grid_from_config(cfg, Grid{});
        meta["line"] = {line.a, line.b, line.c};
        meta["unit_speed"] = cfg.value("unit_speed", false);
    } else {
        const auto& b = cfg.at("between");
        auto point = [](const json& arr) {
            return HyperboloidPoint{arr.at(0).get<double>(), arr.at(1).get<double>(), arr.at(2).get<double>()};
        };
        ConnectingGeodesic conn = geodesic_between(point(b.at("p")), point(b.at("q")), mu);
        curve = conn.curve;
        grid = grid_from_config(cfg, Grid{0.0, 1.0, 101});
        meta["line"] = {curve.line.a, curve.line.b, curve.line.c};
        meta["delta_u"] = conn.delta_u;
        meta["delta_v"] = conn.delta_v;
        meta["antipodal_tie"] = conn.antipodal_tie;
    }
    meta["mu"] = mu;
    meta["case"] = case_name(curve.kind);
    meta["chart_note"] =
        "u values in chart.csv are unwrapped: the chart is extended around the full cylinder, so paths may cross u "
        "= +-pi";

    ensure_outdir(out);
    write_text_file(out + "/curve.csv", curve_csv(curve, grid.t0, grid.t1, grid.steps));
    write_text_file(out + "/chart.csv", chart_csv(curve, grid.t0, grid.t1, grid.steps));
    if (cfg.contains("mesh")) {
        const auto& m = cfg.at("mesh");
        write_text_file(out + "/surface.obj",
                        surface_obj(m.value("u_steps", 96), m.value("v_steps", 33), m.value("v_min", -2.0),
                                    m.value("v_max", 2.0)));
        meta["mesh"] = "surface.obj";
    }
    write_text_file(out + "/metadata.json", meta.dump(2) + "\n");
    std::cout << meta.dump(2) << std::endl;
    return 0;
}

int cmd_curvature(const std::string& config_path, const std::string& out, std::int64_t seed) {
    json cfg = load_config(config_path);
    if (cfg.value("n", 0) == 2) {
        std::cerr << "error: so(2) is abelian, so the n=2 base is a flat circle; sectional curvature needs n >= 3"
                  << std::endl;
        return 2;
    }
    DiagonalMetric g = metric_from_config(cfg);
    int d = basis_dim(g.n);

    json planes = json::object();
    double kmin = 0.0, kmax = 0.0;
    bool first = true;
    for (int k1 = 0; k1 < d; ++k1)
        for (int k2 = k1 + 1; k2 < d; ++k2) {
            auto [i1, j1] = basis_pair(g.n, k1);
            auto [i2, j2] = basis_pair(g.n, k2);
            AlgebraVector e1 = AlgebraVector::basis(g.n, i1, j1);
            AlgebraVector e2 = AlgebraVector::basis(g.n, i2, j2);
            double kappa = sectional_curvature(g, e1, e2);
            planes[std::to_string(i1) + "," + std::to_string(j1) + "|" + std::to_string(i2) + "," +
                   std::to_string(j2)] = kappa;
            kmin = first ? kappa : std::min(kmin, kappa);
            kmax = first ? kappa : std::max(kmax, kappa);
            first = false;
        }

    int samples = cfg.value("samples", 25);
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    auto random_vec = [&]() {
        AlgebraVector v = AlgebraVector::zero(g.n);
        for (int k = 0; k < d; ++k) v.c[k] = unif(rng);
        return v;
    };
    double anti = 0.0, bianchi = 0.0;
    for (int s = 0; s < samples; ++s) {
        AlgebraVector x = random_vec(), y = random_vec(), z = random_vec();
        AlgebraVector rsum = curvature_origin(g, x, y, z) + curvature_origin(g, y, x, z);
        anti = std::max(anti, rsum.c.cwiseAbs().maxCoeff());
        AlgebraVector cyc =
            curvature_origin(g, x, y, z) + curvature_origin(g, y, z, x) + curvature_origin(g, z, x, y);
        bianchi = std::max(bianchi, cyc.c.cwiseAbs().maxCoeff());
    }
    bool equal_mu = (g.mu.maxCoeff() - g.mu.minCoeff()) == 0.0;
    bool pass = anti <= 1e-10 && bianchi <= 1e-10;

    json report;
    report["n"] = g.n;
    report["planes"] = planes;
    report["plane_spread"] = kmax - kmin;
    report["equal_mu"] = equal_mu;
    report["constant_on_planes"] = (kmax - kmin) <= 1e-9;
    report["antisymmetry_max"] = anti;
    report["bianchi_max"] = bianchi;
    report["samples"] = samples;
    report["seed"] = seed;
    report["pass"] = pass;
    ensure_outdir(out);
    write_text_file(out + "/curvature.json", report.dump(2) + "\n");
    std::cout << report.dump(2) << std::endl;
    return pass ? 0 : 1;
}

int cmd_check(const std::string& out, std::int64_t seed) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_real_distribution<double> mu_dist(0.5, 3.0);
    auto pick_pair = [&](int n) {
        std::uniform_int_distribution<int> di(2, n);
        int i = di(rng);
        std::uniform_int_distribution<int> dj(1, i - 1);
        return std::pair<int, int>{i, dj(rng)};
    };
    auto random_metric = [&](int n) {
        Vector mu(basis_dim(n));
        for (int k = 0; k < mu.size(); ++k) mu[k] = mu_dist(rng);
        return DiagonalMetric(n, mu);
    };
    auto random_vec = [&](int n) {
        AlgebraVector v = AlgebraVector::zero(n);
        for (int k = 0; k < v.c.size(); ++k) v.c[k] = unif(rng);
        return v;
    };
    auto random_rotation = [&](int n) {
        Matrix a = Matrix::Identity(n, n);
        for (int k = 0; k < basis_dim(n); ++k) {
            auto [i, j] = basis_pair(n, k);
            a = a * givens_exp(n, i, j, std::numbers::pi * unif(rng));
        }
        return a;
    };

    json audits = json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, int samples, double max_error, double tol) {
        bool pass = max_error <= tol;
        all_pass = all_pass && pass;
        audits.push_back({{"name", name}, {"samples", samples}, {"max_error", max_error}, {"tolerance", tol},
                          {"pass", pass}});
    };

    {
        double worst = 0.0;
        std::uniform_int_distribution<int> dn(2, 6);
        for (int s = 0; s < 200; ++s) {
            int n = dn(rng);
            auto [i, j] = pick_pair(n);
            auto [r, c] = pick_pair(n);
            double t = two_pi * unif(rng);
            AlgebraVector closed = adjoint_rotation(n, i, j, t, r, c);
            Matrix rot = givens_exp(n, i, j, -t);
            AlgebraVector conj = skew_to_vector(rot * basis_element(n, r, c) * rot.transpose());
            worst = std::max(worst, (closed - conj).c.cwiseAbs().maxCoeff());
        }
        record("rotation_relations_vs_conjugation", 200, worst, 1e-12);
    }
    {
        double worst = 0.0;
        std::uniform_int_distribution<int> dn(2, 5);
        for (int s = 0; s < 100; ++s) {
            int n = dn(rng);
            DiagonalMetric g = random_metric(n);
            auto [i, j] = pick_pair(n);
            AlgebraVector v0 = random_vec(n);
            double t = 3.0 * unif(rng);
            AlgebraVector v1 = parallel_transport(g, i, j, v0, t);
            worst = std::max(worst, std::abs(metric_eval(g, v1, v1) - metric_eval(g, v0, v0)));
        }
        record("transport_norm_preservation", 100, worst, 1e-8);
    }
    {
        double worst = 0.0;
        for (int s = 0; s < 1000; ++s) {
            ChartPoint c{std::numbers::pi * unif(rng), 3.0 * unif(rng)};
            ChartPoint back = chart_invert(chart_embed(c));
            double du = std::abs(wrap_angle(back.u - c.u));
            worst = std::max(worst, std::max(du, std::abs(back.v - c.v)));
            double theta = std::numbers::pi * unif(rng);
            Vec2 p{std::cos(theta), std::sin(theta)};
            worst = std::max(worst, (f_map(g_inverse(p)) - p).cwiseAbs().maxCoeff());
        }
        record("hyperboloid_chart_and_coset_roundtrips", 1000, worst, 1e-10);
    }
    {
        double worst = 0.0;
        std::uniform_int_distribution<int> dn(2, 5);
        for (int s = 0; s < 100; ++s) {
            int n = dn(rng);
            GStarElement p{random_vec(n), random_rotation(n)};
            GStarElement q{random_vec(n), random_rotation(n)};
            TangentPoint v{random_rotation(n), random_vec(n)};
            TangentPoint lhs = action_tangent(p, action_tangent(q, v));
            TangentPoint rhs = action_tangent(gstar_mul(p, q), v);
            double err = (lhs.base - rhs.base).cwiseAbs().maxCoeff();
            err = std::max(err, (lhs.fiber - rhs.fiber).c.cwiseAbs().maxCoeff());
            worst = std::max(worst, err);
        }
        record("semidirect_action_composition", 100, worst, 1e-10);
    }

    json report;
    report["seed"] = seed;
    report["audits"] = audits;
    report["pass"] = all_pass;
    ensure_outdir(out);
    write_text_file(out + "/check.json", report.dump(2) + "\n");
    std::cout << report.dump(2) << std::endl;
    return all_pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"geodesics on the tangent bundle of the manifold of full coordinate flags"};
    app.require_subcommand(1);

    std::string config, out = ".";
    double tol = -1.0;
    std::int64_t seed = 12345;

    auto* fam = app.add_subcommand("family", "sample a geodesic family and audit its defining systems");
    fam->add_option("--config", config, "family descriptor JSON")->required();
    fam->add_option("--out", out, "output directory");
    fam->add_option("--tol", tol, "residual tolerance override");

    auto* hyp = app.add_subcommand("hyperboloid", "export n=2 model curves, chart paths, and the ruled surface");
    hyp->add_option("--config", config, "hyperboloid descriptor JSON")->required();
    hyp->add_option("--out", out, "output directory");

    auto* cur = app.add_subcommand("curvature", "coordinate-plane sectional curvatures and tensor identities");
    cur->add_option("--config", config, "curvature config JSON")->required();
    cur->add_option("--out", out, "output directory");
    cur->add_option("--seed", seed, "random sample seed");

    auto* chk = app.add_subcommand("check", "seeded randomized self-audits of the core operations");
    chk->add_option("--out", out, "output directory");
    chk->add_option("--seed", seed, "random sample seed");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(fam)) return cmd_family(config, out, tol);
        if (app.got_subcommand(hyp)) return cmd_hyperboloid(config, out);
        if (app.got_subcommand(cur)) return cmd_curvature(config, out, seed);
        return cmd_check(out, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}

}  // namespace orbitgeo::cli
