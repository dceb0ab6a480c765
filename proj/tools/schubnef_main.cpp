#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "schubnef/combinat.hpp"
#include "schubnef/hilbpoly.hpp"
#include "schubnef/json_io.hpp"

using namespace schubnef;

namespace {

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("partition: '" + item + "' is not an integer");
            }
            if (used != item.size())
                throw std::invalid_argument("partition: '" + item + "' is not an integer");
            parts.push_back(value);
        }
    }
    return Partition(std::move(parts));  // validates weak decrease, trims zeros
}

void emit(const Json& payload, const std::string& format, const std::string& text) {
    if (format == "text")
        std::cout << text;
    else
        std::cout << dump(payload);
}

int run_classify(int d, int m, int k, int n, const std::string& format) {
    const HilbParams params(d, m, k, n);
    const auto comps = classify(params);
    Json out;
    out["params"] = to_json(params);
    Json arr = Json::array();
    for (const auto& c : comps) arr.push_back(to_json(c));
    out["components"] = std::move(arr);

    std::string text;
    if (comps.empty()) text = "no components\n";
    for (const auto& c : comps) {
        text += to_string(c.name) + ": " + c.bundle() + " over " + c.flag.to_string() +
                ", NS rank " + std::to_string(c.ns_rank) + ", family class σ" +
                c.family_class.to_string() + ", generators";
        for (const auto& lab : c.generator_labels) text += " " + lab;
        text += "\n";
    }
    emit(out, format, text);
    return 0;
}

int run_nef(int d, int m, int k, int n, const std::string& format) {
    const NefConeReport report = nef_report(HilbParams(d, m, k, n));
    std::string text = "case " + to_string(report.case_label) + ": " +
                       std::to_string(report.generator_labels.size()) + " generators:";
    for (const auto& lab : report.generator_labels) text += " " + lab;
    text += "\ncone: " + report.cone.to_string() + "\n";
    emit(to_json(report), format, text);
    return 0;
}

int run_pairing(int d, int m, int k, int n, const std::string& component,
                const std::string& format) {
    const HilbParams params(d, m, k, n);
    const auto comps = classify(params);
    const ComponentName want = [&] {
        if (component == "M1") return ComponentName::M1;
        if (component == "M2") return ComponentName::M2;
        throw std::invalid_argument("pairing: component must be M1 or M2");
    }();
    auto it = std::find_if(comps.begin(), comps.end(),
                           [&](const ComponentDescription& c) { return c.name == want; });
    if (it == comps.end())
        throw std::invalid_argument("pairing: component " + component +
                                    " does not exist for these parameters");
    const PairingMatrix pm = pairing_matrix(*it);
    Json out;
    out["params"] = to_json(params);
    out["component"] = component;
    out["pairing"] = to_json(pm);

    std::string text = component + " pairing (rows divisors, columns curves):\n";
    for (int i = 0; i < pm.size(); ++i) {
        text += "  " + pm.divisor_labels[static_cast<std::size_t>(i)] + ":";
        for (int j = 0; j < pm.size(); ++j)
            text += " " + pm.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str();
        text += "\n";
    }
    emit(out, format, text);
    return 0;
}

int run_mult(int k, int n, const std::string& lhs, const std::string& rhs,
             const std::string& format) {
    const RingContext ctx(k, n);
    const Partition a = parse_partition(lhs);
    const Partition b = parse_partition(rhs);
    const SchubertExpansion product =
        multiply(ctx, SchubertExpansion::basis(a), SchubertExpansion::basis(b));
    Json out;
    out["k"] = k;
    out["n"] = n;
    out["lhs"] = to_json(a);
    out["rhs"] = to_json(b);
    out["product"] = to_json(product);
    emit(out, format, product.to_string() + "\n");
    return 0;
}

int run_hilbpoly(int d, int m, bool has_eval, long long eval_at, const std::string& format) {
    const QPolynomial poly = hilb_poly(d, m);
    Json out;
    out["d"] = d;
    out["m"] = m;
    out["polynomial"] = to_json(poly);
    std::string text =
        "P_{" + std::to_string(d) + "," + std::to_string(m) + "}(T) = " + poly.to_string() + "\n";
    if (has_eval) {
        const Rat value = poly(Rat(eval_at));
        out["eval_at"] = eval_at;
        out["value"] = value.str();
        text += "P(" + std::to_string(eval_at) + ") = " + value.str() + "\n";
    }
    emit(out, format, text);
    return 0;
}

int run_cones_dual(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cones-dual: cannot read file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("cones-dual: invalid JSON: ") + e.what());
    }
    const RationalCone dual = dual_cone(cone_from_json(j));
    emit(to_json(dual), format, dual.to_string() + "\n");
    return 0;
}

int run_verify(int kmax, int nmax, int dmax, const std::string& format) {
    Json points = Json::array();
    std::string text;
    long long total_checks = 0;
    int failures = 0;
    for (int d = 3; d <= dmax; ++d) {
        for (int k = 2; k <= kmax; ++k) {
            for (int n = std::max(4, k + 2); n <= nmax; ++n) {
                for (int m = 3; m <= std::min(k, n - k); ++m) {
                    const HilbParams params(d, m, k, n);
                    const RingContext ctx(k, n);
                    Json point;
                    point["params"] = to_json(params);
                    Json failed = Json::array();
                    int checks = 0;
                    for (const auto& c : classify(params)) {
                        const VerificationRecord rec = verify_component(ctx, c, m);
                        checks += static_cast<int>(rec.checks.size());
                        for (const auto& chk : rec.checks)
                            if (!chk.pass)
                                failed.push_back(to_string(c.name) + "/" + chk.name + ": " +
                                                 chk.detail);
                    }
                    // report-level consistency
                    const NefConeReport report = nef_report(params);
                    int rank_sum = 0;
                    for (const auto& c : report.components) rank_sum += picard_rank(c);
                    const int expected = 6 - (k + m == n ? 1 : 0) - (k == m ? 1 : 0);
                    ++checks;
                    if (rank_sum != expected ||
                        static_cast<int>(report.generator_labels.size()) != expected)
                        failed.push_back("report/generator_count");
                    ++checks;
                    if (!(is_pointed(report.cone) && is_simplicial(report.cone) &&
                          dual_cone(report.cone) ==
                              RationalCone::orthant(report.cone.ambient_dim())))
                        failed.push_back("report/cone_duality");

                    total_checks += checks;
                    point["checks"] = checks;
                    point["pass"] = failed.empty();
                    if (!failed.empty()) {
                        point["failed"] = failed;
                        ++failures;
                    }
                    text += std::string(failed.empty() ? "ok  " : "FAIL") + " d=" +
                            std::to_string(d) + " m=" + std::to_string(m) + " k=" +
                            std::to_string(k) + " n=" + std::to_string(n) + "\n";
                    points.push_back(std::move(point));
                }
            }
        }
    }
    Json out;
    out["grid"] = Json{{"dmax", dmax}, {"kmax", kmax}, {"nmax", nmax}};
    out["points"] = std::move(points);
    out["total_checks"] = total_checks;
    out["failures"] = failures;
    text += std::to_string(total_checks) + " checks, " + std::to_string(failures) +
            " failing parameter points\n";
    emit(out, format, text);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert calculus on G(k,n) and Nef cones of hypersurface Hilbert schemes"};
    app.require_subcommand(1);

    std::string format = "json";
    app.option_defaults()->always_capture_default();

    int d = 3, m = 3, k = 2, n = 4;
    long long eval_at = 0;
    std::string component = "M1", lhs, rhs, cone_file;
    int kmax = 5, nmax = 11, dmax = 4;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--d", d, "Hypersurface degree (>= 3)")->required();
        sub->add_option("--m", m, "Dimension of the spanning projective space")->required();
        sub->add_option("--k", k, "Grassmannian subspace dimension")->required();
        sub->add_option("--n", n, "Ambient vector space dimension")->required();
    };

    CLI::App* cmd_classify = app.add_subcommand("classify", "Hilbert scheme components");
    add_params(cmd_classify);
    add_format(cmd_classify);

    CLI::App* cmd_nef = app.add_subcommand("nef", "Nef cone generator report");
    add_params(cmd_nef);
    add_format(cmd_nef);

    CLI::App* cmd_pairing = app.add_subcommand("pairing", "Divisor/dual-curve pairing matrix");
    add_params(cmd_pairing);
    cmd_pairing->add_option("--component", component, "M1 or M2")->required();
    add_format(cmd_pairing);

    CLI::App* cmd_mult = app.add_subcommand("mult", "Product of two Schubert classes");
    cmd_mult->add_option("--k", k, "Grassmannian subspace dimension")->required();
    cmd_mult->add_option("--n", n, "Ambient vector space dimension")->required();
    cmd_mult->add_option("--lhs", lhs, "Left partition, e.g. 2,1 (empty for sigma_0)")
        ->required();
    cmd_mult->add_option("--rhs", rhs, "Right partition")->required();
    add_format(cmd_mult);

    CLI::App* cmd_hilbpoly = app.add_subcommand("hilbpoly", "Hilbert polynomial P_{d,m}");
    cmd_hilbpoly->add_option("--d", d, "Hypersurface degree")->required();
    cmd_hilbpoly->add_option("--m", m, "Projective space dimension")->required();
    CLI::Option* eval_opt = cmd_hilbpoly->add_option("--eval", eval_at, "Evaluate at integer T");
    add_format(cmd_hilbpoly);

    CLI::App* cmd_dual = app.add_subcommand("cones-dual", "Dual of a cone read from JSON");
    cmd_dual->add_option("--file", cone_file, "Cone JSON file")->required();
    add_format(cmd_dual);

    CLI::App* cmd_verify = app.add_subcommand("verify", "Sweep and verify a parameter grid");
    cmd_verify->add_option("--kmax", kmax, "Largest k")->required();
    cmd_verify->add_option("--nmax", nmax, "Largest n")->required();
    cmd_verify->add_option("--dmax", dmax, "Largest d")->required();
    add_format(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_classify) return run_classify(d, m, k, n, format);
        if (*cmd_nef) return run_nef(d, m, k, n, format);
        if (*cmd_pairing) return run_pairing(d, m, k, n, component, format);
        if (*cmd_mult) return run_mult(k, n, lhs, rhs, format);
        if (*cmd_hilbpoly) return run_hilbpoly(d, m, eval_opt->count() > 0, eval_at, format);
        if (*cmd_dual) return run_cones_dual(cone_file, format);
        if (*cmd_verify) return run_verify(kmax, nmax, dmax, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
