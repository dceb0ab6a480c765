// Acceptance suite: exercises the artifact's exit criteria end to end and
// prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.
// argv[1] must point at the CLI binary (used by criteria 1, 2 and 8).

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "schubnef/combinat.hpp"
#include "schubnef/hilbpoly.hpp"
#include "schubnef/json_io.hpp"

using namespace schubnef;

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.stdout_text.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool require(bool ok, const std::string& why, std::string& log) {
    if (!ok && log.empty()) log = why;
    return ok;
}

// 1. Generator table: 6/5/5/4 generators with case labels i-iv.
bool criterion1(std::string& log) {
    struct Expect {
        int d, m, k, n;
        std::string label;
        std::size_t count;
    };
    const std::vector<Expect> table = {{3, 3, 4, 10, "i", 6},
                                       {3, 3, 4, 7, "ii", 5},
                                       {3, 3, 3, 10, "iii", 5},
                                       {3, 3, 3, 6, "iv", 4}};
    bool ok = true;
    for (const auto& e : table) {
        const std::string args = "nef --d " + std::to_string(e.d) + " --m " + std::to_string(e.m) +
                                 " --k " + std::to_string(e.k) + " --n " + std::to_string(e.n);
        const RunResult r = run_cli(args);
        ok &= require(r.exit_code == 0, "nef exited nonzero for " + args, log);
        if (r.exit_code != 0) continue;
        const Json j = Json::parse(r.stdout_text);
        const NefConeReport report = report_from_json(j);
        ok &= require(j.at("case") == e.label,
                      args + ": case " + j.at("case").get<std::string>() + " != " + e.label, log);
        ok &= require(report.generator_labels.size() == e.count,
                      args + ": generator count mismatch", log);
        ok &= require(report == nef_report(HilbParams(e.d, e.m, e.k, e.n)),
                      args + ": CLI report differs from library report", log);
    }
    return ok;
}

// 2. Component classification: exact flag triples per branch; one empty case.
bool criterion2(std::string& log) {
    bool ok = true;
    auto flags_of = [](const Json& j) {
        std::vector<Json> out;
        for (const auto& c : j.at("components")) out.push_back(c.at("flag"));
        return out;
    };
    {
        const RunResult r = run_cli("classify --d 3 --m 3 --k 4 --n 10");
        ok &= require(r.exit_code == 0, "classify (3,3,4,10) failed", log);
        const auto flags = flags_of(Json::parse(r.stdout_text));
        ok &= require(flags.size() == 2 && flags[0] == Json::array({3, 7, 10}) &&
                          flags[1] == Json::array({1, 5, 10}),
                      "(3,3,4,10) flags != F(3,7;10), F(1,5;10)", log);
    }
    {
        const RunResult r = run_cli("classify --d 4 --m 5 --k 3 --n 9");
        ok &= require(r.exit_code == 0, "classify (4,5,3,9) failed", log);
        const auto flags = flags_of(Json::parse(r.stdout_text));
        ok &= require(flags.size() == 1 && flags[0] == Json::array({2, 8, 9}),
                      "(4,5,3,9) flags != F(2,8;9)", log);
    }
    {
        const RunResult r = run_cli("classify --d 3 --m 5 --k 3 --n 7");
        ok &= require(r.exit_code == 0, "classify (3,5,3,7) failed", log);
        ok &= require(flags_of(Json::parse(r.stdout_text)).empty(), "(3,5,3,7) not empty", log);
    }
    return ok;
}

// 3. Special-class/family-class intersection numbers via both routes.
bool criterion3(std::string& log) {
    bool ok = true;
    int checked = 0;
    for (int k = 3; k <= 6; ++k) {
        for (int n = k + 2; n <= 13; ++n) {
            const RingContext ctx(k, n);
            for (int m = 3; m <= k; ++m) {
                if (m <= n - k) {
                    const Partition fam = family_class_M1(ctx, m);
                    const Int lr = intersection_number(ctx, SchubertExpansion::basis(Partition::row(m)),
                                                       SchubertExpansion::basis(fam));
                    const Int pieri = pieri_row(ctx, fam, m).coefficient(ctx.point_class());
                    ok &= require(lr == 1 && pieri == lr,
                                  "M1 incidence failed at k=" + std::to_string(k) +
                                      " n=" + std::to_string(n) + " m=" + std::to_string(m),
                                  log);
                    ++checked;
                }
                const Partition fam2 = family_class_M2(ctx, m);
                const Int lr2 = intersection_number(ctx, SchubertExpansion::basis(Partition::column(m)),
                                                    SchubertExpansion::basis(fam2));
                const Int pieri2 = pieri_column(ctx, fam2, m).coefficient(ctx.point_class());
                ok &= require(lr2 == 1 && pieri2 == lr2,
                              "M2 incidence failed at k=" + std::to_string(k) +
                                  " n=" + std::to_string(n) + " m=" + std::to_string(m),
                              log);
                ++checked;
            }
        }
    }
    ok &= require(checked >= 50, "grid unexpectedly small", log);
    return ok;
}

// 4. Picard ranks across the same grid.
bool criterion4(std::string& log) {
    bool ok = true;
    for (int k = 3; k <= 6; ++k) {
        for (int n = k + 2; n <= 13; ++n) {
            for (int m = 3; m <= k; ++m) {
                for (const auto& c : classify(HilbParams(3, m, k, n))) {
                    const bool degenerate = (c.name == ComponentName::M1 && k + m == n) ||
                                            (c.name == ComponentName::M2 && k == m);
                    const int expected = degenerate ? 2 : 3;
                    ok &= require(picard_rank(c) == expected,
                                  "picard rank != " + std::to_string(expected) + " at k=" +
                                      std::to_string(k) + " n=" + std::to_string(n) +
                                      " m=" + std::to_string(m) + " " + to_string(c.name),
                                  log);
                }
            }
        }
    }
    return ok;
}

// 5. Hilbert polynomial vs brute-force oracle: 150 exact equalities.
bool criterion5(std::string& log) {
    bool ok = true;
    int equalities = 0;
    for (int d = 1; d <= 5; ++d) {
        for (int m = 1; m <= 5; ++m) {
            const QPolynomial p = hilb_poly(d, m);
            ok &= require(p.degree() == m - 1, "degree != m-1", log);
            ok &= require(p.leading_coefficient() == Rat(Int(d), factorial(m - 1)),
                          "leading coefficient != d/(m-1)!", log);
            for (int T = d; T <= d + 6; ++T) {
                ok &= require(p(T) == Rat(hilbert_function_oracle(d, m, T)),
                              "oracle mismatch at d=" + std::to_string(d) + " m=" +
                                  std::to_string(m) + " T=" + std::to_string(T),
                              log);
                ++equalities;
            }
        }
    }
    ok &= require(equalities == 175, "unexpected equality count", log);
    return ok;
}

// 6. Ring property suite on G(2,4), G(2,5), G(3,6).
bool criterion6(std::string& log) {
    bool ok = true;
    for (const auto& ctx : {RingContext(2, 4), RingContext(2, 5), RingContext(3, 6)}) {
        const auto basis = partitions_in_box(ctx.box());
        const int nb = static_cast<int>(basis.size());
        auto sigma = [](const Partition& p) { return SchubertExpansion::basis(p); };

        for (const auto& lambda : basis) {
            for (int p = 0; p <= ctx.n - ctx.k; ++p)
                ok &= require(pieri_row(ctx, lambda, p) ==
                                  multiply(ctx, sigma(lambda), sigma(Partition::row(p))),
                              "pieri_row/LR disagreement", log);
            for (int p = 0; p <= ctx.k; ++p)
                ok &= require(pieri_column(ctx, lambda, p) ==
                                  multiply(ctx, sigma(lambda), sigma(Partition::column(p))),
                              "pieri_column/LR disagreement", log);
        }

        std::map<std::pair<int, int>, SchubertExpansion> table;
        std::map<Partition, int, GradedLexLess> index;
        for (int i = 0; i < nb; ++i) index.emplace(basis[static_cast<std::size_t>(i)], i);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j) {
                auto prod = multiply(ctx, sigma(basis[static_cast<std::size_t>(i)]),
                                     sigma(basis[static_cast<std::size_t>(j)]));
                if (j < i)
                    ok &= require(prod == table.at({j, i}), "commutativity failure", log);
                table.emplace(std::make_pair(i, j), std::move(prod));
            }
        auto times_basis = [&](const SchubertExpansion& e, int j) {
            SchubertExpansion out;
            for (const auto& [key, c] : e.terms())
                for (const auto& [key2, c2] : table.at({index.at(key), j}).terms())
                    out.add(key2, c * c2);
            return out;
        };
        for (int i = 0; i < nb && ok; ++i)
            for (int j = 0; j < nb && ok; ++j)
                for (int l = 0; l < nb && ok; ++l)
                    ok &= require(times_basis(table.at({i, j}), l) ==
                                      times_basis(table.at({j, l}), i),
                                  "associativity failure", log);

        for (const auto& lambda : basis)
            for (const auto& mu : basis) {
                if (lambda.weight() + mu.weight() != ctx.dimension()) continue;
                const Int expected = mu == poincare_dual(ctx, lambda) ? 1 : 0;
                ok &= require(intersection_number(ctx, sigma(lambda), sigma(mu)) == expected,
                              "Poincare duality failure", log);
            }
    }
    return ok;
}

// 7. Cone suite: dual-of-dual, identity pairings, product duality.
bool criterion7(std::string& log) {
    bool ok = true;
    std::vector<RationalCone> cones;
    for (int d = 1; d <= 4; ++d) cones.push_back(RationalCone::orthant(d));
    cones.push_back(RationalCone(2, std::vector<ZVector>{{1, 0}, {1, 2}}));
    cones.push_back(RationalCone(2, std::vector<ZVector>{{2, -1}, {1, 3}}));
    cones.push_back(RationalCone(3, std::vector<ZVector>{{1, 0, 0}, {1, 2, 0}, {1, 1, 3}}));
    cones.push_back(
        RationalCone(3, std::vector<ZVector>{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}));
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> entry(-5, 5);
    while (cones.size() < 22) {
        const int d = 2 + static_cast<int>(cones.size() % 3);
        std::vector<ZVector> gens;
        for (int i = 0; i < d; ++i) {
            ZVector g;
            for (int j = 0; j < d; ++j) g.push_back(entry(rng));
            gens.push_back(std::move(g));
        }
        try {
            RationalCone c(d, gens);
            if (static_cast<int>(c.generators().size()) == d && is_simplicial(c))
                cones.push_back(std::move(c));
        } catch (const std::invalid_argument&) {
        }
    }
    ok &= require(cones.size() >= 20, "fewer than 20 test cones", log);
    for (const auto& c : cones)
        ok &= require(dual_cone(dual_cone(c)) == c, "dual-of-dual failure on " + c.to_string(),
                      log);

    for (int r = 1; r <= 6; ++r) {
        std::vector<std::string> divisors, curves;
        for (int i = 0; i < r; ++i) {
            divisors.push_back("D" + std::to_string(i + 1));
            curves.push_back("g" + std::to_string(i + 1));
        }
        ok &= require(nef_from_pairing(PairingMatrix::identity(divisors, curves)) ==
                          RationalCone::orthant(r),
                      "identity pairing is not the orthant at r=" + std::to_string(r), log);
    }

    const RationalCone a = RationalCone(2, std::vector<ZVector>{{1, 0}, {1, 2}});
    const RationalCone b = RationalCone::orthant(3);
    ok &= require(dual_cone(product_cone(a, b)) == product_cone(dual_cone(a), dual_cone(b)),
                  "dual(product) != product(duals)", log);
    ok &= require(product_cone(RationalCone::orthant(3), RationalCone::orthant(3)) ==
                      RationalCone::orthant(6),
                  "orthant product failure", log);
    return ok;
}

// 8. Determinism of the CLI and a clean verification sweep.
bool criterion8(std::string& log) {
    bool ok = true;
    for (const std::string& args :
         {std::string("nef --d 3 --m 3 --k 4 --n 10"), std::string("classify --d 3 --m 3 --k 4 --n 10"),
          std::string("mult --k 2 --n 4 --lhs 1 --rhs 1"), std::string("hilbpoly --d 3 --m 3 --eval 4")}) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        ok &= require(first.exit_code == 0 && second.exit_code == 0, args + " exited nonzero", log);
        ok &= require(!first.stdout_text.empty() && first.stdout_text == second.stdout_text,
                      args + " is not byte-deterministic", log);
    }
    const RunResult sweep = run_cli("verify --kmax 5 --nmax 11 --dmax 4");
    ok &= require(sweep.exit_code == 0, "verify sweep exited " + std::to_string(sweep.exit_code),
                  log);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
        {"nef generator table (6/5/5/4, cases i-iv)", criterion1},
        {"component classification branches", criterion2},
        {"special-class/family-class intersection numbers via both routes", criterion3},
        {"Picard ranks (3 generic, 2 degenerate) across the grid", criterion4},
        {"Hilbert polynomial equals the monomial-counting oracle", criterion5},
        {"ring property suite on G(2,4), G(2,5), G(3,6)", criterion6},
        {"cone suite: dual-of-dual, identity pairings, products", criterion7},
        {"CLI determinism and clean verify sweep", criterion8},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string log;
        bool ok = false;
        try {
            ok = criteria[i].second(log);
        } catch (const std::exception& e) {
            log = std::string("exception: ") + e.what();
        }
        all &= ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << criteria[i].first;
        if (!ok && !log.empty()) std::cout << " [" << log << "]";
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
