#include "schubnef/hilbscheme.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubnef/hilbpoly.hpp"

namespace schubnef {

HilbParams::HilbParams(int d_, int m_, int k_, int n_) : d(d_), m(m_), k(k_), n(n_) {
    if (d < 3)
        throw std::invalid_argument("HilbParams: need d >= 3 (spans of hypersurfaces are "
                                    "unique only from degree 3 on)");
    if (m < 2) throw std::invalid_argument("HilbParams: need m >= 2");
    if (n < 4) throw std::invalid_argument("HilbParams: need n >= 4");
    if (k <= 1 || k >= n - 1) throw std::invalid_argument("HilbParams: need 1 < k < n-1");
}

std::string to_string(ComponentName name) { return name == ComponentName::M1 ? "M1" : "M2"; }

long long FlagType::dimension() const {
    return static_cast<long long>(a) * (n - a) + static_cast<long long>(b - a) * (n - b);
}

std::string FlagType::to_string() const {
    return "F(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(n) + ")";
}

std::string ComponentDescription::bundle() const {
    return "P(Sym^" + std::to_string(sym_degree) + " S*)";
}

namespace {

// Family-class shapes, without the public ops' 2 < m range guard so that the
// m = 2 classification branch can still be described.
Partition m1_shape(int k, int n, int m) {
    std::vector<int> parts(static_cast<std::size_t>(k) - 1, n - k);
    parts.push_back(n - k - m);
    return Partition(std::move(parts));
}

Partition m2_shape(int k, int n, int m) {
    std::vector<int> parts(static_cast<std::size_t>(k - m), n - k);
    parts.insert(parts.end(), static_cast<std::size_t>(m), n - k - 1);
    return Partition(std::move(parts));
}

}  // namespace

std::vector<ComponentDescription> classify(const HilbParams& params) {
    std::vector<ComponentDescription> out;
    const int k = params.k, n = params.n, m = params.m;
    if (m <= n - k) {
        ComponentDescription c;
        c.name = ComponentName::M1;
        c.flag = FlagType{k - 1, k + m, n};
        c.family_class = m1_shape(k, n, m);
        c.ns_rank = c.flag.proper_steps() + 1;
        c.generator_labels = {"H1"};
        if (c.flag.b < n) c.generator_labels.push_back("H2");
        c.generator_labels.push_back("DX");
        c.sym_degree = params.d;
        out.push_back(std::move(c));
    }
    if (m <= k) {
        ComponentDescription c;
        c.name = ComponentName::M2;
        c.flag = FlagType{k - m, k + 1, n};
        c.family_class = m2_shape(k, n, m);
        c.ns_rank = c.flag.proper_steps() + 1;
        if (c.flag.a > 0) c.generator_labels.push_back("H1p");
        c.generator_labels.push_back("H2p");
        c.generator_labels.push_back("DY");
        c.sym_degree = params.d;
        out.push_back(std::move(c));
    }
    return out;
}

int picard_rank(const ComponentDescription& c) { return c.flag.proper_steps() + 1; }

std::vector<CurveDescriptor> dual_curves(const ComponentDescription& c) {
    std::vector<CurveDescriptor> out;
    out.push_back({"gamma", "fiber-pencil"});
    if (c.flag.a > 0) out.push_back({"gamma_prime", "W1-pencil-fixed-W2"});
    if (c.flag.b < c.flag.n) out.push_back({"gamma_double_prime", "W2-pencil-fixed-W1"});
    return out;
}

PairingMatrix pairing_matrix(const ComponentDescription& c) {
    const bool m1 = c.name == ComponentName::M1;
    std::vector<std::string> divisors{m1 ? "DX" : "DY"};
    if (c.flag.a > 0) divisors.push_back(m1 ? "H1" : "H1p");
    if (c.flag.b < c.flag.n) divisors.push_back(m1 ? "H2" : "H2p");
    std::vector<std::string> curves;
    for (const auto& cd : dual_curves(c)) curves.push_back(cd.label);
    return PairingMatrix::identity(std::move(divisors), std::move(curves));
}

std::string to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::i: return "i";
        case CaseLabel::ii: return "ii";
        case CaseLabel::iii: return "iii";
        case CaseLabel::iv: return "iv";
    }
    throw std::logic_error("to_string(CaseLabel): unreachable");
}

NefConeReport nef_report(const HilbParams& params) {
    const int k = params.k, n = params.n, m = params.m;
    if (m <= 2 || m > params.k_small())
        throw std::invalid_argument("nef_report: need 2 < m <= min(k, n-k)");

    auto components = classify(params);
    const bool m1_degenerate = (k + m == n);
    const bool m2_degenerate = (k == m);
    const CaseLabel label = m1_degenerate ? (m2_degenerate ? CaseLabel::iv : CaseLabel::ii)
                                          : (m2_degenerate ? CaseLabel::iii : CaseLabel::i);

    std::vector<std::string> generator_labels;
    std::vector<PairingMatrix> pairings;
    std::vector<RationalCone> factor_cones;
    int total_rank = 0;
    for (const auto& c : components) {
        total_rank += c.ns_rank;
        generator_labels.insert(generator_labels.end(), c.generator_labels.begin(),
                                c.generator_labels.end());
        PairingMatrix pm = pairing_matrix(c);
        RationalCone nef = nef_from_pairing(pm);
        // nef lives in divisor coordinates ordered as pm.divisor_labels;
        // reorder to the component's generator label order.
        std::vector<int> perm;
        for (const auto& lab : c.generator_labels) {
            auto it = std::find(pm.divisor_labels.begin(), pm.divisor_labels.end(), lab);
            perm.push_back(static_cast<int>(it - pm.divisor_labels.begin()));
        }
        factor_cones.push_back(permute_coordinates(nef, perm));
        pairings.push_back(std::move(pm));
    }

    RationalCone cone = factor_cones.front();
    for (std::size_t i = 1; i < factor_cones.size(); ++i)
        cone = product_cone(cone, factor_cones[i]);

    const int expected = 6 - (m1_degenerate ? 1 : 0) - (m2_degenerate ? 1 : 0);
    if (total_rank != expected ||
        static_cast<int>(generator_labels.size()) != expected)
        throw std::logic_error("nef_report: generator count mismatch");

    return NefConeReport{params, label, std::move(components), std::move(generator_labels),
                         std::move(cone), std::move(pairings)};
}

bool VerificationRecord::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerificationRecord verify_component(const RingContext& ctx, const ComponentDescription& c,
                                    int m) {
    const bool m1 = c.name == ComponentName::M1;
    if (c.flag.n != ctx.n ||
        (m1 && (c.flag.a != ctx.k - 1 || c.flag.b != ctx.k + m)) ||
        (!m1 && (c.flag.a != ctx.k - m || c.flag.b != ctx.k + 1)))
        throw std::invalid_argument("verify_component: context inconsistent with component");

    VerificationRecord rec{ctx.k, ctx.n, c.name, {}};

    const Partition special = m1 ? Partition::row(m) : Partition::column(m);
    {
        const Int lr_route = intersection_number(ctx, SchubertExpansion::basis(special),
                                                 SchubertExpansion::basis(c.family_class));
        const SchubertExpansion pieri = m1 ? pieri_row(ctx, c.family_class, m)
                                           : pieri_column(ctx, c.family_class, m);
        const Int pieri_route = pieri.coefficient(ctx.point_class());
        const bool pass = lr_route == 1 && pieri_route == 1;
        rec.checks.push_back({"incidence_intersection", pass,
                              "LR route " + lr_route.str() + ", Pieri route " +
                                  pieri_route.str() + " (expected 1)"});
    }
    {
        const bool pass = Partition::row(m).weight() == m && Partition::column(m).weight() == m;
        rec.checks.push_back({"codimension", pass,
                              "special class " + special.to_string() + " has codimension " +
                                  std::to_string(special.weight())});
    }
    {
        const int rank = picard_rank(c);
        const int expected = c.flag.is_grassmannian() ? 2 : 3;
        const bool pass = rank == expected && rank == c.ns_rank;
        rec.checks.push_back({"picard_rank", pass,
                              "rank " + std::to_string(rank) + ", flag " + c.flag.to_string()});
    }
    {
        const Int gap = fiber_dimension(c.sym_degree, m) - through_point_dimension(c.sym_degree, m);
        rec.checks.push_back({"fiber_dimension", gap == 1,
                              "fiber/through-point dimension gap " + gap.str()});
    }
    return rec;
}

}  // namespace schubnef
