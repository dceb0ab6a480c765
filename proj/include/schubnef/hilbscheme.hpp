#pragma once

#include <string>
#include <vector>

#include "schubnef/cones.hpp"
#include "schubnef/partition.hpp"
#include "schubnef/schubring.hpp"

namespace schubnef {

/// Parameters of Hilb_{P_{d,m}(T)}(G(k,n)). Validated at construction:
/// d >= 3 (hypersurfaces have a unique span), m >= 2, n >= 4, 1 < k < n-1.
/// k is kept as given; k_small() exposes the G(k,n) ~ G(n-k,n) view.
struct HilbParams {
    int d;
    int m;
    int k;
    int n;
    HilbParams(int d, int m, int k, int n);
    int k_small() const { return std::min(k, n - k); }
    bool dual_view() const { return k > n - k; }
    bool operator==(const HilbParams&) const = default;
};

enum class ComponentName { M1, M2 };
std::string to_string(ComponentName name);

/// Two-step flag variety F(a,b;n); degenerates to a Grassmannian when a == 0
/// or b == n.
struct FlagType {
    int a;
    int b;
    int n;
    bool is_grassmannian() const { return a == 0 || b == n; }
    int proper_steps() const { return (a > 0 ? 1 : 0) + (b < n ? 1 : 0); }
    long long dimension() const;  // dim F(a,b;n)
    bool operator==(const FlagType&) const = default;
    std::string to_string() const;  // "F(3,7;10)"
};

/// One component of the Hilbert scheme: the projective bundle P(Sym^d S*)
/// over its flag variety, with the Schubert class of the swept locus and the
/// Neron-Severi bookkeeping.
struct ComponentDescription {
    ComponentName name;
    FlagType flag;
    Partition family_class;
    int ns_rank;
    std::vector<std::string> generator_labels;
    int sym_degree;  // the d of Sym^d S*

    std::string bundle() const;  // "P(Sym^3 S*)"
    bool operator==(const ComponentDescription&) const = default;
};

/// Symbolic descriptor of a dual curve: a pencil class paired 1 against
/// exactly one divisor generator.
struct CurveDescriptor {
    std::string label;        // gamma | gamma_prime | gamma_double_prime
    std::string description;  // fiber-pencil | W1-pencil-fixed-W2 | W2-pencil-fixed-W1
    bool operator==(const CurveDescriptor&) const = default;
};

/// Component classification: M1 over F(k-1,k+m;n) when m <= n-k, M2 over
/// F(k-m,k+1;n) when m <= k, else nothing. Accepts m = 2 (classification
/// only; the nef machinery requires m > 2).
std::vector<ComponentDescription> classify(const HilbParams& params);

/// Rank of NS of the component: flag base rank plus one for the bundle.
int picard_rank(const ComponentDescription& c);

/// The dual curves of the component's divisor generators, in pairing order.
std::vector<CurveDescriptor> dual_curves(const ComponentDescription& c);

/// Identity pairing (D_i . gamma_j) = delta_ij of size picard_rank, divisor
/// rows ordered (D, H1, H2) with absent pullbacks dropped on degenerate flags.
PairingMatrix pairing_matrix(const ComponentDescription& c);

enum class CaseLabel { i, ii, iii, iv };
std::string to_string(CaseLabel label);

/// The full generator description of Nef(Hilb): per-component nef cones from
/// the pairing matrices, assembled as a product cone in the rank-(sum ns_rank)
/// lattice, with coordinates ordered by generator_labels.
struct NefConeReport {
    HilbParams params;
    CaseLabel case_label;
    std::vector<ComponentDescription> components;
    std::vector<std::string> generator_labels;
    RationalCone cone;
    std::vector<PairingMatrix> pairings;

    bool operator==(const NefConeReport&) const = default;
};

/// Requires 2 < m <= min(k, n-k). Generator count is 6 in the generic case,
/// 5 when exactly one flag degenerates (k+m = n or k = m), 4 when both do.
NefConeReport nef_report(const HilbParams& params);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationRecord {
    int k;
    int n;
    ComponentName component;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Schubert-calculus verification of the component's computable ingredients:
/// (a) intersection of the special class with the family class is 1, by both
///     the Pieri path and the LR-tableau route;
/// (b) the special class has codimension m;
/// (c) picard_rank is consistent with flag degeneracy;
/// (d) fiber_dimension exceeds through_point_dimension by exactly 1.
/// Failures are reported in the record, not thrown.
VerificationRecord verify_component(const RingContext& ctx, const ComponentDescription& c, int m);

}  // namespace schubnef
