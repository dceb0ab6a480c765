#pragma once

#include <string>
#include <vector>

#include "schubnef/numeric.hpp"

namespace schubnef {

using QVector = std::vector<Rat>;
using ZVector = std::vector<Int>;

/// A rational polyhedral cone given by generators, kept in canonical form:
/// every generator scaled to a primitive integer vector (positive scaling
/// only), duplicates removed, list sorted lexicographically. Canonical form
/// is the equality notion.
class RationalCone {
public:
    RationalCone(int ambient_dim, std::vector<QVector> generators);
    RationalCone(int ambient_dim, std::vector<ZVector> generators);

    static RationalCone orthant(int dim);
    static RationalCone zero(int dim) { return RationalCone(dim, std::vector<ZVector>{}); }

    int ambient_dim() const { return dim_; }
    const std::vector<ZVector>& generators() const { return generators_; }

    bool operator==(const RationalCone&) const = default;

    std::string to_string() const;

private:
    int dim_;
    std::vector<ZVector> generators_;
};

/// {y : <y,g> >= 0 for all generators g}, computed exactly by enumerating
/// candidate facet normals over (rank-1)-subsets of generators with
/// orientation checks; lineality directions of the dual (the orthogonal
/// complement of the span) are emitted as opposite generator pairs.
/// Ambient dimension is capped at 6.
RationalCone dual_cone(const RationalCone& c);

/// Exact membership: v is a nonnegative rational combination of the
/// generators. Decided over simplicial subcones (subsets of at most
/// dim independent generators).
bool contains(const RationalCone& c, const QVector& v);

/// Cone in dimension d1+d2 generated by {(g,0)} and {(0,h)}.
RationalCone product_cone(const RationalCone& c1, const RationalCone& c2);

/// No line through the origin lies in the cone.
bool is_pointed(const RationalCone& c);

/// Generator count equals the rank of the generator set.
bool is_simplicial(const RationalCone& c);

/// Reorders coordinates: new coordinate j reads old coordinate new_from_old[j].
RationalCone permute_coordinates(const RationalCone& c, const std::vector<int>& new_from_old);

/// The divisor/curve intersection table (D_i . gamma_j). Rows are divisors,
/// columns are curves; square with distinct labels.
struct PairingMatrix {
    std::vector<std::string> divisor_labels;
    std::vector<std::string> curve_labels;
    std::vector<std::vector<Int>> entries;

    PairingMatrix(std::vector<std::string> divisors, std::vector<std::string> curves,
                  std::vector<std::vector<Int>> entries);
    static PairingMatrix identity(std::vector<std::string> divisors,
                                  std::vector<std::string> curves);

    int size() const { return static_cast<int>(entries.size()); }
    bool operator==(const PairingMatrix&) const = default;
};

/// Nef cone in divisor coordinates x (a divisor class is sum x_i D_i):
/// {x : x^T entries >= 0 columnwise}, i.e. the dual of the cone spanned by
/// the matrix columns. Rejects singular pairing matrices (the curves fail
/// to span the dual space). The identity pairing yields the orthant.
RationalCone nef_from_pairing(const PairingMatrix& p);

}  // namespace schubnef
