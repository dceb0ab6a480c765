#pragma once

#include <map>
#include <string>

#include "schubnef/numeric.hpp"
#include "schubnef/partition.hpp"

namespace schubnef {

/// The ring H^*(G(k,n)). Immutable value; every operation below is pure.
struct RingContext {
    int k;
    int n;
    RingContext(int k, int n);
    BoxConstraint box() const { return BoxConstraint(k, n - k); }
    int dimension() const { return k * (n - k); }  // dim G(k,n)
    Partition point_class() const;                 // ((n-k)^k)
};

/// Sparse integer combination of Schubert classes. Keys are kept in the
/// deterministic graded-lex order; zero coefficients are never stored.
class SchubertExpansion {
public:
    using TermMap = std::map<Partition, Int, GradedLexLess>;

    SchubertExpansion() = default;
    static SchubertExpansion unit() { return basis(Partition()); }
    static SchubertExpansion basis(const Partition& lambda, Int coeff = 1);

    void add(const Partition& lambda, const Int& coeff);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const Partition& lambda) const;

    bool is_homogeneous() const;
    /// Common weight of the keys; -1 for the zero or an inhomogeneous expansion.
    int degree() const;

    bool operator==(const SchubertExpansion&) const = default;

    std::string to_string() const;  // "σ[1,1] + σ[2]", "0"

private:
    TermMap terms_;
};

/// sigma_lambda * sigma_p over horizontal strips of size p in the box.
SchubertExpansion pieri_row(const RingContext& ctx, const Partition& lambda, int p);

/// sigma_lambda * sigma_(1^p) over vertical strips of size p in the box.
SchubertExpansion pieri_column(const RingContext& ctx, const Partition& lambda, int p);

/// General cup product via Littlewood-Richardson coefficients, truncated to
/// the box (quotient-ring semantics of H^*(G(k,n))).
SchubertExpansion multiply(const RingContext& ctx, const SchubertExpansion& a,
                           const SchubertExpansion& b);

/// Complementary partition in the k x (n-k) box.
Partition poincare_dual(const RingContext& ctx, const Partition& lambda);

/// Coefficient of the point class in a*b. Requires homogeneous inputs of
/// complementary degree; a degree mismatch is an error, distinct from a
/// legal zero intersection. Zero expansions are accepted and give 0.
Int intersection_number(const RingContext& ctx, const SchubertExpansion& a,
                        const SchubertExpansion& b);

/// Class of the locus of P^m's swept by the F(k-1,k+m;n) family:
/// ((n-k)^(k-1), n-k-m). Defined for 2 < m <= n-k.
Partition family_class_M1(const RingContext& ctx, int m);

/// Class of the locus swept by the F(k-m,k+1;n) family:
/// ((n-k)^(k-m), (n-k-1)^m). Defined for 2 < m <= k.
Partition family_class_M2(const RingContext& ctx, int m);

}  // namespace schubnef
