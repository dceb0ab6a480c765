#include "schubnef/cones.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubnef {

namespace {

using Matrix = std::vector<QVector>;

// Reduced row echelon form in place; returns the pivot column indices.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(p)]);
        const Rat lead = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (auto& x : m[static_cast<std::size_t>(r)]) x /= lead;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rat f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank_of(Matrix m) { return static_cast<int>(rref(m).size()); }

// Basis of {x in Q^dim : row . x = 0 for every row}.
std::vector<QVector> kernel_basis(Matrix m, int dim) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<QVector> basis;
    for (int c = 0; c < dim; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        QVector v(static_cast<std::size_t>(dim), 0);
        v[static_cast<std::size_t>(c)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = -m[i][static_cast<std::size_t>(c)];
        basis.push_back(std::move(v));
    }
    return basis;
}

ZVector primitive(const QVector& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Int den = 1;
    for (const auto& x : v) den = lcm(den, denominator(x));
    ZVector w;
    w.reserve(v.size());
    Int g = 0;
    for (const auto& x : v) {
        w.push_back(numerator(x) * (den / denominator(x)));
        g = gcd(g, abs(w.back()));
    }
    if (g > 1)
        for (auto& y : w) y /= g;
    return w;
}

bool is_zero_vector(const ZVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

QVector to_rational(const ZVector& v) { return QVector(v.begin(), v.end()); }

Rat dot(const QVector& a, const ZVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

// Visits all size-k index subsets of {0, ..., n-1}.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

RationalCone::RationalCone(int ambient_dim, std::vector<QVector> generators) : dim_(ambient_dim) {
    if (dim_ < 1) throw std::invalid_argument("RationalCone: ambient dimension must be positive");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != dim_)
            throw std::invalid_argument("RationalCone: generator dimension mismatch");
        ZVector z = primitive(g);
        if (is_zero_vector(z))
            throw std::invalid_argument("RationalCone: generators must be nonzero");
        generators_.push_back(std::move(z));
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

RationalCone::RationalCone(int ambient_dim, std::vector<ZVector> generators)
    : RationalCone(ambient_dim, [&] {
          std::vector<QVector> qs;
          qs.reserve(generators.size());
          for (const auto& g : generators) qs.push_back(to_rational(g));
          return qs;
      }()) {}

RationalCone RationalCone::orthant(int dim) {
    std::vector<ZVector> gens;
    for (int i = 0; i < dim; ++i) {
        ZVector e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(e));
    }
    return RationalCone(dim, std::move(gens));
}

std::string RationalCone::to_string() const {
    std::string s = "cone(dim " + std::to_string(dim_) + ")";
    for (const auto& g : generators_) {
        s += " <";
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i > 0) s += ",";
            s += g[i].str();
        }
        s += ">";
    }
    return s;
}

RationalCone dual_cone(const RationalCone& c) {
    const int d = c.ambient_dim();
    if (d > 6)
        throw std::invalid_argument("dual_cone: ambient dimension above 6 is unsupported");
    const auto& gens = c.generators();

    Matrix rows;
    for (const auto& g : gens) rows.push_back(to_rational(g));
    const std::vector<QVector> perp = kernel_basis(rows, d);  // orthogonal complement of span
    const int rank = d - static_cast<int>(perp.size());

    std::set<ZVector> out;
    // Candidate facet normals: each lies in the span and vanishes on a
    // (rank-1)-subset of generators; keep those with all generators on one side.
    for_each_subset(static_cast<int>(gens.size()), rank - 1, [&](const std::vector<int>& idx) {
        Matrix m;
        for (int i : idx) m.push_back(to_rational(gens[static_cast<std::size_t>(i)]));
        for (const auto& p : perp) m.push_back(p);
        auto kernel = kernel_basis(std::move(m), d);
        if (kernel.size() != 1) return;
        const QVector& normal = kernel.front();
        bool any_pos = false, any_neg = false;
        for (const auto& g : gens) {
            const Rat s = dot(normal, g);
            if (s > 0) any_pos = true;
            if (s < 0) any_neg = true;
            if (any_pos && any_neg) return;
        }
        ZVector z = primitive(normal);
        if (!any_neg) out.insert(z);
        if (!any_pos) {
            for (auto& x : z) x = -x;
            out.insert(z);
        }
    });
    // The dual always contains span(gens)^perp as lineality.
    for (const auto& p : perp) {
        ZVector z = primitive(p);
        out.insert(z);
        for (auto& x : z) x = -x;
        out.insert(z);
    }
    return RationalCone(d, std::vector<ZVector>(out.begin(), out.end()));
}

bool contains(const RationalCone& c, const QVector& v) {
    const int d = c.ambient_dim();
    if (static_cast<int>(v.size()) != d)
        throw std::invalid_argument("contains: vector dimension mismatch");
    if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; })) return true;

    const auto& gens = c.generators();
    const int m = static_cast<int>(gens.size());
    // Caratheodory: membership is witnessed by some independent subset of
    // at most d generators; solve each square-rank system exactly.
    bool found = false;
    for (int s = 1; s <= std::min(m, d) && !found; ++s) {
        for_each_subset(m, s, [&](const std::vector<int>& idx) {
            if (found) return;
            Matrix aug(static_cast<std::size_t>(d), QVector(static_cast<std::size_t>(s) + 1, 0));
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < s; ++j)
                    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(
                        gens[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]
                            [static_cast<std::size_t>(i)]);
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] =
                    v[static_cast<std::size_t>(i)];
            }
            auto pivots = rref(aug);
            if (!pivots.empty() && pivots.back() == s) return;    // inconsistent
            if (static_cast<int>(pivots.size()) < s) return;      // dependent subset
            for (std::size_t r = 0; r < pivots.size(); ++r)
                if (aug[r][static_cast<std::size_t>(s)] < 0) return;
            found = true;
        });
    }
    return found;
}

RationalCone product_cone(const RationalCone& c1, const RationalCone& c2) {
    const int d1 = c1.ambient_dim(), d2 = c2.ambient_dim();
    std::vector<ZVector> gens;
    for (const auto& g : c1.generators()) {
        ZVector z(g);
        z.resize(static_cast<std::size_t>(d1 + d2), 0);
        gens.push_back(std::move(z));
    }
    for (const auto& h : c2.generators()) {
        ZVector z(static_cast<std::size_t>(d1), 0);
        z.insert(z.end(), h.begin(), h.end());
        gens.push_back(std::move(z));
    }
    return RationalCone(d1 + d2, std::move(gens));
}

bool is_pointed(const RationalCone& c) {
    const auto& gens = c.generators();
    if (gens.empty()) return true;
    const int d = c.ambient_dim();
    Matrix rows;
    for (const auto& g : gens) rows.push_back(to_rational(g));
    const int rank = rank_of(rows);
    const int m = static_cast<int>(gens.size());
    // Not pointed iff some circuit has a strictly one-signed dependency:
    // a full-support kernel vector of <= rank+1 generators with equal signs.
    bool line_found = false;
    for (int s = 2; s <= std::min(m, rank + 1) && !line_found; ++s) {
        for_each_subset(m, s, [&](const std::vector<int>& idx) {
            if (line_found) return;
            Matrix eq(static_cast<std::size_t>(d), QVector(static_cast<std::size_t>(s), 0));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < s; ++j)
                    eq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(
                        gens[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]
                            [static_cast<std::size_t>(i)]);
            auto kernel = kernel_basis(std::move(eq), s);
            if (kernel.size() != 1) return;
            const QVector& dep = kernel.front();
            bool pos = false, neg = false, zero = false;
            for (const auto& x : dep) {
                if (x > 0) pos = true;
                else if (x < 0) neg = true;
                else zero = true;
            }
            if (!zero && pos != neg) line_found = true;
        });
    }
    return !line_found;
}

bool is_simplicial(const RationalCone& c) {
    Matrix rows;
    for (const auto& g : c.generators()) rows.push_back(to_rational(g));
    return static_cast<int>(c.generators().size()) == rank_of(std::move(rows));
}

RationalCone permute_coordinates(const RationalCone& c, const std::vector<int>& new_from_old) {
    const int d = c.ambient_dim();
    if (static_cast<int>(new_from_old.size()) != d)
        throw std::invalid_argument("permute_coordinates: permutation size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int i : new_from_old) {
        if (i < 0 || i >= d || seen[static_cast<std::size_t>(i)])
            throw std::invalid_argument("permute_coordinates: not a permutation");
        seen[static_cast<std::size_t>(i)] = true;
    }
    std::vector<ZVector> gens;
    for (const auto& g : c.generators()) {
        ZVector z;
        z.reserve(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            z.push_back(g[static_cast<std::size_t>(new_from_old[static_cast<std::size_t>(j)])]);
        gens.push_back(std::move(z));
    }
    return RationalCone(d, std::move(gens));
}

PairingMatrix::PairingMatrix(std::vector<std::string> divisors, std::vector<std::string> curves,
                             std::vector<std::vector<Int>> entries_)
    : divisor_labels(std::move(divisors)),
      curve_labels(std::move(curves)),
      entries(std::move(entries_)) {
    const std::size_t r = entries.size();
    if (r == 0) throw std::invalid_argument("PairingMatrix: empty matrix");
    for (const auto& row : entries)
        if (row.size() != r) throw std::invalid_argument("PairingMatrix: matrix must be square");
    if (divisor_labels.size() != r || curve_labels.size() != r)
        throw std::invalid_argument("PairingMatrix: label count must match matrix size");
    for (const auto* labels : {&divisor_labels, &curve_labels}) {
        auto sorted = *labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("PairingMatrix: labels must be distinct");
    }
}

PairingMatrix PairingMatrix::identity(std::vector<std::string> divisors,
                                      std::vector<std::string> curves) {
    const std::size_t r = divisors.size();
    std::vector<std::vector<Int>> entries(r, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) entries[i][i] = 1;
    return PairingMatrix(std::move(divisors), std::move(curves), std::move(entries));
}

RationalCone nef_from_pairing(const PairingMatrix& p) {
    const int r = p.size();
    if (r > 6)
        throw std::invalid_argument("nef_from_pairing: rank above 6 is unsupported");
    std::vector<QVector> columns(static_cast<std::size_t>(r),
                                 QVector(static_cast<std::size_t>(r), 0));
    Matrix rows;
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i)
            columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                Rat(p.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        rows.push_back(columns[static_cast<std::size_t>(j)]);
    }
    if (rank_of(std::move(rows)) < r)
        throw std::invalid_argument("nef_from_pairing: singular pairing matrix");
    return dual_cone(RationalCone(r, std::move(columns)));
}

}  // namespace schubnef
