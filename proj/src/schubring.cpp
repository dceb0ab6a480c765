#include "schubnef/schubring.hpp"

#include <stdexcept>

#include "schubnef/combinat.hpp"

namespace schubnef {

RingContext::RingContext(int k_, int n_) : k(k_), n(n_) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("RingContext: need 1 <= k <= n-1");
}

Partition RingContext::point_class() const {
    return Partition(std::vector<int>(static_cast<std::size_t>(k), n - k));
}

SchubertExpansion SchubertExpansion::basis(const Partition& lambda, Int coeff) {
    SchubertExpansion e;
    e.add(lambda, coeff);
    return e;
}

void SchubertExpansion::add(const Partition& lambda, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int SchubertExpansion::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Int(0) : it->second;
}

bool SchubertExpansion::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int w = terms_.begin()->first.weight();
    for (const auto& [key, coeff] : terms_)
        if (key.weight() != w) return false;
    return true;
}

int SchubertExpansion::degree() const {
    if (terms_.empty() || !is_homogeneous()) return -1;
    return terms_.begin()->first.weight();
}

std::string SchubertExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, coeff] : terms_) {
        if (!s.empty()) s += " + ";
        if (coeff != 1) s += coeff.str() + "*";
        s += "σ" + key.to_string();
    }
    return s;
}

namespace {

void require_in_box(const RingContext& ctx, const Partition& lambda, const char* op) {
    if (!ctx.box().admits(lambda))
        throw std::invalid_argument(std::string(op) + ": partition " + lambda.to_string() +
                                    " does not fit the " + std::to_string(ctx.k) + "x" +
                                    std::to_string(ctx.n - ctx.k) + " box");
}

void require_in_box(const RingContext& ctx, const SchubertExpansion& e, const char* op) {
    for (const auto& [key, coeff] : e.terms()) require_in_box(ctx, key, op);
}

// Horizontal strips: mu_0 in [lambda_0, cols], mu_i in [lambda_i, lambda_{i-1}]
// for i >= 1, total added cells = p. Weak decrease is automatic.
void horizontal_strips(const Partition& lambda, int rows, int cols, int row, int remaining,
                       std::vector<int>& acc, SchubertExpansion& out) {
    if (row == rows) {
        if (remaining == 0) out.add(Partition(acc), 1);
        return;
    }
    const int lo = lambda.part(row);
    const int hi = std::min(row == 0 ? cols : lambda.part(row - 1), lo + remaining);
    for (int mu = lo; mu <= hi; ++mu) {
        acc.push_back(mu);
        horizontal_strips(lambda, rows, cols, row + 1, remaining - (mu - lo), acc, out);
        acc.pop_back();
    }
}

// Vertical strips: each row gains 0 or 1 cells, result stays a partition in the box.
void vertical_strips(const Partition& lambda, int rows, int cols, int row, int remaining,
                     std::vector<int>& acc, SchubertExpansion& out) {
    if (row == rows) {
        if (remaining == 0) out.add(Partition(acc), 1);
        return;
    }
    const int base = lambda.part(row);
    const int prev = row == 0 ? cols : acc[static_cast<std::size_t>(row) - 1];
    for (int add = 0; add <= 1; ++add) {
        if (add > remaining) break;
        const int mu = base + add;
        if (mu > prev) break;
        acc.push_back(mu);
        vertical_strips(lambda, rows, cols, row + 1, remaining - add, acc, out);
        acc.pop_back();
    }
}

}  // namespace

SchubertExpansion pieri_row(const RingContext& ctx, const Partition& lambda, int p) {
    require_in_box(ctx, lambda, "pieri_row");
    if (p < 0 || p > ctx.n - ctx.k)
        throw std::invalid_argument("pieri_row: need 0 <= p <= n-k");
    SchubertExpansion out;
    std::vector<int> acc;
    horizontal_strips(lambda, ctx.k, ctx.n - ctx.k, 0, p, acc, out);
    return out;
}

SchubertExpansion pieri_column(const RingContext& ctx, const Partition& lambda, int p) {
    require_in_box(ctx, lambda, "pieri_column");
    if (p < 0 || p > ctx.k)
        throw std::invalid_argument("pieri_column: need 0 <= p <= k");
    SchubertExpansion out;
    std::vector<int> acc;
    vertical_strips(lambda, ctx.k, ctx.n - ctx.k, 0, p, acc, out);
    return out;
}

SchubertExpansion multiply(const RingContext& ctx, const SchubertExpansion& a,
                           const SchubertExpansion& b) {
    require_in_box(ctx, a, "multiply");
    require_in_box(ctx, b, "multiply");
    SchubertExpansion out;
    const BoxConstraint box = ctx.box();
    for (const auto& [lambda, ca] : a.terms()) {
        for (const auto& [mu, cb] : b.terms()) {
            const int w = lambda.weight() + mu.weight();
            if (w > ctx.dimension()) continue;
            for (const Partition& nu : partitions_in_box_of_weight(box, w)) {
                if (!nu.contains(lambda) || !nu.contains(mu)) continue;
                Int c = lr_coefficient(lambda, mu, nu);
                if (c != 0) out.add(nu, ca * cb * c);
            }
        }
    }
    return out;
}

Partition poincare_dual(const RingContext& ctx, const Partition& lambda) {
    require_in_box(ctx, lambda, "poincare_dual");
    std::vector<int> parts;
    for (int i = ctx.k - 1; i >= 0; --i) parts.push_back(ctx.n - ctx.k - lambda.part(i));
    return Partition(std::move(parts));
}

Int intersection_number(const RingContext& ctx, const SchubertExpansion& a,
                        const SchubertExpansion& b) {
    require_in_box(ctx, a, "intersection_number");
    require_in_box(ctx, b, "intersection_number");
    if (a.is_zero() || b.is_zero()) return 0;
    if (!a.is_homogeneous() || !b.is_homogeneous())
        throw std::invalid_argument("intersection_number: inputs must be homogeneous");
    if (a.degree() + b.degree() != ctx.dimension())
        throw std::invalid_argument(
            "intersection_number: degrees are not complementary (dimension mismatch)");
    return multiply(ctx, a, b).coefficient(ctx.point_class());
}

Partition family_class_M1(const RingContext& ctx, int m) {
    if (m <= 2 || m > ctx.n - ctx.k)
        throw std::invalid_argument("family_class_M1: need 2 < m <= n-k");
    std::vector<int> parts(static_cast<std::size_t>(ctx.k) - 1, ctx.n - ctx.k);
    parts.push_back(ctx.n - ctx.k - m);
    return Partition(std::move(parts));
}

Partition family_class_M2(const RingContext& ctx, int m) {
    if (m <= 2 || m > ctx.k)
        throw std::invalid_argument("family_class_M2: need 2 < m <= k");
    std::vector<int> parts(static_cast<std::size_t>(ctx.k - m), ctx.n - ctx.k);
    parts.insert(parts.end(), static_cast<std::size_t>(m), ctx.n - ctx.k - 1);
    return Partition(std::move(parts));
}

}  // namespace schubnef
