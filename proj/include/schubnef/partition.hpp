#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace schubnef {

/// A Young diagram: weakly decreasing positive parts, trailing zeros trimmed.
/// The empty sequence is the zero partition; this canonical form makes
/// equality and ordering structural.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    static Partition row(int p);     // (p); empty when p == 0
    static Partition column(int p);  // (1^p); empty when p == 0

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;  // zero-indexed; 0 beyond the stored length
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// inner[i] <= this[i] for every row.
    bool contains(const Partition& inner) const;

    bool operator==(const Partition&) const = default;

    std::string to_string() const;  // "[2,1]", "[]"

private:
    std::vector<int> parts_;
};

/// Ambient k x (n-k) box: a partition lives in H^*(G(k,n)) iff it has at
/// most `rows` parts, each at most `cols`.
struct BoxConstraint {
    int rows;
    int cols;
    BoxConstraint(int rows, int cols);
    bool admits(const Partition& p) const;
};

/// Deterministic total order on partitions: by weight, then lexicographic
/// on the part sequences. Fixes basis enumeration and JSON output.
struct GradedLexLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

Partition conjugate(const Partition& p);

/// outer/inner has at most one cell per column.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);
/// outer/inner has at most one cell per row.
bool is_vertical_strip(const Partition& outer, const Partition& inner);

}  // namespace schubnef
