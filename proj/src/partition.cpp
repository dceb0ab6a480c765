#include "schubnef/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubnef {

namespace {

std::vector<int> validated(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("Partition: parts must be nonnegative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : parts_(validated(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(validated(std::move(parts))) {}

Partition Partition::row(int p) {
    if (p < 0) throw std::invalid_argument("Partition::row: negative size");
    return p == 0 ? Partition() : Partition{p};
}

Partition Partition::column(int p) {
    if (p < 0) throw std::invalid_argument("Partition::column: negative size");
    return Partition(std::vector<int>(static_cast<std::size_t>(p), 1));
}

int Partition::part(int i) const {
    if (i < 0) throw std::invalid_argument("Partition::part: negative index");
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

BoxConstraint::BoxConstraint(int rows_, int cols_) : rows(rows_), cols(cols_) {
    if (rows < 1) throw std::invalid_argument("BoxConstraint: rows must be positive");
    if (cols < 0) throw std::invalid_argument("BoxConstraint: cols must be nonnegative");
}

bool BoxConstraint::admits(const Partition& p) const {
    return p.length() <= rows && p.part(0) <= cols;
}

bool GradedLexLess::operator()(const Partition& a, const Partition& b) const {
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                        b.parts().begin(), b.parts().end());
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(p.part(0)), 0);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    // no two cells in one column: row i+1 of outer may not overhang row i of inner
    for (int i = 0; i + 1 < outer.length(); ++i)
        if (outer.part(i + 1) > inner.part(i)) return false;
    return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int i = 0; i < outer.length(); ++i)
        if (outer.part(i) - inner.part(i) > 1) return false;
    return true;
}

}  // namespace schubnef
