#include "schubnef/combinat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace schubnef {

Int binom_comb(long long a, long long b) {
    if (a < 0 || b < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    Int result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;  // exact: i consecutive integers contain a multiple of i
    }
    return result;
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

namespace {

void enumerate_bounded(int rows_left, int max_part, int weight, std::vector<int>& acc,
                       std::vector<Partition>& out) {
    if (weight == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0) return;
    const int hi = std::min(max_part, weight);
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long long>(p) * rows_left < weight) break;
        acc.push_back(p);
        enumerate_bounded(rows_left - 1, p, weight - p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box_of_weight(const BoxConstraint& box, int weight) {
    std::vector<Partition> out;
    if (weight < 0 || weight > box.rows * box.cols) return out;
    std::vector<int> acc;
    enumerate_bounded(box.rows, box.cols, weight, acc, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                            b.parts().begin(), b.parts().end());
    });
    return out;
}

std::vector<Partition> partitions_in_box(const BoxConstraint& box) {
    std::vector<Partition> out;
    for (int w = 0; w <= box.rows * box.cols; ++w) {
        auto layer = partitions_in_box_of_weight(box, w);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

namespace {

// One skew cell, listed in reverse reading order: rows top to bottom,
// right to left within each row. That order IS the reverse reading word,
// so the ballot condition can be maintained incrementally while filling.
struct SkewCell {
    int row;
    int col;
    bool has_right;  // cell (row, col+1) is also a skew cell (filled earlier)
    bool has_above;  // cell (row-1, col) is also a skew cell
};

struct LrProblem {
    std::vector<SkewCell> cells;
    std::vector<int> content;                // nu parts
    std::vector<std::vector<int>> value;     // value[row][col], 0 = unset
    std::vector<int> placed;                 // count of each entry placed so far

    Int count = 0;

    void fill(std::size_t cell_index) {
        if (cell_index == cells.size()) {
            ++count;
            return;
        }
        const SkewCell& c = cells[cell_index];
        const int row_cap = c.has_right ? value[c.row][c.col + 1]
                                        : static_cast<int>(content.size());
        const int col_floor = c.has_above ? value[c.row - 1][c.col] : 0;
        for (int v = col_floor + 1; v <= row_cap; ++v) {
            const std::size_t vi = static_cast<std::size_t>(v - 1);
            if (placed[vi] >= content[vi]) continue;           // content bound
            if (v > 1 && placed[vi] >= placed[vi - 1]) continue;  // ballot
            value[c.row][c.col] = v;
            ++placed[vi];
            fill(cell_index + 1);
            --placed[vi];
            value[c.row][c.col] = 0;
        }
    }
};

Int count_lr_tableaux(const Partition& lambda, const Partition& nu, const Partition& mu) {
    LrProblem pr;
    pr.content = nu.parts();
    pr.value.resize(static_cast<std::size_t>(mu.length()));
    for (int i = 0; i < mu.length(); ++i)
        pr.value[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(mu.part(i)), 0);
    for (int i = 0; i < mu.length(); ++i) {
        const int lo = lambda.part(i);
        for (int j = mu.part(i) - 1; j >= lo; --j) {
            SkewCell c;
            c.row = i;
            c.col = j;
            c.has_right = (j + 1 < mu.part(i));
            c.has_above = (i > 0 && j >= lambda.part(i - 1) && j < mu.part(i - 1));
            pr.cells.push_back(c);
        }
    }
    pr.placed.assign(pr.content.size(), 0);
    pr.fill(0);
    return pr.count;
}

using LrKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

std::map<LrKey, Int>& lr_cache() {
    static std::map<LrKey, Int> cache;
    return cache;
}

std::mutex& lr_cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu) {
    if (!mu.contains(lambda)) return 0;
    if (mu.weight() != lambda.weight() + nu.weight()) return 0;
    if (nu.empty()) return 1;  // mu == lambda by the two checks above

    LrKey key{lambda.parts(), nu.parts(), mu.parts()};
    {
        std::lock_guard<std::mutex> lock(lr_cache_mutex());
        auto it = lr_cache().find(key);
        if (it != lr_cache().end()) return it->second;
    }
    Int result = count_lr_tableaux(lambda, nu, mu);
    {
        std::lock_guard<std::mutex> lock(lr_cache_mutex());
        lr_cache().emplace(std::move(key), result);
    }
    return result;
}

}  // namespace schubnef
