#include "segdet/schubert.hpp"

#include <map>
#include <utility>

#include "segdet/error.hpp"

namespace segdet {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw DomainError("bad_partition", "parts must be weakly decreasing");
    for (int v : parts)
        if (v < 0) throw DomainError("bad_partition", "parts must be nonnegative");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

int Partition::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

bool fits(const Partition& p, const BoxShape& box) {
    return p.rows() <= box.rows && (p.parts.empty() || p.parts.front() <= box.cols);
}

Partition box_complement(const Partition& p, const BoxShape& box) {
    if (!fits(p, box)) throw DomainError("fit", "partition does not fit in the box");
    std::vector<int> out(box.rows);
    for (int i = 0; i < box.rows; ++i) out[i] = box.cols - p.part(box.rows - 1 - i);
    return Partition(std::move(out));
}

namespace {

// Count fillings column by column. The state is the previous column's
// entries; the next column must be strictly increasing down and entrywise
// >= the previous column in the shared rows.
long long count_columns(const std::vector<int>& heights, std::size_t col,
                        const std::vector<int>& prev, int max_entry,
                        std::map<std::pair<std::size_t, std::vector<int>>, long long>& memo) {
    if (col == heights.size()) return 1;
    auto key = std::make_pair(col, prev);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int h = heights[col];
    long long total = 0;
    std::vector<int> entries(h);
    auto rec = [&](auto&& self, int row) -> void {
        if (row == h) {
            total += count_columns(heights, col + 1, entries, max_entry, memo);
            return;
        }
        int lo = row == 0 ? 1 : entries[row - 1] + 1;           // strict in the column
        if (row < static_cast<int>(prev.size()) && prev[row] > lo) lo = prev[row];  // weak in the row
        for (int v = lo; v <= max_entry; ++v) {
            entries[row] = v;
            self(self, row + 1);
        }
    };
    rec(rec, 0);
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long ssyt_count(const Partition& shape, int max_entry) {
    if (shape.parts.empty()) return 1;
    if (shape.rows() > max_entry) return 0;
    std::vector<int> heights(shape.parts.front());
    for (int c = 0; c < shape.parts.front(); ++c) {
        int h = 0;
        while (h < shape.rows() && shape.parts[h] > c) ++h;
        heights[c] = h;
    }
    std::map<std::pair<std::size_t, std::vector<int>>, long long> memo;
    return count_columns(heights, 0, {}, max_entry, memo);
}

static long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

long long klyachko_delta(const Partition& lambda, int k, int n) {
    const BoxShape box{k, n - k};
    if (!fits(lambda, box))
        throw DomainError("fit", "partition does not fit in the k x (n-k) box");
    const Partition comp = box_complement(lambda, box);
    long long total = 0;
    for (int i = 0; i <= k; ++i) {
        const long long term = binomial(n, i) * ssyt_count(comp, k - i);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

long long chow_lam_degree_uniform(int k, int n, int r) {
    if (k < 1 || r < k || r > n)
        throw DomainError("parameter", "need 1 <= k <= r <= n");
    std::vector<int> alpha(static_cast<std::size_t>(k), n - r);
    alpha[0] = n - r + 1;
    return klyachko_delta(Partition(std::move(alpha)), k, n);
}

}  // namespace segdet
