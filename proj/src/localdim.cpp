#include "germ/localdim.hpp"

#include <algorithm>
#include <stdexcept>

namespace germ {

namespace {

// one elimination pass for a fixed window; returns quotient dimension
struct Echelon {
    std::vector<Mon> cols;
    std::map<std::pair<long, long>, int> col_index;
    std::vector<std::vector<Rat>> pivots;
    std::vector<int> pivot_of_col;

    void build(const std::vector<QPoly>& gens, long W) {
        cols.clear();
        col_index.clear();
        pivots.clear();
        for (long d = 0; d < W; ++d)
            for (long i = d; i >= 0; --i) {  // degree asc, x-exponent desc: local order, largest first
                col_index[{i, d - i}] = (int)cols.size();
                cols.push_back({i, d - i});
            }
        pivot_of_col.assign(cols.size(), -1);
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            long og = g.ord();
            for (long s = 0; s + og < W; ++s)
                for (long a = 0; a <= s; ++a) {
                    std::vector<Rat> row(cols.size());
                    bool nonzero = false;
                    for (const auto& [m, c] : g.terms()) {
                        Mon p{m.i + a, m.j + s - a};
                        if (p.deg() >= W) continue;
                        row[col_index[{p.i, p.j}]] += c;
                        nonzero = true;
                    }
                    if (nonzero) insert(std::move(row));
                }
        }
    }

    void strip(std::vector<Rat>& row) const {
        Int num = 0, den = 1;
        for (const auto& c : row) {
            if (c.is_zero()) continue;
            num = gcd(num, c.num());
            den = lcm(den, c.den());
        }
        if (num == 0) return;
        Rat s{Rat(den, num)};
        for (auto& c : row)
            if (!c.is_zero()) c *= s;
    }

    void insert(std::vector<Rat> row) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c].is_zero()) continue;
            int p = pivot_of_col[c];
            if (p < 0) {
                strip(row);
                pivot_of_col[c] = (int)pivots.size();
                pivots.push_back(std::move(row));
                return;
            }
            const auto& pr = pivots[p];
            Rat f = row[c] / pr[c];
            for (size_t k = c; k < row.size(); ++k)
                if (!pr[k].is_zero()) row[k] -= f * pr[k];
        }
    }

    long quotient_dim() const { return (long)cols.size() - (long)pivots.size(); }
};

}  // namespace

LocalIdealWindow analyze_local_ideal(const std::vector<QPoly>& gens, long max_window) {
    bool any = false;
    long min_ord = 0;
    for (const auto& g : gens)
        if (!g.is_zero()) {
            min_ord = any ? std::min(min_ord, g.ord()) : g.ord();
            any = true;
        }
    if (!any) throw std::domain_error("analyze_local_ideal: zero ideal");

    LocalIdealWindow out;
    Echelon ech;
    long prev_dim = -1;
    for (long W = std::max<long>(min_ord + 2, 3); W <= max_window; ++W) {
        ech.build(gens, W);
        long d = ech.quotient_dim();
        if (d == prev_dim) {
            out.finite_ = true;
            out.dim_ = d;
            out.window_ = W - 1;  // m^(W-1) certified inside the ideal
            out.cols_ = std::move(ech.cols);
            out.col_index_ = std::move(ech.col_index);
            out.pivot_rows_ = std::move(ech.pivots);
            out.pivot_of_col_ = std::move(ech.pivot_of_col);
            return out;
        }
        prev_dim = d;
    }
    out.finite_ = false;
    return out;
}

void LocalIdealWindow::reduce(std::vector<Rat>& row) const {
    for (size_t c = 0; c < row.size(); ++c) {
        if (row[c].is_zero()) continue;
        int p = pivot_of_col_[c];
        if (p < 0) continue;
        const auto& pr = pivot_rows_[p];
        Rat f = row[c] / pr[c];
        for (size_t k = c; k < row.size(); ++k)
            if (!pr[k].is_zero()) row[k] -= f * pr[k];
    }
}

bool LocalIdealWindow::contains_monomial(const Mon& m) const {
    if (!finite_) throw std::domain_error("LocalIdealWindow: not stabilized");
    if (m.deg() >= window_) return true;
    std::vector<Rat> row(cols_.size());
    row[col_index_.at({m.i, m.j})] = Rat(1);
    reduce(row);
    for (const auto& c : row)
        if (!c.is_zero()) return false;
    return true;
}

bool LocalIdealWindow::contains(const QPoly& f) const {
    if (!finite_) throw std::domain_error("LocalIdealWindow: not stabilized");
    std::vector<Rat> row(cols_.size());
    bool some = false;
    for (const auto& [m, c] : f.terms()) {
        if (m.deg() >= window_) continue;
        row[col_index_.at({m.i, m.j})] += c;
        some = true;
    }
    if (!some) return true;
    reduce(row);
    for (const auto& c : row)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<Mon> LocalIdealWindow::quotient_basis() const {
    if (!finite_) throw std::domain_error("LocalIdealWindow: not stabilized");
    std::vector<Mon> out;
    // a monomial is outside iff its reduction is nonzero; the non-pivot
    // columns of the echelon are exactly those
    for (size_t c = 0; c < cols_.size(); ++c)
        if (pivot_of_col_[c] < 0) out.push_back(cols_[c]);
    std::sort(out.begin(), out.end(), MonLess{});
    return out;
}

}  // namespace germ
