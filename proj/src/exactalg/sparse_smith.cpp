#include "telescoped/exactalg/smith.hpp"

#include <limits>
#include <map>
#include <set>

namespace telescoped {

namespace {

using Entry = std::pair<Eigen::Index, BigInt>;
using Row = std::vector<Entry>;  // sorted by column, no zeros

// r - f * p, merged by column.
Row subtract_multiple(const Row& r, const BigInt& f, const Row& p)
{
    Row out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -f * p[j].second);
            ++j;
        } else {
            BigInt v = r[i].second - f * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::vector<BigInt> nonzero_invariant_factors(const IntMatrix& a)
{
    const auto nrows = static_cast<std::size_t>(a.rows());
    std::vector<Row> rows(nrows);
    std::vector<std::set<std::size_t>> col_rows(static_cast<std::size_t>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) {
                rows[static_cast<std::size_t>(i)].emplace_back(j, a(i, j));
                col_rows[static_cast<std::size_t>(j)].insert(static_cast<std::size_t>(i));
            }

    std::size_t units = 0;
    for (;;) {
        // Unit pivot with the smallest Markowitz cost.
        std::size_t best_row = nrows, best_cost = std::numeric_limits<std::size_t>::max();
        Eigen::Index best_col = -1;
        for (std::size_t r = 0; r < nrows && best_cost > 0; ++r) {
            for (const auto& [c, v] : rows[r]) {
                if (v != 1 && v != -1) continue;
                const std::size_t cost = (rows[r].size() - 1) * (col_rows[static_cast<std::size_t>(c)].size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = r;
                    best_col = c;
                }
            }
        }
        if (best_row == nrows) break;

        Row pivot = std::move(rows[best_row]);
        rows[best_row].clear();
        for (const auto& e : pivot) col_rows[static_cast<std::size_t>(e.first)].erase(best_row);
        BigInt sign = 0;
        for (const auto& e : pivot)
            if (e.first == best_col) sign = e.second;
        const std::vector<std::size_t> others(col_rows[static_cast<std::size_t>(best_col)].begin(),
                                              col_rows[static_cast<std::size_t>(best_col)].end());
        for (std::size_t r : others) {
            BigInt f = 0;
            for (const auto& e : rows[r])
                if (e.first == best_col) f = e.second * sign;
            for (const auto& e : rows[r]) col_rows[static_cast<std::size_t>(e.first)].erase(r);
            rows[r] = subtract_multiple(rows[r], f, pivot);
            for (const auto& e : rows[r]) col_rows[static_cast<std::size_t>(e.first)].insert(r);
        }
        // Column operations clear the rest of the pivot row without touching
        // the other rows, whose pivot-column entries are now zero.
        ++units;
    }

    // Dense Smith form of what is left.
    std::vector<std::size_t> live_rows;
    std::map<Eigen::Index, Eigen::Index> live_cols;
    for (std::size_t r = 0; r < nrows; ++r)
        if (!rows[r].empty()) {
            live_rows.push_back(r);
            for (const auto& e : rows[r]) live_cols.emplace(e.first, 0);
        }
    Eigen::Index k = 0;
    for (auto& [c, idx] : live_cols) idx = k++;
    IntMatrix rest = IntMatrix::Zero(static_cast<Eigen::Index>(live_rows.size()), k);
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : rows[live_rows[i]]) rest(static_cast<Eigen::Index>(i), live_cols[c]) = v;

    std::vector<BigInt> out(units, BigInt(1));
    if (rest.size() > 0)
        for (auto& d : smith_invariants(rest))
            if (d != 0) out.push_back(std::move(d));
    return out;
}

}  // namespace telescoped
