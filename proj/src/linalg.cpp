#include "tmdim/linalg.hpp"

#include <algorithm>

namespace tmdim {

namespace {

void remove_content(SparseRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- a*row - b*piv, with a = piv lead / g, b = row lead / g
SparseRow eliminate(const SparseRow& row, const SparseRow& piv) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), piv.front().second.get_mpz_t());
    mpz_class a = piv.front().second / g;
    mpz_class b = row.front().second / g;
    SparseRow out;
    out.reserve(row.size() + piv.size());
    size_t i = 1, j = 1;
    mpz_class t;
    while (i < row.size() || j < piv.size()) {
        if (j >= piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i >= row.size() || piv[j].first < row[i].first) {
            out.emplace_back(piv[j].first, -b * piv[j].second);
            ++j;
        } else {
            t = a * row[i].second - b * piv[j].second;
            if (t != 0) out.emplace_back(row[i].first, t);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseRow make_sparse(const std::vector<mpz_class>& dense) {
    SparseRow r;
    for (size_t c = 0; c < dense.size(); ++c)
        if (dense[c] != 0) r.emplace_back(static_cast<int>(c), dense[c]);
    return r;
}

bool IntegerEchelon::add(SparseRow row) {
    remove_content(row);
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            pivots_.emplace(row.front().first, std::move(row));
            return true;
        }
        row = eliminate(row, it->second);
        remove_content(row);
    }
    return false;
}

int sparse_rank(std::vector<SparseRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) {
        int la = a.empty() ? 1 << 30 : a.front().first;
        int lb = b.empty() ? 1 << 30 : b.front().first;
        if (la != lb) return la < lb;
        return a.size() < b.size();
    });
    IntegerEchelon ech;
    for (auto& r : rows)
        if (!r.empty()) ech.add(std::move(r));
    return ech.rank();
}

int dense_rank_bareiss(std::vector<std::vector<mpz_class>> a) {
    if (a.empty()) return 0;
    const size_t n = a.size(), m = a[0].size();
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < m && r < n; ++c) {
        size_t p = r;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[r]);
        for (size_t i = r + 1; i < n; ++i) {
            for (size_t j = c + 1; j < m; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a) {
    std::vector<mpz_class> out;
    const size_t n = a.size();
    const size_t m = n ? a[0].size() : 0;
    size_t t = 0;
    while (t < n && t < m) {
        // smallest nonzero magnitude in the remaining block becomes the pivot
        size_t pi = n, pj = m;
        for (size_t i = t; i < n; ++i)
            for (size_t j = t; j < m; ++j)
                if (a[i][j] != 0 && (pi == n || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == n) break;
        std::swap(a[t], a[pi]);
        for (auto& row : a) std::swap(row[t], row[pj]);
        bool clean = true;
        for (size_t i = t + 1; i < n; ++i) {
            if (a[i][t] == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
            for (size_t j = t; j < m; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < m; ++j) {
            if (a[t][j] == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
            for (size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility condition d_t | every remaining entry
        bool divides = true;
        for (size_t i = t + 1; i < n && divides; ++i)
            for (size_t j = t + 1; j < m; ++j)
                if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                    for (size_t k = t; k < m; ++k) a[t][k] += a[i][k];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        out.push_back(abs(a[t][t]));
        ++t;
    }
    return out;
}

}  // namespace tmdim
