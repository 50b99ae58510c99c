#include "dessinlab/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>

namespace dessinlab::linalg {

namespace {

// Row-echelon accumulator: pivot column -> dense row normalized to a
// leading 1, with zeros in all earlier pivot columns.
struct Echelon {
    int columns;
    std::map<int, std::vector<mpq_class>> pivots;

    explicit Echelon(int cols) : columns(cols) {}

    // Reduces the row against all pivots; returns true if a new pivot was
    // added (the row was independent). Maintains full reduced echelon form.
    bool insert(std::vector<mpq_class> row) {
        for (const auto& [pc, prow] : pivots) {
            if (row[pc] != 0) {
                const mpq_class f = row[pc];
                for (int c = 0; c < columns; ++c) row[c] -= f * prow[c];
            }
        }
        int lead = -1;
        for (int c = 0; c < columns; ++c)
            if (row[c] != 0) { lead = c; break; }
        if (lead < 0) return false;
        const mpq_class inv = row[lead];
        for (auto& v : row) v /= inv;
        for (auto& [pc, prow] : pivots) {
            if (prow[lead] != 0) {
                const mpq_class f = prow[lead];
                for (int c = 0; c < columns; ++c) prow[c] -= f * row[c];
            }
        }
        pivots.emplace(lead, std::move(row));
        return true;
    }
};

std::vector<mpq_class> densify(const SparseRow& row, int columns) {
    std::vector<mpq_class> dense(columns, 0);
    for (const auto& [c, v] : row.entries) dense[c] += mpq_class(static_cast<long>(v));
    return dense;
}

} // namespace

int rank(const std::vector<SparseRow>& rows, int columns) {
    Echelon ech(columns);
    int r = 0;
    for (const auto& row : rows)
        if (ech.insert(densify(row, columns))) ++r;
    return r;
}

std::vector<std::vector<long long>> nullspace_basis(const std::vector<SparseRow>& rows,
                                                    int columns) {
    Echelon ech(columns);
    for (const auto& row : rows) ech.insert(densify(row, columns));

    std::vector<std::vector<long long>> basis;
    for (int free = 0; free < columns; ++free) {
        if (ech.pivots.count(free)) continue;
        // x[free] = 1, pivot variables read off the reduced rows.
        std::vector<mpq_class> x(columns, 0);
        x[free] = 1;
        for (const auto& [pc, prow] : ech.pivots) x[pc] = -prow[free];
        mpz_class scale = 1;
        for (const auto& v : x) scale = lcm(scale, v.get_den());
        mpz_class g = 0;
        std::vector<mpz_class> ints(columns);
        for (int c = 0; c < columns; ++c) {
            ints[c] = mpz_class(x[c] * scale);
            g = gcd(g, ints[c]);
        }
        if (g == 0) g = 1;
        std::vector<long long> out(columns);
        for (int c = 0; c < columns; ++c) out[c] = mpz_class(ints[c] / g).get_si();
        basis.push_back(std::move(out));
    }
    return basis;
}

} // namespace dessinlab::linalg
