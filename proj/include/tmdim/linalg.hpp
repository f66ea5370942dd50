#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace tmdim {

// sorted by column, no explicit zeros
using SparseRow = std::vector<std::pair<int, mpz_class>>;

SparseRow make_sparse(const std::vector<mpz_class>& dense);

// Incremental row echelon over Z. Each inserted row is reduced fraction-free
// against the pivots (lead column -> row) and, if something survives, becomes a
// new pivot after dividing out its content.
class IntegerEchelon {
public:
    // returns true if the row increased the rank
    bool add(SparseRow row);
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::map<int, SparseRow> pivots_;
};

int sparse_rank(std::vector<SparseRow> rows);

// Bareiss elimination on a dense copy; used as an independent cross-check
int dense_rank_bareiss(std::vector<std::vector<mpz_class>> a);

// nonzero invariant factors of the Smith normal form
std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a);

}  // namespace tmdim
