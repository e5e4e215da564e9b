#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mlr/partitions.hpp"

namespace mlr {

// Semistandard tableau stored column-major: columns()[c] lists column c+1
// top to bottom. Constructors validate and raise InvalidTableau.
class Tableau {
public:
    Tableau() = default;
    static Tableau from_rows(const std::vector<std::vector<int>>& rows);
    static Tableau from_columns(const std::vector<std::vector<int>>& columns);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& columns() const { return columns_; }
    std::vector<std::vector<int>> rows() const;
    int max_entry() const;
    // Multiplicities of 1..n; n defaults to max_entry().
    Composition weight(int n = -1) const;
    bool is_rectangular() const;
    bool empty() const { return columns_.empty(); }
    std::string render() const;  // aligned rows, one line per row

    auto operator<=>(const Tableau& o) const { return columns_ <=> o.columns_; }
    bool operator==(const Tableau& o) const { return columns_ == o.columns_; }

private:
    Partition shape_;
    std::vector<std::vector<int>> columns_;
};

// All SSYT of shape mu and weight chi (entries 1..len(chi)), in
// column-lexicographic order. With a cap, stops after cap + 1 tableaux.
// Raises SizeMismatch when |mu| != sum(chi).
std::vector<Tableau> enumerate_ssyt(const Partition& mu, const Composition& chi,
                                    std::optional<int> cap = std::nullopt);
long kostka(const Partition& mu, const Composition& chi);

struct UniqueResult {
    enum class Status { zero, one, many } status = Status::zero;
    std::optional<Tableau> tableau;
};
UniqueResult unique_ssyt(const Partition& mu, const Composition& chi);
const char* to_string(UniqueResult::Status s);

// Each later column is an earlier one with at most one value changed, or a subset of it.
bool is_unique_by_columns(const Tableau& T);

enum class BlockKind { first, second, third };
const char* to_string(BlockKind k);
// Raises NotUniqueBlock when no kind applies or cardinalities differ.
std::set<BlockKind> classify_block(const std::vector<std::vector<int>>& column_sets);

// Maximal runs of equal-height columns, each as a rectangular tableau.
std::vector<Tableau> rectangular_blocks(const Tableau& T);

Tableau intrinsic(const Tableau& T);   // raises NotRectangular
Tableau complement(const Tableau& T);  // raises NotRectangular, WrongKind
// (N - lambda_l, ..., N - lambda_1) with l = T.max_entry(); raises NTooSmall.
Partition reversal(const Partition& lambda, const Tableau& T, int N);
Partition reversal(const Partition& lambda, int l, int N);

// Filling of nu / lambda; rows[i] holds the entries of row i+1 left to right.
struct SkewTableau {
    Partition outer;
    Partition inner;
    std::vector<std::vector<int>> rows;
    auto operator<=>(const SkewTableau&) const = default;
};

// Right-to-left along rows, top to bottom.
std::vector<int> reading_word(const SkewTableau& T);
bool is_lattice_word(const std::vector<int>& w);

std::vector<SkewTableau> lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu);
long lr_coefficient_schur(const Partition& lambda, const Partition& mu, const Partition& nu);

// rows[j-1] = (mu^j_1, ..., mu^j_j) for j = 1..n.
struct GTPattern {
    std::vector<std::vector<int>> rows;
    bool interlaces() const;
    auto operator<=>(const GTPattern&) const = default;
};

GTPattern lr_to_gt(const SkewTableau& T);  // raises NotLatticeWord
// The SSYT whose entries j fill mu^j / mu^{j-1}.
Tableau gt_to_tableau(const GTPattern& g);

}  // namespace mlr
