#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "mlr/errors.hpp"

namespace mlr {

// Weakly decreasing positive parts; trailing zeros are dropped on construction.
class Partition {
public:
    Partition() = default;
    // Raises InvalidPartition on negative or increasing parts.
    Partition(std::vector<int> parts);  // NOLINT
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    // 1-based; 0 beyond the length.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
    // Parts padded with zeros to length n (n >= length()).
    std::vector<int> padded(int n) const;
    bool contains(int row, int col) const { return col >= 1 && row >= 1 && col <= (*this)[row]; }

    std::string to_string() const;  // "5,4,4,3"; "" for the empty partition

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

using Composition = std::vector<int>;

struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

Partition conjugate(const Partition& lambda);

struct ArmLeg {
    int arm = 0;
    int leg = 0;
};
ArmLeg arm_leg(const Partition& lambda, Cell s);  // raises CellOutsideShape

bool contains(const Partition& outer, const Partition& inner);

// Every prefix sum of chi is at least that of rho; raises SizeMismatch.
bool dominance_leq(const Partition& rho, const Partition& chi);

enum class StripType { not_contained, vertical, horizontal, both, neither };
StripType strip_type(const Partition& lambda, const Partition& nu);
bool is_vertical_strip(const Partition& lambda, const Partition& nu);
bool is_horizontal_strip(const Partition& lambda, const Partition& nu);
const char* to_string(StripType s);

// Cells of nu / lambda in row-major order; lambda must be contained in nu.
std::vector<Cell> skew_cells(const Partition& lambda, const Partition& nu);
std::vector<Cell> cells(const Partition& lambda);

// Partitions of n, in reverse lexicographic order (which refines dominance).
std::vector<Partition> partitions_of(int n, int max_parts = -1, int max_part = -1);
// Partitions fitting in a rows x cols box, any size.
std::vector<Partition> partitions_in_box(int rows, int cols);
// Compositions of n with exactly k (possibly zero) entries.
std::vector<Composition> compositions_of(int n, int k);

// Accepts "5,4,4,3", "" and "0"; raises ParseError.
Partition parse_partition(const std::string& text);
// Accepts comma-separated nonnegative integers; raises ParseError.
Composition parse_composition(const std::string& text);
std::string composition_to_string(const Composition& c);

// nu_i - lambda_i for i = 1..n.
Composition difference(const Partition& nu, const Partition& lambda, int n);
// lambda + chi entrywise when the result is a partition.
bool sum_is_partition(const Partition& lambda, const Composition& chi);
Partition add(const Partition& lambda, const Composition& chi);  // raises InvalidPartition

}  // namespace mlr
