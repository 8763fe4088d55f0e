#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace qvertex {

/// Weakly decreasing list of positive parts; the empty list is (0).
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; throws unless the parts are weakly decreasing.
    Partition(std::vector<int> parts);  // NOLINT(google-explicit-constructor)
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// "3,1"; "" and "0" give the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    /// Row i (0-based); 0 beyond the length.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition conjugate() const;
    /// sum_i mu_i (mu_i - 2i + 1), i counted from 1.
    int kappa() const;
    /// Hook lengths of all cells, row by row.
    std::vector<int> hooks() const;
    /// Contents j - i of all cells, row by row.
    std::vector<int> contents() const;
    /// True when other fits inside this diagram.
    bool contains(const Partition& other) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// All partitions of n in reverse-lex order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);
/// Every partition of weight <= max_weight, weight-major, reverse-lex within.
std::vector<Partition> enumerate(int max_weight);
/// Partitions contained in mu (all sub-diagrams), weight-major.
std::vector<Partition> subpartitions(const Partition& mu);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace qvertex
