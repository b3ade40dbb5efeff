#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tv {

// Integer partition, weakly decreasing positive parts.  The empty partition
// is the default-constructed object.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses "3,1" / "3 1" / "" (empty partition).  Throws on bad input.
    static Partition parse(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;                 // number of boxes
    int part(int i) const;            // 1-based, 0 beyond the length
    Partition conjugate() const;
    long kappa() const;               // sum lam_i*(lam_i - 2i + 1); always even
    bool contains(const Partition& other) const;   // containment of diagrams
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;    // "3,1"; "" for empty

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of exactly n, in lexicographically decreasing part order.
std::vector<Partition> partitions_of(int n);

// All partitions of size 0..n, ordered by size then as partitions_of.
std::vector<Partition> partitions_up_to(int n);

// All sub-diagrams of lam (partitions contained in lam).
std::vector<Partition> subpartitions(const Partition& lam);

// Pointwise minimum of the two diagrams (their intersection).
Partition intersect(const Partition& a, const Partition& b);

}  // namespace tv
