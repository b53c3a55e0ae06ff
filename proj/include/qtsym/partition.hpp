#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtsym {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition single(int n);  // (n), or empty for n = 0

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;                 // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition conjugate() const;
    // multiplicity of each part value, index 0 unused
    std::vector<int> multiplicities() const;
    // z_lambda = prod_i i^{m_i} m_i!
    unsigned long z() const;
    // n(lambda) = sum_i (i-1) lambda_i
    long n_stat() const;

    // Cells as (co-arm, co-leg) pairs: j-th row (0-based co-leg), i-th
    // column (0-based co-arm).
    struct Cell { int coarm; int coleg; };
    std::vector<Cell> cells() const;
    int arm(const Cell& c) const { return parts_[static_cast<std::size_t>(c.coleg)] - c.coarm - 1; }
    int leg(const Cell& c) const;

    // True when this is dominated by o (requires equal sizes).
    bool dominated_by(const Partition& o) const;
    // True when o's multiset of parts contains this one's.
    bool contained_as_multiset(const Partition& o) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // Total order: by size, then lexicographic descending within a size.
    bool operator<(const Partition& o) const;

    std::string dotted() const;   // "3.1", "0" for empty
    std::string dashed() const;   // "3-1", "0" for empty
    std::string bracketed() const;  // "[3,1]", "[]" for empty
    static Partition parse_dotted(const std::string& s);

private:
    std::vector<int> parts_;
};

// All partitions of n in the canonical order (lex descending: (n) first).
const std::vector<Partition>& partitions_of(int n);

// Union of parts, sorted decreasing.
Partition partition_union(const Partition& a, const Partition& b);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : p.parts()) { h ^= static_cast<std::uint64_t>(v); h *= 1099511628211ull; }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace qtsym
