#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qspin/core.hpp"

namespace qspin {

/// An integer partition, stored as a weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;

    /// Parts may be given in any order; they are sorted. Throws on parts < 1.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Builds (1^{m_1} 2^{m_2} ...) from (part, multiplicity) pairs.
    static Partition from_multiplicities(const std::vector<std::pair<int, int>>& mults);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// (part, multiplicity) pairs in increasing part order.
    std::vector<std::pair<int, int>> multiplicities() const;
    int multiplicity(int part) const;

    bool is_strict() const;
    bool is_odd() const;

    /// Multiset union of the parts.
    Partition merged(const Partition& other) const;

    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

enum class PartitionKind { all, strict, odd };

bool matches(const Partition& p, PartitionKind kind);

/// Partitions of n of the given kind in reverse-lexicographic order, (n) first.
std::vector<Partition> enumerate(int n, PartitionKind kind);
void for_each_partition(int n, PartitionKind kind, const std::function<void(const Partition&)>& visit);

/// z_lambda = prod_i i^{m_i} m_i!
Integer z_of(const Partition& p);

/// Ordered set of label names. Copies share storage.
class LabelSet {
public:
    LabelSet();
    explicit LabelSet(std::vector<std::string> names);

    /// The one-label set {"c0"} used for the uncolored case.
    static LabelSet singleton();

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t index) const;
    const std::vector<std::string>& names() const { return *names_; }

    /// Throws Error naming the label if it is absent.
    std::size_t index_of(const std::string& name) const;

    friend bool operator==(const LabelSet& a, const LabelSet& b);

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// A partition-valued function on a finite label set, keyed by label index.
///
/// Canonical form keeps entries sorted by label and omits empty partitions, so
/// structural equality is equality of functions.
class LabeledPartitionFn {
public:
    using Entry = std::pair<std::size_t, Partition>;

    LabeledPartitionFn() = default;

    static LabeledPartitionFn single(std::size_t label, Partition p);
    /// Labels must be distinct; empty partitions are dropped.
    static LabeledPartitionFn from_entries(std::vector<Entry> entries);
    static LabeledPartitionFn from_named(const LabelSet& labels,
                                         const std::vector<std::pair<std::string, Partition>>& named);

    const std::vector<Entry>& entries() const { return entries_; }
    const Partition& at(std::size_t label) const;
    bool empty() const { return entries_.empty(); }

    int total_weight() const;
    std::size_t total_length() const;
    bool is_odd() const;
    bool is_strict() const;
    bool matches(PartitionKind kind) const;

    /// Entrywise multiset union (rho u tau).
    LabeledPartitionFn disjoint_union(const LabeledPartitionFn& other) const;
    /// Entrywise multiset difference; throws if `sub` is not contained in *this.
    LabeledPartitionFn difference(const LabeledPartitionFn& sub) const;

    std::string str(const LabelSet& labels) const;

    friend auto operator<=>(const LabeledPartitionFn&, const LabeledPartitionFn&) = default;
    friend bool operator==(const LabeledPartitionFn&, const LabeledPartitionFn&) = default;

private:
    std::vector<Entry> entries_;
};

/// Partition-valued functions with total weight n over `label_count` labels.
/// Order: weight on label 0 descending, then reverse-lex on each label in turn.
std::vector<LabeledPartitionFn> enumerate(int n, PartitionKind kind, const LabelSet& labels);
void for_each_labeled(int n, PartitionKind kind, std::size_t label_count,
                      const std::function<void(const LabeledPartitionFn&)>& visit);

/// (|OP_n(L)|, |SP_n(L)|), counted by enumeration.
std::pair<Integer, Integer> count_identity_check(int n, const LabelSet& labels);

class GroupData;

/// Z_rho = 2^{l(rho)} prod_c z_{rho(c)} zeta_c^{l(rho(c))}.
Integer Z_of(const LabeledPartitionFn& rho, const GroupData& group);

} // namespace qspin
