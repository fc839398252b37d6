#include "qspin/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "qspin/group_data.hpp"

namespace qspin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 1)
            throw Error("partition parts must be positive, got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_multiplicities(const std::vector<std::pair<int, int>>& mults)
{
    std::vector<int> parts;
    for (auto [part, m] : mults) {
        if (m < 0)
            throw Error("negative multiplicity");
        parts.insert(parts.end(), static_cast<std::size_t>(m), part);
    }
    return Partition(std::move(parts));
}

int Partition::weight() const
{
    int w = 0;
    for (int p : parts_)
        w += p;
    return w;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const
{
    std::vector<std::pair<int, int>> out;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (!out.empty() && out.back().first == *it)
            ++out.back().second;
        else
            out.emplace_back(*it, 1);
    }
    return out;
}

int Partition::multiplicity(int part) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::is_strict() const
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_odd() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

Partition Partition::merged(const Partition& other) const
{
    Partition out;
    out.parts_.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out.parts_), std::greater<>());
    return out;
}

std::string Partition::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

bool matches(const Partition& p, PartitionKind kind)
{
    switch (kind) {
    case PartitionKind::all:
        return true;
    case PartitionKind::strict:
        return p.is_strict();
    case PartitionKind::odd:
        return p.is_odd();
    }
    return false;
}

namespace {

// Recursive generator in reverse-lex order: the largest admissible first part first.
void generate(int remaining, int max_part, PartitionKind kind, std::vector<int>& prefix,
              const std::function<void(const Partition&)>& visit)
{
    if (remaining == 0) {
        visit(Partition(prefix));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (kind == PartitionKind::odd && part % 2 == 0)
            continue;
        prefix.push_back(part);
        int next_max = kind == PartitionKind::strict ? part - 1 : part;
        generate(remaining - part, next_max, kind, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

void for_each_partition(int n, PartitionKind kind, const std::function<void(const Partition&)>& visit)
{
    if (n < 0)
        throw Error("cannot enumerate partitions of a negative integer");
    std::vector<int> prefix;
    generate(n, n, kind, prefix, visit);
}

std::vector<Partition> enumerate(int n, PartitionKind kind)
{
    std::vector<Partition> out;
    for_each_partition(n, kind, [&](const Partition& p) { out.push_back(p); });
    return out;
}

Integer z_of(const Partition& p)
{
    Integer z = 1;
    for (auto [part, m] : p.multiplicities())
        z *= ipow(Integer(part), static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(m));
    return z;
}

LabelSet::LabelSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

LabelSet::LabelSet(std::vector<std::string> names)
{
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("duplicate label in label set");
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

LabelSet LabelSet::singleton()
{
    static const LabelSet single(std::vector<std::string>{"c0"});
    return single;
}

const std::string& LabelSet::name(std::size_t index) const
{
    if (index >= names_->size())
        throw Error("label index " + std::to_string(index) + " out of range");
    return (*names_)[index];
}

std::size_t LabelSet::index_of(const std::string& name) const
{
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end())
        throw Error("unknown label '" + name + "'");
    return static_cast<std::size_t>(it - names_->begin());
}

bool operator==(const LabelSet& a, const LabelSet& b)
{
    return a.names_ == b.names_ || *a.names_ == *b.names_;
}

LabeledPartitionFn LabeledPartitionFn::single(std::size_t label, Partition p)
{
    LabeledPartitionFn out;
    if (!p.empty())
        out.entries_.emplace_back(label, std::move(p));
    return out;
}

LabeledPartitionFn LabeledPartitionFn::from_entries(std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw Error("label " + std::to_string(entries[i].first) + " assigned twice");
    LabeledPartitionFn out;
    for (auto& e : entries)
        if (!e.second.empty())
            out.entries_.push_back(std::move(e));
    return out;
}

LabeledPartitionFn LabeledPartitionFn::from_named(const LabelSet& labels,
                                                  const std::vector<std::pair<std::string, Partition>>& named)
{
    std::vector<Entry> entries;
    for (const auto& [name, p] : named)
        entries.emplace_back(labels.index_of(name), p);
    return from_entries(std::move(entries));
}

const Partition& LabeledPartitionFn::at(std::size_t label) const
{
    static const Partition empty;
    for (const auto& [l, p] : entries_)
        if (l == label)
            return p;
    return empty;
}

int LabeledPartitionFn::total_weight() const
{
    int w = 0;
    for (const auto& e : entries_)
        w += e.second.weight();
    return w;
}

std::size_t LabeledPartitionFn::total_length() const
{
    std::size_t l = 0;
    for (const auto& e : entries_)
        l += e.second.length();
    return l;
}

bool LabeledPartitionFn::is_odd() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second.is_odd(); });
}

bool LabeledPartitionFn::is_strict() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second.is_strict(); });
}

bool LabeledPartitionFn::matches(PartitionKind kind) const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [kind](const Entry& e) { return qspin::matches(e.second, kind); });
}

LabeledPartitionFn LabeledPartitionFn::disjoint_union(const LabeledPartitionFn& other) const
{
    LabeledPartitionFn out;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            out.entries_.push_back(*b++);
        } else {
            out.entries_.emplace_back(a->first, a->second.merged(b->second));
            ++a;
            ++b;
        }
    }
    return out;
}

LabeledPartitionFn LabeledPartitionFn::difference(const LabeledPartitionFn& sub) const
{
    std::vector<Entry> out;
    for (const auto& [label, p] : entries_) {
        std::vector<int> parts = p.parts();
        for (int part : sub.at(label).parts()) {
            auto it = std::find(parts.begin(), parts.end(), part);
            if (it == parts.end())
                throw Error("partition difference: not a sub-multiset");
            parts.erase(it);
        }
        out.emplace_back(label, Partition(std::move(parts)));
    }
    for (const auto& [label, p] : sub.entries_)
        if (at(label).empty() && !p.empty())
            throw Error("partition difference: not a sub-multiset");
    return from_entries(std::move(out));
}

std::string LabeledPartitionFn::str(const LabelSet& labels) const
{
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ", ";
        out += labels.name(entries_[i].first) + ":" + entries_[i].second.str();
    }
    return out + "}";
}

namespace {

void generate_labeled(int remaining, std::size_t label, std::size_t label_count, PartitionKind kind,
                      std::vector<LabeledPartitionFn::Entry>& prefix,
                      const std::function<void(const LabeledPartitionFn&)>& visit)
{
    if (label + 1 == label_count) {
        for_each_partition(remaining, kind, [&](const Partition& p) {
            prefix.emplace_back(label, p);
            visit(LabeledPartitionFn::from_entries(prefix));
            prefix.pop_back();
        });
        return;
    }
    for (int w = remaining; w >= 0; --w) {
        for_each_partition(w, kind, [&](const Partition& p) {
            prefix.emplace_back(label, p);
            generate_labeled(remaining - w, label + 1, label_count, kind, prefix, visit);
            prefix.pop_back();
        });
    }
}

} // namespace

void for_each_labeled(int n, PartitionKind kind, std::size_t label_count,
                      const std::function<void(const LabeledPartitionFn&)>& visit)
{
    if (n < 0)
        throw Error("cannot enumerate partitions of a negative integer");
    if (label_count == 0) {
        if (n == 0)
            visit(LabeledPartitionFn());
        return;
    }
    std::vector<LabeledPartitionFn::Entry> prefix;
    generate_labeled(n, 0, label_count, kind, prefix, visit);
}

std::vector<LabeledPartitionFn> enumerate(int n, PartitionKind kind, const LabelSet& labels)
{
    std::vector<LabeledPartitionFn> out;
    for_each_labeled(n, kind, labels.size(), [&](const LabeledPartitionFn& rho) { out.push_back(rho); });
    return out;
}

std::pair<Integer, Integer> count_identity_check(int n, const LabelSet& labels)
{
    unsigned long odd = 0;
    unsigned long strict = 0;
    for_each_labeled(n, PartitionKind::odd, labels.size(), [&](const LabeledPartitionFn&) { ++odd; });
    for_each_labeled(n, PartitionKind::strict, labels.size(), [&](const LabeledPartitionFn&) { ++strict; });
    return {Integer(odd), Integer(strict)};
}

Integer Z_of(const LabeledPartitionFn& rho, const GroupData& group)
{
    Integer z = ipow(Integer(2), rho.total_length());
    for (const auto& [label, p] : rho.entries()) {
        if (label >= group.class_count())
            throw Error("label index " + std::to_string(label) + " is not a class of group '" + group.name() + "'");
        z *= z_of(p) * ipow(group.centralizer_order(label), p.length());
    }
    return z;
}

} // namespace qspin
