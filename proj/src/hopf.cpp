#include "qspin/class_function.hpp"

#include <functional>

namespace qspin {

namespace {

// Visits every sub-multiset alpha of rho with its multiplicity weight prod binom(m, m^alpha).
void for_each_submultiset(const LabeledPartitionFn& rho,
                          const std::function<void(const LabeledPartitionFn&, const Integer&)>& visit)
{
    struct Slot {
        std::size_t label;
        int part;
        int mult;
    };
    std::vector<Slot> slots;
    for (const auto& [label, p] : rho.entries())
        for (auto [part, m] : p.multiplicities())
            slots.push_back({label, part, m});

    std::vector<int> chosen(slots.size());
    std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t i, const Integer& weight) {
        if (i == slots.size()) {
            std::vector<LabeledPartitionFn::Entry> entries;
            for (std::size_t j = 0; j < slots.size(); ++j) {
                if (chosen[j] == 0)
                    continue;
                if (!entries.empty() && entries.back().first == slots[j].label)
                    entries.back().second = entries.back().second.merged(
                        Partition(std::vector<int>(static_cast<std::size_t>(chosen[j]), slots[j].part)));
                else
                    entries.emplace_back(slots[j].label,
                                         Partition(std::vector<int>(static_cast<std::size_t>(chosen[j]), slots[j].part)));
            }
            visit(LabeledPartitionFn::from_entries(std::move(entries)), weight);
            return;
        }
        for (int k = 0; k <= slots[i].mult; ++k) {
            chosen[i] = k;
            rec(i + 1, weight * binomial(static_cast<unsigned long>(slots[i].mult), static_cast<unsigned long>(k)));
        }
    };
    rec(0, Integer(1));
}

void check_slot(const Tensor& t, std::size_t slot)
{
    if (slot >= t.arity())
        throw Error("tensor slot " + std::to_string(slot) + " out of range for arity " + std::to_string(t.arity()));
}

} // namespace

Tensor::Tensor(GroupPtr group, std::size_t arity) : group_(std::move(group)), arity_(arity)
{
    if (!group_)
        throw Error("tensor needs a group");
}

Tensor Tensor::from_class_function(const ClassFunction& chi)
{
    Tensor out(chi.group(), 1);
    for (const auto& [rho, v] : chi.values())
        out.add_term({rho}, chi.sigma_coordinate(rho));
    return out;
}

void Tensor::add_term(const Key& key, const Cyclotomic& c)
{
    if (key.size() != arity_)
        throw Error("tensor key has the wrong arity");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ClassFunction Tensor::to_class_function() const
{
    if (arity_ != 1)
        throw Error("only arity-1 tensors are class functions");
    if (terms_.empty())
        throw Error("the zero tensor has no degree");
    ClassFunction out(group_, terms_.begin()->first[0].total_weight());
    for (const auto& [key, c] : terms_)
        out.set(key[0], c * Cyclotomic(Rational(Z_of(key[0], *group_))));
    return out;
}

Tensor operator*(const Tensor& a, const Tensor& b)
{
    if (a.arity_ != b.arity_)
        throw Error("tensor product of different arities");
    Tensor out(a.group_, a.arity_);
    for (const auto& [ka, x] : a.terms_) {
        for (const auto& [kb, y] : b.terms_) {
            Tensor::Key key(a.arity_);
            for (std::size_t i = 0; i < a.arity_; ++i)
                key[i] = ka[i].disjoint_union(kb[i]);
            out.add_term(key, x * y);
        }
    }
    return out;
}

Tensor& Tensor::operator+=(const Tensor& other)
{
    if (arity_ != other.arity_)
        throw Error("adding tensors of different arities");
    for (const auto& [key, c] : other.terms_)
        add_term(key, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other)
{
    if (arity_ != other.arity_)
        throw Error("subtracting tensors of different arities");
    for (const auto& [key, c] : other.terms_)
        add_term(key, -c);
    return *this;
}

bool operator==(const Tensor& a, const Tensor& b)
{
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

Tensor coproduct(const ClassFunction& chi)
{
    return coproduct_at(Tensor::from_class_function(chi), 0);
}

Tensor coproduct_at(const Tensor& t, std::size_t slot)
{
    check_slot(t, slot);
    Tensor out(t.group(), t.arity() + 1);
    for (const auto& [key, c] : t.terms()) {
        for_each_submultiset(key[slot], [&](const LabeledPartitionFn& alpha, const Integer& weight) {
            Tensor::Key k;
            k.reserve(key.size() + 1);
            k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
            k.push_back(alpha);
            k.push_back(key[slot].difference(alpha));
            k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
            out.add_term(k, c * Cyclotomic(Rational(weight)));
        });
    }
    return out;
}

Tensor counit_at(const Tensor& t, std::size_t slot)
{
    check_slot(t, slot);
    Tensor out(t.group(), t.arity() - 1);
    for (const auto& [key, c] : t.terms()) {
        if (!key[slot].empty())
            continue;
        Tensor::Key k = key;
        k.erase(k.begin() + static_cast<std::ptrdiff_t>(slot));
        out.add_term(k, c);
    }
    return out;
}

Tensor antipode_at(const Tensor& t, std::size_t slot)
{
    check_slot(t, slot);
    Tensor out(t.group(), t.arity());
    for (const auto& [key, c] : t.terms())
        out.add_term(key, key[slot].total_length() % 2 == 1 ? -c : c);
    return out;
}

Tensor multiply_at(const Tensor& t, std::size_t slot)
{
    check_slot(t, slot + 1);
    Tensor out(t.group(), t.arity() - 1);
    for (const auto& [key, c] : t.terms()) {
        Tensor::Key k = key;
        k[slot] = key[slot].disjoint_union(key[slot + 1]);
        k.erase(k.begin() + static_cast<std::ptrdiff_t>(slot) + 1);
        out.add_term(k, c);
    }
    return out;
}

Cyclotomic counit(const ClassFunction& chi)
{
    return chi.degree() == 0 ? chi.value(LabeledPartitionFn()) : Cyclotomic();
}

ClassFunction antipode(const ClassFunction& chi)
{
    ClassFunction out(chi.group(), chi.degree());
    for (const auto& [rho, v] : chi.values())
        out.set(rho, rho.total_length() % 2 == 1 ? -v : v);
    return out;
}

} // namespace qspin
