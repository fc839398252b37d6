#include "qspin/class_function.hpp"

namespace qspin {

namespace {

Cyclotomic integer_value(const Integer& z) { return Cyclotomic(Rational(z)); }

Cyclotomic cyclotomic_power(const Cyclotomic& base, std::size_t e)
{
    Cyclotomic out(1);
    for (std::size_t i = 0; i < e; ++i)
        out *= base;
    return out;
}

} // namespace

ClassFunction::ClassFunction(GroupPtr group, int degree) : group_(std::move(group)), degree_(degree)
{
    if (!group_)
        throw Error("class function needs a group");
    if (degree_ < 0)
        throw Error("class function degree must be >= 0");
}

Cyclotomic ClassFunction::value(const LabeledPartitionFn& rho) const
{
    auto it = values_.find(rho);
    return it == values_.end() ? Cyclotomic() : it->second;
}

void ClassFunction::set(const LabeledPartitionFn& rho, const Cyclotomic& v)
{
    if (!rho.is_odd() || rho.total_weight() != degree_)
        throw Error(rho.str(group_->labels()) + " is not an even split class of degree " + std::to_string(degree_));
    for (const auto& [label, part] : rho.entries())
        if (label >= group_->class_count())
            throw Error("class index " + std::to_string(label) + " out of range for group '" + group_->name() + "'");
    if (v.is_zero())
        values_.erase(rho);
    else
        values_[rho] = v;
}

Cyclotomic ClassFunction::sigma_coordinate(const LabeledPartitionFn& rho) const
{
    return value(rho) / Rational(Z_of(rho, *group_));
}

void ClassFunction::check_compatible(const ClassFunction& other) const
{
    if (!(group_ == other.group_ || *group_ == *other.group_))
        throw Error("class functions of different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other)
{
    check_compatible(other);
    if (degree_ != other.degree_)
        throw Error("adding class functions of degrees " + std::to_string(degree_) + " and " +
                    std::to_string(other.degree_));
    for (const auto& [rho, v] : other.values_) {
        auto [it, inserted] = values_.try_emplace(rho, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero())
                values_.erase(it);
        }
    }
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other)
{
    ClassFunction negated = other;
    return *this += negated.scale(Cyclotomic(-1));
}

ClassFunction& ClassFunction::scale(const Cyclotomic& s)
{
    if (s.is_zero()) {
        values_.clear();
        return *this;
    }
    for (auto& [rho, v] : values_)
        v *= s;
    return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b)
{
    a.check_compatible(b);
    ClassFunction out(a.group_, a.degree_ + b.degree_);
    std::map<LabeledPartitionFn, Cyclotomic> coords;
    for (const auto& [rho, x] : a.values_) {
        Cyclotomic cx = a.sigma_coordinate(rho);
        for (const auto& [tau, y] : b.values_)
            coords[rho.disjoint_union(tau)] += cx * b.sigma_coordinate(tau);
    }
    for (const auto& [key, c] : coords)
        out.set(key, c * integer_value(Z_of(key, *a.group_)));
    return out;
}

bool operator==(const ClassFunction& a, const ClassFunction& b)
{
    return a.degree_ == b.degree_ && (a.group_ == b.group_ || *a.group_ == *b.group_) && a.values_ == b.values_;
}

std::string ClassFunction::str() const
{
    if (values_.empty())
        return "0";
    std::string out;
    for (const auto& [rho, v] : values_) {
        if (!out.empty())
            out += ", ";
        out += rho.str(group_->labels()) + " -> " + v.str();
    }
    return out;
}

GradedAlgebraElem graded_zero(const GroupPtr& group, std::size_t N)
{
    std::vector<ClassFunction> components;
    for (std::size_t n = 0; n <= N; ++n)
        components.emplace_back(group, static_cast<int>(n));
    return GradedAlgebraElem(std::move(components));
}

SplitClasses split_classes(int n, const GroupData& group)
{
    SplitClasses out;
    for_each_labeled(n, PartitionKind::odd, group.class_count(),
                     [&](const LabeledPartitionFn& rho) { out.even.push_back(rho); });
    for_each_labeled(n, PartitionKind::strict, group.class_count(), [&](const LabeledPartitionFn& rho) {
        if (rho.total_length() % 2 == 1)
            out.odd.push_back(rho);
    });
    return out;
}

ClassFunction sigma(int r, std::size_t c, const GroupPtr& group)
{
    if (r < 1 || r % 2 == 0)
        throw Error("sigma_r needs odd r >= 1, got " + std::to_string(r));
    ClassFunction out(group, r);
    out.set(LabeledPartitionFn::single(c, Partition{r}), integer_value(group->centralizer_order(c) * r));
    return out;
}

ClassFunction sigma_rho(const LabeledPartitionFn& rho, const GroupPtr& group)
{
    ClassFunction out(group, rho.total_weight());
    out.set(rho, integer_value(Z_of(rho, *group)));
    return out;
}

ClassFunction xi(int n, const GroupPtr& group)
{
    ClassFunction out(group, n);
    for_each_labeled(n, PartitionKind::odd, group->class_count(), [&](const LabeledPartitionFn& rho) {
        out.set(rho, Cyclotomic(pow2(static_cast<long>(rho.total_length()))));
    });
    return out;
}

ClassFunction one(const GroupPtr& group)
{
    ClassFunction out(group, 0);
    out.set(LabeledPartitionFn(), Cyclotomic(1));
    return out;
}

OmegaElem ch_prime(const ClassFunction& chi)
{
    const GroupData& g = *chi.group();
    OmegaElem out(g.labels());
    for (const auto& [rho, v] : chi.values()) {
        if (!v.is_rational())
            throw Error("characteristic map needs rational values; " + rho.str(g.labels()) + " has " + v.str());
        out.add_term(rho, v.to_rational() * pow2(static_cast<long>(rho.total_length())) / Rational(Z_of(rho, g)));
    }
    return out;
}

ClassFunction ch_prime_inverse(const OmegaElem& f, const GroupPtr& group)
{
    if (!(f.labels() == group->labels()))
        throw Error("Omega element is not colored by the classes of group '" + group->name() + "'");
    ClassFunction out(group, f.homogeneous_degree());
    for (const auto& [rho, c] : f.terms())
        out.set(rho, Cyclotomic(c * Rational(Z_of(rho, *group)) * pow2(-static_cast<long>(rho.total_length()))));
    return out;
}

ClassFunction irreducible_char(const Partition& lambda, const GroupPtr& group)
{
    if (!group->is_trivial() || group->class_count() != 1)
        throw Error("irreducible spin characters are only provided for the trivial group");
    OmegaElem Q = Q_in_p(lambda);
    OmegaElem relabeled(group->labels());
    for (const auto& [rho, c] : Q.terms())
        relabeled.add_term(rho, c);
    relabeled *= pow2(-static_cast<long>(lambda.length() / 2));
    return ch_prime_inverse(relabeled, group);
}

ClassFunction star(const std::vector<Cyclotomic>& character, const ClassFunction& chi)
{
    const GroupData& g = *chi.group();
    if (character.size() != g.class_count())
        throw Error("character has " + std::to_string(character.size()) + " values, group '" + g.name() + "' has " +
                    std::to_string(g.class_count()) + " classes");
    ClassFunction out(chi.group(), chi.degree());
    for (const auto& [rho, v] : chi.values()) {
        Cyclotomic w = v;
        for (const auto& [label, part] : rho.entries())
            w *= cyclotomic_power(character[label], part.length());
        out.set(rho, w);
    }
    return out;
}

ClassFunction star(std::size_t irreducible, const ClassFunction& chi)
{
    if (!chi.group()->has_character_table())
        throw Error("star operation needs the character table of group '" + chi.group()->name() + "'");
    return star(chi.group()->character(irreducible), chi);
}

GradedAlgebraElem vertex_Q(const std::vector<Cyclotomic>& character, const GroupPtr& group, std::size_t N)
{
    GradedAlgebraElem out = graded_zero(group, N);
    for (std::size_t n = 0; n <= N; ++n)
        out[n] = star(character, xi(static_cast<int>(n), group));
    return out;
}

GradedAlgebraElem vertex_Q_exponential(const std::vector<Cyclotomic>& character, const GroupPtr& group,
                                       std::size_t N)
{
    if (character.size() != group->class_count())
        throw Error("character length does not match the class count");
    GradedAlgebraElem exponent = graded_zero(group, N);
    for (std::size_t r = 1; r <= N; r += 2) {
        for (std::size_t c = 0; c < group->class_count(); ++c) {
            const Rational w = ratio(2, Integer(static_cast<long>(r)) * group->centralizer_order(c));
            exponent[r] += sigma(static_cast<int>(r), c, group) * (character[c] * Cyclotomic(w));
        }
    }
    return exp(exponent, one(group));
}

PowerSeries dim_series_point(const GroupData& group, std::size_t N)
{
    return power_product(N, StepSet::odd, -1, -static_cast<long>(group.class_count()));
}

CharTable chartable(const GroupPtr& group, int n)
{
    CharTable out;
    const LabelSet& labels = group->labels();
    out.classes = split_classes(n, *group).even;
    for (const auto& rho : out.classes)
        out.centralizers.push_back(Z_of(rho, *group));
    auto row = [&](std::string name, const ClassFunction& chi) {
        CharTableRow r{std::move(name), {}};
        for (const auto& rho : out.classes)
            r.values.push_back(chi.value(rho));
        out.rows.push_back(std::move(r));
    };
    if (n == 0) {
        row("1", one(group));
        return out;
    }
    for (const auto& rho : out.classes)
        row("sigma^" + rho.str(labels), sigma_rho(rho, group));
    const ClassFunction basic = xi(n, group);
    row("xi^" + std::to_string(n), basic);
    if (group->has_character_table()) {
        for (std::size_t i = 0; i < group->irreducible_count(); ++i)
            row("V" + std::to_string(i) + "*xi^" + std::to_string(n), star(i, basic));
    } else {
        out.warnings.push_back("group '" + group->name() + "' has no character table; V*xi^" + std::to_string(n) +
                               " rows omitted");
    }
    if (group->is_trivial()) {
        for (const auto& lambda : enumerate(n, PartitionKind::strict))
            row("T" + lambda.str(), irreducible_char(lambda, group));
    }
    return out;
}

} // namespace qspin
