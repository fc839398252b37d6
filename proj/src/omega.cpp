#include "qspin/omega.hpp"

#include <mutex>

#include "qspin/group_data.hpp"

namespace qspin {

OmegaElem::OmegaElem(LabelSet labels) : labels_(std::move(labels)) {}

OmegaElem OmegaElem::scalar(const Rational& value, LabelSet labels)
{
    OmegaElem out(std::move(labels));
    out.add_term(LabeledPartitionFn(), value);
    return out;
}

OmegaElem OmegaElem::p(const LabeledPartitionFn& rho, LabelSet labels)
{
    if (!rho.is_odd())
        throw Error("power sums p_r in Omega need odd r; got key " + rho.str(labels));
    for (const auto& [label, part] : rho.entries())
        if (label >= labels.size())
            throw Error("label index " + std::to_string(label) + " outside the label set");
    OmegaElem out(std::move(labels));
    out.add_term(rho, 1);
    return out;
}

Rational OmegaElem::coefficient(const LabeledPartitionFn& rho) const
{
    auto it = terms_.find(rho);
    return it == terms_.end() ? Rational(0) : it->second;
}

void OmegaElem::add_term(const LabeledPartitionFn& rho, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(rho, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int OmegaElem::homogeneous_degree() const
{
    if (terms_.empty())
        throw Error("the zero element has no degree");
    int n = terms_.begin()->first.total_weight();
    for (const auto& [rho, c] : terms_)
        if (rho.total_weight() != n)
            throw Error("element is not homogeneous");
    return n;
}

OmegaElem OmegaElem::component(int n) const
{
    OmegaElem out(labels_);
    for (const auto& [rho, c] : terms_)
        if (rho.total_weight() == n)
            out.terms_.emplace_hint(out.terms_.end(), rho, c);
    return out;
}

void OmegaElem::check_labels(const OmegaElem& other) const
{
    if (!(labels_ == other.labels_))
        throw Error("Omega elements over different label sets");
}

OmegaElem& OmegaElem::operator+=(const OmegaElem& other)
{
    check_labels(other);
    for (const auto& [rho, c] : other.terms_)
        add_term(rho, c);
    return *this;
}

OmegaElem& OmegaElem::operator-=(const OmegaElem& other)
{
    check_labels(other);
    for (const auto& [rho, c] : other.terms_)
        add_term(rho, -c);
    return *this;
}

OmegaElem& OmegaElem::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [rho, c] : terms_)
        c *= s;
    return *this;
}

OmegaElem operator*(const OmegaElem& a, const OmegaElem& b)
{
    a.check_labels(b);
    OmegaElem out(a.labels_);
    for (const auto& [rho, x] : a.terms_)
        for (const auto& [tau, y] : b.terms_)
            out.add_term(rho.disjoint_union(tau), x * y);
    return out;
}

bool operator==(const OmegaElem& a, const OmegaElem& b)
{
    return a.labels_ == b.labels_ && a.terms_ == b.terms_;
}

std::string OmegaElem::str() const
{
    if (terms_.empty())
        return "0";
    const bool colored = labels_.size() != 1;
    std::string out;
    bool first = true;
    for (const auto& [rho, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (rho.empty()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + " ";
        out += "p" + (colored ? rho.str(labels_) : rho.at(0).str());
    }
    return out;
}

nlohmann::json OmegaElem::to_json() const
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [rho, c] : terms_) {
        nlohmann::json key = nlohmann::json::array();
        for (const auto& [label, part] : rho.entries())
            key.push_back({labels_.name(label), part.parts()});
        coeffs.push_back({{"key", key}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    return {{"labels", labels_.names()}, {"coeffs", coeffs}};
}

OmegaElem OmegaElem::from_json(const nlohmann::json& doc)
{
    try {
        LabelSet labels = doc.contains("labels") ? LabelSet(doc.at("labels").get<std::vector<std::string>>())
                                                 : LabelSet::singleton();
        OmegaElem out(labels);
        for (const auto& entry : doc.at("coeffs")) {
            std::vector<std::pair<std::string, Partition>> named;
            for (const auto& item : entry.at("key"))
                named.emplace_back(item.at(0).get<std::string>(), Partition(item.at(1).get<std::vector<int>>()));
            auto rho = LabeledPartitionFn::from_named(labels, named);
            if (!rho.is_odd())
                throw Error("Omega key with an even part: " + rho.str(labels));
            Rational c(Integer(entry.at("num").get<std::string>()), Integer(entry.at("den").get<std::string>()));
            if (c.get_den() == 0)
                throw Error("zero denominator in Omega coefficient");
            c.canonicalize();
            out.add_term(rho, c);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed Omega element: ") + e.what());
    }
}

OmegaElem p_monomial(const Partition& mu, std::size_t label, LabelSet labels)
{
    return OmegaElem::p(LabeledPartitionFn::single(label, mu), std::move(labels));
}

OmegaElem q_in_p(int n)
{
    if (n < 0)
        throw Error("q_n needs n >= 0");
    static std::mutex mutex;
    static std::vector<OmegaElem> cache{OmegaElem::scalar(1)};
    std::lock_guard lock(mutex);
    // n q_n = sum_{k odd <= n} 2 p_k q_{n-k}
    while (cache.size() <= static_cast<std::size_t>(n)) {
        const int m = static_cast<int>(cache.size());
        OmegaElem next;
        for (int k = 1; k <= m; k += 2)
            next += p_monomial(Partition{k}) * cache[static_cast<std::size_t>(m - k)];
        cache.push_back(next * ratio(2, m));
    }
    return cache[static_cast<std::size_t>(n)];
}

OmegaElem q_in_p(int n, std::size_t label, const LabelSet& labels)
{
    OmegaElem out(labels);
    for (const auto& [rho, c] : q_in_p(n).terms())
        out.add_term(LabeledPartitionFn::single(label, rho.at(0)), c);
    return out;
}

OmegaElem q_colored(int n, const GroupData& group)
{
    if (n < 0)
        throw Error("q_n needs n >= 0");
    const LabelSet& labels = group.labels();
    const auto N = static_cast<std::size_t>(n);
    TruncatedSeries<OmegaElem> exponent(N, OmegaElem(labels));
    for (std::size_t r = 1; r <= N; r += 2)
        for (std::size_t c = 0; c < group.class_count(); ++c)
            exponent[r] += p_monomial(Partition{static_cast<int>(r)}, c, labels) *
                           ratio(2, Integer(static_cast<long>(r)) * group.centralizer_order(c));
    return exp(exponent, OmegaElem::scalar(1, labels))[N];
}

OmegaElem q_monomial(const Partition& mu)
{
    OmegaElem out = OmegaElem::scalar(1);
    for (int part : mu.parts())
        out = out * q_in_p(part);
    return out;
}

namespace {

// Q_{(a,b)} = q_a q_b + 2 sum_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}, with Q_{(a,0)} = q_a.
OmegaElem two_row(int a, int b)
{
    if (b == 0)
        return q_in_p(a);
    OmegaElem out = q_in_p(a) * q_in_p(b);
    for (int i = 1; i <= b; ++i)
        out += q_in_p(a + i) * q_in_p(b - i) * Rational(i % 2 == 0 ? 2 : -2);
    return out;
}

} // namespace

OmegaElem Q_in_p(const Partition& lambda)
{
    if (!lambda.is_strict())
        throw Error("Schur Q-functions need a strict partition, got " + lambda.str());
    const auto& parts = lambda.parts();
    if (parts.empty())
        return OmegaElem::scalar(1);
    if (parts.size() == 1)
        return q_in_p(parts[0]);
    if (parts.size() == 2)
        return two_row(parts[0], parts[1]);

    static std::mutex mutex;
    static std::map<Partition, OmegaElem> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(lambda); it != cache.end())
            return it->second;
    }
    // Pfaffian of [Q_{(l_i, l_j)}], expanded along the first row; odd lengths get a trailing 0 part.
    std::vector<int> padded = parts;
    if (padded.size() % 2 == 1)
        padded.push_back(0);
    OmegaElem out;
    for (std::size_t j = 1; j < padded.size(); ++j) {
        std::vector<int> rest;
        for (std::size_t k = 1; k < padded.size(); ++k)
            if (k != j && padded[k] > 0)
                rest.push_back(padded[k]);
        OmegaElem term = two_row(padded[0], padded[j]) * Q_in_p(Partition(rest));
        out += j % 2 == 1 ? term : term * Rational(-1);
    }
    std::lock_guard lock(mutex);
    cache.emplace(lambda, out);
    return out;
}

namespace {

Rational inner_with(const OmegaElem& f, const OmegaElem& g, const std::function<Rational(std::size_t)>& zeta)
{
    if (!(f.labels() == g.labels()))
        throw Error("inner product of Omega elements over different label sets");
    Rational out = 0;
    auto a = f.terms().begin();
    auto b = g.terms().begin();
    while (a != f.terms().end() && b != g.terms().end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            Rational w = a->second * b->second;
            for (const auto& [label, mu] : a->first.entries())
                w *= Rational(z_of(mu)) * pow2(-static_cast<long>(mu.length())) *
                     Rational(ipow(zeta(label).get_num(), mu.length()), ipow(zeta(label).get_den(), mu.length()));
            out += w;
            ++a;
            ++b;
        }
    }
    return out;
}

} // namespace

Rational inner(const OmegaElem& f, const OmegaElem& g)
{
    return inner_with(f, g, [](std::size_t) { return Rational(1); });
}

Rational inner(const OmegaElem& f, const OmegaElem& g, const GroupData& group)
{
    if (!(f.labels() == group.labels()))
        throw Error("Omega element is not colored by the classes of group '" + group.name() + "'");
    return inner_with(f, g, [&](std::size_t c) { return Rational(group.centralizer_order(c)); });
}

PowerSeries omega_dim_series(std::size_t N, std::size_t colors)
{
    return power_product(N, StepSet::odd, -1, -static_cast<long>(colors));
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m, std::size_t columns)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Rows are p keys, columns are the family (plus optional right-hand sides).
std::vector<std::vector<Rational>> coefficient_matrix(const std::vector<const OmegaElem*>& columns)
{
    std::map<LabeledPartitionFn, std::size_t> rows;
    for (const auto* f : columns)
        for (const auto& [rho, c] : f->terms())
            rows.try_emplace(rho, rows.size());
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [rho, c] : columns[j]->terms())
            m[rows.at(rho)][j] = c;
    return m;
}

std::map<Partition, Rational> expand_uncolored(const OmegaElem& f, PartitionKind kind,
                                               OmegaElem (*element)(const Partition&))
{
    if (f.labels().size() != 1)
        throw Error("basis expansion needs an uncolored element");
    std::map<Partition, Rational> out;
    if (f.is_zero())
        return out;
    const int n = f.homogeneous_degree();
    std::vector<Partition> index = enumerate(n, kind);
    std::vector<OmegaElem> basis;
    for (const auto& mu : index)
        basis.push_back(element(mu));
    auto x = solve_in_basis(f, basis);
    for (std::size_t i = 0; i < index.size(); ++i)
        if (x[i] != 0)
            out.emplace(index[i], x[i]);
    return out;
}

} // namespace

std::size_t rank(const std::vector<OmegaElem>& family)
{
    std::vector<const OmegaElem*> columns;
    for (const auto& f : family)
        columns.push_back(&f);
    auto m = coefficient_matrix(columns);
    return row_reduce(m, family.size()).size();
}

std::vector<Rational> solve_in_basis(const OmegaElem& f, const std::vector<OmegaElem>& basis)
{
    std::vector<const OmegaElem*> columns;
    for (const auto& b : basis) {
        if (!(b.labels() == f.labels()))
            throw Error("basis and target over different label sets");
        columns.push_back(&b);
    }
    columns.push_back(&f);
    auto m = coefficient_matrix(columns);
    auto pivots = row_reduce(m, basis.size() + 1);
    if (!pivots.empty() && pivots.back() == basis.size())
        throw Error("element is outside the span of the basis");
    if (pivots.size() < basis.size())
        throw Error("basis family is linearly dependent");
    std::vector<Rational> x(basis.size());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = m[i][basis.size()];
    return x;
}

std::map<Partition, Rational> to_q_basis(const OmegaElem& f)
{
    return expand_uncolored(f, PartitionKind::odd, &q_monomial);
}

std::map<Partition, Rational> to_Q_basis(const OmegaElem& f)
{
    return expand_uncolored(f, PartitionKind::strict, &Q_in_p);
}

} // namespace qspin
