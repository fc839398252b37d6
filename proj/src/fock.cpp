#include <algorithm>
#include <random>

#include "qspin/fock.hpp"

namespace qspin {

Generator make_generator(int r, std::size_t b)
{
    if (r < 1 || r >= (1 << 15))
        throw Error("generator mode out of range");
    return (static_cast<Generator>(r) << 16) | static_cast<Generator>(b);
}

int generator_mode(Generator g) { return static_cast<int>(g >> 16); }
std::size_t generator_basis(Generator g) { return g & 0xffffu; }

int FockBasisState::degree() const
{
    int d = 0;
    for (Generator g : generators)
        d += generator_mode(g);
    return d;
}

int state_parity(const FockBasisState& s, const SectorModel& model)
{
    int p = 0;
    for (Generator g : s.generators)
        p ^= model.parity(generator_basis(g));
    return p;
}

std::string state_str(const FockBasisState& s, const SectorModel& model)
{
    if (s.generators.empty())
        return "|0>";
    std::string out;
    for (Generator g : s.generators) {
        if (!out.empty())
            out += " ";
        out += "(" + std::to_string(generator_mode(g)) + "," + model.basis().at(generator_basis(g)).name + ")";
    }
    return out;
}

FockVector FockVector::vacuum() { return basis(FockBasisState{}); }

FockVector FockVector::basis(FockBasisState s)
{
    FockVector out;
    out.terms_.emplace_back(std::move(s), 1);
    return out;
}

Rational FockVector::coefficient(const FockBasisState& s) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, const FockBasisState& key) { return t.first < key; });
    return it != terms_.end() && it->first == s ? it->second.to_rational() : Rational(0);
}

namespace {

// Sorts, merges equal states and drops zero coefficients, in place.
void normalize_terms(std::vector<FockVector::Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const FockVector::Term& a, const FockVector::Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (out > 0 && terms[out - 1].first == terms[i].first) {
            terms[out - 1].second += terms[i].second;
        } else {
            if (out > 0 && terms[out - 1].second.is_zero())
                --out;
            if (out != i)
                terms[out] = std::move(terms[i]);
            ++out;
        }
    }
    if (out > 0 && terms[out - 1].second.is_zero())
        --out;
    terms.resize(out);
}

} // namespace

FockVector FockVector::from_terms(std::vector<Term> terms)
{
    normalize_terms(terms);
    FockVector out;
    out.terms_ = std::move(terms);
    return out;
}

FockVector& FockVector::merge(const FockVector& other, bool negate)
{
    if (other.terms_.empty())
        return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.emplace_back(b->first, negate ? -b->second : b->second);
            ++b;
        } else {
            CompactRational c = negate ? a->second - b->second : a->second + b->second;
            if (!c.is_zero())
                merged.emplace_back(std::move(a->first), std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

FockVector& FockVector::operator+=(const FockVector& other) { return merge(other, false); }
FockVector& FockVector::operator-=(const FockVector& other) { return merge(other, true); }

FockVector& FockVector::operator*=(const Rational& s)
{
    if (s == 0)
        terms_.clear();
    const CompactRational factor(s);
    for (auto& t : terms_)
        t.second *= factor;
    return *this;
}

namespace {

void enumerate_states(const std::vector<Generator>& gens, std::size_t index, int remaining, const SectorModel& model,
                      FockBasisState& prefix, const std::function<void(const FockBasisState&)>& visit)
{
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    if (index == gens.size())
        return;
    const Generator g = gens[index];
    const int r = generator_mode(g);
    const int max_copies = model.parity(generator_basis(g)) == 1 ? 1 : remaining / r;
    const std::size_t base = prefix.generators.size();
    for (int k = 0; k <= max_copies && k * r <= remaining; ++k) {
        if (k > 0)
            prefix.generators.push_back(g);
        enumerate_states(gens, index + 1, remaining - k * r, model, prefix, visit);
    }
    prefix.generators.resize(base);
}

void check_odd_mode(int r, const char* what)
{
    if (r < 1 || r % 2 == 0)
        throw Error(std::string(what) + " needs an odd mode >= 1, got " + std::to_string(r));
}

void check_dim(const std::vector<Rational>& v, const SectorModel& model)
{
    if (v.size() != model.dim())
        throw Error("sector vector has dimension " + std::to_string(v.size()) + ", model has " +
                    std::to_string(model.dim()));
}

std::size_t odd_count_before(const FockBasisState& s, std::size_t position, const SectorModel& model)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < position; ++i)
        count += static_cast<std::size_t>(model.parity(generator_basis(s.generators[i])));
    return count;
}

} // namespace

void for_each_fock_state(const SectorModel& model, int n, const std::function<void(const FockBasisState&)>& visit)
{
    if (n < 0)
        throw Error("Fock degree must be >= 0");
    std::vector<Generator> gens;
    for (int r = 1; r <= n; r += 2)
        for (std::size_t b = 0; b < model.dim(); ++b)
            gens.push_back(make_generator(r, b));
    FockBasisState prefix;
    enumerate_states(gens, 0, n, model, prefix, visit);
}

std::vector<FockBasisState> fock_basis(const SectorModel& model, int n)
{
    std::vector<FockBasisState> out;
    for_each_fock_state(model, n, [&](const FockBasisState& s) { out.push_back(s); });
    return out;
}

PowerSeries dim_series(const SectorModel& model, std::size_t N)
{
    return power_product(N, StepSet::odd, 1, model.odd_dim()) * power_product(N, StepSet::odd, -1, -model.even_dim());
}

namespace {

// One mode of a creation or annihilation operator, coefficients per sector basis element.
// Creation coefficients already include the factor r/2.
struct ModeOperator {
    bool create;
    int mode;
    std::vector<CompactRational> coeff;
};

ModeOperator creation_operator(int r, const SectorVector& v, const SectorModel& model)
{
    check_odd_mode(r, "creation operator");
    check_dim(v, model);
    const CompactRational half_mode = CompactRational::fraction(r, 2);
    ModeOperator op{true, r, {}};
    for (const auto& x : v)
        op.coeff.push_back(CompactRational(x) * half_mode);
    return op;
}

ModeOperator annihilation_operator(int r, const DualVector& eta, const SectorModel& model)
{
    check_odd_mode(r, "annihilation operator");
    check_dim(eta, model);
    ModeOperator op{false, r, {}};
    for (const auto& x : eta)
        op.coeff.emplace_back(x);
    return op;
}

// Appends op(x) (negated if asked) to out without merging.
void apply_into(const ModeOperator& op, const std::vector<FockVector::Term>& x, bool negate, const SectorModel& model,
                std::vector<FockVector::Term>& out)
{
    if (op.create) {
        for (std::size_t b = 0; b < op.coeff.size(); ++b) {
            if (op.coeff[b].is_zero())
                continue;
            const Generator g = make_generator(op.mode, b);
            const bool odd = model.parity(b) == 1;
            for (const auto& [s, c] : x) {
                auto pos = std::lower_bound(s.generators.begin(), s.generators.end(), g);
                if (odd && pos != s.generators.end() && *pos == g)
                    continue;
                const auto index = static_cast<std::size_t>(pos - s.generators.begin());
                const bool flip = negate != (odd && odd_count_before(s, index, model) % 2 == 1);
                out.emplace_back(s, flip ? -(c * op.coeff[b]) : c * op.coeff[b]);
                auto& gens = out.back().first.generators;
                gens.insert(gens.begin() + static_cast<std::ptrdiff_t>(index), g);
            }
        }
        return;
    }
    for (const auto& [s, c] : x) {
        const auto& gens = s.generators;
        std::size_t odd_before = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::size_t b = generator_basis(gens[i]);
            const bool odd = model.parity(b) == 1;
            const bool repeat = i > 0 && gens[i - 1] == gens[i];
            if (generator_mode(gens[i]) == op.mode && !op.coeff[b].is_zero() && !repeat) {
                CompactRational coeff = c * op.coeff[b];
                if (!odd) {
                    long mult = 1;
                    while (i + static_cast<std::size_t>(mult) < gens.size() &&
                           gens[i + static_cast<std::size_t>(mult)] == gens[i])
                        ++mult;
                    coeff *= CompactRational(mult);
                }
                const bool flip = negate != (odd && odd_before % 2 == 1);
                out.emplace_back(s, flip ? -coeff : coeff);
                auto& next = out.back().first.generators;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
            }
            odd_before += odd ? 1 : 0;
        }
    }
}

FockVector apply(const ModeOperator& op, const FockVector& x, const SectorModel& model)
{
    std::vector<FockVector::Term> out;
    apply_into(op, x.terms(), false, model, out);
    return FockVector::from_terms(std::move(out));
}

} // namespace

FockVector a_create(int r, const SectorVector& v, const FockVector& x, const SectorModel& model)
{
    return apply(creation_operator(r, v, model), x, model);
}

FockVector a_annihilate(int r, const DualVector& eta, const FockVector& x, const SectorModel& model)
{
    return apply(annihilation_operator(r, eta, model), x, model);
}

FockVector varpi(int n, const SectorVector& v, const SectorModel& model)
{
    check_odd_mode(n, "varpi_n");
    check_dim(v, model);
    std::vector<FockVector::Term> out;
    for (std::size_t b = 0; b < v.size(); ++b)
        if (v[b] != 0)
            out.emplace_back(FockBasisState{{make_generator(n, b)}}, CompactRational(v[b]));
    return FockVector::from_terms(std::move(out));
}

SectorVector ch_n(int n, const FockVector& x, const SectorModel& model)
{
    check_odd_mode(n, "ch_n");
    SectorVector out(model.dim());
    for (const auto& [s, c] : x.terms())
        if (s.generators.size() == 1 && generator_mode(s.generators[0]) == n)
            out[generator_basis(s.generators[0])] += c.to_rational();
    return out;
}

Integer superdimension(const SectorModel& model, int n)
{
    long total = 0;
    for_each_fock_state(model, n, [&](const FockBasisState& s) { total += state_parity(s, model) == 0 ? 1 : -1; });
    return Integer(total);
}

bool cyclicity_check(const FockVector& x, const SectorModel& model)
{
    FockVector v = x;
    while (!v.is_zero()) {
        const FockBasisState& lead = v.terms().front().first;
        if (lead.generators.empty())
            return true;
        const Generator g = lead.generators.back();
        DualVector eta(model.dim());
        eta[generator_basis(g)] = 1;
        v = a_annihilate(generator_mode(g), eta, v, model);
    }
    return false;
}

namespace {

// Component of v on the basis elements of one parity.
std::vector<Rational> parity_part(const std::vector<Rational>& v, int parity, const SectorModel& model)
{
    std::vector<Rational> out(v.size());
    for (std::size_t b = 0; b < v.size(); ++b)
        if (model.parity(b) == parity)
            out[b] = v[b];
    return out;
}

// v with its odd components negated: the operator sum_q (-1)^q Q_q for Q built from v.
std::vector<Rational> odd_negated(const std::vector<Rational>& v, const SectorModel& model)
{
    std::vector<Rational> out = v;
    for (std::size_t b = 0; b < v.size(); ++b)
        if (model.parity(b) == 1)
            out[b] = -out[b];
    return out;
}

bool is_zero_vector(const std::vector<Rational>& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t dim)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> v(dim);
    for (auto& x : v)
        x = ratio(num(rng), den(rng));
    return v;
}

std::string vector_str(const std::vector<Rational>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + v[i].get_str();
    return out + "]";
}

} // namespace

// Each bracket [P, Q] with P = P_0 + P_1 split by parity is evaluated as
// sum_p P_p(Q x) - Q^{(p)}(P_p x), where Q^{(1)} has its odd part negated.
// First-level applications to each basis state are shared across mode pairs.
CommutatorReport commutator_check(const SectorModel& model, int D, int samples, std::uint64_t seed)
{
    if (D < 1)
        throw Error("commutator check needs D >= 1");
    CommutatorReport report;
    std::vector<FockBasisState> states;
    for (int n = 0; n <= D; ++n)
        for_each_fock_state(model, n, [&](const FockBasisState& s) { states.push_back(s); });
    std::vector<int> modes;
    for (int r = 1; r <= D; r += 2)
        modes.push_back(r);
    const std::size_t M = modes.size();

    std::mt19937_64 rng(seed);
    for (int sample = 0; sample < samples; ++sample) {
        const DualVector eta = random_vector(rng, model.dim());
        const SectorVector v = random_vector(rng, model.dim());
        const DualVector eta2 = random_vector(rng, model.dim());
        const SectorVector w = random_vector(rng, model.dim());
        const Rational eta_v = pairing(eta, v);

        std::vector<int> parities;
        std::vector<DualVector> eta_part;
        std::vector<SectorVector> v_part;
        for (int p = 0; p < 2; ++p) {
            if (is_zero_vector(parity_part(eta, p, model)) && is_zero_vector(parity_part(v, p, model)))
                continue;
            parities.push_back(p);
            eta_part.push_back(parity_part(eta, p, model));
            v_part.push_back(parity_part(v, p, model));
        }
        const SectorVector w_signed[2] = {w, odd_negated(w, model)};
        const SectorVector v_signed[2] = {v, odd_negated(v, model)};
        const DualVector eta2_signed[2] = {eta2, odd_negated(eta2, model)};

        auto fail = [&](const std::string& relation, const FockBasisState& s, const std::string& expected) {
            report.passed = false;
            report.first_failure = relation + " on " + state_str(s, model) + ": expected " + expected +
                                   " [sample " + std::to_string(sample) + ", eta=" + vector_str(eta) +
                                   " V=" + vector_str(v) + " eta'=" + vector_str(eta2) + " W=" + vector_str(w) + "]";
        };

        const std::size_t K = parities.size();
        std::vector<ModeOperator> create_v, create_w, annihilate_eta2;
        std::vector<std::vector<ModeOperator>> annihilate_part(M), create_part(M), create_v_signed(M),
            create_w_signed(M), annihilate_eta2_signed(M);
        for (std::size_t i = 0; i < M; ++i) {
            create_v.push_back(creation_operator(modes[i], v, model));
            create_w.push_back(creation_operator(modes[i], w, model));
            annihilate_eta2.push_back(annihilation_operator(modes[i], eta2, model));
            for (std::size_t k = 0; k < K; ++k) {
                const int p = parities[k];
                annihilate_part[i].push_back(annihilation_operator(modes[i], eta_part[k], model));
                create_part[i].push_back(creation_operator(modes[i], v_part[k], model));
                create_v_signed[i].push_back(creation_operator(modes[i], v_signed[p], model));
                create_w_signed[i].push_back(creation_operator(modes[i], w_signed[p], model));
                annihilate_eta2_signed[i].push_back(annihilation_operator(modes[i], eta2_signed[p], model));
            }
        }

        std::vector<FockVector> Cx(M), C2x(M), A2x(M);
        std::vector<std::vector<FockVector>> Apx(M, std::vector<FockVector>(K)), Cpx(M, std::vector<FockVector>(K));
        std::vector<FockVector::Term> central, creations, annihilations;
        for (const auto& s : states) {
            const FockVector x = FockVector::basis(s);
            for (std::size_t i = 0; i < M; ++i) {
                Cx[i] = apply(create_v[i], x, model);
                C2x[i] = apply(create_w[i], x, model);
                A2x[i] = apply(annihilate_eta2[i], x, model);
                for (std::size_t k = 0; k < K; ++k) {
                    Apx[i][k] = apply(annihilate_part[i][k], x, model);
                    Cpx[i][k] = apply(create_part[i][k], x, model);
                }
            }
            for (std::size_t i = 0; i < M; ++i) {
                const int m = modes[i];
                for (std::size_t j = 0; j < M; ++j) {
                    const int l = modes[j];
                    central.clear();
                    creations.clear();
                    annihilations.clear();
                    for (std::size_t k = 0; k < K; ++k) {
                        apply_into(annihilate_part[i][k], Cx[j].terms(), false, model, central);
                        apply_into(create_v_signed[j][k], Apx[i][k].terms(), true, model, central);
                        apply_into(create_part[i][k], C2x[j].terms(), false, model, creations);
                        apply_into(create_w_signed[j][k], Cpx[i][k].terms(), true, model, creations);
                        apply_into(annihilate_part[i][k], A2x[j].terms(), false, model, annihilations);
                        apply_into(annihilate_eta2_signed[j][k], Apx[i][k].terms(), true, model, annihilations);
                    }
                    normalize_terms(central);
                    normalize_terms(creations);
                    normalize_terms(annihilations);
                    const Rational expected = m == l ? ratio(l, 2) * eta_v : Rational(0);
                    const bool central_ok = expected == 0
                                                ? central.empty()
                                                : central.size() == 1 && central[0].first == s &&
                                                      central[0].second == CompactRational(expected);
                    report.checks += 3;
                    if (!central_ok) {
                        fail("[a_-" + std::to_string(m) + "(eta), a_" + std::to_string(l) + "(V)]", s,
                             expected.get_str() + " times the state");
                        return report;
                    }
                    if (!creations.empty()) {
                        fail("[a_" + std::to_string(m) + "(V), a_" + std::to_string(l) + "(W)]", s, "0");
                        return report;
                    }
                    if (!annihilations.empty()) {
                        fail("[a_-" + std::to_string(m) + "(eta), a_-" + std::to_string(l) + "(eta')]", s, "0");
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

PowerSeries euler_series(long e, std::size_t N)
{
    return power_product(N, StepSet::odd, -1, -e);
}

PowerSeries euler_s_series(long e, std::size_t N)
{
    PowerSeries correction = power_product(N, StepSet::odd, 1, e) *
                             (power_product(N, StepSet::even, 1, e) - power_product(N, StepSet::even, -1, e));
    return power_product(N, StepSet::odd, -1, -e) + correction.scaled(Rational(1, 2));
}

} // namespace qspin
