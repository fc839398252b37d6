#include "qspin/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "qspin/class_function.hpp"
#include "qspin/lambda_ops.hpp"
#include "qspin/omega.hpp"

namespace qspin {

namespace {

// Accumulates checks and keeps the first failure.
class Outcome {
public:
    template <typename Describe>
    bool check(bool ok, Describe describe)
    {
        ++checks_;
        if (!ok && passed_) {
            passed_ = false;
            detail_ = describe();
        }
        return ok;
    }

    ItemResult finish(std::string scope) const
    {
        ItemResult r;
        r.passed = passed_;
        r.checks = checks_;
        r.detail = passed_ ? std::move(scope) : detail_;
        return r;
    }

private:
    bool passed_ = true;
    std::size_t checks_ = 0;
    std::string detail_;
};

int bound(const VerifyConfig& config, int fallback)
{
    if (config.N && *config.N < 0)
        throw Error("N must be >= 0");
    return config.N ? *config.N : fallback;
}

std::vector<GroupPtr> groups_or(const VerifyConfig& config, std::initializer_list<const char*> names)
{
    if (config.group)
        return {config.group};
    std::vector<GroupPtr> out;
    for (const char* name : names)
        out.push_back(builtin_group(name));
    return out;
}

std::vector<SectorModel> models_or_points(const VerifyConfig& config)
{
    if (config.model)
        return {*config.model};
    return {SectorModel::point(1, 0), SectorModel::point(0, 1), SectorModel::point(2, 1), SectorModel::point(3, 2)};
}

std::string group_list(const std::vector<GroupPtr>& groups)
{
    std::string out;
    for (const auto& g : groups)
        out += (out.empty() ? "" : ",") + g->name();
    return out;
}

std::string model_list(const std::vector<SectorModel>& models)
{
    std::string out;
    for (const auto& m : models)
        out += (out.empty() ? "" : " | ") + m.describe();
    return out;
}

std::string ints(const std::vector<Integer>& v)
{
    std::string out;
    for (const auto& x : v)
        out += (out.empty() ? "" : " ") + x.get_str();
    return out;
}

Integer count_labeled(int n, PartitionKind kind, std::size_t labels)
{
    Integer count = 0;
    for_each_labeled(n, kind, labels, [&](const LabeledPartitionFn&) { ++count; });
    return count;
}

std::vector<LabeledPartitionFn> odd_classes(int n, const GroupData& group)
{
    return split_classes(n, group).even;
}

// Characters of degree one: value 1 on the identity class.
std::vector<std::vector<Cyclotomic>> linear_characters(const GroupData& group)
{
    std::vector<std::vector<Cyclotomic>> out;
    if (!group.has_character_table()) {
        out.emplace_back(group.class_count(), Cyclotomic(1));
        return out;
    }
    std::size_t identity = 0;
    for (std::size_t c = 0; c < group.class_count(); ++c)
        if (group.centralizer_order(c) == group.order())
            identity = c;
    for (std::size_t i = 0; i < group.irreducible_count(); ++i)
        if (group.character(i)[identity] == Cyclotomic(1))
            out.push_back(group.character(i));
    return out;
}

// --- partitions ---

ItemResult op_sp_equal(const VerifyConfig& config)
{
    const int N = bound(config, 30);
    Outcome out;
    for (std::size_t k = 1; k <= 3; ++k) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i)
            names.push_back("c" + std::to_string(i));
        const LabelSet labels(names);
        for (int n = 0; n <= N; ++n) {
            auto [op, sp] = count_identity_check(n, labels);
            if (!out.check(op == sp, [&] {
                    return "n=" + std::to_string(n) + ", " + std::to_string(k) + " labels: |OP|=" + op.get_str() +
                           " |SP|=" + sp.get_str();
                }))
                return out.finish("");
        }
    }
    return out.finish("n<=" + std::to_string(N) + ", label sets of size 1..3");
}

ItemResult sp_parity_split(const VerifyConfig& config)
{
    const int N = bound(config, 30);
    Outcome out;
    for (int n = 0; n <= N; ++n) {
        Integer plus = 0, minus = 0;
        for_each_partition(n, PartitionKind::strict, [&](const Partition& p) {
            (p.length() % 2 == 0 ? plus : minus) += 1;
        });
        const Integer total = static_cast<unsigned long>(enumerate(n, PartitionKind::strict).size());
        if (!out.check(plus + minus == total, [&] { return "n=" + std::to_string(n); }))
            return out.finish("");
    }
    return out.finish("n<=" + std::to_string(N));
}

ItemResult class_size_bound(const VerifyConfig& config)
{
    const int N = bound(config, 8);
    const auto groups = groups_or(config, {"trivial", "Z2", "Z3", "S3"});
    Outcome out;
    for (const auto& g : groups) {
        for (int n = 0; n <= N; ++n) {
            const Integer order = ipow(Integer(2), static_cast<unsigned long>(n)) *
                                  factorial(static_cast<unsigned long>(n)) *
                                  ipow(g->order(), static_cast<unsigned long>(n));
            Rational total = 0;
            bool integral = true;
            for (const auto& rho : odd_classes(n, *g)) {
                const Rational size = ratio(order, Z_of(rho, *g));
                integral = integral && size.get_den() == 1;
                total += size;
            }
            if (!out.check(integral && total <= Rational(order), [&] {
                    return g->name() + " n=" + std::to_string(n) + ": class sizes sum to " + total.get_str() +
                           " against group order " + order.get_str();
                }))
                return out.finish("");
        }
    }
    return out.finish("groups " + group_list(groups) + ", n<=" + std::to_string(N));
}

ItemResult enumeration_deterministic(const VerifyConfig& config)
{
    const int N = bound(config, 12);
    Outcome out;
    for (int n = 0; n <= N; ++n) {
        for (auto kind : {PartitionKind::all, PartitionKind::strict, PartitionKind::odd}) {
            if (!out.check(enumerate(n, kind) == enumerate(n, kind), [&] { return "n=" + std::to_string(n); }))
                return out.finish("");
        }
        const LabelSet labels({"c0", "c1", "c2"});
        if (!out.check(enumerate(n, PartitionKind::odd, labels) == enumerate(n, PartitionKind::odd, labels),
                       [&] { return "labeled, n=" + std::to_string(n); }))
            return out.finish("");
    }
    return out.finish("n<=" + std::to_string(N));
}

ItemResult group_orthogonality(const VerifyConfig& config)
{
    std::vector<GroupPtr> groups;
    if (config.group)
        groups.push_back(config.group);
    else
        for (const auto& name : builtin_group_names())
            groups.push_back(builtin_group(name));
    Outcome out;
    for (const auto& g : groups) {
        if (!g->has_character_table())
            continue;
        for (std::size_t i = 0; i < g->irreducible_count(); ++i) {
            for (std::size_t j = 0; j < g->irreducible_count(); ++j) {
                Cyclotomic s;
                for (std::size_t c = 0; c < g->class_count(); ++c)
                    s += g->character(i)[c] * g->character(j)[c].conj() / Rational(g->centralizer_order(c));
                if (!out.check(s == Cyclotomic(i == j ? 1 : 0), [&] {
                        return g->name() + " rows " + std::to_string(i) + "," + std::to_string(j) + ": " + s.str();
                    }))
                    return out.finish("");
            }
        }
    }
    return out.finish("groups " + group_list(groups));
}

// --- omega ---

ItemResult omega_dim(const VerifyConfig& config)
{
    const int N = bound(config, 30);
    const PowerSeries s = omega_dim_series(static_cast<std::size_t>(N));
    Outcome out;
    for (int n = 0; n <= N; ++n) {
        const auto count = enumerate(n, PartitionKind::strict).size();
        if (!out.check(s[static_cast<std::size_t>(n)] == Rational(static_cast<long>(count)), [&] {
                return "n=" + std::to_string(n) + ": series " + s[static_cast<std::size_t>(n)].get_str() +
                       ", |SP_n| " + std::to_string(count);
            }))
            return out.finish("");
    }
    return out.finish("n<=" + std::to_string(N));
}

ItemResult q_basis_roundtrip(const VerifyConfig& config)
{
    const int N = bound(config, 12);
    Outcome out;
    for (int n = 0; n <= N; ++n) {
        for (const Partition& mu : enumerate(n, PartitionKind::odd)) {
            const auto q = to_q_basis(q_monomial(mu));
            if (!out.check(q == std::map<Partition, Rational>{{mu, Rational(1)}},
                           [&] { return "q" + mu.str() + " does not expand to itself"; }))
                return out.finish("");
            const OmegaElem p = p_monomial(mu);
            OmegaElem back;
            for (const auto& [nu, c] : to_q_basis(p))
                back += q_monomial(nu) * c;
            if (!out.check(back == p, [&] { return "p" + mu.str() + " -> q basis -> p gives " + back.str(); }))
                return out.finish("");
        }
    }
    return out.finish("degrees <=" + std::to_string(N));
}

ItemResult Q_orthogonality(const VerifyConfig& config)
{
    const int N = bound(config, 10);
    std::vector<std::pair<Partition, OmegaElem>> Qs;
    for (int n = 0; n <= N; ++n)
        for (const Partition& lambda : enumerate(n, PartitionKind::strict))
            Qs.emplace_back(lambda, Q_in_p(lambda));
    Outcome out;
    for (const auto& [lambda, Ql] : Qs) {
        for (const auto& [mu, Qm] : Qs) {
            const Rational expected = lambda == mu ? pow2(static_cast<long>(lambda.length())) : Rational(0);
            const Rational got = inner(Ql, Qm);
            if (!out.check(got == expected, [&] {
                    return "<Q" + lambda.str() + ", Q" + mu.str() + "> = " + got.get_str() + ", expected " +
                           expected.get_str();
                }))
                return out.finish("");
        }
    }
    return out.finish("|lambda|,|mu|<=" + std::to_string(N));
}

ItemResult Q_basis(const VerifyConfig& config)
{
    const int N = bound(config, 10);
    Outcome out;
    for (int n = 0; n <= N; ++n) {
        std::vector<OmegaElem> family;
        for (const Partition& lambda : enumerate(n, PartitionKind::strict))
            family.push_back(Q_in_p(lambda));
        const std::size_t odd = enumerate(n, PartitionKind::odd).size();
        const std::size_t r = rank(family);
        if (!out.check(r == family.size() && r == odd, [&] {
                return "n=" + std::to_string(n) + ": rank " + std::to_string(r) + " of " +
                       std::to_string(family.size()) + " Q-functions, |OP_n|=" + std::to_string(odd);
            }))
            return out.finish("");
    }
    return out.finish("n<=" + std::to_string(N));
}

ItemResult exp_log(const VerifyConfig& config)
{
    const int N = bound(config, 12);
    const auto n_max = static_cast<std::size_t>(N);
    TruncatedSeries<OmegaElem> q(n_max, OmegaElem());
    TruncatedSeries<OmegaElem> expected(n_max, OmegaElem());
    for (std::size_t n = 0; n <= n_max; ++n) {
        q[n] = q_in_p(static_cast<int>(n));
        if (n % 2 == 1)
            expected[n] = p_monomial(Partition{static_cast<int>(n)}) * Rational(2, static_cast<long>(n));
    }
    const auto logq = log(q, OmegaElem::scalar(1));
    Outcome out;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (!out.check(logq[n] == expected[n], [&] {
                return "t^" + std::to_string(n) + ": log gives " + logq[n].str() + ", expected " + expected[n].str();
            }))
            return out.finish("");
    }
    const auto expq = exp(expected, OmegaElem::scalar(1));
    out.check(expq == q, [&] { return std::string("exp of the odd power sums does not give the q_n"); });
    return out.finish("N=" + std::to_string(N));
}

ItemResult omega_json(const VerifyConfig& config)
{
    const int N = bound(config, 8);
    const auto groups = groups_or(config, {"trivial", "Z3"});
    Outcome out;
    for (int n = 0; n <= N; ++n) {
        for (const Partition& lambda : enumerate(n, PartitionKind::strict)) {
            const OmegaElem f = Q_in_p(lambda);
            const OmegaElem g = OmegaElem::from_json(nlohmann::json::parse(f.to_json().dump()));
            if (!out.check(f == g, [&] { return "Q" + lambda.str() + " changes under JSON round trip"; }))
                return out.finish("");
        }
        for (const auto& grp : groups) {
            const OmegaElem f = q_colored(n, *grp);
            const OmegaElem g = OmegaElem::from_json(nlohmann::json::parse(f.to_json().dump()));
            if (!out.check(f == g, [&] { return grp->name() + " q_" + std::to_string(n) + " changes"; }))
                return out.finish("");
        }
    }
    return out.finish("Q_lambda and colored q_n, n<=" + std::to_string(N));
}

// --- spinchar ---

ItemResult point_dim(const VerifyConfig& config)
{
    const int N = bound(config, 20);
    const auto groups = groups_or(config, {"trivial", "Z2", "Z3"});
    Outcome out;
    for (const auto& g : groups) {
        const PowerSeries s = dim_series_point(*g, static_cast<std::size_t>(N));
        for (int n = 0; n <= N; ++n) {
            const Integer count = count_labeled(n, PartitionKind::odd, g->class_count());
            if (!out.check(s[static_cast<std::size_t>(n)] == Rational(count), [&] {
                    return g->name() + " n=" + std::to_string(n) + ": series " +
                           s[static_cast<std::size_t>(n)].get_str() + ", |OP_n| " + count.get_str();
                }))
                return out.finish("");
        }
    }
    return out.finish("groups " + group_list(groups) + ", n<=" + std::to_string(N));
}

ItemResult ch_prime_xi(const VerifyConfig& config)
{
    const int N = bound(config, 12);
    const auto groups = groups_or(config, {"trivial", "Z2"});
    Outcome out;
    for (const auto& g : groups) {
        for (int n = 0; n <= N; ++n) {
            const OmegaElem image = ch_prime(xi(n, g));
            const OmegaElem q = g->is_trivial() ? q_in_p(n) : q_colored(n, *g);
            if (!out.check(image == q, [&] {
                    return g->name() + " n=" + std::to_string(n) + ": ch'(xi^n) = " + image.str() + ", q_n = " + q.str();
                }))
                return out.finish("");
        }
    }
    return out.finish("groups " + group_list(groups) + ", n<=" + std::to_string(N));
}

ClassFunction random_combination(int n, const GroupPtr& g, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    ClassFunction out(g, n);
    for (const auto& rho : odd_classes(n, *g))
        out += sigma_rho(rho, g) * Rational(coeff(rng));
    return out;
}

ItemResult ch_prime_multiplicative(const VerifyConfig& config)
{
    const int N = bound(config, 8);
    const auto groups = groups_or(config, {"trivial", "Z2"});
    std::mt19937_64 rng(config.seed);
    Outcome out;
    for (const auto& g : groups) {
        for (int a = 0; a <= N; ++a) {
            for (int b = 0; a + b <= N; ++b) {
                const ClassFunction x = random_combination(a, g, rng);
                const ClassFunction y = random_combination(b, g, rng);
                if (!out.check(ch_prime(x * y) == ch_prime(x) * ch_prime(y), [&] {
                        return g->name() + " degrees " + std::to_string(a) + "+" + std::to_string(b) + ": x=" +
                               x.str() + " y=" + y.str();
                    }))
                    return out.finish("");
            }
        }
        for (int n = 0; n <= N; ++n) {
            std::vector<OmegaElem> images;
            const auto classes = odd_classes(n, *g);
            for (const auto& rho : classes)
                images.push_back(ch_prime(sigma_rho(rho, g)));
            if (!out.check(rank(images) == classes.size(), [&] {
                    return g->name() + " n=" + std::to_string(n) + ": image rank " + std::to_string(rank(images)) +
                           " < |OP_n| " + std::to_string(classes.size());
                }))
                return out.finish("");
        }
    }
    return out.finish("groups " + group_list(groups) + ", degrees <=" + std::to_string(N) + ", seed " +
                      std::to_string(config.seed));
}

ItemResult irreducible_orthogonality(const VerifyConfig& config)
{
    const int N = bound(config, 10);
    const GroupPtr trivial = builtin_group("trivial");
    std::vector<std::pair<Partition, OmegaElem>> images;
    for (int n = 0; n <= N; ++n)
        for (const Partition& lambda : enumerate(n, PartitionKind::strict))
            images.emplace_back(lambda, ch_prime(irreducible_char(lambda, trivial)));
    Outcome out;
    for (const auto& [lambda, f] : images) {
        for (const auto& [mu, g] : images) {
            const Rational expected = lambda == mu ? pow2(static_cast<long>(lambda.length() % 2)) : Rational(0);
            const Rational got = inner(f, g);
            if (!out.check(got == expected, [&] {
                    return "<ch'T" + lambda.str() + ", ch'T" + mu.str() + "> = " + got.get_str() + ", expected " +
                           expected.get_str();
                }))
                return out.finish("");
        }
    }
    return out.finish("strict lambda, mu with |lambda|,|mu|<=" + std::to_string(N));
}

ItemResult star_multiplicative(const VerifyConfig& config)
{
    const int N = bound(config, 6);
    const auto groups = groups_or(config, {"trivial", "Z2", "Z3", "S3"});
    Outcome out;
    for (const auto& g : groups) {
        const auto chars = linear_characters(*g);
        for (int n = 0; n <= N; ++n) {
            const ClassFunction x = xi(n, g);
            for (const auto& v : chars) {
                for (const auto& w : chars) {
                    std::vector<Cyclotomic> vw(v.size());
                    for (std::size_t c = 0; c < v.size(); ++c)
                        vw[c] = v[c] * w[c];
                    if (!out.check(star(vw, x) == star(v, star(w, x)), [&] {
                            return g->name() + " n=" + std::to_string(n) + ": star of a product character differs";
                        }))
                        return out.finish("");
                }
            }
        }
    }
    return out.finish("groups " + group_list(groups) + ", xi^n with n<=" + std::to_string(N));
}

// --- vertex ---

ItemResult vertex_agreement(const VerifyConfig& config)
{
    const int N = bound(config, 6);
    const auto groups = groups_or(config, {"trivial", "Z2", "Z3", "S3"});
    Outcome out;
    for (const auto& g : groups) {
        const auto chars = linear_characters(*g);
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const auto lhs = vertex_Q(chars[i], g, static_cast<std::size_t>(N));
            const auto rhs = vertex_Q_exponential(chars[i], g, static_cast<std::size_t>(N));
            for (std::size_t n = 0; n <= static_cast<std::size_t>(N); ++n) {
                if (!out.check(lhs[n] == rhs[n], [&] {
                        return g->name() + " character " + std::to_string(i) + ", t^" + std::to_string(n) +
                               ": star gives " + lhs[n].str() + ", exponential gives " + rhs[n].str();
                    }))
                    return out.finish("");
            }
        }
    }
    return out.finish("groups " + group_list(groups) + ", every linear character, n<=" + std::to_string(N));
}

// --- hopf ---

template <typename Check>
ItemResult over_generators(const VerifyConfig& config, Check check)
{
    const int N = bound(config, 8);
    const auto groups = groups_or(config, {"trivial", "Z2"});
    Outcome out;
    for (const auto& g : groups) {
        for (int n = 0; n <= N; ++n) {
            for (const auto& rho : odd_classes(n, *g)) {
                const Tensor x = Tensor::from_class_function(sigma_rho(rho, g));
                if (!out.check(check(x, n), [&] { return g->name() + " sigma^" + rho.str(g->labels()); }))
                    return out.finish("");
            }
        }
    }
    return out.finish("sigma^rho generators, groups " + group_list(groups) + ", degree <=" + std::to_string(N));
}

ItemResult coassociativity(const VerifyConfig& config)
{
    return over_generators(config, [](const Tensor& x, int) {
        const Tensor d = coproduct_at(x, 0);
        return coproduct_at(d, 0) == coproduct_at(d, 1);
    });
}

ItemResult counit_laws(const VerifyConfig& config)
{
    return over_generators(config, [](const Tensor& x, int) {
        const Tensor d = coproduct_at(x, 0);
        return counit_at(d, 0) == x && counit_at(d, 1) == x;
    });
}

ItemResult antipode_identity(const VerifyConfig& config)
{
    return over_generators(config, [](const Tensor& x, int n) {
        const Tensor d = coproduct_at(x, 0);
        const Tensor unit = n == 0 ? x : Tensor(x.group(), 1);
        return multiply_at(antipode_at(d, 0), 0) == unit && multiply_at(antipode_at(d, 1), 0) == unit;
    });
}

ItemResult coproduct_multiplicative(const VerifyConfig& config)
{
    const int N = bound(config, 8);
    const auto groups = groups_or(config, {"trivial", "Z2"});
    Outcome out;
    for (const auto& g : groups) {
        std::vector<std::vector<ClassFunction>> gens(static_cast<std::size_t>(N) + 1);
        for (int n = 0; n <= N; ++n)
            for (const auto& rho : odd_classes(n, *g))
                gens[static_cast<std::size_t>(n)].push_back(sigma_rho(rho, g));
        for (int a = 0; a <= N; ++a) {
            for (int b = 0; a + b <= N; ++b) {
                for (const auto& x : gens[static_cast<std::size_t>(a)]) {
                    const Tensor dx = coproduct(x);
                    for (const auto& y : gens[static_cast<std::size_t>(b)]) {
                        if (!out.check(coproduct(x * y) == dx * coproduct(y),
                                       [&] { return g->name() + " " + x.str() + " times " + y.str(); }))
                            return out.finish("");
                    }
                }
            }
        }
    }
    return out.finish("pairs of sigma^rho generators, groups " + group_list(groups) + ", total degree <=" +
                      std::to_string(N));
}

// --- fock ---

ItemResult fock_dim(const VerifyConfig& config)
{
    const int N = bound(config, 12);
    auto models = models_or_points(config);
    if (!config.model) {
        const GroupPtr z2 = builtin_group("Z2");
        models.emplace_back(z2, std::vector<SectorModel::Sector>{{0, 1, 1}, {1, 0, 1}});
    }
    Outcome out;
    for (const auto& m : models) {
        const PowerSeries s = dim_series(m, static_cast<std::size_t>(N));
        for (int n = 0; n <= N; ++n) {
            std::size_t count = 0;
            for_each_fock_state(m, n, [&](const FockBasisState&) { ++count; });
            if (!out.check(s[static_cast<std::size_t>(n)] == Rational(static_cast<long>(count)), [&] {
                    return m.describe() + " n=" + std::to_string(n) + ": enumerated " + std::to_string(count) +
                           ", series " + s[static_cast<std::size_t>(n)].get_str();
                }))
                return out.finish("");
        }
    }
    return out.finish(model_list(models) + "; n<=" + std::to_string(N));
}

ItemResult euler_signed(const VerifyConfig& config)
{
    const int N = bound(config, 10);
    std::vector<SectorModel> models;
    if (config.model) {
        models.push_back(*config.model);
    } else {
        for (int e = -2; e <= 3; ++e)
            models.push_back(e >= 0 ? SectorModel::point(e + 1, 1) : SectorModel::point(1, 1 - e));
    }
    Outcome out;
    for (const auto& m : models) {
        const PowerSeries s = euler_series(m.euler_number(), static_cast<std::size_t>(N));
        for (int n = 0; n <= N; ++n) {
            const Integer signed_count = superdimension(m, n);
            if (!out.check(s[static_cast<std::size_t>(n)] == Rational(signed_count), [&] {
                    return m.describe() + " n=" + std::to_string(n) + ": signed count " + signed_count.get_str() +
                           ", series " + s[static_cast<std::size_t>(n)].get_str();
                }))
                return out.finish("");
        }
    }
    return out.finish(model_list(models) + "; n<=" + std::to_string(N));
}

ItemResult euler_s_count(const VerifyConfig& config)
{
    const int N = bound(config, 20);
    const PowerSeries s = euler_s_series(1, static_cast<std::size_t>(N));
    Outcome out;
    std::vector<Integer> counts;
    for (int n = 0; n <= N; ++n) {
        Integer count = 0;
        for_each_partition(n, PartitionKind::strict, [&](const Partition& p) {
            count += (n - static_cast<int>(p.length())) % 2 == 0 ? 1 : 2;
        });
        counts.push_back(count);
        if (!out.check(s[static_cast<std::size_t>(n)] == Rational(count), [&] {
                return "n=" + std::to_string(n) + ": series " + s[static_cast<std::size_t>(n)].get_str() +
                       ", spin count " + count.get_str();
            }))
            return out.finish("");
    }
    return out.finish("n<=" + std::to_string(N) + ": " + ints(counts));
}

// --- heisenberg ---

ItemResult heisenberg_relations(const VerifyConfig& config)
{
    const auto models = models_or_points(config);
    Outcome out;
    std::size_t checks = 0;
    for (const auto& m : models) {
        const CommutatorReport r = commutator_check(m, config.D, config.heisenberg_samples, config.seed);
        checks += r.checks;
        if (!out.check(r.passed, [&] { return m.describe() + ": " + r.first_failure; }))
            break;
    }
    ItemResult result = out.finish(model_list(models) + "; D=" + std::to_string(config.D) + ", " +
                                   std::to_string(config.heisenberg_samples) + " samples, seed " +
                                   std::to_string(config.seed));
    result.checks = checks;
    return result;
}

ItemResult cyclicity(const VerifyConfig& config)
{
    const int N = bound(config, 8);
    const auto models = models_or_points(config);
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> coeff(-4, 4);
    Outcome out;
    for (const auto& m : models) {
        for (int n = 0; n <= N; ++n) {
            const auto states = fock_basis(m, n);
            if (states.empty())
                continue;
            for (const auto& s : states) {
                if (!out.check(cyclicity_check(FockVector::basis(s), m),
                               [&] { return m.describe() + ": " + state_str(s, m); }))
                    return out.finish("");
            }
            FockVector v;
            while (v.is_zero()) {
                for (const auto& s : states)
                    v += FockVector::basis(s) * Rational(coeff(rng));
            }
            if (!out.check(cyclicity_check(v, m),
                           [&] { return m.describe() + ": random vector of degree " + std::to_string(n); }))
                return out.finish("");
        }
    }
    return out.finish(model_list(models) + "; basis states and a random vector per degree, n<=" + std::to_string(N));
}

// --- qlambda ---

template <typename Check>
ItemResult over_random_elements(const VerifyConfig& config, Check check)
{
    const auto N = static_cast<std::size_t>(bound(config, 8));
    Outcome out;
    for (int i = 0; i < config.qlambda_seeds; ++i) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(seed);
        const auto vars = static_cast<std::size_t>(config.variables);
        const SplitElement E = random_split_element(rng, vars, config.lines, config.negative_lines);
        const SplitElement F = random_split_element(rng, vars, config.lines, config.negative_lines);
        std::string why;
        if (!out.check(check(E, F, N, why),
                       [&] { return "seed " + std::to_string(seed) + ": E=" + E.str() + " F=" + F.str() + ": " + why; }))
            return out.finish("");
    }
    return out.finish(std::to_string(config.qlambda_seeds) + " seeds from " + std::to_string(config.seed) + ", <=" +
                      std::to_string(config.lines) + " positive and <=" + std::to_string(config.negative_lines) +
                      " negative lines, N=" + std::to_string(N));
}

ItemResult susy_exp(const VerifyConfig& config)
{
    return over_random_elements(config, [](const SplitElement& E, const SplitElement&, std::size_t N, std::string& why) {
        const int n = susy_exp_mismatch(E, N);
        why = "first mismatch at t^" + std::to_string(n);
        return n < 0;
    });
}

ItemResult q_product_identities(const VerifyConfig& config)
{
    return over_random_elements(config, [](const SplitElement& E, const SplitElement& F, std::size_t N,
                                           std::string& why) {
        const QIdentityReport r = q_identities_check(E, F, N);
        why = r.sum_identity ? "difference identity fails" : "sum identity fails";
        return r.passed();
    });
}

OperationSeries unit_series(std::size_t variables, std::size_t N)
{
    TruncatedSeries<Polynomial> one(N, Polynomial(variables));
    one[0] = Polynomial::constant(1, variables);
    return OperationSeries(std::move(one));
}

ItemResult closed_forms(const VerifyConfig& config)
{
    return over_random_elements(config, [](const SplitElement& E, const SplitElement&, std::size_t N, std::string& why) {
        if (!(sym_series(E, N) == sym_series_product(E, N))) {
            why = "sigma_t";
            return false;
        }
        if (!(ext_series(E, N) == ext_series_product(E, N))) {
            why = "Lambda_t";
            return false;
        }
        if (!(q_series(E, N) == q_series_product(E, N))) {
            why = "Q_t";
            return false;
        }
        if (!(ext_series(E, N) * sym_series(E, N).negated_variable() == unit_series(E.variables(), N))) {
            why = "Lambda_t sigma_{-t} != 1";
            return false;
        }
        return true;
    });
}

ItemResult adams_additive(const VerifyConfig& config)
{
    return over_random_elements(config, [](const SplitElement& E, const SplitElement& F, std::size_t,
                                           std::string& why) {
        for (int r = 1; r <= 9; r += 2) {
            if (!(adams(r, E + F) == adams(r, E) + adams(r, F)) || !(adams(r, E - F) == adams(r, E) - adams(r, F))) {
                why = "r=" + std::to_string(r);
                return false;
            }
        }
        return true;
    });
}

ItemResult adams_composition(const VerifyConfig& config)
{
    return over_random_elements(config, [](const SplitElement& E, const SplitElement&, std::size_t, std::string& why) {
        for (int r = 1; r <= 9; r += 2) {
            for (int s = 1; s <= 9; s += 2) {
                if (!(adams(r, adams(s, E)) == adams(r * s, E))) {
                    why = "r=" + std::to_string(r) + " s=" + std::to_string(s);
                    return false;
                }
            }
        }
        return true;
    });
}

ItemResult trace_dimension(const VerifyConfig& config)
{
    const int N = bound(config, 4);
    Outcome out;
    for (std::size_t m = 1; m <= 3; ++m) {
        for (int n = 0; n <= N; ++n) {
            const auto [lhs, rhs] = trace_dimension_check(m, n);
            if (!out.check(lhs == Rational(rhs), [&, lhs = lhs, rhs = rhs] {
                    return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + lhs.get_str() +
                           " != " + rhs.get_str();
                }))
                return out.finish("");
        }
    }
    return out.finish("m<=3, n<=" + std::to_string(N));
}

std::vector<VerifyItem> build_registry()
{
    std::vector<VerifyItem> items = {
        {"partitions.op_sp_equal", "partitions", "|OP_n(L)| = |SP_n(L)|", op_sp_equal},
        {"partitions.sp_parity_split", "partitions", "|SP_n^+| + |SP_n^-| = |SP_n|", sp_parity_split},
        {"partitions.class_size_bound", "partitions",
         "sum_{rho in OP_n} 2^n n! |G|^n / Z_rho <= 2^n n! |G|^n, each term integral", class_size_bound},
        {"partitions.enumeration_deterministic", "partitions", "enumerate(n) == enumerate(n)",
         enumeration_deterministic},
        {"partitions.group_orthogonality", "partitions",
         "sum_c gamma_i(c) conj(gamma_j(c)) / zeta_c = delta_ij", group_orthogonality},
        {"omega.dim_series", "omega", "[t^n] prod_{r odd} (1 - t^r)^{-1} = |SP_n|", omega_dim},
        {"omega.q_basis_roundtrip", "omega", "p -> q basis -> p is the identity; q_mu -> q_mu", q_basis_roundtrip},
        {"omega.Q_orthogonality", "omega", "<Q_lambda, Q_mu> = delta 2^{l(lambda)}", Q_orthogonality},
        {"omega.Q_basis", "omega", "rank {Q_lambda : |lambda| = n} = |SP_n| = |OP_n|", Q_basis},
        {"omega.exp_log", "omega", "log(sum q_n t^n) = sum_{r odd} 2 p_r t^r / r", exp_log},
        {"omega.json_roundtrip", "omega", "from_json(to_json(f)) = f", omega_json},
        {"spinchar.point_dim_series", "spinchar", "[t^n] prod_{r odd} (1 - t^r)^{-|G_*|} = |OP_n(G_*)|", point_dim},
        {"spinchar.ch_prime_xi", "spinchar", "ch'(xi^n) = q_n", ch_prime_xi},
        {"spinchar.ch_prime_multiplicative", "spinchar",
         "ch'(ab) = ch'(a) ch'(b); rank ch'(degree n) = |OP_n(G_*)|", ch_prime_multiplicative},
        {"spinchar.irreducible_orthogonality", "spinchar",
         "<ch' T^lambda, ch' T^mu> = delta 2^{delta(l(lambda))}", irreducible_orthogonality},
        {"spinchar.star_multiplicative", "spinchar", "star(V (x) W, chi) = star(V, star(W, chi))",
         star_multiplicative},
        {"vertex.exponential_agreement", "vertex",
         "sum_n star(V, xi^n) t^n = exp(sum_{r odd} (2/r) t^r sum_c zeta_c^{-1} V(c) sigma_r(c))", vertex_agreement},
        {"hopf.coassociativity", "hopf", "(Delta (x) 1) Delta = (1 (x) Delta) Delta", coassociativity},
        {"hopf.counit", "hopf", "(epsilon (x) 1) Delta = 1 = (1 (x) epsilon) Delta", counit_laws},
        {"hopf.multiplicativity", "hopf", "Delta(ab) = Delta(a) Delta(b)", coproduct_multiplicative},
        {"hopf.antipode", "hopf", "m (S (x) 1) Delta = eta epsilon = m (1 (x) S) Delta", antipode_identity},
        {"fock.dim_agreement", "fock", "|basis_n| = [t^n] prod_{r odd} (1 + t^r)^{d1} / (1 - t^r)^{d0}", fock_dim},
        {"fock.euler_series", "fock", "sdim F_n = [t^n] prod_{r odd} (1 - t^r)^{-e}", euler_signed},
        {"fock.euler_s_series", "fock", "[t^n] e^s-series(1) = #{strict, n-l even} + 2 #{strict, n-l odd}",
         euler_s_count},
        {"heisenberg.relations", "heisenberg",
         "[a_-m(eta), a_l(V)] = (l/2) delta_ml <eta,V>; [a_m(V), a_l(W)] = 0; [a_-m(eta), a_-l(eta')] = 0",
         heisenberg_relations},
        {"heisenberg.cyclicity", "heisenberg", "annihilators reach a nonzero multiple of the vacuum", cyclicity},
        {"qlambda.susy_exp", "qlambda", "sum_i S^i(E) Lambda^{n-i}(E) = [t^n] exp(sum_{r odd} 2 psi^r(E) t^r / r)",
         susy_exp},
        {"qlambda.q_identities", "qlambda", "Q_t(E+F) = Q_t(E) Q_t(F); Q_t(E-F) = Q_t(E) Q_{-t}(F)",
         q_product_identities},
        {"qlambda.closed_forms", "qlambda",
         "sigma_t, Lambda_t, Q_t exponentials = line products; Lambda_t sigma_{-t} = 1", closed_forms},
        {"qlambda.adams_additive", "qlambda", "psi^r(E +- F) = psi^r(E) +- psi^r(F), r odd <= 9", adams_additive},
        {"qlambda.adams_composition", "qlambda", "psi^r psi^s = psi^{rs}, r, s odd <= 9", adams_composition},
        {"qlambda.trace_dimension", "qlambda",
         "sum_lambda 2^{-delta(l)} trace_lambda(1,...,1) dim T^lambda = (2m)^n", trace_dimension},
    };
    std::stable_sort(items.begin(), items.end(), [](const VerifyItem& a, const VerifyItem& b) {
        return a.suite != b.suite ? a.suite < b.suite : a.id < b.id;
    });
    return items;
}

} // namespace

bool VerifyReport::passed() const
{
    return std::all_of(items.begin(), items.end(), [](const ItemResult& r) { return r.passed; });
}

const std::vector<VerifyItem>& verify_registry()
{
    static const std::vector<VerifyItem> registry = build_registry();
    return registry;
}

std::vector<std::string> verify_suites()
{
    std::vector<std::string> out;
    for (const auto& item : verify_registry())
        if (out.empty() || out.back() != item.suite)
            out.push_back(item.suite);
    out.push_back("all");
    return out;
}

VerifyReport run_suite(const std::string& suite, const VerifyConfig& config)
{
    const auto suites = verify_suites();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end())
        throw Error("unknown suite '" + suite + "'");
    VerifyReport report;
    report.suite = suite;
    report.seed = config.seed;
    for (const auto& item : verify_registry()) {
        if (suite != "all" && item.suite != suite)
            continue;
        ItemResult r = item.run(config);
        r.id = item.id;
        r.suite = item.suite;
        r.identity = item.identity;
        report.items.push_back(std::move(r));
    }
    return report;
}

std::string render_text(const VerifyReport& report)
{
    std::ostringstream out;
    for (const auto& r : report.items) {
        out << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.identity << "\n";
        out << "     " << r.checks << " checks; " << r.detail << "\n";
    }
    const auto failed = std::count_if(report.items.begin(), report.items.end(),
                                      [](const ItemResult& r) { return !r.passed; });
    out << "suite " << report.suite << ", seed " << report.seed << ": " << report.items.size() - failed << "/"
        << report.items.size() << " passed\n";
    return out.str();
}

nlohmann::json to_json(const VerifyReport& report)
{
    nlohmann::json items = nlohmann::json::array();
    for (const auto& r : report.items)
        items.push_back({{"id", r.id},
                         {"suite", r.suite},
                         {"identity", r.identity},
                         {"passed", r.passed},
                         {"checks", r.checks},
                         {"detail", r.detail}});
    return {{"suite", report.suite}, {"seed", report.seed}, {"passed", report.passed()}, {"items", items}};
}

} // namespace qspin
