#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qspin/core.hpp"
#include "qspin/partitions.hpp"
#include "qspin/power_series.hpp"

namespace qspin {

class GroupData;

/// Element of Omega = Q[p_1, p_3, p_5, ...], colored by a label set.
///
/// Stored in the odd power-sum basis: key rho (all parts odd) stands for
/// prod_c prod_i p_{rho(c)_i}(c). The uncolored ring is the singleton label set.
class OmegaElem {
public:
    using Terms = std::map<LabeledPartitionFn, Rational>;

    explicit OmegaElem(LabelSet labels = LabelSet::singleton());

    static OmegaElem scalar(const Rational& value, LabelSet labels = LabelSet::singleton());
    /// p_rho; throws on even parts.
    static OmegaElem p(const LabeledPartitionFn& rho, LabelSet labels = LabelSet::singleton());

    const LabelSet& labels() const { return labels_; }
    const Terms& terms() const { return terms_; }
    Rational coefficient(const LabeledPartitionFn& rho) const;
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * p_rho.
    void add_term(const LabeledPartitionFn& rho, const Rational& c);

    /// Degree of every term; throws if the element is zero or inhomogeneous.
    int homogeneous_degree() const;
    /// The degree-n part.
    OmegaElem component(int n) const;

    OmegaElem& operator+=(const OmegaElem& other);
    OmegaElem& operator-=(const OmegaElem& other);
    OmegaElem& operator*=(const Rational& s);
    friend OmegaElem operator+(OmegaElem a, const OmegaElem& b) { return a += b; }
    friend OmegaElem operator-(OmegaElem a, const OmegaElem& b) { return a -= b; }
    friend OmegaElem operator*(OmegaElem a, const Rational& s) { return a *= s; }
    friend OmegaElem operator*(const Rational& s, OmegaElem a) { return a *= s; }
    friend OmegaElem operator*(const OmegaElem& a, const OmegaElem& b);

    friend bool operator==(const OmegaElem& a, const OmegaElem& b);

    /// "4/3 p(1,1,1) - 4/3 p(3)"; colored keys print as p{c0:(1), c1:(3)}.
    std::string str() const;

    nlohmann::json to_json() const;
    static OmegaElem from_json(const nlohmann::json& doc);

private:
    void check_labels(const OmegaElem& other) const;

    LabelSet labels_;
    Terms terms_;
};

/// p_mu at one color; throws if mu has an even part.
OmegaElem p_monomial(const Partition& mu, std::size_t label = 0, LabelSet labels = LabelSet::singleton());

/// q_n = [t^n] exp(sum_{r odd} 2 p_r t^r / r), uncolored.
OmegaElem q_in_p(int n);

/// The same series placed at one color of a larger label set.
OmegaElem q_in_p(int n, std::size_t label, const LabelSet& labels);

/// Colored q_n = [t^n] exp(sum_{r odd} (2/r) t^r sum_c zeta_c^{-1} p_r(c)).
OmegaElem q_colored(int n, const GroupData& group);

/// q_mu = prod_i q_{mu_i} for any partition mu.
OmegaElem q_monomial(const Partition& mu);

/// Schur Q-function Q_lambda in the p basis; throws unless lambda is strict.
OmegaElem Q_in_p(const Partition& lambda);

/// <p_mu, p_nu> = delta z_mu 2^{-l(mu)} on every color.
Rational inner(const OmegaElem& f, const OmegaElem& g);
/// Colored form: <p_mu(c), p_nu(c)> = delta z_mu (zeta_c / 2)^{l(mu)}.
Rational inner(const OmegaElem& f, const OmegaElem& g, const GroupData& group);

/// prod_{r odd} (1 - t^r)^{-colors}; uncolored coefficients are |SP_n|.
PowerSeries omega_dim_series(std::size_t N, std::size_t colors = 1);

/// Coefficients of a homogeneous uncolored f in the basis {q_mu : mu odd, |mu| = n}.
std::map<Partition, Rational> to_q_basis(const OmegaElem& f);
/// Coefficients of a homogeneous uncolored f in the basis {Q_lambda : lambda strict, |lambda| = n}.
std::map<Partition, Rational> to_Q_basis(const OmegaElem& f);

/// Rank of a family of elements, by exact elimination on their p coefficients.
std::size_t rank(const std::vector<OmegaElem>& family);

/// Solves f = sum_i x_i basis[i]; throws if f is outside the span or the family is dependent.
std::vector<Rational> solve_in_basis(const OmegaElem& f, const std::vector<OmegaElem>& basis);

} // namespace qspin
