#pragma once

#include <map>
#include <string>
#include <vector>

#include "qspin/core.hpp"
#include "qspin/cyclotomic.hpp"
#include "qspin/group_data.hpp"
#include "qspin/omega.hpp"
#include "qspin/partitions.hpp"
#include "qspin/power_series.hpp"

namespace qspin {

/// Degree-n spin class function, supported on the even split classes OP_n(Gamma_*).
///
/// Keys are all-odd partition-valued functions on the class labels of the group.
class ClassFunction {
public:
    using Values = std::map<LabeledPartitionFn, Cyclotomic>;

    ClassFunction(GroupPtr group, int degree);

    const GroupPtr& group() const { return group_; }
    int degree() const { return degree_; }
    const Values& values() const { return values_; }
    Cyclotomic value(const LabeledPartitionFn& rho) const;
    bool is_zero() const { return values_.empty(); }

    /// Throws unless rho is an even split class of this degree.
    void set(const LabeledPartitionFn& rho, const Cyclotomic& v);

    /// Coefficient of sigma^rho, chi_rho / Z_rho.
    Cyclotomic sigma_coordinate(const LabeledPartitionFn& rho) const;

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator-=(const ClassFunction& other);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const Rational& s) { return a.scale(Cyclotomic(s)); }
    friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a.scale(s); }

    /// Spin product, sigma^rho * sigma^tau = sigma^{rho u tau}.
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

    friend bool operator==(const ClassFunction& a, const ClassFunction& b);

    std::string str() const;

private:
    void check_compatible(const ClassFunction& other) const;
    ClassFunction& scale(const Cyclotomic& s);

    GroupPtr group_;
    int degree_;
    Values values_;
};

/// Class functions of degrees 0..N; component n is the coefficient of t^n.
using GradedAlgebraElem = TruncatedSeries<ClassFunction>;

GradedAlgebraElem graded_zero(const GroupPtr& group, std::size_t N);

struct SplitClasses {
    std::vector<LabeledPartitionFn> even; ///< OP_n(Gamma_*)
    std::vector<LabeledPartitionFn> odd;  ///< SP_n^-(Gamma_*): strict, odd total length
};

SplitClasses split_classes(int n, const GroupData& group);

/// sigma_r(c): value r * zeta_c at the class (r) colored c. Throws on even r.
ClassFunction sigma(int r, std::size_t c, const GroupPtr& group);
/// sigma^rho: value Z_rho at rho.
ClassFunction sigma_rho(const LabeledPartitionFn& rho, const GroupPtr& group);
/// Basic spin character: value 2^{l(rho)} on every rho in OP_n.
ClassFunction xi(int n, const GroupPtr& group);
ClassFunction one(const GroupPtr& group);

/// sum_rho 2^{l(rho)} Z_rho^{-1} chi_rho p_rho, colored by the class labels. Needs rational values.
OmegaElem ch_prime(const ClassFunction& chi);
/// Inverse of ch_prime on a homogeneous element.
ClassFunction ch_prime_inverse(const OmegaElem& f, const GroupPtr& group);

/// Irreducible spin character T^lambda for trivial Gamma: ch' T^lambda = 2^{-floor(l/2)} Q_lambda.
ClassFunction irreducible_char(const Partition& lambda, const GroupPtr& group);

/// V^{n} * chi: value chi_rho prod_c gamma_V(c)^{l(rho(c))}.
ClassFunction star(const std::vector<Cyclotomic>& character, const ClassFunction& chi);
/// Same with gamma_V the i-th irreducible character; throws without a character table.
ClassFunction star(std::size_t irreducible, const ClassFunction& chi);

/// Q(V, t) truncated at t^N: component n is V^{n} * xi^n.
GradedAlgebraElem vertex_Q(const std::vector<Cyclotomic>& character, const GroupPtr& group, std::size_t N);
/// Q(V, t) as exp(sum_{r odd} (2/r) t^r sum_c zeta_c^{-1} gamma_V(c) sigma_r(c)).
GradedAlgebraElem vertex_Q_exponential(const std::vector<Cyclotomic>& character, const GroupPtr& group,
                                       std::size_t N);

/// prod_{r odd} (1 - t^r)^{-|Gamma_*|}.
PowerSeries dim_series_point(const GroupData& group, std::size_t N);

/// Element of the k-fold tensor power, in sigma^{a_1} (x) ... (x) sigma^{a_k} coordinates.
class Tensor {
public:
    using Key = std::vector<LabeledPartitionFn>;
    using Terms = std::map<Key, Cyclotomic>;

    Tensor(GroupPtr group, std::size_t arity);
    static Tensor from_class_function(const ClassFunction& chi);

    const GroupPtr& group() const { return group_; }
    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    void add_term(const Key& key, const Cyclotomic& c);

    /// Back to a class function; arity must be 1.
    ClassFunction to_class_function() const;

    /// Slotwise product (a_1 (x) ... ) (b_1 (x) ...) = a_1 b_1 (x) ..., no signs.
    friend Tensor operator*(const Tensor& a, const Tensor& b);
    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend bool operator==(const Tensor& a, const Tensor& b);

private:
    GroupPtr group_;
    std::size_t arity_;
    Terms terms_;
};

/// Delta sigma^rho = sum_{alpha in rho} prod binom(m_r(c), m^alpha_r(c)) sigma^alpha (x) sigma^{rho - alpha}.
Tensor coproduct(const ClassFunction& chi);
Tensor coproduct_at(const Tensor& t, std::size_t slot);
/// epsilon(sigma^empty) = 1, zero in positive degree.
Tensor counit_at(const Tensor& t, std::size_t slot);
/// S(sigma^rho) = (-1)^{l(rho)} sigma^rho.
Tensor antipode_at(const Tensor& t, std::size_t slot);
/// Multiplies slots slot and slot + 1.
Tensor multiply_at(const Tensor& t, std::size_t slot);

Cyclotomic counit(const ClassFunction& chi);
ClassFunction antipode(const ClassFunction& chi);

struct CharTableRow {
    std::string name;
    std::vector<Cyclotomic> values;
};

struct CharTable {
    std::vector<LabeledPartitionFn> classes;
    std::vector<Integer> centralizers;
    std::vector<CharTableRow> rows;
    std::vector<std::string> warnings;
};

/// sigma^rho rows, xi^n, V_i^{n} * xi^n per irreducible, and T^lambda for trivial Gamma.
CharTable chartable(const GroupPtr& group, int n);

} // namespace qspin
