#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qspin/compact_rational.hpp"
#include "qspin/core.hpp"
#include "qspin/group_data.hpp"
#include "qspin/power_series.hpp"

namespace qspin {

struct SectorBasisElement {
    std::size_t class_index;
    int parity; ///< 0 even, 1 odd
    std::string name;
};

/// Orbifold sector data: graded dimensions (d0_c, d1_c) per conjugacy class.
class SectorModel {
public:
    struct Sector {
        std::size_t class_index;
        int d0;
        int d1;
    };

    SectorModel(GroupPtr group, std::vector<Sector> sectors);
    /// One sector (d0, d1) over the trivial group.
    static SectorModel point(int d0, int d1);

    static SectorModel from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir,
                                 const std::string& source = "<json>");
    static SectorModel load(const std::filesystem::path& path);

    const GroupPtr& group() const { return group_; }
    const std::vector<Sector>& sectors() const { return sectors_; }
    /// Even elements of every sector first, then odd ones, each in sector order.
    const std::vector<SectorBasisElement>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    int parity(std::size_t b) const { return basis_.at(b).parity; }
    int even_dim() const { return even_dim_; }
    int odd_dim() const { return odd_dim_; }
    /// e = sum_c (d0_c - d1_c).
    long euler_number() const { return static_cast<long>(even_dim_) - odd_dim_; }

    std::string describe() const;

private:
    GroupPtr group_;
    std::vector<Sector> sectors_;
    std::vector<SectorBasisElement> basis_;
    int even_dim_ = 0;
    int odd_dim_ = 0;
};

/// Coefficients on the sector basis (a vector V or a dual eta).
using SectorVector = std::vector<Rational>;
using DualVector = std::vector<Rational>;

Rational pairing(const DualVector& eta, const SectorVector& v);

/// Generator (r, b) packed as (r << 16) | b.
using Generator = std::uint32_t;
Generator make_generator(int r, std::size_t b);
int generator_mode(Generator g);
std::size_t generator_basis(Generator g);

/// Monomial in the free supersymmetric algebra: generators sorted ascending,
/// odd generators at most once. The product is taken in the stored order.
struct FockBasisState {
    boost::container::small_vector<Generator, 12> generators;

    int degree() const;
    friend std::strong_ordering operator<=>(const FockBasisState& a, const FockBasisState& b)
    {
        return std::lexicographical_compare_three_way(a.generators.begin(), a.generators.end(),
                                                      b.generators.begin(), b.generators.end());
    }
    friend bool operator==(const FockBasisState& a, const FockBasisState& b) { return a.generators == b.generators; }
};

int state_parity(const FockBasisState& s, const SectorModel& model);
std::string state_str(const FockBasisState& s, const SectorModel& model);

/// Finitely supported combination of basis states, kept sorted with no zero coefficients.
class FockVector {
public:
    using Term = std::pair<FockBasisState, CompactRational>;

    FockVector() = default;
    static FockVector vacuum();
    static FockVector basis(FockBasisState s);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const FockBasisState& s) const;

    FockVector& operator+=(const FockVector& other);
    FockVector& operator-=(const FockVector& other);
    FockVector& operator*=(const Rational& s);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(FockVector a, const Rational& s) { return a *= s; }
    friend bool operator==(const FockVector&, const FockVector&) = default;

    /// Builds from unsorted terms with repeats, merging and dropping zeros.
    static FockVector from_terms(std::vector<Term> terms);

private:
    FockVector& merge(const FockVector& other, bool negate);

    std::vector<Term> terms_;
};

std::vector<FockBasisState> fock_basis(const SectorModel& model, int n);
void for_each_fock_state(const SectorModel& model, int n, const std::function<void(const FockBasisState&)>& visit);

/// prod_{r odd} (1 + t^r)^{d1} / (1 - t^r)^{d0}.
PowerSeries dim_series(const SectorModel& model, std::size_t N);

/// (r/2) times left multiplication by sum_b V_b (r, b). Throws on even r.
FockVector a_create(int r, const SectorVector& v, const FockVector& x, const SectorModel& model);
/// Superderivation with (r, b) -> <eta, b>, parity of each component = parity of b. Throws on even r.
FockVector a_annihilate(int r, const DualVector& eta, const FockVector& x, const SectorModel& model);

/// varpi_n(V) = sum_b V_b state{(n, b)}.
FockVector varpi(int n, const SectorVector& v, const SectorModel& model);
/// Coefficients of the single-generator states (n, b).
SectorVector ch_n(int n, const FockVector& x, const SectorModel& model);

/// sum over basis states of degree n of (-1)^parity.
Integer superdimension(const SectorModel& model, int n);

/// Applies annihilators until the vacuum is reached; true if a nonzero multiple of it remains.
bool cyclicity_check(const FockVector& x, const SectorModel& model);

struct CommutatorReport {
    bool passed = true;
    std::size_t checks = 0;
    std::string first_failure;
};

/// Checks the three bracket relations on every basis state of degree <= D, for
/// `samples` random draws of (eta, V, eta', W) seeded by `seed`, over modes m, l odd <= D.
CommutatorReport commutator_check(const SectorModel& model, int D, int samples, std::uint64_t seed);

/// prod_{r odd} (1 - t^r)^{-e}.
PowerSeries euler_series(long e, std::size_t N);
/// prod_{r odd}(1 - t^r)^{-e} + prod_{r odd}(1 + t^r)^e (prod_{r even}(1 + t^r)^e - prod_{r even}(1 - t^r)^e) / 2.
PowerSeries euler_s_series(long e, std::size_t N);

} // namespace qspin
