#pragma once

#include <memory>
#include <mutex>

#include "cebetti/lie.hpp"
#include "cebetti/linalg.hpp"

namespace cebetti {

/// Monomial in the suspended generators, in canonical form: ids strictly
/// increasing, exponents positive, odd-ce_degree generators with exponent
/// exactly 1.
struct Monomial {
    std::vector<std::pair<int, int>> exponents;  // (generator id, exponent)

    int exponent_of(int id) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str(const LieModel& lm) const;
};

/// Ascending lexicographic order on dense exponent vectors (missing ids
/// count as zero); the canonical basis order within each degree.
bool monomial_lex_less(const Monomial& a, const Monomial& b);

int monomial_ce_degree(const LieModel& lm, const Monomial& m);
int monomial_weight(const LieModel& lm, const Monomial& m);

/// The weight-k slice of the Chevalley-Eilenberg complex: monomial bases per
/// CE degree and the differential matrices between them. D_d maps the
/// degree-d basis to the degree-(d-1) basis; D^2 = 0 is checked at assembly.
struct WeightSlice {
    WeightSlice();

    int k = 0;
    std::map<int, std::vector<Monomial>> bases;        // ce_degree -> ordered monomials
    std::map<int, SparseMatrix> differentials;         // ce_degree d -> matrix C_d -> C_{d-1}

    int dim(int ce_degree) const;
    int max_degree() const;
    const SparseMatrix& differential(int ce_degree) const;  // zero matrix if absent
    int index_of(int ce_degree, const Monomial& m) const;   // -1 if absent

    /// rank of the differential at a degree, computed once and cached.
    int rank_of(int ce_degree) const;

private:
    struct Caches;
    std::shared_ptr<Caches> caches_;
};

/// Betti numbers over a sweep of weights, keyed by (k, reported degree).
/// Zero entries are omitted.
struct BettiTable {
    Variant variant = Variant::Standard;
    int degree_offset_per_weight = 0;
    std::map<std::pair<int, int>, int> entries;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

class CeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Hard cap on the number of monomials in one slice.
inline constexpr long kSliceMonomialCap = 1'000'000;
/// Default largest weight the CLI accepts without an explicit override.
inline constexpr int kDefaultWeightCap = 12;

/// All canonical monomials of weight k, grouped by CE degree, each list in
/// lexicographic exponent-vector order. Throws CeError past the monomial cap.
std::map<int, std::vector<Monomial>> enumerate_slice_basis(const LieModel& lm, int k);

/// Assembles the differential on a slice basis, extending
/// D(sigma x ^ sigma y) = (-1)^{|x|} sigma [x,y] as a coderivation with
/// Koszul signs. Verifies D^2 = 0 and aborts naming the offending monomial
/// otherwise.
WeightSlice assemble_differential(const LieModel& lm, std::map<int, std::vector<Monomial>> basis);

/// Convenience: enumerate + assemble.
WeightSlice build_slice(const LieModel& lm, int k);

/// Betti numbers of the weight-k slice, keyed by reported degree
/// (CE degree shifted per variant). Zero entries omitted.
std::map<int, int> betti(const LieModel& lm, int k);
std::map<int, int> betti(const LieModel& lm, const WeightSlice& slice);

/// Cycle and boundary bases at one CE degree; the cycle basis lists the
/// boundary basis first and extends it.
std::pair<SubspaceBasis, SubspaceBasis> homology_basis(const WeightSlice& slice, int ce_degree);

struct EulerCheck {
    long from_chains = 0;
    long from_homology = 0;
};

/// Euler characteristic of the slice both from raw dimensions and from
/// homology; throws CeError if they differ (they cannot, unless the linear
/// algebra is broken).
EulerCheck euler_characteristic(const LieModel& lm, int k);
EulerCheck euler_characteristic(const LieModel& lm, const WeightSlice& slice);

/// Per-LieModel slice store; distinct weights may be requested concurrently.
class SliceStore {
public:
    explicit SliceStore(const LieModel& lm) : lm_(lm) {}

    const LieModel& lie_model() const { return lm_; }
    std::shared_ptr<const WeightSlice> slice(int k);

private:
    const LieModel lm_;
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const WeightSlice>> cache_;
};

/// Betti table over an inclusive weight range.
BettiTable betti_table(SliceStore& store, int k_lo, int k_hi);

}  // namespace cebetti
