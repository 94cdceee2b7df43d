#include "cebetti/ce.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace cebetti {

int Monomial::exponent_of(int id) const {
    for (const auto& [gid, e] : exponents)
        if (gid == id) return e;
    return 0;
}

bool monomial_lex_less(const Monomial& a, const Monomial& b) {
    auto ia = a.exponents.begin();
    auto ib = b.exponents.begin();
    while (ia != a.exponents.end() || ib != b.exponents.end()) {
        int id_a = ia == a.exponents.end() ? std::numeric_limits<int>::max() : ia->first;
        int id_b = ib == b.exponents.end() ? std::numeric_limits<int>::max() : ib->first;
        int id = std::min(id_a, id_b);
        int ea = id_a == id ? ia->second : 0;
        int eb = id_b == id ? ib->second : 0;
        if (ea != eb) return ea < eb;
        if (id_a == id) ++ia;
        if (id_b == id) ++ib;
    }
    return false;
}

std::string Monomial::str(const LieModel& lm) const {
    if (exponents.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, e] : exponents) {
        if (!first) os << "*";
        first = false;
        os << lm.generator(id).source.label;
        if (lm.generator(id).weight == 2) os << "~";
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

int monomial_ce_degree(const LieModel& lm, const Monomial& m) {
    int d = 0;
    for (const auto& [id, e] : m.exponents) d += e * lm.generator(id).ce_degree;
    return d;
}

int monomial_weight(const LieModel& lm, const Monomial& m) {
    int w = 0;
    for (const auto& [id, e] : m.exponents) w += e * lm.generator(id).weight;
    return w;
}

struct WeightSlice::Caches {
    std::mutex mutex;
    std::map<int, SparseMatrix> zero_matrices;
    std::map<int, int> ranks;
};

WeightSlice::WeightSlice() : caches_(std::make_shared<Caches>()) {}

int WeightSlice::dim(int ce_degree) const {
    auto it = bases.find(ce_degree);
    return it == bases.end() ? 0 : static_cast<int>(it->second.size());
}

int WeightSlice::max_degree() const { return bases.empty() ? -1 : bases.rbegin()->first; }

const SparseMatrix& WeightSlice::differential(int ce_degree) const {
    auto it = differentials.find(ce_degree);
    if (it != differentials.end()) return it->second;
    std::lock_guard<std::mutex> lock(caches_->mutex);
    auto zc = caches_->zero_matrices.find(ce_degree);
    if (zc == caches_->zero_matrices.end())
        zc = caches_->zero_matrices
                 .emplace(ce_degree, SparseMatrix(dim(ce_degree - 1), dim(ce_degree)))
                 .first;
    return zc->second;
}

int WeightSlice::rank_of(int ce_degree) const {
    auto it = differentials.find(ce_degree);
    if (it == differentials.end()) return 0;
    {
        std::lock_guard<std::mutex> lock(caches_->mutex);
        auto hit = caches_->ranks.find(ce_degree);
        if (hit != caches_->ranks.end()) return hit->second;
    }
    int r = rank(it->second);
    std::lock_guard<std::mutex> lock(caches_->mutex);
    return caches_->ranks.emplace(ce_degree, r).first->second;
}

int WeightSlice::index_of(int ce_degree, const Monomial& m) const {
    auto it = bases.find(ce_degree);
    if (it == bases.end()) return -1;
    auto pos = std::lower_bound(it->second.begin(), it->second.end(), m, monomial_lex_less);
    if (pos == it->second.end() || !(*pos == m)) return -1;
    return static_cast<int>(pos - it->second.begin());
}

std::map<int, std::vector<Monomial>> enumerate_slice_basis(const LieModel& lm, int k) {
    if (k < 0) throw CeError("enumerate_slice_basis: negative weight");
    std::map<int, std::vector<Monomial>> out;
    long total = 0;

    // Depth-first over generators in id order, exponents ascending, so each
    // degree's list comes out in lexicographic exponent-vector order.
    std::vector<std::pair<int, int>> stack;
    auto emit = [&](int degree) {
        if (++total > kSliceMonomialCap)
            throw CeError("slice dimension cap exceeded (" + std::to_string(kSliceMonomialCap) +
                          " monomials) at weight " + std::to_string(k));
        Monomial m;
        m.exponents = stack;
        out[degree].push_back(std::move(m));
    };
    const auto& gens = lm.generators;
    auto rec = [&](auto&& self, size_t idx, int remaining, int degree) -> void {
        if (remaining == 0) {
            emit(degree);
            return;
        }
        if (idx == gens.size()) return;
        const auto& g = gens[idx];
        int max_exp = remaining / g.weight;
        if (g.ce_degree % 2 != 0) max_exp = std::min(max_exp, 1);
        for (int e = 0; e <= max_exp; ++e) {
            if (e > 0) stack.push_back({g.id, e});
            self(self, idx + 1, remaining - e * g.weight, degree + e * g.ce_degree);
            if (e > 0) stack.pop_back();
        }
    };
    rec(rec, 0, k, 0);

    // The recursion with exponent 0 first yields ascending lexicographic
    // order already; keep the contract explicit.
    for (auto& [degree, monomials] : out)
        std::sort(monomials.begin(), monomials.end(), monomial_lex_less);
    return out;
}

namespace {

// One term of D applied to a monomial: the bracket target times the
// remaining factors, in canonical form with the accumulated Koszul sign.
void emit_term(const LieModel& lm, const Monomial& source, int gen_a, int gen_b, long multiplicity,
               int sign_exponent, const BracketTerms& bracket, const WeightSlice& slice,
               int source_degree, int source_index, SparseMatrix& matrix) {
    // Remaining factors after removing one copy each of gen_a and gen_b.
    Monomial rest;
    for (const auto& [id, e] : source.exponents) {
        int drop = (id == gen_a ? 1 : 0) + (id == gen_b ? 1 : 0);
        if (e - drop > 0) rest.exponents.push_back({id, e - drop});
    }
    for (const auto& [target, coeff] : bracket) {
        const auto& tg = lm.generator(target);
        // Insert the bracket target from the front into sorted position.
        int insert_sign = 0;
        bool zero = false;
        Monomial result;
        bool placed = false;
        for (const auto& [id, e] : rest.exponents) {
            if (!placed && id >= target) {
                if (id == target) {
                    if (tg.ce_degree % 2 != 0) zero = true;
                    result.exponents.push_back({id, e + 1});
                } else {
                    result.exponents.push_back({target, 1});
                    result.exponents.push_back({id, e});
                }
                placed = true;
                continue;
            }
            if (!placed) insert_sign += tg.ce_degree * e * lm.generator(id).ce_degree;
            result.exponents.push_back({id, e});
        }
        if (!placed) result.exponents.push_back({target, 1});
        if (zero) continue;

        int row = slice.index_of(source_degree - 1, result);
        if (row < 0) throw CeError("assemble_differential: target monomial missing from basis");
        Rational value = coeff * Rational(multiplicity);
        if ((sign_exponent + insert_sign) % 2 != 0) value = -value;
        matrix.add(row, source_index, value);
    }
}

}  // namespace

WeightSlice assemble_differential(const LieModel& lm, std::map<int, std::vector<Monomial>> basis) {
    WeightSlice slice;
    slice.bases = std::move(basis);
    if (!slice.bases.empty()) {
        // Weight is constant across the slice; read it off any monomial.
        slice.k = monomial_weight(lm, slice.bases.begin()->second.front());
    }

    for (const auto& [degree, monomials] : slice.bases) {
        SparseMatrix matrix(slice.dim(degree - 1), static_cast<int>(monomials.size()));
        for (int col = 0; col < static_cast<int>(monomials.size()); ++col) {
            const Monomial& m = monomials[col];
            // Prefix degree sums over the expanded factor sequence, per
            // generator block.
            int prefix = 0;
            std::vector<std::tuple<int, int, int>> blocks;  // id, exponent, degrees before block
            for (const auto& [id, e] : m.exponents) {
                blocks.push_back({id, e, prefix});
                prefix += e * lm.generator(id).ce_degree;
            }
            for (size_t a = 0; a < blocks.size(); ++a) {
                auto [id_a, e_a, before_a] = blocks[a];
                const auto& ga = lm.generator(id_a);
                if (ga.weight != 1) continue;
                // Same-generator pairs: only even CE degree admits exponent
                // >= 2, and even degree makes every Koszul factor vanish.
                if (e_a >= 2) {
                    auto it = lm.bracket.find({id_a, id_a});
                    if (it != lm.bracket.end())
                        emit_term(lm, m, id_a, id_a, static_cast<long>(e_a) * (e_a - 1) / 2,
                                  ga.ce_degree - 1, it->second, slice, degree, col, matrix);
                }
                for (size_t b = a + 1; b < blocks.size(); ++b) {
                    auto [id_b, e_b, before_b] = blocks[b];
                    const auto& gb = lm.generator(id_b);
                    if (gb.weight != 1) continue;
                    auto it = lm.bracket.find({id_a, id_b});
                    if (it == lm.bracket.end()) continue;
                    // Koszul sign of extracting one copy of each to the front.
                    int eps = ga.ce_degree * before_a + gb.ce_degree * (before_b - ga.ce_degree);
                    emit_term(lm, m, id_a, id_b, static_cast<long>(e_a) * e_b,
                              eps + ga.ce_degree - 1, it->second, slice, degree, col, matrix);
                }
            }
        }
        slice.differentials.emplace(degree, std::move(matrix));
    }

    // D^2 = 0, checked column by column so a violation names its monomial.
    for (const auto& [degree, d_here] : slice.differentials) {
        auto below = slice.differentials.find(degree - 1);
        if (below == slice.differentials.end()) continue;
        SparseMatrix square = below->second * d_here;
        if (!square.is_zero()) {
            int col = square.entries().begin()->first.second;
            throw CeError("assemble_differential: D^2 != 0 on monomial " +
                          slice.bases.at(degree)[col].str(lm) + " at weight " +
                          std::to_string(slice.k) + ", degree " + std::to_string(degree));
        }
    }
    return slice;
}

WeightSlice build_slice(const LieModel& lm, int k) {
    auto basis = enumerate_slice_basis(lm, k);
    WeightSlice slice = assemble_differential(lm, std::move(basis));
    slice.k = k;  // weight-0 slice has only the empty monomial; pin k anyway
    return slice;
}

std::map<int, int> betti(const LieModel& lm, const WeightSlice& slice) {
    std::map<int, int> out;
    for (const auto& [degree, monomials] : slice.bases) {
        int b = static_cast<int>(monomials.size()) - slice.rank_of(degree) -
                slice.rank_of(degree + 1);
        if (b != 0) out[lm.reported_degree(degree, slice.k)] = b;
    }
    return out;
}

std::map<int, int> betti(const LieModel& lm, int k) {
    WeightSlice slice = build_slice(lm, k);
    return betti(lm, slice);
}

std::pair<SubspaceBasis, SubspaceBasis> homology_basis(const WeightSlice& slice, int ce_degree) {
    const SparseMatrix& d_out = slice.differential(ce_degree);
    const SparseMatrix& d_in = slice.differential(ce_degree + 1);
    SubspaceBasis boundaries = image_basis(d_in);
    SubspaceBasis kernel = kernel_basis(d_out);

    SubspaceBasis cycles;
    cycles.ambient_dim = slice.dim(ce_degree);
    cycles.vectors = boundaries.vectors;
    for (int idx : extend_basis(boundaries, kernel.vectors))
        cycles.vectors.push_back(kernel.vectors[idx]);
    return {cycles, boundaries};
}

EulerCheck euler_characteristic(const LieModel& lm, int k) {
    return euler_characteristic(lm, build_slice(lm, k));
}

EulerCheck euler_characteristic(const LieModel& lm, const WeightSlice& slice) {
    const int k = slice.k;
    EulerCheck result;
    for (const auto& [degree, monomials] : slice.bases) {
        long sign = degree % 2 == 0 ? 1 : -1;
        result.from_chains += sign * static_cast<long>(monomials.size());
    }
    for (const auto& [reported, b] : betti(lm, slice)) {
        int ce_degree = reported + k * lm.degree_offset_per_weight;
        result.from_homology += (ce_degree % 2 == 0 ? 1 : -1) * static_cast<long>(b);
    }
    if (result.from_chains != result.from_homology)
        throw CeError("euler_characteristic: chain and homology sums disagree at weight " +
                      std::to_string(k));
    return result;
}

std::shared_ptr<const WeightSlice> SliceStore::slice(int k) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
    }
    auto built = std::make_shared<const WeightSlice>(build_slice(lm_, k));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(k, std::move(built));
    return it->second;
}

BettiTable betti_table(SliceStore& store, int k_lo, int k_hi) {
    BettiTable table;
    table.variant = store.lie_model().variant;
    table.degree_offset_per_weight = store.lie_model().degree_offset_per_weight;
    for (int k = k_lo; k <= k_hi; ++k) {
        auto slice = store.slice(k);
        for (const auto& [degree, b] : betti(store.lie_model(), *slice))
            table.entries[{k, degree}] = b;
    }
    return table;
}

}  // namespace cebetti
