#include "germ/stdbasis.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "germ/error.hpp"

namespace germ {

namespace {

// One entry of the Mora divisor pool. Snapshots of partial remainders carry
// their own representation data so later reductions can splice it in.
struct PoolEntry {
    const Polynomial* poly;
    std::uint32_t ecart;
    // index into the snapshot store, or -1 for an original generator
    std::ptrdiff_t snapshot;
    // cofactor slot for original generators
    std::size_t gen_index;
};

struct Snapshot {
    Polynomial value;
    Polynomial unit;
    std::vector<Polynomial> cofactors;
};

class MoraEngine {
public:
    MoraEngine(const Polynomial& f, const std::vector<Polynomial>& gens, bool track)
        : ring_(f.ring()), track_(track), h_(f), unit_(Polynomial::constant(ring_, 1)) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            require_same_ring(ring_, gens[i].ring());
            if (track_) cofactors_.emplace_back(ring_);
            if (gens[i].is_zero()) continue;
            pool_.push_back({&gens[i], gens[i].ecart(), -1, i});
        }
    }

    MoraResult run() {
        while (!h_.is_zero()) {
            const PoolEntry* divisor = pick_divisor();
            if (divisor == nullptr) break;
            // copy: store_snapshot may grow pool_ and move its entries
            PoolEntry chosen = *divisor;
            if (chosen.ecart > h_.ecart()) {
                store_snapshot();
            }
            reduce_step(chosen);
        }
        return {std::move(h_), std::move(unit_), std::move(cofactors_)};
    }

private:
    // Minimal-ecart divisor whose leading monomial divides LM(h); ties go to
    // the earliest pool entry.
    const PoolEntry* pick_divisor() const {
        const PoolEntry* best = nullptr;
        const Monomial& lm = h_.leading_monomial();
        for (const auto& entry : pool_) {
            if (!entry.poly->leading_monomial().divides(lm)) continue;
            if (best == nullptr || entry.ecart < best->ecart) best = &entry;
        }
        return best;
    }

    void store_snapshot() {
        snapshots_.push_back({h_, unit_, cofactors_});
        const Snapshot& s = snapshots_.back();
        pool_.push_back({&s.value, s.value.ecart(),
                         static_cast<std::ptrdiff_t>(snapshots_.size() - 1), 0});
    }

    void reduce_step(const PoolEntry& entry) {
        const Polynomial& g = *entry.poly;
        Monomial gamma = h_.leading_monomial().quotient_by(g.leading_monomial());
        Scalar c = h_.leading_coeff() / g.leading_coeff();
        h_ = h_ - g.times_term(gamma, c);
        if (!track_) return;
        if (entry.snapshot < 0) {
            cofactors_[entry.gen_index] =
                cofactors_[entry.gen_index] + Polynomial::term(ring_, gamma, c);
        } else {
            // splice in the snapshot's representation; gamma is never
            // constant here (the order strictly decreased since the
            // snapshot), so the unit's constant term stays 1
            const Snapshot& s = snapshots_[entry.snapshot];
            unit_ = unit_ - s.unit.times_term(gamma, c);
            for (std::size_t i = 0; i < cofactors_.size(); ++i) {
                cofactors_[i] = cofactors_[i] - s.cofactors[i].times_term(gamma, c);
            }
        }
    }

    RingPtr ring_;
    bool track_;
    Polynomial h_;
    Polynomial unit_;
    std::vector<Polynomial> cofactors_;
    std::vector<PoolEntry> pool_;
    std::deque<Snapshot> snapshots_; // deque: stable addresses for the pool
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Scalar one = Scalar::one(f.ring()->field());
    // both inputs are monic
    return f.times_term(l.quotient_by(f.leading_monomial()), one) -
           g.times_term(l.quotient_by(g.leading_monomial()), one);
}

struct Pair {
    std::uint32_t lcm_degree;
    std::uint64_t id;
    std::size_t i, j;
};

struct PairLater {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm_degree != b.lcm_degree) return a.lcm_degree > b.lcm_degree;
        return a.id > b.id;
    }
};

} // namespace

MoraResult mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& gens) {
    return MoraEngine(f, gens, true).run();
}

Polynomial mora_reduce(const Polynomial& f, const std::vector<Polynomial>& gens) {
    return MoraEngine(f, gens, false).run().remainder;
}

StdBasis::StdBasis(Ideal source, std::vector<Polynomial> elements)
    : source_(std::move(source)), elements_(std::move(elements)) {
    staircase_.reserve(elements_.size());
    for (const auto& e : elements_) staircase_.push_back(e.leading_monomial());
}

StdBasis std_basis(const Ideal& I) {
    std::vector<Polynomial> basis;
    basis.reserve(I.gens().size());
    for (const auto& g : I.gens()) basis.push_back(g.monic());

    std::priority_queue<Pair, std::vector<Pair>, PairLater> queue;
    std::uint64_t next_id = 0;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            queue.push({l.degree(), next_id++, i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        Pair pair = queue.top();
        queue.pop();
        const Monomial& lm_i = basis[pair.i].leading_monomial();
        const Monomial& lm_j = basis[pair.j].leading_monomial();
        if (lm_i.coprime_to(lm_j)) continue; // product criterion
        Polynomial sp = s_polynomial(basis[pair.i], basis[pair.j]);
        if (sp.is_zero()) continue;
        Polynomial r = mora_reduce(sp, basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        push_pairs(basis.size() - 1);
    }

    // minimization: drop elements whose leading monomial is divisible by
    // another's. Input generators may share a leading monomial, so ties keep
    // the earliest element only; strict divisors dominate from any position.
    std::vector<Polynomial> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& mi = basis[i].leading_monomial();
        bool dominated = false;
        for (std::size_t j = 0; j < basis.size() && !dominated; ++j) {
            if (j == i) continue;
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mj != mi || j < i)) {
                dominated = true;
            }
        }
        if (!dominated) kept.push_back(basis[i]);
    }
    std::sort(kept.begin(), kept.end(), [](const Polynomial& a, const Polynomial& b) {
        return local_greater(a.leading_monomial(), b.leading_monomial());
    });
    return StdBasis(I, std::move(kept));
}

bool is_member(const Polynomial& f, const StdBasis& basis) {
    require_same_ring(f.ring(), basis.ring());
    if (f.is_zero()) return true;
    return mora_reduce(f, basis.elements()).is_zero();
}

} // namespace germ
