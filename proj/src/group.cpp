#include "crg/group.hpp"

#include <algorithm>
#include <unordered_map>

#include "crg/errors.hpp"
#include "crg/numutil.hpp"

namespace crg {

namespace {

Cyclotomic nontrivial_eigenvalue(const CMatrix& m, unsigned n) {
    // A reflection fixes a hyperplane, so its trace is (n - 1) + eigenvalue.
    return m.trace() - Cyclotomic(Rational(static_cast<long>(n) - 1));
}

struct KeyHash {
    std::size_t operator()(const std::vector<Cyclotomic>& v) const {
        std::size_t h = v.size();
        for (const auto& x : v) h = h * 1099511628211ULL ^ x.hash();
        return h;
    }
};

} // namespace

ReflectionGroup ReflectionGroup::build(const GroupSpec& spec, std::size_t max_order) {
    if (spec.rank == 0 || spec.generators.empty())
        throw build_error("group spec has no generators");
    if (spec.expected_degrees.empty())
        throw build_error("group spec has no degree data");
    if (spec.expected_order > Int(static_cast<unsigned long>(max_order)))
        throw resource_error("group too large: |" + spec.name + "| = " + spec.expected_order.get_str() +
                             " exceeds the size bound " + std::to_string(max_order));

    ReflectionGroup W;
    W.spec_ = spec;

    uint64_t ambient = 1;
    for (const auto& g : spec.generators) {
        if (g.size() != spec.rank) throw build_error("generator dimension mismatch");
        ambient = lcm_u64(ambient, g.entry_order());
    }
    W.ambient_ = static_cast<unsigned>(ambient);
    for (auto& g : W.spec_.generators) g = g.embedded(W.ambient_);

    const CMatrix id = CMatrix::identity(spec.rank, W.ambient_);
    for (const auto& g : W.spec_.generators)
        if (crg::rank(g - id) != 1)
            throw build_error("catalog generator is not a reflection");

    W.enumerate(max_order);
    if (Int(static_cast<unsigned long>(W.elements_.size())) != spec.expected_order)
        throw build_error("catalog inconsistency: enumerated " + std::to_string(W.elements_.size()) +
                          " elements of " + spec.name + ", catalog predicts " +
                          spec.expected_order.get_str());

    W.build_inverses();
    W.build_classes();
    W.find_reflections();
    W.group_hyperplanes();
    W.build_coxeter();

    unsigned expo = 1;
    for (std::size_t k = 0; k < W.classes_.size(); ++k)
        expo = static_cast<unsigned>(lcm_u64(expo, W.element_order(W.class_rep(static_cast<unsigned>(k)))));
    W.exponent_ = expo;
    return W;
}

void ReflectionGroup::enumerate(std::size_t max_order) {
    const unsigned ngen = static_cast<unsigned>(spec_.generators.size());
    std::unordered_map<CMatrix, unsigned> index;
    elements_.push_back(CMatrix::identity(spec_.rank, ambient_));
    index.emplace(elements_[0], 0);
    parent_.push_back(0);
    pgen_.push_back(0);
    rmul_.emplace_back(ngen, 0u);

    gen_index_.assign(ngen, 0);
    for (std::size_t at = 0; at < elements_.size(); ++at) {
        for (unsigned s = 0; s < ngen; ++s) {
            const CMatrix m = elements_[at] * spec_.generators[s];
            auto it = index.find(m);
            if (it == index.end()) {
                if (elements_.size() >= max_order)
                    throw resource_error("group too large: closure of " + spec_.name + " exceeds " +
                                         std::to_string(max_order) + " elements");
                const unsigned idx = static_cast<unsigned>(elements_.size());
                elements_.push_back(m);
                index.emplace(m, idx);
                parent_.push_back(static_cast<unsigned>(at));
                pgen_.push_back(s);
                rmul_.emplace_back(ngen, 0u);
                rmul_[at][s] = idx;
            } else {
                rmul_[at][s] = it->second;
            }
        }
    }
    for (unsigned s = 0; s < ngen; ++s) gen_index_[s] = rmul_[0][s];
}

std::vector<unsigned> ReflectionGroup::word(unsigned g) const {
    std::vector<unsigned> w;
    while (g != 0) {
        w.push_back(pgen_[g]);
        g = parent_[g];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

unsigned ReflectionGroup::mul(unsigned a, unsigned b) const {
    unsigned idx = a;
    unsigned g = b;
    // Walk the word of b; collect it by climbing parents, then replay.
    const std::vector<unsigned> w = word(g);
    for (unsigned s : w) idx = rmul_[idx][s];
    return idx;
}

std::vector<unsigned> ReflectionGroup::right_translation(unsigned b) const {
    const std::vector<unsigned> w = word(b);
    std::vector<unsigned> t(elements_.size());
    for (unsigned g = 0; g < elements_.size(); ++g) {
        unsigned idx = g;
        for (unsigned s : w) idx = rmul_[idx][s];
        t[g] = idx;
    }
    return t;
}

void ReflectionGroup::build_inverses() {
    const unsigned ngen = static_cast<unsigned>(spec_.generators.size());
    const std::size_t N = elements_.size();

    // Index of each generator's inverse: s^(ord-1).
    std::vector<unsigned> sinv(ngen);
    for (unsigned s = 0; s < ngen; ++s) {
        unsigned idx = gen_index_[s];
        unsigned prev = 0;
        while (idx != 0) {
            prev = idx;
            idx = rmul_[idx][s];
        }
        sinv[s] = prev;
    }

    // lmul_inv_[s][x] = s^-1 * x, filled in BFS order so the parent is ready.
    lmul_inv_.assign(ngen, std::vector<unsigned>(N));
    for (unsigned s = 0; s < ngen; ++s) {
        lmul_inv_[s][0] = sinv[s];
        for (unsigned x = 1; x < N; ++x)
            lmul_inv_[s][x] = rmul_[lmul_inv_[s][parent_[x]]][pgen_[x]];
    }

    inv_.assign(N, 0);
    for (unsigned x = 1; x < N; ++x)
        inv_[x] = lmul_inv_[pgen_[x]][inv_[parent_[x]]];
}

void ReflectionGroup::build_classes() {
    const unsigned ngen = static_cast<unsigned>(spec_.generators.size());
    const std::size_t N = elements_.size();
    class_of_.assign(N, 0);
    std::vector<char> assigned(N, 0);
    for (unsigned seed = 0; seed < N; ++seed) {
        if (assigned[seed]) continue;
        const unsigned k = static_cast<unsigned>(classes_.size());
        std::vector<unsigned> orbit{seed};
        assigned[seed] = 1;
        class_of_[seed] = k;
        for (std::size_t at = 0; at < orbit.size(); ++at) {
            for (unsigned s = 0; s < ngen; ++s) {
                const unsigned y = lmul_inv_[s][rmul_[orbit[at]][s]];
                if (!assigned[y]) {
                    assigned[y] = 1;
                    class_of_[y] = k;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes_.push_back(std::move(orbit));
    }
    inverse_class_.resize(classes_.size());
    for (unsigned k = 0; k < classes_.size(); ++k)
        inverse_class_[k] = class_of_[inv_[class_rep(k)]];
}

void ReflectionGroup::find_reflections() {
    const CMatrix id = CMatrix::identity(spec_.rank, ambient_);
    for (unsigned g = 1; g < elements_.size(); ++g)
        if (crg::rank(elements_[g] - id) == 1) reflections_.push_back(g);
    refl_per_class_.assign(classes_.size(), 0);
    for (unsigned r : reflections_) ++refl_per_class_[class_of_[r]];
}

void ReflectionGroup::group_hyperplanes() {
    const CMatrix id = CMatrix::identity(spec_.rank, ambient_);
    std::unordered_map<std::vector<Cyclotomic>, unsigned, KeyHash> by_key;
    for (unsigned r : reflections_) {
        std::vector<Cyclotomic> key = row_space_key(elements_[r] - id);
        auto it = by_key.find(key);
        if (it == by_key.end()) {
            by_key.emplace(std::move(key), static_cast<unsigned>(hyperplanes_.size()));
            Hyperplane h;
            h.key = row_space_key(elements_[r] - id);
            h.members.push_back(r);
            hyperplanes_.push_back(std::move(h));
        } else {
            hyperplanes_[it->second].members.push_back(r);
        }
    }
    for (auto& h : hyperplanes_) {
        h.e = static_cast<unsigned>(h.members.size()) + 1;
        const Cyclotomic zeta = Cyclotomic::zeta(h.e);
        unsigned found = 0;
        for (unsigned r : h.members) {
            if (nontrivial_eigenvalue(elements_[r], spec_.rank) == zeta) {
                h.distinguished = r;
                ++found;
            }
        }
        if (found != 1)
            throw consistency_error("hyperplane fixator of " + spec_.name + " has " +
                                    std::to_string(found) +
                                    " members with primitive eigenvalue; expected exactly 1");
        // The fixator must be cyclic: powers of the distinguished reflection
        // sweep out every member exactly once.
        std::vector<unsigned> powers;
        unsigned idx = h.distinguished;
        h.power_class.push_back(class_of_[0]);
        for (unsigned j = 1; j < h.e; ++j) {
            powers.push_back(idx);
            h.power_class.push_back(class_of_[idx]);
            idx = mul(idx, h.distinguished);
        }
        if (idx != 0)
            throw consistency_error("hyperplane fixator of " + spec_.name + " is not cyclic of order " +
                                    std::to_string(h.e));
        std::sort(powers.begin(), powers.end());
        if (powers != h.members)
            throw consistency_error("hyperplane fixator of " + spec_.name +
                                    " is not generated by its distinguished reflection");
    }
}

void ReflectionGroup::build_coxeter() {
    unsigned c = 0;
    for (unsigned s = 0; s < spec_.generators.size(); ++s) c = rmul_[c][s];
    coxeter_ = c;
    h_ = spec_.expected_degrees.back();
    if (element_order(c) != h_)
        throw build_error("catalog generator order unsuitable: product of generators of " + spec_.name +
                          " has order " + std::to_string(element_order(c)) + ", largest degree is " +
                          std::to_string(h_));
    // Eigenvalues must be exactly {zeta_h^(d_j - 1)}.
    UniPoly<Cyclotomic> expect = UniPoly<Cyclotomic>::constant(Cyclotomic(1L));
    for (unsigned d : spec_.expected_degrees) {
        std::vector<Cyclotomic> lin{-Cyclotomic::zeta(h_, static_cast<long>(d) - 1), Cyclotomic(1L)};
        expect = expect * UniPoly<Cyclotomic>(std::move(lin));
    }
    if (charpoly(elements_[c]) != expect)
        throw build_error("catalog generator order unsuitable: eigenvalues of the generator product of " +
                          spec_.name + " do not match the degree exponents");
}

unsigned ReflectionGroup::power(unsigned g, long e) const {
    if (e < 0) return power(inv_[g], -e);
    unsigned acc = 0;
    unsigned base = g;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

unsigned ReflectionGroup::element_order(unsigned g) const {
    if (g == 0) return 1;
    unsigned ord = 1;
    unsigned idx = g;
    while (idx != 0) {
        idx = mul(idx, g);
        ++ord;
    }
    return ord;
}

bool ReflectionGroup::constant_fixator_order() const {
    for (const auto& h : hyperplanes_)
        if (h.e != hyperplanes_[0].e) return false;
    return !hyperplanes_.empty();
}

unsigned ReflectionGroup::common_fixator_order() const {
    if (!constant_fixator_order())
        throw build_error("fixator orders of " + spec_.name + " are not constant");
    return hyperplanes_[0].e;
}

} // namespace crg
