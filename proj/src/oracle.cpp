#include "powerdepth/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace powerdepth {

// ===== monomials =====

bool Monomial::is_one() const {
    for (auto x : e)
        if (x) return false;
    return true;
}

int Monomial::total_degree() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
}

VertexSet Monomial::support() const {
    VertexSet s;
    for (int i = 0; i < vars(); ++i)
        if (e[i]) s = s.with(i);
    return s;
}

Monomial squarefree_monomial(int n, VertexSet s) {
    Monomial m(n);
    for_each_vertex(s, [&](int v) { m.e[v] = 1; });
    return m;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.vars(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.vars());
    for (int i = 0; i < a.vars(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
}

Monomial mono_product(const Monomial& a, const Monomial& b) {
    Monomial m(a.vars());
    for (int i = 0; i < a.vars(); ++i) {
        int s = int(a.e[i]) + int(b.e[i]);
        if (s > 250) throw std::overflow_error("monomial exponent overflow");
        m.e[i] = static_cast<std::uint8_t>(s);
    }
    return m;
}

Monomial mono_quotient(const Monomial& a, const Monomial& b) {
    Monomial m(a.vars());
    for (int i = 0; i < a.vars(); ++i) m.e[i] = a.e[i] > b.e[i] ? a.e[i] - b.e[i] : 0;
    return m;
}

// ===== ideals =====

MonomialIdeal make_ideal(int n, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
        if (g.vars() != n) throw std::invalid_argument("generator has wrong variable count");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (size_t k = 0; k < gens.size() && !dominated; ++k)
            if (k != i && divides(gens[k], gens[i])) dominated = true;
        if (!dominated) minimal.push_back(gens[i]);
    }
    return MonomialIdeal{n, std::move(minimal)};
}

bool is_zero_ideal(const MonomialIdeal& j) { return j.gens.empty(); }

bool is_unit_ideal(const MonomialIdeal& j) { return j.gens.size() == 1 && j.gens[0].is_one(); }

bool membership(const MonomialIdeal& j, const Monomial& m) {
    for (const Monomial& g : j.gens)
        if (divides(g, m)) return true;
    return false;
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens;
    gens.reserve(a.gens.size() * b.gens.size());
    for (const Monomial& x : a.gens)
        for (const Monomial& y : b.gens) gens.push_back(mono_product(x, y));
    return make_ideal(a.n, std::move(gens));
}

MonomialIdeal ideal_square(const MonomialIdeal& j) {
    std::vector<Monomial> gens;
    for (size_t i = 0; i < j.gens.size(); ++i)
        for (size_t k = i; k < j.gens.size(); ++k) gens.push_back(mono_product(j.gens[i], j.gens[k]));
    return make_ideal(j.n, std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens;
    gens.reserve(a.gens.size() * b.gens.size());
    for (const Monomial& x : a.gens)
        for (const Monomial& y : b.gens) gens.push_back(mono_lcm(x, y));
    return make_ideal(a.n, std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& j, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(j.gens.size());
    for (const Monomial& g : j.gens) gens.push_back(mono_quotient(g, m));
    return make_ideal(j.n, std::move(gens));
}

MonomialIdeal saturate_variable(const MonomialIdeal& j, int i) {
    std::vector<Monomial> gens = j.gens;
    for (Monomial& g : gens) g.e[static_cast<size_t>(i)] = 0;
    return make_ideal(j.n, std::move(gens));
}

MonomialIdeal saturate_maximal(const MonomialIdeal& j) {
    // Saturation w.r.t. the irrelevant ideal of the full ring: intersect the
    // variable saturations over every variable.
    MonomialIdeal acc = saturate_variable(j, 0);
    for (int i = 1; i < j.n; ++i) acc = ideal_intersect(acc, saturate_variable(j, i));
    return acc;
}

MonomialIdeal restrict_ideal(const MonomialIdeal& j, VertexSet f) {
    std::vector<Monomial> gens = j.gens;
    for (Monomial& g : gens)
        for_each_vertex(f, [&](int i) { g.e[static_cast<size_t>(i)] = 0; });
    return make_ideal(j.n, std::move(gens));
}

std::vector<int> exponent_bounds(const MonomialIdeal& j) {
    std::vector<int> b(static_cast<size_t>(j.n), 0);
    for (const Monomial& g : j.gens)
        for (int i = 0; i < j.n; ++i) b[static_cast<size_t>(i)] = std::max(b[static_cast<size_t>(i)], int(g.e[i]));
    return b;
}

MonomialIdeal edge_ideal(const Hypergraph& h) {
    std::vector<Monomial> gens;
    gens.reserve(h.edges.size());
    for (VertexSet e : h.edges) gens.push_back(squarefree_monomial(h.n, e));
    return make_ideal(h.n, std::move(gens));
}

// ===== degree slices =====

namespace {

// Saturation inside k[x_i : i not in f]. The variables of f are already gone
// from the restricted ideal, so the intersection runs over the rest only;
// with no variable left the subring is a field and everything saturates to
// the unit ideal.
MonomialIdeal subring_saturation(const MonomialIdeal& restricted, VertexSet f, int n) {
    VertexSet rest = VertexSet::full(n) - f;
    if (rest.empty()) return make_ideal(n, {Monomial(n)});
    bool first = true;
    MonomialIdeal acc;
    for_each_vertex(rest, [&](int i) {
        MonomialIdeal s = saturate_variable(restricted, i);
        if (first) {
            acc = std::move(s);
            first = false;
        } else {
            acc = ideal_intersect(acc, s);
        }
    });
    return acc;
}

Monomial degree_monomial(const MultiDegree& a, VertexSet zero_out, int n) {
    Monomial m(n);
    for (int i = 0; i < n; ++i) {
        if (zero_out.contains(i) || a[static_cast<size_t>(i)] < 0) continue;
        int v = a[static_cast<size_t>(i)];
        if (v > 250) throw std::overflow_error("degree too large");
        m.e[static_cast<size_t>(i)] = static_cast<std::uint8_t>(v);
    }
    return m;
}

void check_degree(const MonomialIdeal& j, const MultiDegree& a) {
    if (static_cast<int>(a.size()) != j.n) throw std::invalid_argument("degree has wrong length");
    std::vector<int> rho = exponent_bounds(j);
    for (int i = 0; i < j.n; ++i)
        if (a[static_cast<size_t>(i)] >= rho[static_cast<size_t>(i)])
            throw std::invalid_argument("degree component outside the informative range");
}

}  // namespace

SimplicialComplex takayama_delta_a(const MonomialIdeal& j, const MultiDegree& a) {
    check_degree(j, a);
    int n = j.n;
    VertexSet ga;
    for (int i = 0; i < n; ++i)
        if (a[static_cast<size_t>(i)] < 0) ga = ga.with(i);
    std::vector<VertexSet> faces;
    for_each_subset(VertexSet::full(n) - ga, [&](VertexSet extra) {
        VertexSet f = ga | extra;
        MonomialIdeal rest = restrict_ideal(j, f);
        MonomialIdeal sat = subring_saturation(rest, f, n);
        Monomial m = degree_monomial(a, f, n);
        if (membership(sat, m) && !membership(rest, m)) faces.push_back(f - ga);
    });
    return make_complex(n, std::move(faces));
}

TakayamaOracle::TakayamaOracle(MonomialIdeal j) : ideal_(std::move(j)) {
    if (ideal_.n > 10) throw std::invalid_argument("degree-slice table limited to 10 variables");
    bounds_ = exponent_bounds(ideal_);
    size_t count = size_t{1} << ideal_.n;
    restricted_.resize(count);
    saturated_.resize(count);
    for (size_t f = 0; f < count; ++f) {
        VertexSet fs{f};
        restricted_[f] = restrict_ideal(ideal_, fs);
        saturated_[f] = subring_saturation(restricted_[f], fs, ideal_.n);
    }
}

SimplicialComplex TakayamaOracle::delta_a(const MultiDegree& a) const {
    check_degree(ideal_, a);
    int n = ideal_.n;
    VertexSet ga;
    for (int i = 0; i < n; ++i)
        if (a[static_cast<size_t>(i)] < 0) ga = ga.with(i);
    std::vector<VertexSet> faces;
    for_each_subset(VertexSet::full(n) - ga, [&](VertexSet extra) {
        VertexSet f = ga | extra;
        Monomial m = degree_monomial(a, f, n);
        if (membership(saturated_[f.bits], m) && !membership(restricted_[f.bits], m))
            faces.push_back(f - ga);
    });
    return make_complex(n, std::move(faces));
}

bool h0_vanishes(const MonomialIdeal& j) { return saturate_maximal(j) == j; }

// ===== dense box engine =====
//
// Membership of every monomial with exponents <= rho is one bit in a
// mixed-radix table; an upward-closure sweep turns generator seeds into the
// full divisibility-closed set. Restriction, subring saturation and colon all
// become bit operations, which is what makes whole-corpus oracle sweeps
// affordable. Correctness is pinned against the generator-list routines above
// in the property tests.

namespace {

using Bits = std::vector<std::uint64_t>;

struct DenseBox {
    int n = 0;
    std::vector<int> radix;       // rho_i + 1
    std::vector<size_t> stride;
    size_t size = 1;
    size_t words = 0;
    const MonomialIdeal* ideal = nullptr;
    std::unordered_map<std::uint64_t, Bits> cache;  // closure per zeroed-variable mask

    explicit DenseBox(const MonomialIdeal& j) : n(j.n), ideal(&j) {
        std::vector<int> rho = exponent_bounds(j);
        radix.resize(static_cast<size_t>(n));
        stride.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            radix[static_cast<size_t>(i)] = rho[static_cast<size_t>(i)] + 1;
            stride[static_cast<size_t>(i)] = size;
            size *= static_cast<size_t>(radix[static_cast<size_t>(i)]);
            if (size > (size_t{1} << 26)) throw std::invalid_argument("exponent box too large for the oracle");
        }
        words = (size + 63) / 64;
    }

    static bool test(const Bits& b, size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
    static void set(Bits& b, size_t i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }

    // closure of the ideal obtained by zeroing the variables of zero_out
    const Bits& closure(VertexSet zero_out) {
        auto it = cache.find(zero_out.bits);
        if (it != cache.end()) return it->second;
        Bits bits(words, 0);
        for (const Monomial& g : ideal->gens) {
            size_t idx = 0;
            for (int i = 0; i < n; ++i)
                if (!zero_out.contains(i)) idx += size_t(g.e[static_cast<size_t>(i)]) * stride[static_cast<size_t>(i)];
            set(bits, idx);
        }
        std::vector<int> digit(static_cast<size_t>(n), 0);
        for (size_t idx = 0; idx < size; ++idx) {
            if (!test(bits, idx)) {
                for (int i = 0; i < n; ++i) {
                    if (digit[static_cast<size_t>(i)] > 0 && test(bits, idx - stride[static_cast<size_t>(i)])) {
                        set(bits, idx);
                        break;
                    }
                }
            }
            for (int i = 0; i < n; ++i) {
                if (++digit[static_cast<size_t>(i)] < radix[static_cast<size_t>(i)]) break;
                digit[static_cast<size_t>(i)] = 0;
            }
        }
        return cache.emplace(zero_out.bits, std::move(bits)).first->second;
    }

    // subring saturation of the restriction to f: AND of the closures with one
    // extra variable zeroed; the empty subring saturates to everything
    Bits saturation(VertexSet f) {
        VertexSet rest = VertexSet::full(n) - f;
        if (rest.empty()) return Bits(words, ~std::uint64_t(0));
        Bits acc(words, ~std::uint64_t(0));
        for_each_vertex(rest, [&](int i) {
            const Bits& c = closure(f.with(i));
            for (size_t w = 0; w < words; ++w) acc[w] &= c[w];
        });
        return acc;
    }
};

bool bits_equal(const Bits& a, const Bits& b, size_t size) {
    size_t full = size / 64;
    for (size_t w = 0; w < full; ++w)
        if (a[w] != b[w]) return false;
    if (size % 64) {
        std::uint64_t mask = (std::uint64_t(1) << (size % 64)) - 1;
        if ((a[full] ^ b[full]) & mask) return false;
    }
    return true;
}

struct EngineDepth {
    bool h0 = false;
    bool h1 = false;
};

EngineDepth engine_depth(const MonomialIdeal& j) {
    if (j.n > 10) throw std::invalid_argument("depth oracle limited to 10 variables");
    DenseBox box(j);
    int n = j.n;
    size_t fcount = size_t{1} << n;

    std::vector<Bits> sat(fcount);
    for (size_t f = 0; f < fcount; ++f) sat[f] = box.saturation(VertexSet{f});

    EngineDepth out;
    out.h0 = bits_equal(box.closure(VertexSet{}), sat[0], box.size);

    // one-variable restrictions must be saturated in their subring
    bool restrictions_ok = true;
    for (int i = 0; i < n && restrictions_ok; ++i) {
        VertexSet f = VertexSet::single(i);
        restrictions_ok = bits_equal(box.closure(f), sat[f.bits], box.size);
    }

    // every degree slice inside the box must be connected
    bool connected_ok = true;
    bool box_empty = false;
    for (int i = 0; i < n; ++i)
        if (box.radix[static_cast<size_t>(i)] < 2) box_empty = true;
    if (!box_empty) {
        std::vector<int> a(static_cast<size_t>(n), 0);
        while (connected_ok) {
            size_t base = 0;
            for (int i = 0; i < n; ++i) base += size_t(a[static_cast<size_t>(i)]) * box.stride[static_cast<size_t>(i)];
            std::vector<VertexSet> faces;
            for (size_t f = 0; f < fcount; ++f) {
                size_t idx = base;
                for_each_vertex(VertexSet{f}, [&](int i) { idx -= size_t(a[static_cast<size_t>(i)]) * box.stride[static_cast<size_t>(i)]; });
                const Bits& cl = box.closure(VertexSet{f});
                if (DenseBox::test(sat[f], idx) && !DenseBox::test(cl, idx)) faces.push_back(VertexSet{f});
            }
            if (!is_connected(make_complex(n, std::move(faces)))) connected_ok = false;
            int i = 0;
            for (; i < n; ++i) {
                if (++a[static_cast<size_t>(i)] <= box.radix[static_cast<size_t>(i)] - 2) break;
                a[static_cast<size_t>(i)] = 0;
            }
            if (i == n) break;
        }
    }
    out.h1 = restrictions_ok && connected_ok;
    return out;
}

}  // namespace

bool h1_vanishes(const MonomialIdeal& j) { return engine_depth(j).h1; }

DepthClass depth_class_oracle(const MonomialIdeal& j) {
    EngineDepth d = engine_depth(j);
    if (!d.h0) return DepthClass::Zero;
    if (!d.h1) return DepthClass::One;
    return DepthClass::GeTwo;
}

std::vector<VertexSet> ass_primes_oracle(const MonomialIdeal& j) {
    if (j.n > 12) throw std::invalid_argument("associated-prime oracle limited to 12 variables");
    DenseBox box(j);
    int n = j.n;
    const Bits& member = box.closure(VertexSet{});

    std::vector<std::uint64_t> found;
    std::vector<int> m(static_cast<size_t>(n), 0);
    for (size_t midx = 0; midx < box.size; ++midx) {
        if (!DenseBox::test(member, midx)) {
            // variables that land the witness inside the ideal
            VertexSet c;
            for (int i = 0; i < n; ++i) {
                size_t up = (m[static_cast<size_t>(i)] + 1 < box.radix[static_cast<size_t>(i)])
                                ? midx + box.stride[static_cast<size_t>(i)]
                                : midx;
                if (DenseBox::test(member, up)) c = c.with(i);
            }
            if (!c.empty()) {
                // the colon is prime iff nothing supported outside c lands inside
                bool prime = true;
                std::vector<int> free = to_indices(VertexSet::full(n) - c);
                std::vector<int> t(free.size());
                for (size_t k = 0; k < free.size(); ++k) t[k] = m[static_cast<size_t>(free[k])];
                size_t idx = midx;
                while (prime) {
                    if (idx != midx && DenseBox::test(member, idx)) prime = false;
                    size_t k = 0;
                    for (; k < free.size(); ++k) {
                        int i = free[k];
                        if (t[k] + 1 < box.radix[static_cast<size_t>(i)]) {
                            ++t[k];
                            idx += box.stride[static_cast<size_t>(i)];
                            break;
                        }
                        idx -= size_t(t[k] - m[static_cast<size_t>(i)]) * box.stride[static_cast<size_t>(i)];
                        t[k] = m[static_cast<size_t>(i)];
                    }
                    if (k == free.size()) break;
                }
                if (prime) found.push_back(c.bits);
            }
        }
        for (int i = 0; i < n; ++i) {
            if (++m[static_cast<size_t>(i)] < box.radix[static_cast<size_t>(i)]) break;
            m[static_cast<size_t>(i)] = 0;
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<VertexSet> out;
    out.reserve(found.size());
    for (std::uint64_t b : found) out.push_back(VertexSet{b});
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

}  // namespace powerdepth
