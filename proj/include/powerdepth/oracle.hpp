#pragma once
// Monomial-ideal arithmetic with no knowledge of the combinatorial criteria.
// Everything here works from generator lists; depth and associated primes come
// out of graded local-cohomology slices and colon enumeration, so the rest of
// the library can be validated against it.

#include "powerdepth/depthclass.hpp"
#include "powerdepth/hypergraph.hpp"
#include "powerdepth/simplicial.hpp"
#include "powerdepth/vertexset.hpp"

#include <cstdint>
#include <vector>

namespace powerdepth {

struct Monomial {
    std::vector<std::uint8_t> e;  // exponents, one per variable

    explicit Monomial(int n) : e(static_cast<size_t>(n), 0) {}
    Monomial() = default;

    int vars() const { return static_cast<int>(e.size()); }
    bool is_one() const;
    int total_degree() const;
    VertexSet support() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

Monomial squarefree_monomial(int n, VertexSet s);
bool divides(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_product(const Monomial& a, const Monomial& b);
// Componentwise max(a - b, 0); the colon of principal ideals.
Monomial mono_quotient(const Monomial& a, const Monomial& b);

struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens;  // minimal generators, sorted; empty = zero ideal

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n == b.n && a.gens == b.gens;
    }
};

// Deduplicates, drops generators divisible by another, sorts.
MonomialIdeal make_ideal(int n, std::vector<Monomial> gens);

bool is_zero_ideal(const MonomialIdeal& j);
bool is_unit_ideal(const MonomialIdeal& j);
bool membership(const MonomialIdeal& j, const Monomial& m);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_square(const MonomialIdeal& j);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_colon(const MonomialIdeal& j, const Monomial& m);
// Kill x_i: drop the i-th exponent from every generator (colon by x_i^inf).
MonomialIdeal saturate_variable(const MonomialIdeal& j, int i);
// Intersection of all variable saturations (colon by the maximal ideal, iterated).
MonomialIdeal saturate_maximal(const MonomialIdeal& j);
// Set x_i = 1 for every i in f.
MonomialIdeal restrict_ideal(const MonomialIdeal& j, VertexSet f);
// Per-variable maximum exponent over the generators.
std::vector<int> exponent_bounds(const MonomialIdeal& j);

MonomialIdeal edge_ideal(const Hypergraph& h);

using MultiDegree = std::vector<int>;

// The degree-a complex from the graded local-cohomology formula: faces are the
// sets F containing {j : a_j < 0} such that, after setting the variables of F
// to 1, the monomial with exponents max(a, 0) lies in the saturation of the
// restricted ideal but not in the restricted ideal itself.
// Requires a_j < exponent_bounds(j)[j] for every j (outside that range the
// graded pieces vanish and the complex carries no information).
SimplicialComplex takayama_delta_a(const MonomialIdeal& j, const MultiDegree& a);

// Precomputes the restricted/saturated ideals once so many degrees can be
// sliced cheaply.
class TakayamaOracle {
  public:
    explicit TakayamaOracle(MonomialIdeal j);
    const MonomialIdeal& ideal() const { return ideal_; }
    SimplicialComplex delta_a(const MultiDegree& a) const;

  private:
    MonomialIdeal ideal_;
    std::vector<int> bounds_;
    std::vector<MonomialIdeal> restricted_;  // indexed by the mask of F
    std::vector<MonomialIdeal> saturated_;
};

// H^0_m(R/J) = 0: the ideal is saturated.
bool h0_vanishes(const MonomialIdeal& j);
// H^1_m(R/J) = 0: every degree-a complex inside the exponent box is connected
// and every one-variable restriction is saturated. Bitset-backed; requires
// n <= 10.
bool h1_vanishes(const MonomialIdeal& j);
// Depth of R/J capped at two. Requires n <= 10.
DepthClass depth_class_oracle(const MonomialIdeal& j);
// Supports of all associated primes of R/J, ordered by (size, numeric).
// Colon enumeration over the divisors of lcm(gens); requires n <= 12.
std::vector<VertexSet> ass_primes_oracle(const MonomialIdeal& j);

}  // namespace powerdepth
