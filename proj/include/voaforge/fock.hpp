// Fock realization of the rank n Heisenberg vertex algebra.
//
// A state is an exact rational combination of monomials in the creation
// modes alpha^i_{(-k)}, k >= 1, applied to the vacuum.  Annihilation modes
// exist only transiently inside circle products: alpha^i_{(s)} for s >= 1
// removes one alpha^i_{(-s)} with coefficient s, alpha^i_{(0)} acts as
// zero, and the central element acts as 1 and is never stored.
//
// Circle products are computed by mode recursion: writing u = a_{(-1)} u'
// with a = d^{k-1} alpha^i / (k-1)! the canonically largest mode of u,
//
//   (a_{(-1)} u')_{(m)} v = sum_{j>=0} a_{(-1-j)} (u'_{(m+j)} v)
//                         + sum_{j>=0} u'_{(m-1-j)} (a_{(j)} v),
//
// with (d^p alpha)_{(s)} = (-1)^p p! C(s,p) alpha_{(s-p)}.  Both sums are
// finite by weight bounds and the recursion shortens u'.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "voaforge/rational.hpp"

namespace voaforge {

struct Mode {
    std::uint16_t gen;    // generator index, 1..rank
    std::uint16_t depth;  // k in alpha_{(-k)}, k >= 1; the mode weight
    auto operator<=>(const Mode&) const = default;
};

// Multiset of creation modes in the canonical order (gen, then depth).
class FockMonomial {
  public:
    FockMonomial() = default;
    explicit FockMonomial(std::vector<Mode> modes);

    int degree() const { return static_cast<int>(modes_.size()); }
    int weight() const;
    bool empty() const { return modes_.empty(); }
    const std::vector<Mode>& modes() const { return modes_; }
    Mode back() const { return modes_.back(); }

    void insert(Mode m);
    void pop_back() { modes_.pop_back(); }
    // Removes one copy of m; returns the multiplicity it had (0 = absent).
    int remove_one(Mode m);
    int multiplicity(Mode m) const;

    auto operator<=>(const FockMonomial&) const = default;

  private:
    std::vector<Mode> modes_;
};

class FockState {
  public:
    FockState() : rank_(1) {}
    explicit FockState(int rank);
    static FockState zero(int rank) { return FockState(rank); }
    static FockState vacuum(int rank);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<FockMonomial, Rat>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const FockMonomial& m, const Rat& c);
    FockState& operator+=(const FockState& o);
    FockState& operator-=(const FockState& o);
    FockState& operator*=(const Rat& c);
    friend FockState operator+(FockState a, const FockState& b) { return a += b; }
    friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
    friend FockState operator*(const Rat& c, FockState a) { return a *= c; }
    bool operator==(const FockState&) const = default;

    int max_weight() const;  // 0 on the zero state
    int max_degree() const;
    // True when every term has the same weight; reports it (0 for zero state).
    bool homogeneous_weight(int* wt = nullptr) const;
    // Coefficient of the vacuum monomial (0 if absent).
    Rat vacuum_coeff() const;

  private:
    int rank_;
    std::map<FockMonomial, Rat> terms_;
};

// alpha^i_{(-1)} vacuum; throws when i is out of 1..n.
FockState generator_state(int i, int n);

// u o_m v, exact.  Throws on rank mismatch.
FockState circle_product(const FockState& u, const FockState& v, int m);

// Right-nested iterated Wick product; a single factor returns itself.
FockState wick_product(std::span<const FockState> factors);

// u o_{-2} 1, computed directly by the Leibniz action on modes.
FockState derivative(const FockState& u);
FockState derivative(const FockState& u, int times);

// All (m, u o_m v) with m >= 0 and nonzero product, in descending m.
std::vector<std::pair<int, FockState>> singular_part(const FockState& u,
                                                     const FockState& v);

// Applies the linear substitution alpha^i -> sum_j M[i][j] alpha^j to every
// mode; M is rank x rank, (i, j) zero-based.
FockState substitute_generators(const FockState& u,
                                const std::vector<std::vector<Rat>>& M);

// Infinitesimal rotation E_{rs} acting as a derivation on modes (replaces
// one gen-s mode by gen r minus one gen-r mode by gen s, depth kept).
FockState rotation_derivation(const FockState& u, int r, int s);

}  // namespace voaforge
