#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "annigraph/error.hpp"

namespace annigraph {

// Finite abelian groups G = Z/n1 + ... + Z/nr viewed as Z-modules, and the
// a-annihilator ideals
//
//     [a : G] = { x in Z : xG is contained in Za },
//
// which are always of the form dZ with d | exp(G).  A brute-force oracle
// computes [a:G] by enumerating the cyclic subgroup Za; closed forms cover
// cyclic p-groups (d = p^val(a)), homogeneous p-groups of rank >= 2
// (d = p^alpha for every a), and rank-3 p-groups with strictly increasing
// exponents (a case dispatch on the three valuations).

struct PGroupView {
    std::int64_t prime = 0;
    // n_i = prime^factor_exponents[i], in the stored factor order.
    std::vector<int> factor_exponents;

    // Canonical type of the group: exponents sorted non-increasing.
    std::vector<int> partition() const;
};

class GroupElement;

class FiniteAbelianGroup {
public:
    /// Moduli are kept in the given order; each must be >= 2.
    explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    int rank() const { return static_cast<int>(moduli_.size()); }
    std::int64_t order() const { return order_; }
    std::int64_t exponent() const { return exponent_; }

    /// Present iff every modulus is a power of one common prime.
    const std::optional<PGroupView>& p_group_view() const { return p_view_; }

    bool is_p_group() const { return p_view_.has_value(); }
    bool is_cyclic() const { return rank() == 1; }
    bool is_cyclic_p_group() const { return is_cyclic() && is_p_group(); }
    bool is_homogeneous_p_group() const;   // rank >= 2, all factor exponents equal
    bool is_rank3_strict_p_group() const;  // rank 3, exponents strictly increasing as stored

    // Mixed-radix element indexing, little-endian in factor order:
    // index = c0 + c1*n0 + c2*n0*n1 + ...
    std::int64_t index_of(const std::vector<std::int64_t>& coords) const;
    std::vector<std::int64_t> coords_of(std::int64_t index) const;

    GroupElement element(std::int64_t index) const;
    GroupElement element(std::vector<std::int64_t> coords) const;
    GroupElement zero() const;

    bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }

private:
    std::vector<std::int64_t> moduli_;
    std::int64_t order_ = 1;
    std::int64_t exponent_ = 1;
    std::optional<PGroupView> p_view_;
};

/// A residue tuple in its group. The group must outlive the element.
class GroupElement {
public:
    GroupElement(const FiniteAbelianGroup& group, std::vector<std::int64_t> coords);

    const FiniteAbelianGroup& group() const { return *group_; }
    const std::vector<std::int64_t>& coords() const { return coords_; }
    std::int64_t index() const { return group_->index_of(coords_); }
    bool is_zero() const;
    /// Additive order: lcm_i ( n_i / gcd(c_i, n_i) ).
    std::int64_t order() const;

private:
    const FiniteAbelianGroup* group_;
    std::vector<std::int64_t> coords_;
};

/// The ideal dZ of the integers, in the context of a group with exponent
/// exp(G).  Since exp(G)Z is contained in every [a:G], d divides exp(G).
struct IdealZ {
    std::int64_t generator;
    std::int64_t context_exponent;

    IdealZ(std::int64_t d, std::int64_t exp_g);
    bool operator==(const IdealZ&) const = default;
};

/// O_{alpha,p^i} = { p^i b mod p^alpha : gcd(b, p) = 1 }, with O_{alpha,p^alpha} = {0}.
struct Orbit {
    int alpha = 0;
    int i = 0;
    std::vector<std::int64_t> members;  // ascending residues
};

// ---------------------------------------------------------------------------

/// Valuation of a residue x in Z/p^alpha: the orbit index i with x in O_{alpha,p^i}.
/// Returns alpha for x = 0.
int residue_valuation(std::int64_t x, std::int64_t p, int alpha);

/// Orbit index of an element of a cyclic p-group; throws WrongGroupKind otherwise.
int p_valuation(const GroupElement& a);

inline constexpr std::int64_t kDefaultOracleCap = 100000;

/// Ground-truth oracle: enumerates Za and returns the smallest positive
/// divisor d of exp(G) with d*e_i in Za for every canonical generator e_i.
IdealZ annihilator_bruteforce(const GroupElement& a, std::int64_t cap = kDefaultOracleCap);

/// Cyclic p-group closed form: [a:G] = p^val(a) Z.
IdealZ annihilator_cyclic(const GroupElement& a);

/// Homogeneous p-group (rank >= 2) closed form: [a:G] = p^alpha Z for every a.
IdealZ annihilator_homogeneous(const GroupElement& a);

/// One resolved case of the rank-3 dispatch: the exponent e of p^e Z plus the
/// label of the guard clause that fired (used by the oracle-comparison tests).
struct Rank3Case {
    int exponent;
    std::string_view label;
};

/// Case dispatch on the valuations (k, j, i) of (a, b, c) in
/// Z/p^alpha x Z/p^beta x Z/p^gamma with alpha < beta < gamma.  Guards are
/// tried first-match-wins in their written order; valuation triples not
/// covered by any written guard fall through to a clause that evaluates the
/// three generator-membership conditions directly (label "appendix-fallback").
Rank3Case rank3_case_exponent(int alpha, int beta, int gamma, int k, int j, int i);

struct Rank3Result {
    IdealZ ideal;
    std::string_view case_label;
};

Rank3Result annihilator_rank3_labeled(const GroupElement& a);
IdealZ annihilator_rank3(const GroupElement& a);

/// Route label the dispatcher chose for a given group.
enum class AnnihilatorRoute { Cyclic, Homogeneous, Rank3, BruteForce };
AnnihilatorRoute annihilator_route(const FiniteAbelianGroup& g);

/// Dispatcher: closed form when one applies, else the brute-force oracle.
IdealZ annihilator(const GroupElement& a, std::int64_t oracle_cap = kDefaultOracleCap);

/// Sorted divisors of n (ascending).
std::vector<std::int64_t> divisors_ascending(std::int64_t n);

bool is_prime(std::int64_t n);

}  // namespace annigraph
