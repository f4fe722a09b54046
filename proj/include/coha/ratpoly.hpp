#pragma once

#include "coha/quiver.hpp"
#include "coha/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coha {

/// Monomial in the slot variables x_{i,j} of an ambient dimension vector,
/// flattened vertex-major (vertex i, slot j) -> offset(i) + j.
/// Ordered graded-lexicographically; total degree cached.
struct Monomial {
    int deg = 0;
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::vector<int> e);

    bool operator<(const Monomial& o) const {
        if (deg != o.deg)
            return deg < o.deg;
        return exp < o.exp;
    }
    bool operator==(const Monomial& o) const { return deg == o.deg && exp == o.exp; }
};

/// Sparse exact-rational polynomial in the slot variables of an ambient
/// dimension vector. No zero coefficients are stored.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(DimVector dim);

    static RatPoly constant(DimVector dim, const Rational& c);
    static RatPoly variable(DimVector dim, int vertex, int slot); // slot 0-based
    static RatPoly monomial(DimVector dim, const Monomial& m, const Rational& c);

    const DimVector& dim() const { return dim_; }
    int num_slots() const { return num_slots_; }
    int slot_offset(int vertex) const { return offsets_[vertex]; }
    int flat_index(int vertex, int slot) const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;

    int total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly operator*(const Rational& c) const;
    RatPoly operator/(const Rational& c) const;
    bool operator==(const RatPoly& o) const;
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    RatPoly pow(int k) const;

    /// Substitutes x_{var_from} := x_{var_to} (flat indices).
    RatPoly substitute_slot(int var_from, int var_to) const;

    /// Exact division by (x_a - x_b); throws CohaError if the remainder
    /// p|_{x_a = x_b} is nonzero.
    RatPoly divide_exact_linear(int var_a, int var_b) const;

    /// Applies per-vertex slot permutations: slot j of vertex i -> perms[i][j].
    RatPoly apply_slot_permutation(const std::vector<std::vector<int>>& perms) const;

    /// Re-embeds into a new ambient dimension vector; slot_map sends each old
    /// flat variable index to a flat index of the new ambient.
    RatPoly map_slots(const DimVector& new_dim, const std::vector<int>& slot_map) const;

    /// Group average over all per-vertex slot permutations.
    RatPoly symmetrized() const;

    /// Invariance under every adjacent slot transposition at each vertex.
    bool is_symmetric() const;

    std::string to_text(const std::vector<std::string>& vertex_names) const;
    std::string to_text() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    void require_same_dim(const RatPoly& o) const;

    DimVector dim_;
    std::vector<int> offsets_;
    int num_slots_ = 0;
    std::map<Monomial, Rational> terms_;
};

/// A RatPoly invariant under permuting the slots at each vertex.
class SymPoly {
public:
    SymPoly() = default;
    static SymPoly zero(DimVector dim) { return SymPoly(RatPoly(std::move(dim))); }
    static SymPoly unit(DimVector dim) {
        return SymPoly(RatPoly::constant(std::move(dim), 1));
    }

    /// Wraps a polynomial after verifying the invariance; throws otherwise.
    static SymPoly checked(RatPoly p);

    const RatPoly& poly() const { return p_; }
    const DimVector& dim() const { return p_.dim(); }
    bool is_zero() const { return p_.is_zero(); }
    int total_degree() const { return p_.total_degree(); }

    SymPoly operator-() const { return SymPoly(-p_); }
    SymPoly operator+(const SymPoly& o) const { return SymPoly(p_ + o.p_); }
    SymPoly operator-(const SymPoly& o) const { return SymPoly(p_ - o.p_); }
    SymPoly operator*(const SymPoly& o) const { return SymPoly(p_ * o.p_); }
    SymPoly operator*(const Rational& c) const { return SymPoly(p_ * c); }
    bool operator==(const SymPoly& o) const { return p_ == o.p_; }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    friend SymPoly symmetrize(const RatPoly& p);

private:
    explicit SymPoly(RatPoly p) : p_(std::move(p)) {}
    RatPoly p_;
};

/// Orbit average; fixes symmetric inputs, kills antisymmetric ones.
SymPoly symmetrize(const RatPoly& p);

/// Basis of the degree-`polydeg` piece of Q[x_{i,j}]^{S_d}: products over
/// vertices of monomial symmetric polynomials, ordered lexicographically on
/// the tuple of padded partitions.
struct SymBasis {
    DimVector dim;
    int polydeg = 0;
    // keys[e][v] = the partition at vertex v (weakly decreasing, padded to d_v)
    std::vector<std::vector<std::vector<int>>> keys;
    std::vector<SymPoly> elems;

    int size() const { return static_cast<int>(elems.size()); }

    /// Coordinates of a symmetric homogeneous polynomial of this bidegree;
    /// throws if the input is not in the span.
    std::vector<Rational> coordinates(const SymPoly& p) const;
    SymPoly from_coordinates(const std::vector<Rational>& coords) const;
};

SymBasis monomial_sym_basis(const DimVector& dim, int polydeg);

/// Weakly decreasing tuples summing to `total` with at most `max_parts` parts
/// (padded with zeros), in lexicographically decreasing order.
std::vector<std::vector<int>> partitions_max_parts(int total, int max_parts);

} // namespace coha
