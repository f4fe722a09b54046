#pragma once

#include "coha/quiver.hpp"
#include "coha/ratpoly.hpp"

#include <map>
#include <utility>

namespace coha {

/// (dimension vector, ordinary polynomial degree); cohomological degree is
/// 2*polydeg, the virtual degree shifts by the Euler form.
struct Bidegree {
    DimVector dim;
    int polydeg = 0;

    bool operator<(const Bidegree& o) const {
        if (dim != o.dim)
            return dim < o.dim;
        return polydeg < o.polydeg;
    }
    bool operator==(const Bidegree& o) const {
        return dim == o.dim && polydeg == o.polydeg;
    }
};

/// v = 2*polydeg + <d,d>_Q
long virtual_degree(const Quiver& q, const Bidegree& b);

/// v in Q(2^n) coordinates on a regular full-form dimension vector,
/// using the symmetric canonical Euler form.
long virtual_degree_canonical(int n, const Bidegree& b);

/// Degree of the shuffle product of homogeneous pieces:
/// polydeg(f*g) = polydeg(f) + polydeg(g) + sum_{i,j} (a_ij - delta_ij) d_i e_j.
int shuffle_polydeg(const Quiver& q, const Bidegree& f, const Bidegree& g);

/// The CoHA multiplication of the free (unstable) algebra: sum over
/// per-vertex shuffles with kernel factors (x_{j,..} - x_{i,..})^{a_ij - delta_ij}.
/// Negative exponents are cleared by one exact division against the common
/// Vandermonde denominator; a nonzero remainder throws (it would mean the
/// implementation broke polynomiality).
SymPoly shuffle_product(const Quiver& q, const SymPoly& f, const SymPoly& g);

/// Finite sum of bidegree-homogeneous symmetric pieces.
class FreeCohaElt {
public:
    FreeCohaElt() = default;

    static FreeCohaElt zero() { return FreeCohaElt(); }
    static FreeCohaElt unit(int num_vertices);
    static FreeCohaElt piece(SymPoly p); // splits into homogeneous parts

    const std::map<Bidegree, SymPoly>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

    FreeCohaElt operator+(const FreeCohaElt& o) const;
    FreeCohaElt operator-(const FreeCohaElt& o) const;
    FreeCohaElt operator*(const Rational& c) const;
    bool operator==(const FreeCohaElt& o) const { return pieces_ == o.pieces_; }

    void add_piece(const Bidegree& b, const SymPoly& p);

private:
    std::map<Bidegree, SymPoly> pieces_;
};

/// Bilinear extension of shuffle_product.
FreeCohaElt free_mul(const Quiver& q, const FreeCohaElt& a, const FreeCohaElt& b);

} // namespace coha
