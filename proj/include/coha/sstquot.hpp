#pragma once

#include "coha/linalg.hpp"
#include "coha/quiver.hpp"
#include "coha/ratpoly.hpp"
#include "coha/shuffle.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace coha {

/// Row-reduced spanning set of the unstable ideal piece in one bidegree,
/// in the coordinates of the monomial symmetric basis.
struct KernelBasis {
    Bidegree bideg;
    RrefBuilder rows;

    int rank() const { return rows.rank(); }
};

/// An element of the semistable CoHA: a representative plus its reduced
/// coordinate vector modulo the kernel. Two classes are equal iff their
/// reduced coordinates (and bidegree) agree; zero classes of any bidegree
/// are all equal.
struct QuotClass {
    Bidegree bideg;
    SymPoly rep;
    std::vector<Rational> reduced;

    bool is_zero() const;
    bool operator==(const QuotClass& o) const {
        if (is_zero() && o.is_zero())
            return true;
        return bideg == o.bideg && reduced == o.reduced;
    }
    bool operator!=(const QuotClass& o) const { return !(*this == o); }

    QuotClass operator+(const QuotClass& o) const;
    QuotClass operator-(const QuotClass& o) const;
    QuotClass operator*(const Rational& c) const;
};

/// Relation identifiers R1..R9 for the presented algebras.
int parse_relation_id(const std::string& s); // "R3" or "3" -> 3

/// The semistable CoHA of a relation-free quiver with stability, realized as
/// per-bidegree quotients of the shuffle algebra by the destabilizing ideal.
/// Kernel pieces and symmetric bases are memoized per bidegree.
class QuotientAlgebra {
public:
    /// Canonical quiver Q(2^n) with the regular stability d_0 - d_inf; n <= 2.
    explicit QuotientAlgebra(int n);
    QuotientAlgebra(Quiver q, Stability st);

    int n() const { return n_; }
    const Quiver& quiver() const { return quiver_; }
    const Stability& stability() const { return stability_; }

    const SymBasis& sym_basis(const DimVector& d, int polydeg);
    const KernelBasis& kernel(const DimVector& d, int polydeg);

    /// Reduces a homogeneous symmetric polynomial to its canonical class.
    QuotClass reduce(const SymPoly& p, int polydeg);
    QuotClass zero_class(const Bidegree& b);
    QuotClass unit();

    /// dim H^{cohdeg}(M_d); ordinary cohomological degree, odd -> 0.
    long quot_dim(const DimVector& d, long cohdeg);

    /// Shuffle then reduce.
    QuotClass mul(const QuotClass& a, const QuotClass& b);

    /// Canonical representative (supported on non-pivot basis elements).
    SymPoly canonical_rep(const QuotClass& a);

    // The generator table of the canonical family:
    //   g_{2i} = x^i and h_{2i+2} = x^i(z-x) at delta_0,
    //   e_{k,2i+1} = y_k^i at e_k, f_{k,2i+1} = x^i at f_k.
    // Indices are series indices (i >= 0).
    QuotClass gen_g(int i);
    QuotClass gen_h(int i);
    QuotClass gen_e(int k, int i);
    QuotClass gen_f(int k, int i);

    /// Verifies one instance of relations (1)-(9); k,l are arms (unused by
    /// some relations), i,j series indices.
    bool check_relation(int rel, int k, int l, int i, int j);

    /// True iff PBW-ordered products of generator-table elements span the
    /// quotient piece of the given regular dimension vector and virtual degree.
    bool generation_check(const DimVector& d_full, long virtual_deg);

    long virtual_deg(const Bidegree& b) const { return virtual_degree(quiver_, b); }

private:
    QuotClass comm(const QuotClass& a, const QuotClass& b);
    QuotClass anti(const QuotClass& a, const QuotClass& b);
    QuotClass rhs_g_f(int k, int i, int j);
    QuotClass rhs_g_h(int i, int j);
    QuotClass rhs_g_g(int i, int j);

    int n_ = -1;
    Quiver quiver_;
    Stability stability_;

    std::map<std::pair<DimVector, int>, SymBasis> basis_cache_;
    std::map<std::pair<DimVector, int>, KernelBasis> kernel_cache_;
    std::mutex basis_mutex_;
    std::mutex kernel_mutex_;
};

/// One instance of a relation check: rel in 1..9, arms k, l, series indices
/// i, j, and the smallest ambient virtual degree among its equations.
struct RelationInstance {
    int rel = 1;
    int k = 0;
    int l = 0;
    int i = 0;
    int j = 0;
    long ambient_virtual = 0;

    std::string name() const;
};

/// All instances of relations (1)-(9) applicable to n whose ambient virtual
/// degree is at most max_virtual.
std::vector<RelationInstance> relation_instances(int n, long max_virtual);

/// Variable-inclusion lift along the arm-forgetting functor, n -> n+1:
/// the representative is unchanged as a polynomial; the new arm's entry of
/// the dimension vector is set to d_0.
QuotClass lift(QuotientAlgebra& src, QuotientAlgebra& dst, const QuotClass& a);

/// Target dimension vector of the lift.
DimVector lift_dim(int src_n, const DimVector& d_full);

} // namespace coha
