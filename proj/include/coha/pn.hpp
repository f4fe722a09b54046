#pragma once

#include "coha/quiver.hpp"
#include "coha/rational.hpp"
#include "coha/sstquot.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace coha {

/// Generators of the presented algebra P_n. The stored index is the series
/// index i >= 0; displayed subscripts are g_{2i}, h_{2i+2}, e_{k,2i+1},
/// f_{k,2i+1} with bidegrees (2i, d0), (2i+2, d0), (2i+1, e_k), (2i+1, f_k).
enum class GenKind { G = 0, H = 1, E = 2, F = 3 };

struct PnGenerator {
    GenKind kind = GenKind::G;
    int arm = 0; // 1..n for E/F, 0 otherwise
    int idx = 0; // series index

    long virt_deg() const;
    int subscript() const;
    DimVector dim_short(int n) const;

    /// PBW block rank: g < h < e-arm-1 < ... < e-arm-n < f-arm-1 < ...
    int class_rank(int n) const;

    auto tie() const { return std::tuple(static_cast<int>(kind), arm, idx); }
    bool operator<(const PnGenerator& o) const { return tie() < o.tie(); }
    bool operator==(const PnGenerator& o) const { return tie() == o.tie(); }

    std::string to_string() const; // "g4", "h2", "e1.3", "f2.1"
    static PnGenerator parse(const std::string& s, int n);
};

using PnWord = std::vector<PnGenerator>;

long word_virt_deg(const PnWord& w);
DimVector word_dim_short(int n, const PnWord& w);
std::string word_to_string(const PnWord& w);
PnWord parse_word(const std::string& s, int n); // whitespace-separated letters

enum class RewriteStrategy { LeftmostInnermost, RightmostOutermost };

/// Rational linear combination of words in the P_n generators.
class PnElement {
public:
    explicit PnElement(int n) : n_(n) {}

    static PnElement zero(int n) { return PnElement(n); }
    static PnElement monomial(int n, PnWord w, const Rational& c = Rational(1));

    int n() const { return n_; }
    const std::map<PnWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool normalized() const { return normalized_; }

    void add_term(const PnWord& w, const Rational& c);

    PnElement operator+(const PnElement& o) const;
    PnElement operator-(const PnElement& o) const;
    PnElement operator*(const Rational& c) const;
    PnElement operator*(const PnElement& o) const; // concatenation, bilinear
    bool operator==(const PnElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    std::string to_string() const;

private:
    friend PnElement rewrite_to_pbw(const PnElement& x, RewriteStrategy strategy);

    int n_;
    std::map<PnWord, Rational> terms_;
    bool normalized_ = false;
};

/// True if the adjacent pair (a, b) violates the PBW order.
bool pbw_violation(const PnGenerator& a, const PnGenerator& b, int n);
bool is_pbw_word(const PnWord& w, int n);

/// Termination measure (#g letters, length, class inversions, index
/// inversions); every rewrite step strictly decreases it lexicographically.
std::array<long, 4> rewrite_measure(const PnWord& w, int n);

/// Rewrites to the PBW normal form using relations (1)-(9). Throws if a step
/// fails to decrease the termination measure.
PnElement rewrite_to_pbw(const PnElement& x,
                         RewriteStrategy strategy = RewriteStrategy::LeftmostInnermost);

/// All PBW-ordered words of the given bidegree (virtual degree, short-form
/// dimension vector).
std::vector<PnWord> pbw_words(int n, long vdeg, const DimVector& d_short);

/// Count of PBW monomials, by direct word enumeration.
long pn_graded_dim(int n, long vdeg, const DimVector& d_short);

/// Graded dimension of Sym(V tensor Q[z]) by partition counting: even
/// generators (g at 0,2,4,..., h at 2,4,...) with repetition, odd generators
/// (e, f per arm at 1,3,5,...) without.
long sym_vspace_dim(int n, long vdeg, const DimVector& d_short);

/// Evaluates words through the generator table of Coha(P^1(2^n)), n <= 2.
/// The element must be bidegree-homogeneous.
QuotClass pn_to_coha(QuotientAlgebra& alg, const PnElement& x);

/// The inclusion P_n -> P_m (m >= n): same words, more arms available.
PnElement include_arms(const PnElement& x, int m);

struct ConfluenceReport {
    int samples = 0;
    int mismatches = 0;
    std::vector<std::string> details;
};

/// Rewrites random words under both strategies and reports normal-form
/// mismatches (empirical local-confluence check).
ConfluenceReport confluence_probe(int n, int samples, unsigned long long seed,
                                  int max_len = 4, int max_idx = 3);

} // namespace coha
