#pragma once

#include "coha/rational.hpp"

#include <string>
#include <vector>

namespace coha {

/// Dimension vector, aligned with a quiver's vertex order.
using DimVector = std::vector<int>;

long total_dim(const DimVector& d);
DimVector dim_add(const DimVector& a, const DimVector& b);
bool dim_leq(const DimVector& a, const DimVector& b); // componentwise

/// Finite quiver: ordered vertices and an arrow-multiplicity matrix.
/// The canonical family Q(2^n) uses vertex order [0, 1, ..., n, inf].
struct Quiver {
    std::vector<std::string> vertex_names;
    std::vector<std::vector<int>> arrows; // arrows[i][j] = #arrows i -> j
    bool has_relations = false;

    int num_vertices() const { return static_cast<int>(vertex_names.size()); }
    int arrow_count(int i, int j) const { return arrows[i][j]; }
    int vertex_index(const std::string& name) const;
    void add_arrow(int i, int j, int mult = 1) { arrows[i][j] += mult; }

    static Quiver empty(std::vector<std::string> names);
};

/// Q(2^n): n = 0 Kronecker, n = 1 the A~2 triangle, n = 2 the A~3 square,
/// n >= 3 the star 0 -> k -> inf with the two-arrow spine (has relations,
/// kept for Euler-form bookkeeping only).
Quiver build_canonical_quiver(int n);

/// One-vertex quiver with `loops` loop arrows (test quiver).
Quiver build_loop_quiver(int loops);

/// <d,e>_Q = sum_i d_i e_i - sum_{i->j} d_i e_j
long euler_form_quiver(const Quiver& q, const DimVector& d, const DimVector& e);

/// Symmetric Euler form of the weight-(2,...,2) canonical algebra on
/// regular vectors in short form (d_0, d_1, ..., d_n):
/// <d,e> = n d_0 e_0 + sum_k (d_k e_k - d_0 e_k - d_k e_0).
long euler_form_canonical(int n, const DimVector& d_short, const DimVector& e_short);

struct Stability {
    std::vector<int> theta; // integer weight per vertex

    long value(const DimVector& d) const;
};

/// theta = (1, 0, ..., 0, -1): regular = slope-0 semistable.
Stability canonical_stability(int n);

/// mu(d) = theta(d) / sum_i d_i; error on d = 0.
Rational slope(const Stability& st, const DimVector& d);

bool is_regular(int n, const DimVector& d_full); // d_0 == d_inf

// Distinguished dimension vectors of Q(2^n), full form (length n+2).
DimVector delta0(int n);
DimVector arm_e(int n, int k); // 1 at arm vertex k
DimVector arm_f(int n, int k); // delta0 - e_k

// Regular short form (d_0, d_1, ..., d_n) <-> full form (d_0, ..., d_n, d_0).
DimVector expand_regular(int n, const DimVector& d_short);
DimVector shorten_regular(int n, const DimVector& d_full);

/// All regular short-form vectors with 2 d_0 + sum_k d_k <= max_weight,
/// in lexicographic order (the zero vector included).
std::vector<DimVector> regular_short_dims(int n, long max_weight);

std::string dim_to_string(const DimVector& d);

} // namespace coha
