#include "coha/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace coha {

long virtual_degree(const Quiver& q, const Bidegree& b) {
    return 2L * b.polydeg + euler_form_quiver(q, b.dim, b.dim);
}

long virtual_degree_canonical(int n, const Bidegree& b) {
    DimVector s = shorten_regular(n, b.dim);
    return 2L * b.polydeg + euler_form_canonical(n, s, s);
}

int shuffle_polydeg(const Quiver& q, const Bidegree& f, const Bidegree& g) {
    long c = 0;
    int nv = q.num_vertices();
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            long kappa = q.arrows[i][j] - (i == j ? 1 : 0);
            c += kappa * f.dim[i] * g.dim[j];
        }
    return static_cast<int>(f.polydeg + g.polydeg + c);
}

namespace {

// All increasing subsets of {0..m-1} of size k (the shuffle choices at one vertex).
std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x < m; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

SymPoly shuffle_product(const Quiver& q, const SymPoly& f, const SymPoly& g) {
    int nv = q.num_vertices();
    const DimVector& d = f.dim();
    const DimVector& e = g.dim();
    if (static_cast<int>(d.size()) != nv || static_cast<int>(e.size()) != nv)
        throw CohaError("shuffle factors do not match the quiver");
    if (f.is_zero() || g.is_zero())
        return SymPoly::zero(dim_add(d, e));

    DimVector m = dim_add(d, e);
    RatPoly ambient(m); // for offsets only

    // per-vertex shuffle choices: positions of the first factor's slots
    std::vector<std::vector<std::vector<int>>> choices(nv);
    for (int i = 0; i < nv; ++i)
        choices[i] = subsets(m[i], d[i]);

    // vertices whose loop-free diagonal factor sits in the denominator
    std::vector<int> divided;
    for (int i = 0; i < nv; ++i)
        if (q.arrows[i][i] == 0 && d[i] > 0 && e[i] > 0)
            divided.push_back(i);

    RatPoly numerator(m);
    std::vector<std::size_t> pick(nv, 0);
    std::vector<std::vector<int>> first(nv), second(nv);
    while (true) {
        long sign = 1;
        for (int i = 0; i < nv; ++i) {
            first[i] = choices[i][pick[i]];
            second[i].clear();
            std::vector<char> used(m[i], 0);
            for (int a : first[i])
                used[a] = 1;
            for (int s = 0; s < m[i]; ++s)
                if (!used[s])
                    second[i].push_back(s);
            if (q.arrows[i][i] == 0 && d[i] > 0 && e[i] > 0) {
                long inv = 0;
                for (int a : first[i])
                    for (int b : second[i])
                        if (b < a)
                            ++inv;
                if (inv % 2)
                    sign = -sign;
            }
        }

        // relabel factors into the combined slot space
        std::vector<int> fmap(RatPoly(d).num_slots());
        std::vector<int> gmap(RatPoly(e).num_slots());
        {
            RatPoly fa(d), ga(e);
            for (int i = 0; i < nv; ++i) {
                for (int r = 0; r < d[i]; ++r)
                    fmap[fa.slot_offset(i) + r] = ambient.slot_offset(i) + first[i][r];
                for (int s = 0; s < e[i]; ++s)
                    gmap[ga.slot_offset(i) + s] = ambient.slot_offset(i) + second[i][s];
            }
        }
        RatPoly term = f.poly().map_slots(m, fmap) * g.poly().map_slots(m, gmap);
        if (sign < 0)
            term = -term;

        // kernel factors with nonnegative exponent
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) {
                int kappa = q.arrows[i][j] - (i == j ? 1 : 0);
                if (kappa <= 0)
                    continue;
                for (int r = 0; r < d[i]; ++r)
                    for (int s = 0; s < e[j]; ++s) {
                        RatPoly lin =
                            RatPoly::variable(m, j, second[j][s]) -
                            RatPoly::variable(m, i, first[i][r]);
                        term = term * lin.pow(kappa);
                    }
            }

        // complement of this shuffle's denominator inside the full Vandermonde
        for (int i : divided) {
            for (std::size_t a = 0; a < first[i].size(); ++a)
                for (std::size_t b = a + 1; b < first[i].size(); ++b)
                    term = term * (RatPoly::variable(m, i, first[i][b]) -
                                   RatPoly::variable(m, i, first[i][a]));
            for (std::size_t a = 0; a < second[i].size(); ++a)
                for (std::size_t b = a + 1; b < second[i].size(); ++b)
                    term = term * (RatPoly::variable(m, i, second[i][b]) -
                                   RatPoly::variable(m, i, second[i][a]));
        }

        numerator += term;

        int v = 0;
        while (v < nv && ++pick[v] == choices[v].size()) {
            pick[v] = 0;
            ++v;
        }
        if (v == nv)
            break;
    }

    // one exact division by the common Vandermonde denominator
    RatPoly result = numerator;
    for (int i : divided)
        for (int r = 0; r < m[i]; ++r)
            for (int s = r + 1; s < m[i]; ++s)
                result = result.divide_exact_linear(ambient.flat_index(i, s),
                                                    ambient.flat_index(i, r));

    return symmetrize(result);
}

FreeCohaElt FreeCohaElt::unit(int num_vertices) {
    FreeCohaElt u;
    DimVector zero(num_vertices, 0);
    u.pieces_.emplace(Bidegree{zero, 0}, SymPoly::unit(zero));
    return u;
}

FreeCohaElt FreeCohaElt::piece(SymPoly p) {
    FreeCohaElt out;
    if (p.is_zero())
        return out;
    // split into homogeneous parts
    std::map<int, RatPoly> parts;
    for (const auto& [mono, c] : p.poly().terms()) {
        auto [it, inserted] = parts.emplace(mono.deg, RatPoly(p.dim()));
        it->second += RatPoly::monomial(p.dim(), mono, c);
    }
    for (auto& [deg, poly] : parts)
        out.add_piece(Bidegree{p.dim(), deg}, SymPoly::checked(std::move(poly)));
    return out;
}

void FreeCohaElt::add_piece(const Bidegree& b, const SymPoly& p) {
    if (p.is_zero())
        return;
    auto it = pieces_.find(b);
    if (it == pieces_.end()) {
        pieces_.emplace(b, p);
        return;
    }
    SymPoly sum = it->second + p;
    if (sum.is_zero())
        pieces_.erase(it);
    else
        it->second = sum;
}

FreeCohaElt FreeCohaElt::operator+(const FreeCohaElt& o) const {
    FreeCohaElt r = *this;
    for (const auto& [b, p] : o.pieces_)
        r.add_piece(b, p);
    return r;
}

FreeCohaElt FreeCohaElt::operator-(const FreeCohaElt& o) const {
    FreeCohaElt r = *this;
    for (const auto& [b, p] : o.pieces_)
        r.add_piece(b, -p);
    return r;
}

FreeCohaElt FreeCohaElt::operator*(const Rational& c) const {
    FreeCohaElt r;
    if (c == 0)
        return r;
    for (const auto& [b, p] : pieces_)
        r.pieces_.emplace(b, p * c);
    return r;
}

FreeCohaElt free_mul(const Quiver& q, const FreeCohaElt& a, const FreeCohaElt& b) {
    FreeCohaElt out;
    for (const auto& [ba, pa] : a.pieces())
        for (const auto& [bb, pb] : b.pieces()) {
            SymPoly prod = shuffle_product(q, pa, pb);
            if (prod.is_zero())
                continue;
            out.add_piece(Bidegree{prod.dim(), shuffle_polydeg(q, ba, bb)}, prod);
        }
    return out;
}

} // namespace coha
