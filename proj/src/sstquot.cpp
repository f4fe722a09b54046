#include "coha/sstquot.hpp"

#include "coha/parallel.hpp"

#include <algorithm>
#include <functional>

namespace coha {

bool QuotClass::is_zero() const {
    return std::all_of(reduced.begin(), reduced.end(),
                       [](const Rational& c) { return c == 0; });
}

QuotClass QuotClass::operator+(const QuotClass& o) const {
    if (!(bideg == o.bideg)) {
        // zero is the zero of the whole graded algebra
        if (is_zero())
            return o;
        if (o.is_zero())
            return *this;
        throw CohaError("adding classes of different bidegree");
    }
    QuotClass r{bideg, rep + o.rep, reduced};
    for (std::size_t i = 0; i < reduced.size(); ++i)
        r.reduced[i] += o.reduced[i];
    return r;
}

QuotClass QuotClass::operator-(const QuotClass& o) const {
    return *this + (o * Rational(-1));
}

QuotClass QuotClass::operator*(const Rational& c) const {
    QuotClass r{bideg, rep * c, reduced};
    for (auto& x : r.reduced)
        x *= c;
    return r;
}

int parse_relation_id(const std::string& s) {
    std::string t = s;
    if (!t.empty() && (t[0] == 'R' || t[0] == 'r'))
        t = t.substr(1);
    int rel = 0;
    try {
        rel = std::stoi(t);
    } catch (...) {
        throw CohaError("cannot parse relation id '" + s + "'");
    }
    if (rel < 1 || rel > 9)
        throw CohaError("relation id out of range: " + s);
    return rel;
}

QuotientAlgebra::QuotientAlgebra(int n)
    : n_(n), quiver_(build_canonical_quiver(n)), stability_(canonical_stability(n)) {
    if (quiver_.has_relations)
        throw CohaError("quotient computations need a relation-free quiver (n <= 2)");
}

QuotientAlgebra::QuotientAlgebra(Quiver q, Stability st)
    : n_(-1), quiver_(std::move(q)), stability_(std::move(st)) {
    if (quiver_.has_relations)
        throw CohaError("quotient computations need a relation-free quiver");
    if (static_cast<int>(stability_.theta.size()) != quiver_.num_vertices())
        throw CohaError("stability does not match quiver");
}

const SymBasis& QuotientAlgebra::sym_basis(const DimVector& d, int polydeg) {
    std::pair<DimVector, int> key{d, polydeg};
    {
        std::lock_guard<std::mutex> lock(basis_mutex_);
        auto it = basis_cache_.find(key);
        if (it != basis_cache_.end())
            return it->second;
    }
    SymBasis b = monomial_sym_basis(d, polydeg);
    std::lock_guard<std::mutex> lock(basis_mutex_);
    return basis_cache_.emplace(std::move(key), std::move(b)).first->second;
}

namespace {

// All nonzero dimension vectors strictly below d (componentwise, != 0, != d).
std::vector<DimVector> proper_subvectors(const DimVector& d) {
    std::vector<DimVector> out;
    DimVector cur(d.size(), 0);
    while (true) {
        std::size_t v = 0;
        while (v < d.size() && ++cur[v] > d[v]) {
            cur[v] = 0;
            ++v;
        }
        if (v == d.size())
            break;
        if (cur != d)
            out.push_back(cur);
    }
    return out;
}

} // namespace

const KernelBasis& QuotientAlgebra::kernel(const DimVector& d, int polydeg) {
    std::pair<DimVector, int> key{d, polydeg};
    {
        std::lock_guard<std::mutex> lock(kernel_mutex_);
        auto it = kernel_cache_.find(key);
        if (it != kernel_cache_.end())
            return it->second;
    }

    const SymBasis& basis = sym_basis(d, polydeg);
    KernelBasis kb{Bidegree{d, polydeg}, RrefBuilder(basis.size())};

    // deterministic task list of spanning products over all destabilizing
    // decompositions and degree splits
    std::vector<std::pair<const SymPoly*, const SymPoly*>> tasks;
    for (const DimVector& d1 : proper_subvectors(d)) {
        DimVector d2(d.size());
        for (std::size_t v = 0; v < d.size(); ++v)
            d2[v] = d[v] - d1[v];
        if (slope(stability_, d1) <= slope(stability_, d2))
            continue;
        int corr = shuffle_polydeg(quiver_, Bidegree{d1, 0}, Bidegree{d2, 0});
        if (polydeg - corr < 0)
            continue;
        for (int p1 = 0; p1 <= polydeg - corr; ++p1) {
            int p2 = polydeg - corr - p1;
            const SymBasis& b1 = sym_basis(d1, p1);
            const SymBasis& b2 = sym_basis(d2, p2);
            for (const SymPoly& u : b1.elems)
                for (const SymPoly& v : b2.elems)
                    tasks.emplace_back(&u, &v);
        }
    }

    std::vector<std::vector<Rational>> rows(tasks.size());
    std::vector<char> used(tasks.size(), 0);
    parallel_for(tasks.size(), [&](std::size_t i) {
        SymPoly prod = shuffle_product(quiver_, *tasks[i].first, *tasks[i].second);
        if (prod.is_zero())
            return;
        rows[i] = basis.coordinates(prod);
        used[i] = 1;
    });
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (used[i])
            kb.rows.insert(std::move(rows[i]));

    std::lock_guard<std::mutex> lock(kernel_mutex_);
    return kernel_cache_.emplace(std::move(key), std::move(kb)).first->second;
}

QuotClass QuotientAlgebra::reduce(const SymPoly& p, int polydeg) {
    if (!p.is_zero() && (!p.poly().is_homogeneous() || p.total_degree() != polydeg))
        throw CohaError("reduce needs a homogeneous polynomial of the stated degree");
    const SymBasis& basis = sym_basis(p.dim(), polydeg);
    const KernelBasis& kb = kernel(p.dim(), polydeg);
    std::vector<Rational> coords = basis.coordinates(p);
    return QuotClass{Bidegree{p.dim(), polydeg}, p, kb.rows.reduce(std::move(coords))};
}

QuotClass QuotientAlgebra::zero_class(const Bidegree& b) {
    const SymBasis& basis = sym_basis(b.dim, b.polydeg);
    return QuotClass{b, SymPoly::zero(b.dim),
                     std::vector<Rational>(basis.size(), Rational(0))};
}

QuotClass QuotientAlgebra::unit() {
    DimVector zero(quiver_.num_vertices(), 0);
    return reduce(SymPoly::unit(zero), 0);
}

long QuotientAlgebra::quot_dim(const DimVector& d, long cohdeg) {
    if (cohdeg < 0 || cohdeg % 2 != 0)
        return 0;
    int p = static_cast<int>(cohdeg / 2);
    return sym_basis(d, p).size() - kernel(d, p).rank();
}

QuotClass QuotientAlgebra::mul(const QuotClass& a, const QuotClass& b) {
    SymPoly pa = canonical_rep(a);
    SymPoly pb = canonical_rep(b);
    SymPoly prod = shuffle_product(quiver_, pa, pb);
    int p = shuffle_polydeg(quiver_, a.bideg, b.bideg);
    if (prod.is_zero())
        return zero_class(Bidegree{dim_add(a.bideg.dim, b.bideg.dim), p});
    return reduce(prod, p);
}

SymPoly QuotientAlgebra::canonical_rep(const QuotClass& a) {
    return sym_basis(a.bideg.dim, a.bideg.polydeg).from_coordinates(a.reduced);
}

QuotClass QuotientAlgebra::gen_g(int i) {
    if (n_ < 0)
        throw CohaError("generator table needs a canonical quiver");
    DimVector d = delta0(n_);
    RatPoly x = RatPoly::variable(d, 0, 0);
    return reduce(SymPoly::checked(x.pow(i)), i);
}

QuotClass QuotientAlgebra::gen_h(int i) {
    if (n_ < 0)
        throw CohaError("generator table needs a canonical quiver");
    DimVector d = delta0(n_);
    RatPoly x = RatPoly::variable(d, 0, 0);
    RatPoly z = RatPoly::variable(d, n_ + 1, 0);
    return reduce(SymPoly::checked(x.pow(i) * (z - x)), i + 1);
}

QuotClass QuotientAlgebra::gen_e(int k, int i) {
    if (n_ < 0)
        throw CohaError("generator table needs a canonical quiver");
    DimVector d = arm_e(n_, k);
    RatPoly y = RatPoly::variable(d, k, 0);
    return reduce(SymPoly::checked(y.pow(i)), i);
}

QuotClass QuotientAlgebra::gen_f(int k, int i) {
    if (n_ < 0)
        throw CohaError("generator table needs a canonical quiver");
    DimVector d = arm_f(n_, k);
    RatPoly x = RatPoly::variable(d, 0, 0);
    return reduce(SymPoly::checked(x.pow(i)), i);
}

QuotClass QuotientAlgebra::comm(const QuotClass& a, const QuotClass& b) {
    return mul(a, b) - mul(b, a);
}

QuotClass QuotientAlgebra::anti(const QuotClass& a, const QuotClass& b) {
    return mul(a, b) + mul(b, a);
}

// [g_{2i}, f_{k,2j+1}] as a combination of PBW words, Eq. (7); the i > j case
// goes through the antisymmetry of the first line.
QuotClass QuotientAlgebra::rhs_g_f(int k, int i, int j) {
    if (i > j)
        return rhs_g_f(k, j, i) * Rational(-1);
    int p = shuffle_polydeg(quiver_, Bidegree{delta0(n_), i},
                            Bidegree{arm_f(n_, k), j});
    QuotClass acc = zero_class(Bidegree{dim_add(delta0(n_), arm_f(n_, k)), p});
    for (int r = 0; r <= j - i - 1; ++r)
        acc = acc + mul(gen_f(k, j - 1 - r), gen_h(r + i));
    return acc;
}

QuotClass QuotientAlgebra::rhs_g_h(int i, int j) {
    if (i > j)
        return rhs_g_h(j, i) * Rational(-1);
    int p = shuffle_polydeg(quiver_, Bidegree{delta0(n_), i},
                            Bidegree{delta0(n_), j + 1});
    QuotClass acc = zero_class(Bidegree{dim_add(delta0(n_), delta0(n_)), p});
    for (int r = 0; r <= j - i - 1; ++r)
        acc = acc + mul(gen_h(j - 1 - r), gen_h(r + i));
    return acc;
}

QuotClass QuotientAlgebra::rhs_g_g(int i, int j) {
    if (i > j)
        return rhs_g_g(j, i) * Rational(-1);
    int p = shuffle_polydeg(quiver_, Bidegree{delta0(n_), i},
                            Bidegree{delta0(n_), j});
    QuotClass acc = zero_class(Bidegree{dim_add(delta0(n_), delta0(n_)), p});
    for (int r = 0; r <= j - i - 1; ++r)
        acc = acc + mul(gen_g(j - 1 - r), gen_h(r + i));
    return acc * Rational(2);
}

bool QuotientAlgebra::check_relation(int rel, int k, int l, int i, int j) {
    if (n_ < 0)
        throw CohaError("relation checks need a canonical quiver");
    auto need_arm = [&](int a) {
        if (a < 1 || a > n_)
            throw CohaError("arm index out of range for n = " + std::to_string(n_));
    };
    switch (rel) {
    case 1:
        need_arm(k);
        return anti(gen_e(k, i), gen_e(k, j)).is_zero();
    case 2:
        need_arm(k);
        return anti(gen_f(k, i), gen_f(k, j)).is_zero();
    case 3:
        need_arm(k);
        return anti(gen_e(k, i), gen_f(k, j)) == gen_h(i + j);
    case 4:
        need_arm(k);
        need_arm(l);
        if (k == l)
            throw CohaError("relation (4) needs two distinct arms");
        return comm(gen_e(k, i), gen_e(l, j)).is_zero() &&
               comm(gen_f(k, i), gen_f(l, j)).is_zero() &&
               comm(gen_e(k, i), gen_f(l, j)).is_zero();
    case 5: {
        bool ok = comm(gen_h(i), gen_h(j)).is_zero();
        if (n_ >= 1) {
            need_arm(k);
            ok = ok && comm(gen_h(i), gen_e(k, j)).is_zero() &&
                 comm(gen_h(i), gen_f(k, j)).is_zero();
        }
        return ok;
    }
    case 6: {
        need_arm(k);
        QuotClass lhs = comm(gen_g(i), gen_e(k, j));
        QuotClass rhs = zero_class(lhs.bideg);
        for (int r = 0; r <= j - 1; ++r)
            rhs = rhs + mul(gen_h(i + j - r - 1), gen_e(k, r));
        return lhs == rhs;
    }
    case 7:
        need_arm(k);
        return comm(gen_g(i), gen_f(k, j)) == rhs_g_f(k, i, j);
    case 8:
        return comm(gen_g(i), gen_h(j)) == rhs_g_h(i, j);
    case 9:
        return comm(gen_g(i), gen_g(j)) == rhs_g_g(i, j);
    default:
        throw CohaError("relation id out of range");
    }
}

bool QuotientAlgebra::generation_check(const DimVector& d_full, long virtual_deg) {
    if (n_ < 0)
        throw CohaError("generation check needs a canonical quiver");
    long shift = euler_form_quiver(quiver_, d_full, d_full);
    if (virtual_deg < shift || (virtual_deg - shift) % 2 != 0)
        return true; // empty piece
    int p = static_cast<int>((virtual_deg - shift) / 2);
    long target = quot_dim(d_full, 2L * p);
    if (target == 0)
        return true;

    const SymBasis& basis = sym_basis(d_full, p);
    RrefBuilder span(basis.size());

    // PBW-ordered products of generator-table elements:
    // g (weakly decreasing) h (weakly decreasing) e-arm blocks (strictly
    // decreasing) f-arm blocks (strictly decreasing).
    std::vector<QuotClass> letters;
    bool done = false;

    std::function<void(DimVector, long)> emit = [&](DimVector dim_left, long v_left) {
        if (done)
            return;
        if (total_dim(dim_left) != 0 || v_left != 0)
            return;
        QuotClass acc = unit();
        for (const QuotClass& g : letters)
            acc = mul(acc, g);
        if (!(acc.bideg.dim == d_full) || acc.bideg.polydeg != p)
            throw CohaError("generation word landed in the wrong bidegree");
        span.insert(acc.reduced);
        if (span.rank() >= target)
            done = true;
    };

    // recursive block builders; each returns via continuation style
    std::function<void(int, int, DimVector, long, std::function<void(DimVector, long)>)>
        add_letters = [&](int kind, int bound, DimVector dim_left, long v_left,
                          std::function<void(DimVector, long)> next) {
            // kind encodes block: 0=g, 1=h, 2..n+1 = e-arms, n+2..2n+1 = f-arms
            if (done)
                return;
            next(dim_left, v_left); // block ends
            for (int idx = bound; idx >= 0; --idx) {
                DimVector gen_dim;
                long gen_v;
                if (kind == 0) {
                    gen_dim = delta0(n_);
                    gen_v = 2L * idx;
                } else if (kind == 1) {
                    gen_dim = delta0(n_);
                    gen_v = 2L * idx + 2;
                } else if (kind <= n_ + 1) {
                    gen_dim = arm_e(n_, kind - 1);
                    gen_v = 2L * idx + 1;
                } else {
                    gen_dim = arm_f(n_, kind - n_ - 1);
                    gen_v = 2L * idx + 1;
                }
                if (gen_v > v_left || !dim_leq(gen_dim, dim_left))
                    continue;
                QuotClass g = kind == 0        ? gen_g(idx)
                              : kind == 1      ? gen_h(idx)
                              : kind <= n_ + 1 ? gen_e(kind - 1, idx)
                                               : gen_f(kind - n_ - 1, idx);
                letters.push_back(g);
                DimVector rest(dim_left.size());
                for (std::size_t t = 0; t < dim_left.size(); ++t)
                    rest[t] = dim_left[t] - gen_dim[t];
                // weakly decreasing for g/h (same index allowed again),
                // strictly decreasing for e/f
                int next_bound = (kind <= 1) ? idx : idx - 1;
                add_letters(kind, next_bound, rest, v_left - gen_v, next);
                letters.pop_back();
            }
        };

    int vbound = static_cast<int>(virtual_deg);
    std::function<void(int, DimVector, long)> run_blocks = [&](int kind, DimVector dl,
                                                               long vl) {
        if (done)
            return;
        if (kind == 2 * n_ + 2) {
            emit(dl, vl);
            return;
        }
        add_letters(kind, vbound, dl, vl,
                    [&, kind](DimVector d2, long v2) { run_blocks(kind + 1, d2, v2); });
    };
    run_blocks(0, d_full, virtual_deg);

    return span.rank() >= target;
}

std::string RelationInstance::name() const {
    std::string s = "R" + std::to_string(rel);
    if (rel <= 4 || rel == 6 || rel == 7 || (rel == 5 && k >= 1))
        s += " k=" + std::to_string(k);
    if (rel == 4)
        s += " l=" + std::to_string(l);
    s += " i=" + std::to_string(i) + " j=" + std::to_string(j);
    return s;
}

std::vector<RelationInstance> relation_instances(int n, long max_virtual) {
    std::vector<RelationInstance> out;
    long B = max_virtual;
    auto push = [&](int rel, int k, int l, int i, int j, long v) {
        if (v <= B)
            out.push_back(RelationInstance{rel, k, l, i, j, v});
    };
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; 2 * i + 2 <= B; ++i) {
            for (int j = i; 2 * (i + j) + 2 <= B; ++j) {
                push(1, k, 0, i, j, 2L * (i + j) + 2);
                push(2, k, 0, i, j, 2L * (i + j) + 2);
            }
            for (int j = 0; 2 * (i + j) + 2 <= B; ++j)
                push(3, k, 0, i, j, 2L * (i + j) + 2);
        }
        for (int l = 1; l <= n; ++l) {
            if (l == k)
                continue;
            for (int i = 0; 2 * i + 2 <= B; ++i)
                for (int j = 0; 2 * (i + j) + 2 <= B; ++j)
                    push(4, k, l, i, j, 2L * (i + j) + 2);
        }
    }
    // R5 bundles [h,h] with [h,e], [h,f]; smallest equation ambient is
    // 2i+2j+3 for n >= 1 and 2i+2j+4 for n = 0.
    if (n == 0) {
        for (int i = 0; 2 * i + 4 <= B; ++i)
            for (int j = i; 2 * (i + j) + 4 <= B; ++j)
                push(5, 0, 0, i, j, 2L * (i + j) + 4);
    } else {
        for (int k = 1; k <= n; ++k)
            for (int i = 0; 2 * i + 3 <= B; ++i)
                for (int j = 0; 2 * (i + j) + 3 <= B; ++j)
                    push(5, k, 0, i, j, 2L * (i + j) + 3);
    }
    for (int k = 1; k <= n; ++k)
        for (int i = 0; 2 * i <= B; ++i)
            for (int j = 0; 2 * (i + j) + 1 <= B; ++j) {
                push(6, k, 0, i, j, 2L * (i + j) + 1);
                push(7, k, 0, i, j, 2L * (i + j) + 1);
            }
    for (int i = 0; 2 * i <= B; ++i) {
        for (int j = 0; 2 * (i + j) + 2 <= B; ++j)
            push(8, 0, 0, i, j, 2L * (i + j) + 2);
        for (int j = 0; 2 * (i + j) <= B; ++j)
            push(9, 0, 0, i, j, 2L * (i + j));
    }
    return out;
}

DimVector lift_dim(int src_n, const DimVector& d_full) {
    if (static_cast<int>(d_full.size()) != src_n + 2)
        throw CohaError("dimension vector does not match source quiver");
    DimVector out(d_full.begin(), d_full.end() - 1);
    out.push_back(d_full[0]);          // new arm entry = d_0
    out.push_back(d_full[src_n + 1]);  // d_inf
    return out;
}

QuotClass lift(QuotientAlgebra& src, QuotientAlgebra& dst, const QuotClass& a) {
    if (src.n() < 0 || dst.n() != src.n() + 1)
        throw CohaError("lift needs canonical algebras with n -> n+1");
    int n = src.n();
    DimVector d = a.bideg.dim;
    DimVector dt = lift_dim(n, d);

    RatPoly src_ambient(d);
    RatPoly dst_ambient(dt);
    std::vector<int> slot_map(src_ambient.num_slots());
    for (int v = 0; v <= n + 1; ++v) {
        int dst_v = (v == n + 1) ? n + 2 : v; // inf moves past the new arm
        for (int j = 0; j < d[v]; ++j)
            slot_map[src_ambient.flat_index(v, j)] = dst_ambient.flat_index(dst_v, j);
    }
    SymPoly rep = src.canonical_rep(a);
    RatPoly moved = rep.poly().map_slots(dt, slot_map);
    if (moved.is_zero())
        return dst.zero_class(Bidegree{dt, a.bideg.polydeg});
    return dst.reduce(SymPoly::checked(std::move(moved)), a.bideg.polydeg);
}

} // namespace coha
