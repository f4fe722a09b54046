#include "coha/ratpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coha {

Monomial::Monomial(std::vector<int> e) : exp(std::move(e)) {
    deg = std::accumulate(exp.begin(), exp.end(), 0);
}

RatPoly::RatPoly(DimVector dim) : dim_(std::move(dim)) {
    offsets_.resize(dim_.size() + 1, 0);
    for (std::size_t i = 0; i < dim_.size(); ++i) {
        if (dim_[i] < 0)
            throw CohaError("negative entry in dimension vector");
        offsets_[i + 1] = offsets_[i] + dim_[i];
    }
    num_slots_ = offsets_.empty() ? 0 : offsets_.back();
}

RatPoly RatPoly::constant(DimVector dim, const Rational& c) {
    RatPoly p(std::move(dim));
    if (c != 0)
        p.terms_.emplace(Monomial(std::vector<int>(p.num_slots_, 0)), c);
    return p;
}

RatPoly RatPoly::variable(DimVector dim, int vertex, int slot) {
    RatPoly p(std::move(dim));
    std::vector<int> e(p.num_slots_, 0);
    e[p.flat_index(vertex, slot)] = 1;
    p.terms_.emplace(Monomial(std::move(e)), Rational(1));
    return p;
}

RatPoly RatPoly::monomial(DimVector dim, const Monomial& m, const Rational& c) {
    RatPoly p(std::move(dim));
    if (static_cast<int>(m.exp.size()) != p.num_slots_)
        throw CohaError("monomial does not match ambient dimension vector");
    if (c != 0)
        p.terms_.emplace(m, c);
    return p;
}

int RatPoly::flat_index(int vertex, int slot) const {
    if (vertex < 0 || vertex >= static_cast<int>(dim_.size()))
        throw CohaError("vertex index out of range");
    if (slot < 0 || slot >= dim_[vertex])
        throw CohaError("slot index out of range for vertex dimension");
    return offsets_[vertex] + slot;
}

Rational RatPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int RatPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.deg; // graded order: last term has max degree
}

bool RatPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.deg;
    return terms_.rbegin()->first.deg == d;
}

void RatPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void RatPoly::require_same_dim(const RatPoly& o) const {
    if (dim_ != o.dim_)
        throw CohaError("ambient dimension vectors differ: " + dim_to_string(dim_) +
                        " vs " + dim_to_string(o.dim_));
}

RatPoly RatPoly::operator-() const {
    RatPoly r(dim_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    require_same_dim(o);
    RatPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    require_same_dim(o);
    RatPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    require_same_dim(o);
    RatPoly r(dim_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            m.deg = ma.deg + mb.deg;
            m.exp.resize(num_slots_);
            for (int k = 0; k < num_slots_; ++k)
                m.exp[k] = ma.exp[k] + mb.exp[k];
            r.add_term(m, ca * cb);
        }
    return r;
}

RatPoly RatPoly::operator*(const Rational& c) const {
    RatPoly r(dim_);
    if (c == 0)
        return r;
    for (const auto& [m, a] : terms_)
        r.terms_.emplace(m, a * c);
    return r;
}

RatPoly RatPoly::operator/(const Rational& c) const {
    if (c == 0)
        throw CohaError("division by zero");
    RatPoly r(dim_);
    for (const auto& [m, a] : terms_)
        r.terms_.emplace(m, a / c);
    return r;
}

bool RatPoly::operator==(const RatPoly& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
}

RatPoly RatPoly::pow(int k) const {
    if (k < 0)
        throw CohaError("negative power");
    RatPoly r = RatPoly::constant(dim_, 1);
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

RatPoly RatPoly::substitute_slot(int var_from, int var_to) const {
    RatPoly r(dim_);
    for (const auto& [m, c] : terms_) {
        Monomial t = m;
        t.exp[var_to] += t.exp[var_from];
        t.exp[var_from] = 0;
        r.add_term(t, c);
    }
    return r;
}

RatPoly RatPoly::divide_exact_linear(int var_a, int var_b) const {
    if (!substitute_slot(var_a, var_b).is_zero())
        throw CohaError("inexact polynomial division: remainder after dividing by "
                        "a linear difference is nonzero");
    RatPoly q(dim_);
    for (const auto& [m, c] : terms_) {
        int k = m.exp[var_a];
        if (k == 0)
            continue; // cancelled entirely against the remainder terms
        Monomial base = m;
        base.exp[var_a] = 0;
        // x_a^k m' = (x_a - x_b) * sum_j x_a^j x_b^{k-1-j} m' + x_b^k m'
        for (int j = 0; j < k; ++j) {
            Monomial t = base;
            t.exp[var_a] = j;
            t.exp[var_b] += k - 1 - j;
            t.deg = m.deg - 1;
            q.add_term(t, c);
        }
    }
    return q;
}

RatPoly RatPoly::apply_slot_permutation(const std::vector<std::vector<int>>& perms) const {
    RatPoly r(dim_);
    for (const auto& [m, c] : terms_) {
        Monomial t;
        t.deg = m.deg;
        t.exp.assign(num_slots_, 0);
        for (std::size_t v = 0; v < dim_.size(); ++v) {
            int off = offsets_[v];
            for (int j = 0; j < dim_[v]; ++j)
                t.exp[off + perms[v][j]] = m.exp[off + j];
        }
        r.add_term(t, c);
    }
    return r;
}

RatPoly RatPoly::map_slots(const DimVector& new_dim, const std::vector<int>& slot_map) const {
    RatPoly r(new_dim);
    if (static_cast<int>(slot_map.size()) != num_slots_)
        throw CohaError("slot map length mismatch");
    for (const auto& [m, c] : terms_) {
        Monomial t;
        t.deg = m.deg;
        t.exp.assign(r.num_slots_, 0);
        for (int k = 0; k < num_slots_; ++k)
            if (m.exp[k] != 0)
                t.exp[slot_map[k]] += m.exp[k];
        r.add_term(t, c);
    }
    return r;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> out;
    do
        out.push_back(id);
    while (std::next_permutation(id.begin(), id.end()));
    return out;
}

} // namespace

RatPoly RatPoly::symmetrized() const {
    std::vector<std::vector<std::vector<int>>> vertex_perms;
    long group_order = 1;
    for (int dv : dim_) {
        vertex_perms.push_back(all_permutations(dv));
        group_order *= static_cast<long>(vertex_perms.back().size());
    }
    RatPoly sum(dim_);
    std::vector<std::size_t> pick(dim_.size(), 0);
    std::vector<std::vector<int>> perms(dim_.size());
    while (true) {
        for (std::size_t v = 0; v < dim_.size(); ++v)
            perms[v] = vertex_perms[v][pick[v]];
        sum += apply_slot_permutation(perms);
        std::size_t v = 0;
        while (v < dim_.size() && ++pick[v] == vertex_perms[v].size()) {
            pick[v] = 0;
            ++v;
        }
        if (v == dim_.size())
            break;
    }
    return sum / Rational(group_order);
}

bool RatPoly::is_symmetric() const {
    for (std::size_t v = 0; v < dim_.size(); ++v) {
        for (int j = 0; j + 1 < dim_[v]; ++j) {
            std::vector<std::vector<int>> perms(dim_.size());
            for (std::size_t w = 0; w < dim_.size(); ++w) {
                perms[w].resize(dim_[w]);
                std::iota(perms[w].begin(), perms[w].end(), 0);
            }
            std::swap(perms[v][j], perms[v][j + 1]);
            if (apply_slot_permutation(perms) != *this)
                return false;
        }
    }
    return true;
}

std::string RatPoly::to_text(const std::vector<std::string>& vertex_names) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // descending graded-lex order reads naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "- ";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (a != 1 || m.deg == 0) {
            os << rat_to_string(a);
            printed_coeff = true;
        }
        bool any_var = false;
        for (std::size_t v = 0; v < dim_.size(); ++v)
            for (int j = 0; j < dim_[v]; ++j) {
                int e = m.exp[offsets_[v] + j];
                if (e == 0)
                    continue;
                if (printed_coeff || any_var)
                    os << (any_var ? " " : " * ");
                any_var = true;
                os << "x[" << (v < vertex_names.size() ? vertex_names[v] : std::to_string(v))
                   << "," << j + 1 << "]";
                if (e > 1)
                    os << "^" << e;
            }
    }
    return os.str();
}

std::string RatPoly::to_text() const {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < dim_.size(); ++v)
        names.push_back(std::to_string(v));
    return to_text(names);
}

SymPoly SymPoly::checked(RatPoly p) {
    if (!p.is_symmetric())
        throw CohaError("polynomial is not invariant under slot permutations");
    return SymPoly(std::move(p));
}

SymPoly symmetrize(const RatPoly& p) { return SymPoly(p.symmetrized()); }

std::vector<std::vector<int>> partitions_max_parts(int total, int max_parts) {
    std::vector<std::vector<int>> out;
    if (total == 0) {
        out.push_back(std::vector<int>(max_parts, 0));
        return out;
    }
    if (max_parts == 0)
        return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            auto padded = cur;
            padded.resize(max_parts, 0);
            out.push_back(padded);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts)
            return;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

namespace {

// All distinct arrangements of a padded partition (weakly decreasing tuple).
std::vector<std::vector<int>> distinct_arrangements(std::vector<int> padded) {
    std::sort(padded.begin(), padded.end());
    std::vector<std::vector<int>> out;
    do
        out.push_back(padded);
    while (std::next_permutation(padded.begin(), padded.end()));
    return out;
}

} // namespace

SymBasis monomial_sym_basis(const DimVector& dim, int polydeg) {
    SymBasis basis;
    basis.dim = dim;
    basis.polydeg = polydeg;
    int nv = static_cast<int>(dim.size());

    // all ways to spread polydeg over vertices, each budget partitioned
    std::vector<std::vector<int>> key(nv);
    std::function<void(int, int)> rec = [&](int v, int remaining) {
        if (v == nv) {
            if (remaining == 0)
                basis.keys.push_back(key);
            return;
        }
        for (int budget = 0; budget <= remaining; ++budget)
            for (auto& part : partitions_max_parts(budget, dim[v])) {
                key[v] = part;
                rec(v + 1, remaining - budget);
            }
    };
    rec(0, polydeg);

    for (const auto& k : basis.keys) {
        // product over vertices of monomial symmetric polynomials
        RatPoly p = RatPoly::constant(dim, 1);
        for (int v = 0; v < nv; ++v) {
            if (dim[v] == 0)
                continue;
            RatPoly factor(dim);
            for (const auto& arr : distinct_arrangements(k[v])) {
                std::vector<int> e(p.num_slots(), 0);
                for (int j = 0; j < dim[v]; ++j)
                    e[p.slot_offset(v) + j] = arr[j];
                factor += RatPoly::monomial(dim, Monomial(std::move(e)), 1);
            }
            p = p * factor;
        }
        basis.elems.push_back(SymPoly::checked(std::move(p)));
    }
    return basis;
}

std::vector<Rational> SymBasis::coordinates(const SymPoly& p) const {
    if (p.dim() != dim)
        throw CohaError("polynomial ambient does not match basis");
    std::vector<Rational> coords(keys.size(), Rational(0));
    const RatPoly& poly = p.poly();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        // leading representative: exponents sorted descending per vertex
        std::vector<int> e(poly.num_slots(), 0);
        for (std::size_t v = 0; v < dim.size(); ++v)
            for (int j = 0; j < dim[v]; ++j)
                e[poly.slot_offset(static_cast<int>(v)) + j] = keys[i][v][j];
        coords[i] = poly.coeff(Monomial(std::move(e)));
    }
    if (from_coordinates(coords) != p)
        throw CohaError("polynomial is not in the span of the monomial symmetric basis");
    return coords;
}

SymPoly SymBasis::from_coordinates(const std::vector<Rational>& coords) const {
    if (coords.size() != elems.size())
        throw CohaError("coordinate length mismatch");
    SymPoly r = SymPoly::zero(dim);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            r = r + elems[i] * coords[i];
    return r;
}

} // namespace coha
