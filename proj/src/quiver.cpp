#include "coha/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace coha {

long total_dim(const DimVector& d) {
    return std::accumulate(d.begin(), d.end(), 0L);
}

DimVector dim_add(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size())
        throw CohaError("dimension-vector length mismatch");
    DimVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

bool dim_leq(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

int Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertex_names[i] == name)
            return i;
    throw CohaError("unknown vertex '" + name + "'");
}

Quiver Quiver::empty(std::vector<std::string> names) {
    Quiver q;
    q.vertex_names = std::move(names);
    q.arrows.assign(q.num_vertices(), std::vector<int>(q.num_vertices(), 0));
    return q;
}

Quiver build_canonical_quiver(int n) {
    if (n < 0)
        throw CohaError("canonical quiver needs n >= 0");
    std::vector<std::string> names;
    names.push_back("0");
    for (int k = 1; k <= n; ++k)
        names.push_back(std::to_string(k));
    names.push_back("inf");
    Quiver q = Quiver::empty(std::move(names));
    int inf = n + 1;
    for (int k = 1; k <= n; ++k) {
        q.add_arrow(0, k);
        q.add_arrow(k, inf);
    }
    // The relations of C(lambda; 2^n) determine one spine arrow per arm;
    // for n <= 2 the algebra is presented by a relation-free quiver.
    if (n == 0)
        q.add_arrow(0, inf, 2);
    else if (n == 1)
        q.add_arrow(0, inf, 1);
    else if (n >= 3) {
        q.add_arrow(0, inf, 2);
        q.has_relations = true;
    }
    return q;
}

Quiver build_loop_quiver(int loops) {
    Quiver q = Quiver::empty({"0"});
    q.add_arrow(0, 0, loops);
    return q;
}

long euler_form_quiver(const Quiver& q, const DimVector& d, const DimVector& e) {
    int nv = q.num_vertices();
    if (static_cast<int>(d.size()) != nv || static_cast<int>(e.size()) != nv)
        throw CohaError("dimension vector does not match quiver");
    long r = 0;
    for (int i = 0; i < nv; ++i)
        r += static_cast<long>(d[i]) * e[i];
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            r -= static_cast<long>(q.arrows[i][j]) * d[i] * e[j];
    return r;
}

long euler_form_canonical(int n, const DimVector& d_short, const DimVector& e_short) {
    if (static_cast<int>(d_short.size()) != n + 1 || static_cast<int>(e_short.size()) != n + 1)
        throw CohaError("short-form dimension vector must have n+1 entries");
    long r = static_cast<long>(n) * d_short[0] * e_short[0];
    for (int k = 1; k <= n; ++k)
        r += static_cast<long>(d_short[k]) * e_short[k] -
             static_cast<long>(d_short[0]) * e_short[k] -
             static_cast<long>(d_short[k]) * e_short[0];
    return r;
}

long Stability::value(const DimVector& d) const {
    if (d.size() != theta.size())
        throw CohaError("dimension vector does not match stability");
    long r = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        r += static_cast<long>(theta[i]) * d[i];
    return r;
}

Stability canonical_stability(int n) {
    Stability st;
    st.theta.assign(n + 2, 0);
    st.theta[0] = 1;
    st.theta[n + 1] = -1;
    return st;
}

Rational slope(const Stability& st, const DimVector& d) {
    long tot = total_dim(d);
    if (tot == 0)
        throw CohaError("slope of the zero dimension vector is undefined");
    return make_rational(st.value(d), tot);
}

bool is_regular(int n, const DimVector& d_full) {
    if (static_cast<int>(d_full.size()) != n + 2)
        throw CohaError("full-form dimension vector must have n+2 entries");
    return d_full[0] == d_full[n + 1];
}

DimVector delta0(int n) { return DimVector(n + 2, 1); }

DimVector arm_e(int n, int k) {
    if (k < 1 || k > n)
        throw CohaError("arm index out of range");
    DimVector d(n + 2, 0);
    d[k] = 1;
    return d;
}

DimVector arm_f(int n, int k) {
    DimVector d = delta0(n);
    if (k < 1 || k > n)
        throw CohaError("arm index out of range");
    d[k] = 0;
    return d;
}

DimVector expand_regular(int n, const DimVector& d_short) {
    if (static_cast<int>(d_short.size()) != n + 1)
        throw CohaError("short-form dimension vector must have n+1 entries");
    DimVector d = d_short;
    d.push_back(d_short[0]);
    return d;
}

DimVector shorten_regular(int n, const DimVector& d_full) {
    if (!is_regular(n, d_full))
        throw CohaError("dimension vector is not regular (d_0 != d_inf)");
    return DimVector(d_full.begin(), d_full.end() - 1);
}

std::vector<DimVector> regular_short_dims(int n, long max_weight) {
    std::vector<DimVector> out;
    DimVector cur(n + 1, 0);
    std::function<void(int, long)> rec = [&](int v, long left) {
        if (v == n + 1) {
            out.push_back(cur);
            return;
        }
        long step = (v == 0) ? 2 : 1;
        for (int x = 0; step * x <= left; ++x) {
            cur[v] = x;
            rec(v + 1, left - step * x);
        }
        cur[v] = 0;
    };
    rec(0, max_weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::string dim_to_string(const DimVector& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            os << ",";
        os << d[i];
    }
    os << ")";
    return os.str();
}

} // namespace coha
