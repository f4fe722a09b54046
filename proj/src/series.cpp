#include "coha/series.hpp"

#include <algorithm>

namespace coha {

long short_dim_weight(const DimVector& d_short) {
    long w = 2L * d_short[0];
    for (std::size_t k = 1; k < d_short.size(); ++k)
        w += d_short[k];
    return w;
}

QtSeries QtSeries::one(int n, QtTrunc trunc) {
    QtSeries s(n, trunc);
    s.add(DimVector(n + 1, 0), 0, 1);
    return s;
}

Rational QtSeries::coeff(const DimVector& d_short, int q2) const {
    auto it = coeffs_.find({d_short, q2});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void QtSeries::add(const DimVector& d_short, int q2, const Rational& c) {
    if (c == 0)
        return;
    if (static_cast<int>(d_short.size()) != n_ + 1)
        throw CohaError("dimension key does not match series arity");
    if (short_dim_weight(d_short) > trunc_.max_total_dim || std::abs(q2) > trunc_.max_q2)
        return;
    auto [it, inserted] = coeffs_.emplace(std::make_pair(d_short, q2), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

void QtSeries::require_compatible(const QtSeries& o) const {
    if (n_ != o.n_ || !(trunc_ == o.trunc_))
        throw CohaError("series truncation/arity mismatch");
}

QtSeries QtSeries::operator+(const QtSeries& o) const {
    require_compatible(o);
    QtSeries r = *this;
    for (const auto& [key, c] : o.coeffs_)
        r.add(key.first, key.second, c);
    return r;
}

QtSeries QtSeries::operator-(const QtSeries& o) const {
    require_compatible(o);
    QtSeries r = *this;
    for (const auto& [key, c] : o.coeffs_)
        r.add(key.first, key.second, -c);
    return r;
}

QtSeries QtSeries::operator*(const QtSeries& o) const {
    require_compatible(o);
    QtSeries r(n_, trunc_);
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : o.coeffs_) {
            DimVector d = ka.first;
            for (int v = 0; v <= n_; ++v)
                d[v] += kb.first[v];
            r.add(d, ka.second + kb.second, ca * cb);
        }
    return r;
}

QtSeries QtSeries::operator*(const Rational& c) const {
    QtSeries r(n_, trunc_);
    if (c == 0)
        return r;
    for (const auto& [key, a] : coeffs_)
        r.coeffs_.emplace(key, a * c);
    return r;
}

QtSeries QtSeries::adams(int m) const {
    QtSeries r(n_, trunc_);
    for (const auto& [key, c] : coeffs_) {
        DimVector d = key.first;
        for (auto& x : d)
            x *= m;
        r.add(d, key.second * m, c);
    }
    return r;
}

std::map<int, Rational> QtSeries::constant_part() const {
    std::map<int, Rational> out;
    DimVector zero(n_ + 1, 0);
    for (const auto& [key, c] : coeffs_)
        if (key.first == zero)
            out.emplace(key.second, c);
    return out;
}

namespace {

Rational binom(long upper, long k) {
    if (k < 0 || upper < k)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(upper),
                 static_cast<unsigned long>(k));
    return Rational(r);
}

int moebius(int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0)
                return 0;
            result = -result;
        }
    }
    if (m > 1)
        result = -result;
    return result;
}

} // namespace

QtSeries plethystic_exp(const QtSeries& f) {
    const QtTrunc& trunc = f.trunc();
    int n = f.n();
    DimVector zero(n + 1, 0);
    QtSeries result = QtSeries::one(n, trunc);
    for (const auto& [key, c] : f.coeffs()) {
        const DimVector& d = key.first;
        int k2 = key.second;
        if (d == zero)
            throw CohaError("plethystic exponential needs zero coefficient at d = 0");
        if (!rat_is_integer(c))
            throw CohaError("plethystic exponential needs integer coefficients, got " +
                            rat_to_string(c));
        long a = rat_to_long(c);
        long w = short_dim_weight(d);
        long mmax = trunc.max_total_dim / w;
        if (k2 != 0)
            mmax = std::min(mmax, static_cast<long>(trunc.max_q2) / std::abs(k2));
        // (1 - q^{k} t^d)^{-a}
        QtSeries factor(n, trunc);
        for (long m = 0; m <= mmax; ++m) {
            Rational coeff = a > 0 ? binom(a - 1 + m, m)
                                   : (m % 2 == 0 ? binom(-a, m) : -binom(-a, m));
            if (coeff == 0)
                continue;
            DimVector dm = d;
            for (auto& x : dm)
                x *= static_cast<int>(m);
            factor.add(dm, static_cast<int>(k2 * m), coeff);
        }
        result = result * factor;
    }
    return result;
}

QtSeries plethystic_log(const QtSeries& s) {
    const QtTrunc& trunc = s.trunc();
    int n = s.n();
    auto cpart = s.constant_part();
    if (cpart.size() != 1 || cpart.begin()->first != 0 || cpart.begin()->second != 1)
        throw CohaError("plethystic logarithm needs constant term exactly 1");

    QtSeries nilp = s - QtSeries::one(n, trunc); // supported in |d| >= 1
    // ordinary log: ln(1 + N) = sum (-1)^{j+1} N^j / j
    QtSeries ln(n, trunc);
    QtSeries power = QtSeries::one(n, trunc);
    for (int j = 1; j <= trunc.max_total_dim; ++j) {
        power = power * nilp;
        if (power.is_zero())
            break;
        Rational c(j % 2 == 1 ? 1 : -1, j);
        ln = ln + power * c;
    }
    // Moebius inversion of Exp(F) = exp(sum_m psi_m(F)/m)
    QtSeries out(n, trunc);
    for (int m = 1; m <= trunc.max_total_dim; ++m) {
        int mu = moebius(m);
        if (mu == 0)
            continue;
        out = out + ln.adams(m) * Rational(mu, m);
    }
    return out;
}

DtDatum dt_data(int n, QtTrunc trunc) {
    DtDatum dt;
    dt.n = n;
    dt.trunc = trunc;

    auto arm_neg_q = [&](const DimVector& d) {
        // (-q)/(1-q^2) = -q - q^3 - q^5 - ...
        std::map<int, Rational> part;
        for (int i = 0; 2 * (2 * i + 1) <= trunc.max_q2; ++i)
            part.emplace(2 * (2 * i + 1), Rational(-1));
        if (short_dim_weight(d) <= trunc.max_total_dim)
            dt.parts.emplace(d, std::move(part));
    };
    for (int k = 1; k <= n; ++k) {
        DimVector ek(n + 1, 0);
        ek[k] = 1;
        arm_neg_q(ek);
        DimVector fk(n + 1, 1);
        fk[k] = 0;
        arm_neg_q(fk);
    }
    // (1+q^2)/(1-q^2) = 1 + 2q^2 + 2q^4 + ...
    DimVector d0(n + 1, 1);
    if (short_dim_weight(d0) <= trunc.max_total_dim) {
        std::map<int, Rational> part;
        part.emplace(0, Rational(1));
        for (int i = 1; 4 * i <= trunc.max_q2; ++i)
            part.emplace(4 * i, Rational(2));
        dt.parts.emplace(d0, std::move(part));
    }
    return dt;
}

QtSeries DtDatum::to_series() const {
    QtSeries s(n, trunc);
    for (const auto& [d, part] : parts)
        for (const auto& [q2, c] : part)
            s.add(d, q2, c);
    return s;
}

QtSeries coha_poincare_series(int n, QtTrunc trunc) {
    return plethystic_exp(dt_data(n, trunc).to_series());
}

long series_signed_dim(const QtSeries& p, const DimVector& d_short, long vdeg) {
    Rational c = p.coeff(d_short, static_cast<int>(2 * vdeg));
    if (vdeg % 2 != 0)
        c = -c;
    if (!rat_is_integer(c) || c < 0)
        throw CohaError("series coefficient is not a nonnegative integer at " +
                        dim_to_string(d_short) + ", v = " + std::to_string(vdeg));
    return rat_to_long(c);
}

} // namespace coha
