#pragma once

#include "coha/quiver.hpp"
#include "coha/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace coha {

/// Truncation window: total dimension |d| = 2 d_0 + sum_k d_k of the
/// short-form vector, and the doubled q-exponent (q = L^{1/2} bookkeeping).
struct QtTrunc {
    int max_total_dim = 6;
    int max_q2 = 24;

    bool operator==(const QtTrunc& o) const {
        return max_total_dim == o.max_total_dim && max_q2 == o.max_q2;
    }
};

/// |d| of a short-form regular dimension vector (d_inf counted).
long short_dim_weight(const DimVector& d_short);

/// Truncated series in q (half-integer exponents stored doubled) and
/// monomials t^d over short-form regular dimension vectors.
class QtSeries {
public:
    QtSeries(int n, QtTrunc trunc) : n_(n), trunc_(trunc) {}

    static QtSeries one(int n, QtTrunc trunc);

    int n() const { return n_; }
    const QtTrunc& trunc() const { return trunc_; }
    const std::map<std::pair<DimVector, int>, Rational>& coeffs() const {
        return coeffs_;
    }

    Rational coeff(const DimVector& d_short, int q2) const;
    void add(const DimVector& d_short, int q2, const Rational& c); // drops outside trunc
    bool is_zero() const { return coeffs_.empty(); }

    QtSeries operator+(const QtSeries& o) const;
    QtSeries operator-(const QtSeries& o) const;
    QtSeries operator*(const QtSeries& o) const;
    QtSeries operator*(const Rational& c) const;
    bool operator==(const QtSeries& o) const {
        return n_ == o.n_ && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
    }

    /// Adams operation psi_m: q^k t^d -> q^{mk} t^{md}.
    QtSeries adams(int m) const;

    /// The d = 0 part as a map q2 -> coefficient.
    std::map<int, Rational> constant_part() const;

private:
    void require_compatible(const QtSeries& o) const;

    int n_;
    QtTrunc trunc_;
    std::map<std::pair<DimVector, int>, Rational> coeffs_;
};

/// Sym: multiplicative-to-additive, computed by the product formula
/// Exp(sum a_{d,k} q^{k/2} t^d) = prod (1 - q^{k/2} t^d)^{-a_{d,k}}.
/// Requires zero d = 0 part and integer coefficients.
QtSeries plethystic_exp(const QtSeries& f);

/// Inverse of Sym via Log(S) = sum_m (mu(m)/m) psi_m(ln S).
/// Requires constant term exactly 1.
QtSeries plethystic_log(const QtSeries& s);

/// Laurent data of the DT invariants of Tor(P^1(2^n)): the Sym-argument
/// (-q)/(1-q^2) at t^{e_k}, t^{f_k} and (1+q^2)/(1-q^2) at t^{delta_0},
/// expanded within the truncation.
struct DtDatum {
    int n = 0;
    QtTrunc trunc;
    std::map<DimVector, std::map<int, Rational>> parts; // d -> (q2 -> coeff)

    QtSeries to_series() const;
};

DtDatum dt_data(int n, QtTrunc trunc);

/// P_{q,t}(Coha(P^1(2^n))) = Sym(dt argument), within the truncation.
QtSeries coha_poincare_series(int n, QtTrunc trunc);

/// Graded dimension read off the Poincare series: dim = (-1)^v * coefficient
/// of q^v t^d. Throws if the signed coefficient is not a nonnegative integer.
long series_signed_dim(const QtSeries& p, const DimVector& d_short, long vdeg);

} // namespace coha
