// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria run against shared algebra instances so kernel bases are
// computed once.

#include "coha/linalg.hpp"
#include "coha/pn.hpp"
#include "coha/quiver.hpp"
#include "coha/series.hpp"
#include "coha/shuffle.hpp"
#include "coha/sstquot.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace coha;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": "
              << what;
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok)
        ++failures;
}

RowReduceResult ideal_piece(const SymBasis& basis, const std::vector<RatPoly>& gens) {
    RrefBuilder rows(basis.size());
    const DimVector& dim = basis.dim;
    RatPoly ambient(dim);
    for (const RatPoly& g : gens) {
        int rest = basis.polydeg - g.total_degree();
        if (rest < 0)
            continue;
        std::vector<int> e(ambient.num_slots(), 0);
        std::function<void(int, int)> rec = [&](int k, int left) {
            if (k == ambient.num_slots()) {
                if (left == 0)
                    rows.insert(basis.coordinates(
                        symmetrize(g * RatPoly::monomial(dim, Monomial(e), 1))));
                return;
            }
            for (int v = 0; v <= left; ++v) {
                e[k] = v;
                rec(k + 1, left - v);
            }
            e[k] = 0;
        };
        rec(0, rest);
    }
    return rows.result();
}

SymPoly random_sym(const DimVector& dim, int polydeg, std::mt19937_64& rng) {
    SymBasis basis = monomial_sym_basis(dim, polydeg);
    std::uniform_int_distribution<int> cdist(-2, 2);
    std::vector<Rational> coords(basis.size());
    for (auto& c : coords)
        c = cdist(rng);
    return basis.from_coordinates(coords);
}

constexpr long kMaxRelVirtual = 12; // criterion 2
constexpr long kMaxDimWeight = 6;   // criterion 3
constexpr long kMaxVirtual = 10;    // criterion 3

void criterion1(QuotientAlgebra& alg0, QuotientAlgebra& alg1) {
    bool ok = true;
    std::string detail;

    DimVector d11{1, 1};
    RatPoly x0 = RatPoly::variable(d11, 0, 0), z0 = RatPoly::variable(d11, 1, 0);
    std::vector<RatPoly> k2_rels = {(z0 - x0) * (z0 - x0)};
    for (int p = 0; p <= 6 && ok; ++p) {
        const SymBasis& basis = alg0.sym_basis(d11, p);
        if (!(alg0.kernel(d11, p).rows.result() == ideal_piece(basis, k2_rels)) ||
            alg0.quot_dim(d11, 2 * p) != (p == 0 ? 1 : 2)) {
            ok = false;
            detail = "K2 mismatch at polydeg " + std::to_string(p);
        }
    }

    DimVector d111 = delta0(1);
    RatPoly x = RatPoly::variable(d111, 0, 0);
    RatPoly y = RatPoly::variable(d111, 1, 0);
    RatPoly z = RatPoly::variable(d111, 2, 0);
    std::vector<RatPoly> q1_rels = {(z - x) * (z - y), (z - x) * (y - x)};
    for (int p = 0; p <= 6 && ok; ++p) {
        const SymBasis& basis = alg1.sym_basis(d111, p);
        RowReduceResult oracle = ideal_piece(basis, q1_rels);
        if (!(alg1.kernel(d111, p).rows.result() == oracle) ||
            alg1.quot_dim(d111, 2 * p) != basis.size() - oracle.rank()) {
            ok = false;
            detail = "A~2 mismatch at polydeg " + std::to_string(p);
        }
    }

    report(1, "quotient presentations Q[x,z]/(z-x)^2 and "
              "Q[x,y,z]/((z-x)(z-y),(z-x)(y-x)) up to polydeg 6",
           ok, detail);
}

void criterion2(std::vector<QuotientAlgebra*> algs) {
    bool ok = true;
    std::string detail;
    long total = 0;
    for (QuotientAlgebra* alg : algs) {
        for (const auto& inst : relation_instances(alg->n(), kMaxRelVirtual)) {
            ++total;
            if (!alg->check_relation(inst.rel, inst.k, inst.l, inst.i, inst.j)) {
                ok = false;
                detail = "n=" + std::to_string(alg->n()) + " " + inst.name();
                break;
            }
        }
        if (!ok)
            break;
    }
    report(2, "relations (1)-(9) hold in the quotient CoHA for n = 0, 1, 2 "
              "(ambient virtual degree <= 12)",
           ok, ok ? std::to_string(total) + " instances" : detail);
}

void criterion3(std::vector<QuotientAlgebra*> algs) {
    bool ok = true;
    std::string detail;
    long checked = 0;
    QtTrunc trunc{static_cast<int>(kMaxDimWeight), static_cast<int>(2 * kMaxVirtual)};
    for (int n = 0; n <= 3; ++n) {
        QtSeries poincare = coha_poincare_series(n, trunc);
        QuotientAlgebra* alg = n <= 2 ? algs[n] : nullptr;
        for (const auto& ds : regular_short_dims(n, kMaxDimWeight)) {
            long shift = euler_form_canonical(n, ds, ds);
            for (long v = shift; v <= kMaxVirtual; ++v) {
                if ((v - shift) % 2 != 0)
                    continue;
                long pd = pn_graded_dim(n, v, ds);
                long sd = series_signed_dim(poincare, ds, v);
                long qd = alg ? alg->quot_dim(expand_regular(n, ds), v - shift) : pd;
                ++checked;
                if (qd != pd || pd != sd) {
                    ok = false;
                    std::ostringstream os;
                    os << "n=" << n << " d=" << dim_to_string(ds) << " v=" << v
                       << ": quotient " << qd << ", pbw " << pd << ", series " << sd;
                    detail = os.str();
                }
            }
        }
    }
    report(3, "dimension triple-match quot_dim = pn_graded_dim = series "
              "coefficient (n <= 2; pn = series for n = 3)",
           ok, ok ? std::to_string(checked) + " bidegrees" : detail);
}

void criterion4(std::vector<QuotientAlgebra*> algs) {
    bool ok = true;
    std::string detail;
    long checked = 0;
    for (QuotientAlgebra* alg : algs) {
        int n = alg->n();
        for (const auto& ds : regular_short_dims(n, kMaxDimWeight)) {
            long shift = euler_form_canonical(n, ds, ds);
            for (long v = shift; v <= kMaxVirtual; ++v) {
                if ((v - shift) % 2 != 0)
                    continue;
                ++checked;
                if (!alg->generation_check(expand_regular(n, ds), v)) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " d=" + dim_to_string(ds) +
                             " v=" + std::to_string(v);
                    break;
                }
            }
            if (!ok)
                break;
        }
        if (!ok)
            break;
    }
    report(4, "generator products span every tested quotient bidegree "
              "(surjectivity at desk scale)",
           ok, ok ? std::to_string(checked) + " bidegrees" : detail);
}

void criterion5(QuotientAlgebra& src, QuotientAlgebra& dst, unsigned long long seed,
                bool& ok, std::string& detail) {
    std::mt19937_64 rng(seed);
    int n = src.n();
    std::vector<QuotClass> pool;
    for (int i = 0; i <= 2; ++i) {
        pool.push_back(src.gen_g(i));
        pool.push_back(src.gen_h(i));
    }
    for (int k = 1; k <= n; ++k)
        for (int i = 0; i <= 2; ++i) {
            pool.push_back(src.gen_e(k, i));
            pool.push_back(src.gen_f(k, i));
        }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const QuotClass& a = pool[pick(rng)];
        const QuotClass& b = pool[pick(rng)];
        if (!(lift(src, dst, src.mul(a, b)) ==
              dst.mul(lift(src, dst, a), lift(src, dst, b)))) {
            ok = false;
            detail = "lift not multiplicative at step " + std::to_string(n) + "->" +
                     std::to_string(n + 1);
        }
    }
    // injectivity on reduced coordinates, per tested source bidegree
    std::vector<std::pair<DimVector, int>> probes = {{delta0(n), 0},
                                                     {delta0(n), 1},
                                                     {delta0(n), 2},
                                                     {delta0(n), 3}};
    if (n >= 1) {
        probes.push_back({arm_e(n, 1), 2});
        probes.push_back({arm_f(n, 1), 2});
        probes.push_back({dim_add(delta0(n), arm_e(n, 1)), 1});
    } else {
        probes.push_back({{2, 2}, 2});
        probes.push_back({{2, 2}, 3});
    }
    for (const auto& [d, p] : probes) {
        if (!ok)
            break;
        const SymBasis& basis = src.sym_basis(d, p);
        long source_dim = src.quot_dim(d, 2L * p);
        std::vector<std::vector<Rational>> images;
        for (int c = 0; c < basis.size(); ++c) {
            std::vector<Rational> coords(basis.size(), Rational(0));
            coords[c] = 1;
            QuotClass cls = src.reduce(basis.from_coordinates(coords), p);
            images.push_back(lift(src, dst, cls).reduced);
        }
        if (row_reduce(images).rank() != source_dim) {
            ok = false;
            detail = "lift not injective at d=" + dim_to_string(d) +
                     " polydeg=" + std::to_string(p);
        }
    }
}

void criterion6() {
    bool ok = true;
    std::string detail;
    QtTrunc trunc{6, 24};
    for (int n = 0; n <= 4 && ok; ++n) {
        QtSeries arg = dt_data(n, trunc).to_series();
        QtSeries recovered = plethystic_log(coha_poincare_series(n, trunc));
        if (!(recovered == arg)) {
            ok = false;
            detail = "log(P) != DT argument at n = " + std::to_string(n);
            continue;
        }
        // support exactly {e_k, f_k, delta0}
        DimVector d0(n + 1, 1);
        for (const auto& [key, c] : recovered.coeffs()) {
            const DimVector& d = key.first;
            bool is_arm = false;
            for (int k = 1; k <= n; ++k) {
                DimVector ek(n + 1, 0);
                ek[k] = 1;
                DimVector fk(n + 1, 1);
                fk[k] = 0;
                if (d == ek || d == fk)
                    is_arm = true;
            }
            if (!is_arm && d != d0) {
                ok = false;
                detail = "DT support outside {e_k, f_k, delta0} at n = " +
                         std::to_string(n) + ", d = " + dim_to_string(d);
            }
        }
    }
    report(6, "plethystic_log(Poincare series) = DT data for n <= 4 "
              "(|d| <= 6, q <= 12), support {e_k, f_k, delta0}",
           ok, detail);
}

void criterion7(std::vector<QuotientAlgebra*> algs) {
    bool ok = true;
    std::string detail;

    // shuffle associativity on random homogeneous triples
    try {
        std::mt19937_64 rng(424242);
        for (QuotientAlgebra* alg : algs) {
            const Quiver& q = alg->quiver();
            int nv = q.num_vertices();
            std::uniform_int_distribution<int> entry(0, 1);
            std::uniform_int_distribution<int> deg(0, 2);
            int done = 0;
            while (done < 10 && ok) {
                DimVector a(nv), b(nv), c(nv);
                for (auto& x : a)
                    x = entry(rng);
                for (auto& x : b)
                    x = entry(rng);
                for (auto& x : c)
                    x = entry(rng);
                if (total_dim(a) > 3 || total_dim(b) > 3 || total_dim(c) > 3)
                    continue;
                SymPoly f = random_sym(a, deg(rng), rng);
                SymPoly g = random_sym(b, deg(rng), rng);
                SymPoly h = random_sym(c, deg(rng), rng);
                if (!(shuffle_product(q, shuffle_product(q, f, g), h) ==
                      shuffle_product(q, f, shuffle_product(q, g, h)))) {
                    ok = false;
                    detail = "associativity failure on n = " + std::to_string(alg->n());
                }
                ++done;
            }
        }
    } catch (const CohaError& ex) {
        // a denominator-cancellation assertion fired
        ok = false;
        detail = ex.what();
    }

    // confluence probe: 200 seeded words per n <= 3, two strategies
    for (int n = 0; n <= 3 && ok; ++n) {
        ConfluenceReport rep = confluence_probe(n, 200, 20240 + n);
        if (rep.mismatches != 0) {
            ok = false;
            detail = "confluence mismatch at n = " + std::to_string(n) + " on " +
                     rep.details.front();
        }
    }

    // PBW = Sym(V x Q[z]) dimension match over the criterion-3 range
    // (the termination-measure assertion is active inside every rewrite)
    for (int n = 0; n <= 3 && ok; ++n)
        for (const auto& ds : regular_short_dims(n, kMaxDimWeight))
            for (long v = 0; v <= kMaxVirtual && ok; ++v)
                if (pn_graded_dim(n, v, ds) != sym_vspace_dim(n, v, ds)) {
                    ok = false;
                    detail = "pbw/sym mismatch n=" + std::to_string(n) + " d=" +
                             dim_to_string(ds) + " v=" + std::to_string(v);
                }

    report(7, "property suites: shuffle associativity, exact denominator "
              "cancellation, decreasing rewrite measure, confluence probes, "
              "PBW = Sym dimension match",
           ok, detail);
}

} // namespace

int main() {
    try {
        QuotientAlgebra alg0(0), alg1(1), alg2(2);
        std::vector<QuotientAlgebra*> algs{&alg0, &alg1, &alg2};

        criterion1(alg0, alg1);
        criterion2(algs);
        criterion3(algs);
        criterion4(algs);

        bool ok5 = true;
        std::string detail5;
        criterion5(alg0, alg1, 501, ok5, detail5);
        criterion5(alg1, alg2, 512, ok5, detail5);
        report(5, "functoriality: lift(a*b) = lift(a)*lift(b) on 50 seeded "
                  "pairs per step, lift injective on reduced coordinates",
               ok5, detail5);

        criterion6();
        criterion7(algs);
    } catch (const std::exception& ex) {
        std::cout << "[FAIL] unexpected exception: " << ex.what() << std::endl;
        ++failures;
    }

    if (failures == 0) {
        std::cout << "acceptance: all criteria PASS" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return 1;
}
