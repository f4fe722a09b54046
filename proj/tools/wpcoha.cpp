#include "coha/json_io.hpp"
#include "coha/pn.hpp"
#include "coha/quiver.hpp"
#include "coha/series.hpp"
#include "coha/sstquot.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace coha;

DimVector parse_dims(const std::string& s) {
    DimVector d;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        d.push_back(std::stoi(tok));
    return d;
}

// Accepts the regular short form d_0,...,d_n or the full form with d_inf.
DimVector to_full(int n, DimVector d) {
    if (static_cast<int>(d.size()) == n + 1)
        return expand_regular(n, d);
    if (static_cast<int>(d.size()) == n + 2) {
        if (!is_regular(n, d))
            throw CohaError("dimension vector is not regular (d_0 != d_inf)");
        return d;
    }
    throw CohaError("expected " + std::to_string(n + 1) + " or " +
                    std::to_string(n + 2) + " entries for n = " + std::to_string(n));
}

json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in)
            throw CohaError("cannot open file " + arg.substr(1));
        return json::parse(in);
    }
    return json::parse(arg);
}

// (virtual degree, dimension) given as "v,delta0", "v,e1", "v,f2" or
// "v,d_0,...,d_n".
std::pair<long, DimVector> parse_bidegree(const std::string& s, int n) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CohaError("bidegree needs 'v,dims'");
    long v = std::stol(s.substr(0, comma));
    std::string rest = s.substr(comma + 1);
    DimVector d(n + 1, 0);
    if (rest == "delta0") {
        d.assign(n + 1, 1);
    } else if (!rest.empty() && (rest[0] == 'e' || rest[0] == 'f')) {
        int k = std::stoi(rest.substr(1));
        if (k < 1 || k > n)
            throw CohaError("arm index out of range in bidegree");
        if (rest[0] == 'e')
            d[k] = 1;
        else {
            d.assign(n + 1, 1);
            d[k] = 0;
        }
    } else {
        d = parse_dims(rest);
        if (static_cast<int>(d.size()) == n + 2)
            d = shorten_regular(n, d);
        if (static_cast<int>(d.size()) != n + 1)
            throw CohaError("bidegree dimension vector has wrong length");
    }
    return {v, d};
}

int run_verify(int n, long max_virtual, long max_dim, long max_vdeg, bool quiet) {
    bool all_ok = true;

    QuotientAlgebra alg(n);
    auto instances = relation_instances(n, max_virtual);
    int failures = 0;
    for (const auto& inst : instances) {
        bool ok = alg.check_relation(inst.rel, inst.k, inst.l, inst.i, inst.j);
        if (!ok) {
            ++failures;
            std::cout << "FAIL relation " << inst.name() << "\n";
        } else if (!quiet) {
            std::cout << "ok relation " << inst.name() << "\n";
        }
    }
    if (failures == 0)
        std::cout << "all " << instances.size() << " relation instances hold (n=" << n
                  << ", ambient virtual degree <= " << max_virtual << ")\n";
    else
        all_ok = false;

    QtTrunc trunc{static_cast<int>(max_dim), static_cast<int>(2 * max_vdeg)};
    QtSeries poincare = coha_poincare_series(n, trunc);
    int dim_failures = 0;
    long checked = 0;
    for (const auto& ds : regular_short_dims(n, max_dim)) {
        DimVector full = expand_regular(n, ds);
        long shift = euler_form_canonical(n, ds, ds);
        for (long v = shift; v <= max_vdeg; ++v) {
            if ((v - shift) % 2 != 0)
                continue;
            long cohdeg = v - shift;
            long qd = alg.quot_dim(full, cohdeg);
            long pd = pn_graded_dim(n, v, ds);
            long sd = series_signed_dim(poincare, ds, v);
            ++checked;
            if (qd != pd || pd != sd) {
                ++dim_failures;
                all_ok = false;
                std::cout << "FAIL dims at d=" << dim_to_string(ds) << " v=" << v
                          << ": quotient " << qd << ", pbw " << pd << ", series " << sd
                          << "\n";
            }
        }
    }
    if (dim_failures == 0)
        std::cout << "dimension triple-match holds at " << checked
                  << " bidegrees (|d| <= " << max_dim << ", virtual degree <= "
                  << max_vdeg << ")\n";

    std::cout << (all_ok ? "verify: PASS\n" : "verify: FAIL\n");
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomological Hall algebras of weighted projective lines: "
                 "shuffle products, semistable quotients, presented algebras, "
                 "and plethystic series"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text|json|tsv")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    unsigned long long seed = 2024;
    app.add_option("--seed", seed, "seed for randomized probes");

    // quiver euler
    auto* quiver_cmd = app.add_subcommand("quiver", "quiver and Euler-form utilities");
    auto* euler_cmd = quiver_cmd->add_subcommand("euler", "canonical Euler form <d,e>");
    int euler_n = 1;
    std::string euler_d, euler_e;
    euler_cmd->add_option("--n", euler_n, "number of weight-2 points")->required();
    euler_cmd->add_option("--d", euler_d, "dimension vector d")->required();
    euler_cmd->add_option("--e", euler_e, "dimension vector e")->required();
    auto* show_cmd = quiver_cmd->add_subcommand("show", "print the quiver Q(2^n)");
    int show_n = 1;
    show_cmd->add_option("--n", show_n, "number of weight-2 points")->required();

    // coha ...
    auto* coha_cmd = app.add_subcommand("coha", "semistable CoHA computations (n <= 2)");
    auto* mul_cmd = coha_cmd->add_subcommand("mul", "shuffle product of two classes");
    int mul_n = 1;
    std::string mul_lhs, mul_rhs;
    mul_cmd->add_option("--n,--quiver", mul_n, "canonical quiver index")->required();
    mul_cmd->add_option("--lhs", mul_lhs, "left factor (JSON or @file)")->required();
    mul_cmd->add_option("--rhs", mul_rhs, "right factor (JSON or @file)")->required();
    bool mul_free = false;
    mul_cmd->add_flag("--free", mul_free, "skip the semistable reduction");

    auto* dims_cmd = coha_cmd->add_subcommand("dims", "graded dimensions of H(M_d)");
    int dims_n = 1;
    std::string dims_d;
    long dims_max = 10;
    dims_cmd->add_option("--n", dims_n)->required();
    dims_cmd->add_option("--d", dims_d, "regular dimension vector")->required();
    dims_cmd->add_option("--max-cohdeg", dims_max, "max ordinary cohomological degree");

    auto* rel_cmd = coha_cmd->add_subcommand("check-relations", "relation suite");
    int rel_n = 1;
    long rel_maxv = 12;
    int rel_max_index = -1;
    rel_cmd->add_option("--n", rel_n)->required();
    rel_cmd->add_option("--max-virtual", rel_maxv, "ambient virtual degree bound");
    rel_cmd->add_option("--max-index", rel_max_index,
                        "bound series indices instead of the degree");

    auto* gen_cmd = coha_cmd->add_subcommand("generators", "print the generator table");
    int gen_n = 1;
    long gen_max = 3;
    gen_cmd->add_option("--n", gen_n)->required();
    gen_cmd->add_option("--max-index", gen_max, "max series index");

    // pn ...
    auto* pn_cmd = app.add_subcommand("pn", "the presented algebras P_n");
    auto* nf_cmd = pn_cmd->add_subcommand("normal-form", "PBW normal form of a word");
    int nf_n = 1;
    std::string nf_word;
    nf_cmd->add_option("--n", nf_n)->required();
    nf_cmd->add_option("--word", nf_word, "letters like \"f1.1 e1.1\" or \"g2 h4\"")
        ->required();

    auto* pdims_cmd = pn_cmd->add_subcommand("dims", "graded dimensions of P_n");
    int pdims_n = 1;
    long pdims_max = 12;
    std::string pdims_bideg;
    long pdims_maxdim = 6;
    pdims_cmd->add_option("--n", pdims_n)->required();
    pdims_cmd->add_option("--max-cohdeg", pdims_max, "max virtual degree");
    pdims_cmd->add_option("--bidegree", pdims_bideg, "single bidegree v,dims");
    pdims_cmd->add_option("--max-dim", pdims_maxdim, "max |d| for the table");

    auto* conf_cmd = pn_cmd->add_subcommand(
        "confluence", "rewrite random words under two strategies");
    int conf_n = 1;
    int conf_samples = 200;
    conf_cmd->add_option("--n", conf_n)->required();
    conf_cmd->add_option("--samples", conf_samples, "number of random words");

    // series ...
    auto* series_cmd = app.add_subcommand("series", "Poincare series and DT data");
    auto* poin_cmd = series_cmd->add_subcommand("poincare", "P_{q,t}(Coha(P^1(2^n)))");
    int poin_n = 1;
    long poin_maxq = 12, poin_maxd = 6;
    poin_cmd->add_option("--n", poin_n)->required();
    poin_cmd->add_option("--max-q", poin_maxq, "max q exponent");
    poin_cmd->add_option("--max-d", poin_maxd, "max |d|");
    auto* dt_cmd = series_cmd->add_subcommand("dt", "DT invariants of Tor(P^1(2^n))");
    int dt_n = 1;
    long dt_maxq = 12, dt_maxd = 6;
    dt_cmd->add_option("--n", dt_n)->required();
    dt_cmd->add_option("--max-q", dt_maxq);
    dt_cmd->add_option("--max-d", dt_maxd);

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "relation suite and dimension triple-match; exit 1 on failure");
    int verify_n = 1;
    long verify_maxv = 12, verify_maxdim = 6, verify_maxvdeg = 10;
    int verify_max_index = -1;
    bool verify_verbose = false;
    verify_cmd->add_option("--n", verify_n)->required();
    verify_cmd->add_option("--max-virtual", verify_maxv, "relation degree bound");
    verify_cmd->add_option("--max-index", verify_max_index,
                           "bound series indices instead of the degree");
    verify_cmd->add_option("--max-dim", verify_maxdim, "triple-match |d| bound");
    verify_cmd->add_option("--max-vdeg", verify_maxvdeg, "triple-match degree bound");
    verify_cmd->add_flag("--verbose", verify_verbose, "print each relation instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2; // usage errors exit 2; --help exits 0
    }

    try {
        if (euler_cmd->parsed()) {
            DimVector d = parse_dims(euler_d), e = parse_dims(euler_e);
            if (static_cast<int>(d.size()) == euler_n + 2)
                d = shorten_regular(euler_n, d);
            if (static_cast<int>(e.size()) == euler_n + 2)
                e = shorten_regular(euler_n, e);
            long v = euler_form_canonical(euler_n, d, e);
            if (format == "json")
                std::cout << json{{"euler", v}}.dump() << "\n";
            else
                std::cout << v << "\n";
            return 0;
        }
        if (show_cmd->parsed()) {
            std::cout << quiver_to_json(build_canonical_quiver(show_n)).dump(2) << "\n";
            return 0;
        }
        if (mul_cmd->parsed()) {
            QuotientAlgebra alg(mul_n);
            const Quiver& q = alg.quiver();
            RatPoly lp = poly_from_json(load_json_arg(mul_lhs), q);
            RatPoly rp = poly_from_json(load_json_arg(mul_rhs), q);
            SymPoly lhs = SymPoly::checked(lp), rhs = SymPoly::checked(rp);
            SymPoly prod = shuffle_product(q, lhs, rhs);
            if (mul_free) {
                if (format == "json")
                    std::cout << poly_to_json(prod.poly(), q).dump() << "\n";
                else
                    std::cout << prod.poly().to_text(q.vertex_names) << "\n";
                return 0;
            }
            int p = shuffle_polydeg(
                q, Bidegree{lhs.dim(), lhs.is_zero() ? 0 : lhs.total_degree()},
                Bidegree{rhs.dim(), rhs.is_zero() ? 0 : rhs.total_degree()});
            QuotClass c = prod.is_zero()
                              ? alg.zero_class(Bidegree{dim_add(lhs.dim(), rhs.dim()), p})
                              : alg.reduce(prod, p);
            if (format == "json")
                std::cout << quot_class_to_json(alg, c).dump() << "\n";
            else
                std::cout << alg.canonical_rep(c).poly().to_text(q.vertex_names) << "\n";
            return 0;
        }
        if (dims_cmd->parsed()) {
            QuotientAlgebra alg(dims_n);
            DimVector full = to_full(dims_n, parse_dims(dims_d));
            json rows = json::array();
            for (long c = 0; c <= dims_max; ++c) {
                long dim = alg.quot_dim(full, c);
                if (format == "tsv" || format == "text")
                    std::cout << c << "\t" << dim << "\n";
                else
                    rows.push_back({{"cohdeg", c}, {"dim", dim}});
            }
            if (format == "json")
                std::cout << rows.dump() << "\n";
            return 0;
        }
        if (rel_cmd->parsed()) {
            QuotientAlgebra alg(rel_n);
            long bound = rel_max_index >= 0 ? 4L * rel_max_index + 4 : rel_maxv;
            auto instances = relation_instances(rel_n, bound);
            int failures = 0;
            for (const auto& inst : instances) {
                if (rel_max_index >= 0 &&
                    (inst.i > rel_max_index || inst.j > rel_max_index))
                    continue;
                bool ok = alg.check_relation(inst.rel, inst.k, inst.l, inst.i, inst.j);
                std::cout << (ok ? "ok   " : "FAIL ") << inst.name() << "\n";
                if (!ok)
                    ++failures;
            }
            std::cout << (failures == 0 ? "all relations hold\n"
                                        : "relation failures: " + std::to_string(failures) +
                                              "\n");
            return failures == 0 ? 0 : 1;
        }
        if (gen_cmd->parsed()) {
            QuotientAlgebra alg(gen_n);
            const auto& names = alg.quiver().vertex_names;
            for (long i = 0; i <= gen_max; ++i) {
                std::cout << "g" << 2 * i << " = "
                          << alg.canonical_rep(alg.gen_g(static_cast<int>(i)))
                                 .poly()
                                 .to_text(names)
                          << "  @ " << dim_to_string(delta0(gen_n)) << "\n";
                std::cout << "h" << 2 * i + 2 << " = "
                          << alg.canonical_rep(alg.gen_h(static_cast<int>(i)))
                                 .poly()
                                 .to_text(names)
                          << "  @ " << dim_to_string(delta0(gen_n)) << "\n";
                for (int k = 1; k <= gen_n; ++k) {
                    std::cout << "e" << k << "." << 2 * i + 1 << " = "
                              << alg.canonical_rep(alg.gen_e(k, static_cast<int>(i)))
                                     .poly()
                                     .to_text(names)
                              << "  @ " << dim_to_string(arm_e(gen_n, k)) << "\n";
                    std::cout << "f" << k << "." << 2 * i + 1 << " = "
                              << alg.canonical_rep(alg.gen_f(k, static_cast<int>(i)))
                                     .poly()
                                     .to_text(names)
                              << "  @ " << dim_to_string(arm_f(gen_n, k)) << "\n";
                }
            }
            return 0;
        }
        if (nf_cmd->parsed()) {
            PnWord w = parse_word(nf_word, nf_n);
            PnElement x = PnElement::monomial(nf_n, w);
            PnElement nf = rewrite_to_pbw(x);
            std::cout << nf.to_string() << "\n";
            return 0;
        }
        if (pdims_cmd->parsed()) {
            if (!pdims_bideg.empty()) {
                auto [v, d] = parse_bidegree(pdims_bideg, pdims_n);
                std::cout << pn_graded_dim(pdims_n, v, d) << "\n";
                return 0;
            }
            for (const auto& d : regular_short_dims(pdims_n, pdims_maxdim)) {
                for (long v = 0; v <= pdims_max; ++v) {
                    long dim = pn_graded_dim(pdims_n, v, d);
                    if (dim != 0)
                        std::cout << dim_to_string(d) << "\t" << v << "\t" << dim << "\n";
                }
            }
            return 0;
        }
        if (conf_cmd->parsed()) {
            ConfluenceReport rep = confluence_probe(conf_n, conf_samples, seed);
            std::cout << "samples: " << rep.samples
                      << ", mismatches: " << rep.mismatches << "\n";
            for (const auto& w : rep.details)
                std::cout << "mismatch at word: " << w << "\n";
            return rep.mismatches == 0 ? 0 : 1;
        }
        if (poin_cmd->parsed() || dt_cmd->parsed()) {
            bool is_dt = dt_cmd->parsed();
            int n = is_dt ? dt_n : poin_n;
            QtTrunc trunc{static_cast<int>(is_dt ? dt_maxd : poin_maxd),
                          static_cast<int>(2 * (is_dt ? dt_maxq : poin_maxq))};
            QtSeries s = is_dt ? dt_data(n, trunc).to_series()
                               : coha_poincare_series(n, trunc);
            if (format == "json") {
                std::cout << series_to_json(s).dump() << "\n";
            } else if (is_dt) {
                // signed Laurent data per dimension vector
                for (const auto& [key, c] : s.coeffs()) {
                    std::ostringstream ds;
                    for (std::size_t v = 0; v < key.first.size(); ++v)
                        ds << (v ? "," : "") << key.first[v];
                    std::cout << ds.str() << "\t";
                    if (key.second % 2 == 0)
                        std::cout << key.second / 2;
                    else
                        std::cout << key.second << "/2";
                    std::cout << "\t" << rat_to_string(c) << "\n";
                }
            } else {
                // (d, cohdeg, dim) rows: dim = (-1)^v coefficient
                for (const auto& [key, c] : s.coeffs()) {
                    std::ostringstream ds;
                    for (std::size_t v = 0; v < key.first.size(); ++v)
                        ds << (v ? "," : "") << key.first[v];
                    long v = key.second / 2;
                    std::cout << ds.str() << "\t" << v << "\t"
                              << rat_to_string(v % 2 == 0 ? c : -c) << "\n";
                }
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            long bound = verify_max_index >= 0 ? 4L * verify_max_index + 4 : verify_maxv;
            return run_verify(verify_n, bound, verify_maxdim, verify_maxvdeg,
                              !verify_verbose);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    std::cerr << "no action selected\n";
    return 2;
}
