#include "coha/pn.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace coha {

long PnGenerator::virt_deg() const {
    switch (kind) {
    case GenKind::G:
        return 2L * idx;
    case GenKind::H:
        return 2L * idx + 2;
    default:
        return 2L * idx + 1;
    }
}

int PnGenerator::subscript() const { return static_cast<int>(virt_deg()); }

DimVector PnGenerator::dim_short(int n) const {
    switch (kind) {
    case GenKind::G:
    case GenKind::H:
        return DimVector(n + 1, 1);
    case GenKind::E: {
        DimVector d(n + 1, 0);
        d[arm] = 1;
        return d;
    }
    default: {
        DimVector d(n + 1, 1);
        d[arm] = 0;
        return d;
    }
    }
}

int PnGenerator::class_rank(int n) const {
    switch (kind) {
    case GenKind::G:
        return 0;
    case GenKind::H:
        return 1;
    case GenKind::E:
        return 1 + arm;
    default:
        return 1 + n + arm;
    }
}

std::string PnGenerator::to_string() const {
    std::ostringstream os;
    switch (kind) {
    case GenKind::G:
        os << "g" << subscript();
        break;
    case GenKind::H:
        os << "h" << subscript();
        break;
    case GenKind::E:
        os << "e" << arm << "." << subscript();
        break;
    default:
        os << "f" << arm << "." << subscript();
        break;
    }
    return os.str();
}

PnGenerator PnGenerator::parse(const std::string& s, int n) {
    if (s.empty())
        throw CohaError("empty generator token");
    PnGenerator g;
    char c = s[0];
    std::string rest = s.substr(1);
    auto to_int = [&](const std::string& t) {
        try {
            std::size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size() || v < 0)
                throw CohaError("");
            return v;
        } catch (...) {
            throw CohaError("cannot parse generator '" + s + "'");
        }
    };
    if (c == 'g' || c == 'h') {
        g.kind = (c == 'g') ? GenKind::G : GenKind::H;
        if (!rest.empty() && rest[0] == '.')
            rest = rest.substr(1);
        int sub = to_int(rest);
        if (c == 'g') {
            if (sub % 2 != 0)
                throw CohaError("g-generator subscript must be even: " + s);
            g.idx = sub / 2;
        } else {
            if (sub % 2 != 0 || sub < 2)
                throw CohaError("h-generator subscript must be even and >= 2: " + s);
            g.idx = (sub - 2) / 2;
        }
        return g;
    }
    if (c == 'e' || c == 'f') {
        auto dot = rest.find('.');
        if (dot == std::string::npos)
            throw CohaError("expected arm.index in generator '" + s + "'");
        g.kind = (c == 'e') ? GenKind::E : GenKind::F;
        g.arm = to_int(rest.substr(0, dot));
        if (g.arm < 1 || g.arm > n)
            throw CohaError("arm index out of range in '" + s + "' for n = " +
                            std::to_string(n));
        int sub = to_int(rest.substr(dot + 1));
        if (sub % 2 != 1)
            throw CohaError("e/f-generator subscript must be odd: " + s);
        g.idx = (sub - 1) / 2;
        return g;
    }
    throw CohaError("unknown generator kind in '" + s + "'");
}

long word_virt_deg(const PnWord& w) {
    long v = 0;
    for (const auto& g : w)
        v += g.virt_deg();
    return v;
}

DimVector word_dim_short(int n, const PnWord& w) {
    DimVector d(n + 1, 0);
    for (const auto& g : w) {
        DimVector gd = g.dim_short(n);
        for (int v = 0; v <= n; ++v)
            d[v] += gd[v];
    }
    return d;
}

std::string word_to_string(const PnWord& w) {
    if (w.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            os << " ";
        os << w[i].to_string();
    }
    return os.str();
}

PnWord parse_word(const std::string& s, int n) {
    PnWord w;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok)
        if (tok != "1")
            w.push_back(PnGenerator::parse(tok, n));
    return w;
}

PnElement PnElement::monomial(int n, PnWord w, const Rational& c) {
    PnElement x(n);
    x.add_term(w, c);
    return x;
}

void PnElement::add_term(const PnWord& w, const Rational& c) {
    if (c == 0)
        return;
    for (const auto& g : w)
        if ((g.kind == GenKind::E || g.kind == GenKind::F) && (g.arm < 1 || g.arm > n_))
            throw CohaError("arm index " + std::to_string(g.arm) +
                            " out of range for n = " + std::to_string(n_));
    normalized_ = false;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

PnElement PnElement::operator+(const PnElement& o) const {
    if (n_ != o.n_)
        throw CohaError("mixing elements of different P_n");
    PnElement r = *this;
    r.normalized_ = false;
    for (const auto& [w, c] : o.terms_)
        r.add_term(w, c);
    return r;
}

PnElement PnElement::operator-(const PnElement& o) const {
    return *this + (o * Rational(-1));
}

PnElement PnElement::operator*(const Rational& c) const {
    PnElement r(n_);
    if (c == 0)
        return r;
    for (const auto& [w, a] : terms_)
        r.terms_.emplace(w, a * c);
    return r;
}

PnElement PnElement::operator*(const PnElement& o) const {
    if (n_ != o.n_)
        throw CohaError("mixing elements of different P_n");
    PnElement r(n_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            PnWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

std::string PnElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
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
        if (a != 1 || w.empty())
            os << rat_to_string(a) << (w.empty() ? "" : "*");
        os << word_to_string(w);
    }
    return os.str();
}

bool pbw_violation(const PnGenerator& a, const PnGenerator& b, int n) {
    int ra = a.class_rank(n), rb = b.class_rank(n);
    if (ra != rb)
        return ra > rb;
    if (a.kind == GenKind::G || a.kind == GenKind::H)
        return a.idx < b.idx; // weakly decreasing
    return a.idx <= b.idx;    // strictly decreasing
}

bool is_pbw_word(const PnWord& w, int n) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (pbw_violation(w[p], w[p + 1], n))
            return false;
    return true;
}

std::array<long, 4> rewrite_measure(const PnWord& w, int n) {
    long gcount = 0;
    for (const auto& g : w)
        if (g.kind == GenKind::G)
            ++gcount;
    long cinv = 0, iinv = 0;
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t q = p + 1; q < w.size(); ++q) {
            int rp = w[p].class_rank(n), rq = w[q].class_rank(n);
            if (rp > rq)
                ++cinv;
            else if (rp == rq) {
                bool weak = w[p].kind == GenKind::G || w[p].kind == GenKind::H;
                if (weak ? w[p].idx < w[q].idx : w[p].idx <= w[q].idx)
                    ++iinv;
            }
        }
    return {gcount, static_cast<long>(w.size()), cinv, iinv};
}

namespace {

PnGenerator mk(GenKind k, int arm, int idx) {
    PnGenerator g;
    g.kind = k;
    g.arm = arm;
    g.idx = idx;
    return g;
}

using RuleTerms = std::vector<std::pair<PnWord, Rational>>;

// [g_{2i}, e_{k,2j+1}] = sum_{r=0}^{j-1} h_{2(i+j-r)} e_{k,2r+1}
RuleTerms comm_g_e(int arm, int i, int j) {
    RuleTerms out;
    for (int r = 0; r <= j - 1; ++r)
        out.push_back({{mk(GenKind::H, 0, i + j - r - 1), mk(GenKind::E, arm, r)},
                       Rational(1)});
    return out;
}

// [g_{2i}, f_{k,2j+1}]; the i > j side via antisymmetry in (i, j).
RuleTerms comm_g_f(int arm, int i, int j) {
    RuleTerms out;
    if (i > j) {
        for (auto& [w, c] : comm_g_f(arm, j, i))
            out.push_back({w, -c});
        return out;
    }
    for (int r = 0; r <= j - i - 1; ++r)
        out.push_back({{mk(GenKind::F, arm, j - 1 - r), mk(GenKind::H, 0, r + i)},
                       Rational(1)});
    return out;
}

// [g_{2i}, h_{2j+2}]; antisymmetric in (i, j).
RuleTerms comm_g_h(int i, int j) {
    RuleTerms out;
    if (i > j) {
        for (auto& [w, c] : comm_g_h(j, i))
            out.push_back({w, -c});
        return out;
    }
    for (int r = 0; r <= j - i - 1; ++r)
        out.push_back({{mk(GenKind::H, 0, j - 1 - r), mk(GenKind::H, 0, r + i)},
                       Rational(1)});
    return out;
}

// [g_{2i}, g_{2j}] = 2 sum g h, for i <= j.
RuleTerms comm_g_g(int i, int j) {
    RuleTerms out;
    for (int r = 0; r <= j - i - 1; ++r)
        out.push_back({{mk(GenKind::G, 0, j - 1 - r), mk(GenKind::H, 0, r + i)},
                       Rational(2)});
    return out;
}

// Replacement of the out-of-order adjacent pair a b.
RuleTerms rewrite_pair(const PnGenerator& a, const PnGenerator& b) {
    RuleTerms out;
    auto swap_with = [&](const Rational& c) { out.push_back({{b, a}, c}); };

    if (a.kind == b.kind && a.arm == b.arm) {
        switch (a.kind) {
        case GenKind::G: // g_a g_b, a.idx < b.idx
            swap_with(1);
            for (auto& [w, c] : comm_g_g(a.idx, b.idx))
                out.push_back({w, c});
            return out;
        case GenKind::H:
            swap_with(1);
            return out;
        default: // E or F, anticommute; equal indices square to zero
            if (a.idx == b.idx)
                return out;
            swap_with(-1);
            return out;
        }
    }

    // distinct classes with class(a) > class(b)
    if (b.kind == GenKind::G) {
        swap_with(1);
        RuleTerms corr;
        if (a.kind == GenKind::H)
            corr = comm_g_h(b.idx, a.idx);
        else if (a.kind == GenKind::E)
            corr = comm_g_e(a.arm, b.idx, a.idx);
        else
            corr = comm_g_f(a.arm, b.idx, a.idx);
        for (auto& [w, c] : corr)
            out.push_back({w, -c}); // x g = g x - [g, x]
        return out;
    }
    if (b.kind == GenKind::H) { // e h, f h commute
        swap_with(1);
        return out;
    }
    if (a.kind == GenKind::F && b.kind == GenKind::E && a.arm == b.arm) {
        // f_{k,2a+1} e_{k,2b+1} = h_{2(a+b)+2} - e f
        swap_with(-1);
        out.push_back({{mk(GenKind::H, 0, a.idx + b.idx)}, Rational(1)});
        return out;
    }
    // cross-arm e/e, f/f, f/e all commute
    swap_with(1);
    return out;
}

int find_violation(const PnWord& w, int n, RewriteStrategy strategy) {
    if (strategy == RewriteStrategy::LeftmostInnermost) {
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (pbw_violation(w[p], w[p + 1], n))
                return static_cast<int>(p);
    } else {
        for (int p = static_cast<int>(w.size()) - 2; p >= 0; --p)
            if (pbw_violation(w[p], w[p + 1], n))
                return p;
    }
    return -1;
}

} // namespace

PnElement rewrite_to_pbw(const PnElement& x, RewriteStrategy strategy) {
    int n = x.n();
    PnElement out(n);
    std::map<PnWord, Rational> agenda(x.terms());
    while (!agenda.empty()) {
        auto it = agenda.begin();
        PnWord w = it->first;
        Rational c = it->second;
        agenda.erase(it);
        if (c == 0)
            continue;
        int pos = find_violation(w, n, strategy);
        if (pos < 0) {
            out.add_term(w, c);
            continue;
        }
        auto before = rewrite_measure(w, n);
        for (const auto& [repl, rc] : rewrite_pair(w[pos], w[pos + 1])) {
            PnWord next(w.begin(), w.begin() + pos);
            next.insert(next.end(), repl.begin(), repl.end());
            next.insert(next.end(), w.begin() + pos + 2, w.end());
            if (!(rewrite_measure(next, n) < before))
                throw CohaError("rewrite step failed to decrease the termination "
                                "measure at word " + word_to_string(w));
            auto [jt, inserted] = agenda.emplace(next, c * rc);
            if (!inserted) {
                jt->second += c * rc;
                if (jt->second == 0)
                    agenda.erase(jt);
            }
        }
    }
    out.normalized_ = true;
    return out;
}

std::vector<PnWord> pbw_words(int n, long vdeg, const DimVector& d_short) {
    if (static_cast<int>(d_short.size()) != n + 1)
        throw CohaError("short-form dimension vector must have n+1 entries");
    std::vector<PnWord> words;
    PnWord cur;

    // blocks in PBW order: g, h, e-arm-1..n, f-arm-1..n
    std::function<void(int, int, DimVector, long)> block =
        [&](int kind, int bound, DimVector dim_left, long v_left) {
            if (kind == 2 * n + 2) {
                if (v_left == 0 && total_dim(dim_left) == 0)
                    words.push_back(cur);
                return;
            }
            int next_kind = kind + 1;
            block(next_kind, static_cast<int>(vdeg), dim_left, v_left); // empty/ended block
            for (int idx = bound; idx >= 0; --idx) {
                PnGenerator g = kind == 0       ? mk(GenKind::G, 0, idx)
                                : kind == 1     ? mk(GenKind::H, 0, idx)
                                : kind <= n + 1 ? mk(GenKind::E, kind - 1, idx)
                                                : mk(GenKind::F, kind - n - 1, idx);
                long gv = g.virt_deg();
                DimVector gd = g.dim_short(n);
                if (gv > v_left || !dim_leq(gd, dim_left))
                    continue;
                DimVector rest(dim_left.size());
                for (std::size_t t = 0; t < dim_left.size(); ++t)
                    rest[t] = dim_left[t] - gd[t];
                cur.push_back(g);
                int next_bound = (kind <= 1) ? idx : idx - 1;
                block(kind, next_bound, rest, v_left - gv);
                cur.pop_back();
            }
        };
    block(0, static_cast<int>(vdeg), d_short, vdeg);
    std::sort(words.begin(), words.end());
    return words;
}

long pn_graded_dim(int n, long vdeg, const DimVector& d_short) {
    if (vdeg < 0)
        return 0;
    return static_cast<long>(pbw_words(n, vdeg, d_short).size());
}

namespace {

// partitions of t into at most m parts
long p_le(long t, long m) {
    if (t < 0)
        return 0;
    if (t == 0)
        return 1;
    if (m <= 0)
        return 0;
    static std::map<std::pair<long, long>, long> memo;
    auto key = std::make_pair(t, m);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    long r = p_le(t, m - 1) + p_le(t - m, m);
    memo.emplace(key, r);
    return r;
}

// e/f block: `count` letters with distinct indices, letter degree 2i+1,
// total virtual budget b
long odd_block_count(long count, long b) {
    if (count == 0)
        return b == 0 ? 1 : 0;
    long t2 = b - count;
    if (t2 < 0 || t2 % 2 != 0)
        return 0;
    long t = t2 / 2 - count * (count - 1) / 2;
    return p_le(t, count);
}

} // namespace

long sym_vspace_dim(int n, long vdeg, const DimVector& d_short) {
    if (static_cast<int>(d_short.size()) != n + 1)
        throw CohaError("short-form dimension vector must have n+1 entries");
    if (vdeg < 0)
        return 0;
    int d0 = d_short[0];
    long total = 0;

    // G + H + sum_k F_k = d0, E_k = d_k - d0 + F_k >= 0
    std::vector<int> fcounts(n + 1, 0); // fcounts[k], k = 1..n
    std::function<void(int, int)> choose_f = [&](int k, int f_budget) {
        if (k == n + 1) {
            std::vector<long> ecounts(n + 1, 0);
            for (int a = 1; a <= n; ++a) {
                long e = static_cast<long>(d_short[a]) - d0 + fcounts[a];
                if (e < 0)
                    return;
                ecounts[a] = e;
            }
            for (int G = 0; G <= f_budget; ++G) {
                int H = f_budget - G;
                // convolve virtual-degree budgets across blocks:
                // g (G letters, deg 2i), h (H letters, deg 2i+2),
                // per arm: e (ecounts, odd, distinct), f (fcounts, odd, distinct)
                std::vector<long> dp(vdeg + 1, 0);
                dp[0] = 1;
                auto fold = [&](auto ways_of) {
                    std::vector<long> next(vdeg + 1, 0);
                    for (long v = 0; v <= vdeg; ++v) {
                        if (dp[v] == 0)
                            continue;
                        for (long b = 0; v + b <= vdeg; ++b) {
                            long ways = ways_of(b);
                            if (ways != 0)
                                next[v + b] += dp[v] * ways;
                        }
                    }
                    dp = std::move(next);
                };
                fold([&](long b) { return b % 2 == 0 ? p_le(b / 2, G) : 0; });
                fold([&](long b) {
                    long t2 = b - 2L * H;
                    return (t2 >= 0 && t2 % 2 == 0) ? p_le(t2 / 2, H) : 0;
                });
                for (int a = 1; a <= n; ++a)
                    fold([&](long b) { return odd_block_count(ecounts[a], b); });
                for (int a = 1; a <= n; ++a)
                    fold([&](long b) { return odd_block_count(fcounts[a], b); });
                total += dp[vdeg];
            }
            return;
        }
        for (int f = 0; f <= f_budget; ++f) {
            fcounts[k] = f;
            choose_f(k + 1, f_budget - f);
        }
        fcounts[k] = 0;
    };
    choose_f(1, d0);
    return total;
}

QuotClass pn_to_coha(QuotientAlgebra& alg, const PnElement& x) {
    if (alg.n() < 0 || alg.n() != x.n())
        throw CohaError("pn_to_coha needs the matching canonical CoHA (n <= 2)");
    int n = x.n();
    if (x.is_zero()) {
        DimVector zero(n + 2, 0);
        return alg.zero_class(Bidegree{zero, 0});
    }
    // all words must share one bidegree
    const PnWord& first = x.terms().begin()->first;
    DimVector dshort = word_dim_short(n, first);
    long vdeg = word_virt_deg(first);
    for (const auto& [w, c] : x.terms())
        if (word_dim_short(n, w) != dshort || word_virt_deg(w) != vdeg)
            throw CohaError("pn_to_coha needs a bidegree-homogeneous element");

    QuotClass acc = alg.unit();
    bool started = false;
    for (const auto& [w, c] : x.terms()) {
        QuotClass term = alg.unit();
        for (const auto& g : w) {
            QuotClass gc = g.kind == GenKind::G   ? alg.gen_g(g.idx)
                           : g.kind == GenKind::H ? alg.gen_h(g.idx)
                           : g.kind == GenKind::E ? alg.gen_e(g.arm, g.idx)
                                                  : alg.gen_f(g.arm, g.idx);
            term = alg.mul(term, gc);
        }
        term = term * c;
        acc = started ? acc + term : term;
        started = true;
    }
    return acc;
}

PnElement include_arms(const PnElement& x, int m) {
    if (m < x.n())
        throw CohaError("cannot include into a smaller P_n");
    PnElement r(m);
    for (const auto& [w, c] : x.terms())
        r.add_term(w, c);
    return r;
}

ConfluenceReport confluence_probe(int n, int samples, unsigned long long seed,
                                  int max_len, int max_idx) {
    std::mt19937_64 rng(seed);
    ConfluenceReport report;
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> idx_dist(0, max_idx);
    std::uniform_int_distribution<int> kind_dist(0, n >= 1 ? 3 : 1);
    std::uniform_int_distribution<int> arm_dist(1, std::max(1, n));

    for (int s = 0; s < samples; ++s) {
        PnWord w;
        int len = len_dist(rng);
        for (int t = 0; t < len; ++t) {
            GenKind k = static_cast<GenKind>(kind_dist(rng));
            int arm = (k == GenKind::E || k == GenKind::F) ? arm_dist(rng) : 0;
            w.push_back(mk(k, arm, idx_dist(rng)));
        }
        PnElement x = PnElement::monomial(n, w);
        PnElement a = rewrite_to_pbw(x, RewriteStrategy::LeftmostInnermost);
        PnElement b = rewrite_to_pbw(x, RewriteStrategy::RightmostOutermost);
        ++report.samples;
        if (!(a == b)) {
            ++report.mismatches;
            report.details.push_back(word_to_string(w));
        }
    }
    return report;
}

} // namespace coha
