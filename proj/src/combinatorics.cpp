#include "szego/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "szego/errors.hpp"

namespace szego::comb {

namespace {

void check_cap(std::size_t m, int cap, const char* who) {
    if (m == 0) throw std::invalid_argument(std::string(who) + ": vector must be nonempty");
    if (static_cast<int>(m) > cap) {
        std::ostringstream os;
        os << who << ": m = " << m << " exceeds enumeration cap " << cap;
        throw CapError(os.str());
    }
}

// multinomial (n; l_1,...,l_j) = n! / (l_1! ... l_j!)
BigInt multinomial(int n, const Composition& l) {
    BigInt v = factorial(static_cast<unsigned>(n));
    for (int li : l) v /= factorial(static_cast<unsigned>(li));
    return v;
}

// One precomputed term of the gHD right-hand side: cumulative block
// boundaries, the l-exponents, and the rational weight
// (n; l) / (j! k_1...k_j).  Shared across all permutations and inputs
// of the same (m, n).
struct RhsTerm {
    std::vector<int> bounds;  // size j, cumulative k_1, k_1+k_2, ..., = m
    std::vector<int> lexp;    // size j
    Rational weight;
};

std::vector<RhsTerm> build_rhs_terms(int m, int n) {
    std::vector<RhsTerm> terms;
    const int jmax = std::min(m, n);
    for (int j = 1; j <= jmax; ++j) {
        const BigInt jfact = factorial(static_cast<unsigned>(j));
        const auto kcomps = compositions(m, j);
        const auto lcomps = compositions(n, j);
        for (const auto& kc : kcomps) {
            BigInt kprod(1);
            for (int ki : kc) kprod *= ki;
            std::vector<int> bounds(kc.size());
            std::partial_sum(kc.begin(), kc.end(), bounds.begin());
            for (const auto& lc : lcomps) {
                RhsTerm t;
                t.bounds = bounds;
                t.lexp = lc;
                t.weight = Rational(multinomial(n, lc), jfact * kprod);
                terms.push_back(std::move(t));
            }
        }
    }
    return terms;
}

}  // namespace

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
    const int m = size();
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : images) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images are not a bijection on 1..m");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> im(static_cast<std::size_t>(m));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> cycle_decompose(const Permutation& tau) {
    const int m = tau.size();
    std::vector<char> visited(static_cast<std::size_t>(m) + 1, 0);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= m; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            visited[static_cast<std::size_t>(cur)] = 1;
            cyc.push_back(cur);
            cur = tau.images[static_cast<std::size_t>(cur - 1)];
        } while (cur != start);
        cycles.push_back(std::move(cyc));  // leader = smallest by construction
    }
    return cycles;
}

std::vector<Composition> compositions(int total, int parts) {
    if (total < 1 || parts < 1 || parts > total) return {};
    std::vector<Composition> out;
    Composition cur(static_cast<std::size_t>(parts));
    // Recursive lexicographic generation.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        const int left = parts - 1 - pos;  // parts still to fill after this one
        for (int v = 1; v <= remaining - left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

Rational prefix_max_stat(const RationalVector& a, int j) {
    const int m = static_cast<int>(a.size());
    if (j < 0 || j > m) throw std::out_of_range("prefix_max_stat: index out of range");
    Rational best(0);
    Rational pfx(0);
    for (int i = 0; i < j; ++i) {
        pfx += a[static_cast<std::size_t>(i)];
        if (pfx > best) best = pfx;
    }
    return best;
}

std::pair<Rational, Rational> hd_sides(const RationalVector& a, int cap) {
    check_cap(a.size(), cap, "hd_sides");
    const int m = static_cast<int>(a.size());

    Rational lhs(0);
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        Rational pfx(0), mprev(0);
        for (int i = 0; i < m - 1; ++i) {
            pfx += a[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (pfx > mprev) mprev = pfx;
        }
        pfx += a[static_cast<std::size_t>(idx[static_cast<std::size_t>(m - 1)])];
        const Rational mlast = pfx > mprev ? pfx : mprev;
        lhs += mlast - mprev;
    } while (std::next_permutation(idx.begin(), idx.end()));

    Rational total = std::accumulate(a.begin(), a.end(), Rational(0));
    Rational rhs = Rational(factorial(static_cast<unsigned>(m - 1))) * positive_part(total);
    return {lhs, rhs};
}

Rational ghd_lhs(const RationalVector& a, int n, int cap) {
    check_cap(a.size(), cap, "ghd_lhs");
    if (n < 1) throw std::invalid_argument("ghd_lhs: power n must be >= 1");
    const int m = static_cast<int>(a.size());

    Rational sum(0);
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        Rational pfx(0), mprev(0);
        for (int i = 0; i < m - 1; ++i) {
            pfx += a[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (pfx > mprev) mprev = pfx;
        }
        pfx += a[static_cast<std::size_t>(idx[static_cast<std::size_t>(m - 1)])];
        const Rational mlast = pfx > mprev ? pfx : mprev;
        sum += pow_nat(mlast, static_cast<unsigned>(n)) - pow_nat(mprev, static_cast<unsigned>(n));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return sum;
}

Rational ghd_rhs(const RationalVector& a, int n, int cap) {
    check_cap(a.size(), cap, "ghd_rhs");
    if (n < 1) throw std::invalid_argument("ghd_rhs: power n must be >= 1");
    const int m = static_cast<int>(a.size());
    const auto terms = build_rhs_terms(m, n);

    Rational sum(0);
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Rational> pfx(static_cast<std::size_t>(m) + 1);
    do {
        pfx[0] = 0;
        for (int i = 0; i < m; ++i)
            pfx[static_cast<std::size_t>(i + 1)] =
                pfx[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];

        for (const auto& t : terms) {
            Rational prod = t.weight;
            bool zero = false;
            int lo = 0;
            for (std::size_t i = 0; i < t.bounds.size(); ++i) {
                const int hi = t.bounds[i];
                const Rational block =
                    pfx[static_cast<std::size_t>(hi)] - pfx[static_cast<std::size_t>(lo)];
                if (block <= 0) { zero = true; break; }  // positive part kills the term
                prod *= pow_nat(block, static_cast<unsigned>(t.lexp[i]));
                lo = hi;
            }
            if (!zero) sum += prod;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return sum;
}

void RationalMultiset::insert(const Rational& v, long count) {
    counts_[v] += count;
    total_ += count;
}

std::string RationalMultiset::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [v, c] : counts_) {
        if (!first) os << ", ";
        first = false;
        os << v.str() << " x " << c;
    }
    os << "}";
    return os.str();
}

std::pair<RationalMultiset, RationalMultiset> bst_multisets(const RationalVector& a, int cap) {
    check_cap(a.size(), cap, "bst_multisets");
    const int m = static_cast<int>(a.size());

    RationalMultiset left, right;
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        // Left: running maximum of the permuted sequence.
        Rational pfx(0), best(0);
        for (int i = 0; i < m; ++i) {
            pfx += a[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (pfx > best) best = pfx;
        }
        left.insert(best);

        // Right: positive parts of cycle sums of this permutation.
        std::vector<int> images(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)] + 1;
        Permutation tau(images);
        Rational val(0);
        for (const auto& cyc : cycle_decompose(tau)) {
            Rational s(0);
            for (int e : cyc) s += a[static_cast<std::size_t>(e - 1)];
            val += positive_part(s);
        }
        right.insert(val);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return {left, right};
}

StepDistribution::StepDistribution(std::vector<Rational> support, std::vector<Rational> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
    if (support_.empty() || support_.size() != probs_.size())
        throw std::invalid_argument("StepDistribution: support/probs size mismatch");
    Rational total(0);
    for (const auto& p : probs_) {
        if (p < 0) throw std::invalid_argument("StepDistribution: negative probability");
        total += p;
    }
    if (total != 1) throw std::invalid_argument("StepDistribution: probabilities must sum to 1");
    auto sorted = support_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("StepDistribution: support values must be distinct");
}

namespace {

using Law = std::map<Rational, Rational>;

Law convolve(const Law& s, const StepDistribution& dist) {
    Law out;
    for (const auto& [v, p] : s)
        for (int i = 0; i < dist.atoms(); ++i) {
            const Rational& px = dist.probs()[static_cast<std::size_t>(i)];
            if (px == 0) continue;
            out[v + dist.support()[static_cast<std::size_t>(i)]] += p * px;
        }
    return out;
}

Rational plus_moment_of(const Law& s, int l) {
    Rational e(0);
    for (const auto& [v, p] : s)
        if (v > 0) e += p * pow_nat(v, static_cast<unsigned>(l));
    return e;
}

}  // namespace

Rational rw_plus_moment(const StepDistribution& dist, int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("rw_plus_moment: k, l must be >= 1");
    Law s{{Rational(0), Rational(1)}};
    for (int i = 0; i < k; ++i) s = convolve(s, dist);
    return plus_moment_of(s, l);
}

Rational rw_max_moment(const StepDistribution& dist, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("rw_max_moment: m, n must be >= 1");

    // E[(S_k)_+^l] for k <= m, l <= n, built once.
    std::vector<std::vector<Rational>> plus(static_cast<std::size_t>(m) + 1,
                                            std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    Law s{{Rational(0), Rational(1)}};
    for (int k = 1; k <= m; ++k) {
        s = convolve(s, dist);
        for (int l = 1; l <= n; ++l)
            plus[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = plus_moment_of(s, l);
    }

    Rational e(0);  // E[M_0^n] = 0
    for (int mm = 1; mm <= m; ++mm) {
        const int jmax = std::min(mm, n);
        for (int j = 1; j <= jmax; ++j) {
            const BigInt jfact = factorial(static_cast<unsigned>(j));
            for (const auto& kc : compositions(mm, j)) {
                BigInt kprod(1);
                for (int ki : kc) kprod *= ki;
                for (const auto& lc : compositions(n, j)) {
                    Rational term(multinomial(n, lc), jfact * kprod);
                    for (int i = 0; i < j; ++i)
                        term *= plus[static_cast<std::size_t>(kc[static_cast<std::size_t>(i)])]
                                    [static_cast<std::size_t>(lc[static_cast<std::size_t>(i)])];
                    e += term;
                }
            }
        }
    }
    return e;
}

Rational rw_max_moment_oracle(const StepDistribution& dist, int m, int n, long long path_cap) {
    if (m < 1 || n < 1) throw std::invalid_argument("rw_max_moment_oracle: m, n must be >= 1");
    const int s = dist.atoms();
    long long paths = 1;
    for (int i = 0; i < m; ++i) {
        paths *= s;
        if (paths > path_cap)
            throw CapError("rw_max_moment_oracle: |support|^m exceeds path cap");
    }

    Rational e(0);
    std::vector<int> digit(static_cast<std::size_t>(m), 0);  // odometer over support indices
    while (true) {
        Rational p(1), pfx(0), best(0);
        for (int i = 0; i < m; ++i) {
            const int d = digit[static_cast<std::size_t>(i)];
            p *= dist.probs()[static_cast<std::size_t>(d)];
            pfx += dist.support()[static_cast<std::size_t>(d)];
            if (pfx > best) best = pfx;
        }
        if (p != 0) e += p * pow_nat(best, static_cast<unsigned>(n));

        int pos = m - 1;
        while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == s - 1) {
            digit[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digit[static_cast<std::size_t>(pos)];
    }
    return e;
}

}  // namespace szego::comb
