#include "binv/grading.hpp"

#include <algorithm>

namespace binv {

namespace {

// Weight distribution of degree-dm monomials in the coefficients of an
// order-n form: result[i] counts monomials of weight -n*dm + 2i.
std::vector<long long> module_weight_distribution(int n, int dm) {
    // dp over variables u_0..u_n with weights n-2j; index by (degree, shifted
    // weight/2).  Shift: weight w stored at (w + n*deg)/2 once deg is final,
    // so track the raw sum of chosen weights instead.
    const int span = n * dm;  // weights range over [-span, +span], step 2
    std::vector<std::vector<long long>> dp(
        dm + 1, std::vector<long long>(2 * span + 1, 0));
    dp[0][span] = 1;
    for (int j = 0; j <= n; ++j) {
        const int wj = n - 2 * j;
        for (int deg = 1; deg <= dm; ++deg)
            for (int w = 0; w <= 2 * span; ++w) {
                const int pw = w - wj;
                if (pw >= 0 && pw <= 2 * span && dp[deg - 1][pw])
                    dp[deg][w] += dp[deg - 1][pw];
            }
    }
    std::vector<long long> out(span + 1, 0);
    for (int i = 0; i <= span; ++i) out[i] = dp[dm][2 * i];
    return out;
}

}  // namespace

long long weight_count(const MultiDegree& d, int w) {
    if (d.dl < 0 || d.dc < 0 || d.dq < 0) return 0;
    auto dl = module_weight_distribution(1, d.dl);
    auto dc = module_weight_distribution(3, d.dc);
    auto dq = module_weight_distribution(4, d.dq);
    // Entry i of a distribution for (n, dm) is weight -n*dm + 2i; the target
    // w = (il + ic + iq)*2 - (dl + 3 dc + 4 dq).
    const int top = d.dl + 3 * d.dc + 4 * d.dq;
    if ((w + top) % 2 != 0) return 0;
    const long long need = (w + top) / 2;
    long long total = 0;
    for (long long il = 0; il < static_cast<long long>(dl.size()); ++il) {
        if (!dl[il]) continue;
        for (long long ic = 0; ic < static_cast<long long>(dc.size()); ++ic) {
            if (!dc[ic]) continue;
            const long long iq = need - il - ic;
            if (iq >= 0 && iq < static_cast<long long>(dq.size()))
                total += dl[il] * dc[ic] * dq[iq];
        }
    }
    return total;
}

long long invariant_dimension(const MultiDegree& d) {
    long long n = weight_count(d, 0) - weight_count(d, 2);
    return n > 0 ? n : 0;
}

std::vector<MultiDegree> multidegrees_of_total(int total) {
    std::vector<MultiDegree> out;
    for (int dl = 0; dl <= total; ++dl)
        for (int dc = 0; dc + dl <= total; ++dc)
            out.push_back({dl, dc, total - dl - dc});
    return out;
}

std::vector<long long> poincare_coeffs(int maxdeg) {
    if (maxdeg < 0) throw std::invalid_argument("negative series truncation");
    std::vector<long long> out(maxdeg + 1, 0);
    for (int i = 0; i <= maxdeg; ++i)
        for (const MultiDegree& d : multidegrees_of_total(i))
            out[i] += invariant_dimension(d);
    return out;
}

std::vector<long long> series_numerator(const std::vector<long long>& coeffs,
                                        const std::vector<int>& denominator_degrees) {
    int bsum = 0;
    for (int b : denominator_degrees) {
        if (b <= 0) throw std::invalid_argument("denominator degrees must be positive");
        bsum += b;
    }
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < bsum)
        throw std::invalid_argument(
            "series too short to determine the numerator: need coefficients "
            "through degree " + std::to_string(bsum));

    // Multiply by each (1 - t^b) in turn, truncation at degree n is exact.
    std::vector<long long> a = coeffs;
    for (int b : denominator_degrees)
        for (int k = n; k >= b; --k) a[k] -= a[k - b];

    for (int k = bsum; k <= n; ++k)
        if (a[k] != 0)
            throw SeriesInconsistency(
                "numerator does not terminate: residual " + std::to_string(a[k]) +
                " at degree " + std::to_string(k));

    int last = bsum - 1;
    while (last > 0 && a[last] == 0) --last;
    a.resize(last + 1);
    return a;
}

FunctionalEquationReport functional_equation_check(
    const std::vector<long long>& numerator,
    const std::vector<int>& denominator_degrees, int d) {
    FunctionalEquationReport rep;
    std::vector<long long> a = numerator;
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) return rep;

    int bsum = 0;
    for (int b : denominator_degrees) bsum += b;
    const int dega = static_cast<int>(a.size()) - 1;
    const int r = static_cast<int>(denominator_degrees.size());
    rep.max_degree_verified = dega;
    rep.degree_matches = (bsum - dega == d);

    const long long sign = ((d - 3 + r) % 2 == 0) ? 1 : -1;
    rep.palindromic = true;
    for (int h = 0; h <= dega; ++h) {
        if (a[h] != sign * a[dega - h]) {
            rep.palindromic = false;
            rep.failing_position = h;
            break;
        }
    }
    rep.ok = rep.degree_matches && rep.palindromic;
    return rep;
}

int degree_bound(const std::vector<int>& hsop_degrees, int d) {
    if (hsop_degrees.empty())
        throw std::invalid_argument("parameter-system degree list is empty");
    int s = 0;
    for (int b : hsop_degrees) s += b;
    return s - d;
}

std::vector<Monomial> monomial_basis(const MultiDegree& d, int w) {
    // Enumerate each module's degree-homogeneous monomials, then combine.
    auto module_monos = [](int base, int nvars, int deg) {
        std::vector<Monomial> out;
        std::array<int, kNumVars> e{};
        auto rec = [&](auto&& self, int v, int left) -> void {
            if (v == nvars - 1) {
                e[base + v] = left;
                out.push_back(mono_from_exponents(e));
                e[base + v] = 0;
                return;
            }
            for (int x = left; x >= 0; --x) {
                e[base + v] = x;
                self(self, v + 1, left - x);
            }
            e[base + v] = 0;
        };
        rec(rec, 0, deg);
        return out;
    };
    std::vector<Monomial> ls = module_monos(0, 2, d.dl);
    std::vector<Monomial> cs = module_monos(2, 4, d.dc);
    std::vector<Monomial> qs = module_monos(6, 5, d.dq);
    std::vector<Monomial> out;
    for (Monomial ml : ls) {
        int wl = mono_weight(ml);
        for (Monomial mc : cs) {
            int wlc = wl + mono_weight(mc);
            for (Monomial mq : qs)
                if (wlc + mono_weight(mq) == w) out.push_back(ml + mc + mq);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace binv
