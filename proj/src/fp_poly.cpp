#include <punctured/detail/fp_poly.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace punctured::detail {

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p)
{
    if (a % p == 0) throw std::domain_error("invmod of zero");
    return powmod(a, p - 2, p);
}

bool is_prime(u64 n)
{
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

void fp_trim(FpPoly &a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_degree(const FpPoly &a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_add(const FpPoly &a, const FpPoly &b, u64 p)
{
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = addmod(r[i], b[i], p);
    fp_trim(r);
    return r;
}

FpPoly fp_sub(const FpPoly &a, const FpPoly &b, u64 p)
{
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = submod(r[i], b[i], p);
    fp_trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly &a, const FpPoly &b, u64 p)
{
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    fp_trim(r);
    return r;
}

FpPoly fp_scale(const FpPoly &a, u64 c, u64 p)
{
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
    fp_trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly &a, const FpPoly &b, u64 p)
{
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    FpPoly r = a;
    fp_trim(r);
    if (r.size() < b.size()) return {{}, r};
    FpPoly q(r.size() - b.size() + 1, 0);
    const u64 lead_inv = invmod(b.back(), p);
    for (std::size_t k = r.size(); k-- >= b.size();) {
        const u64 c = mulmod(r[k], lead_inv, p);
        const std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        if (c != 0) {
            for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = submod(r[shift + j], mulmod(c, b[j], p), p);
        }
        if (k == 0) break;
    }
    fp_trim(q);
    fp_trim(r);
    return {q, r};
}

FpPoly fp_mod(const FpPoly &a, const FpPoly &m, u64 p) { return fp_divmod(a, m, p).second; }

FpPoly fp_monic(const FpPoly &a, u64 p)
{
    if (a.empty()) return a;
    return fp_scale(a, invmod(a.back(), p), p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p)
{
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

std::pair<FpPoly, FpPoly> fp_gcd_inverse(const FpPoly &a, const FpPoly &m, u64 p)
{
    FpPoly r0 = m, r1 = fp_mod(a, m, p);
    FpPoly s0, s1 = {1};
    while (!r1.empty()) {
        auto [q, r] = fp_divmod(r0, r1, p);
        FpPoly s = fp_sub(s0, fp_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.empty()) return {{}, {}};
    const u64 inv = invmod(r0.back(), p);
    return {fp_scale(r0, inv, p), fp_mod(fp_scale(s0, inv, p), m, p)};
}

FpPoly fp_mulmod(const FpPoly &a, const FpPoly &b, const FpPoly &m, u64 p) { return fp_mod(fp_mul(a, b, p), m, p); }

FpPoly fp_powmod(const FpPoly &a, const mpz_class &e, const FpPoly &m, u64 p)
{
    FpPoly result = fp_mod(FpPoly{1}, m, p);
    FpPoly base = fp_mod(a, m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = fp_mulmod(result, result, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_mulmod(result, base, m, p);
    }
    return result;
}

FpPoly fp_derivative(const FpPoly &a, u64 p)
{
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
    fp_trim(r);
    return r;
}

namespace {

mpz_class pow_p(u64 p, unsigned k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

} // namespace

bool fp_is_irreducible(const FpPoly &m, u64 p)
{
    const int d = fp_degree(m);
    if (d < 1) return false;
    if (d == 1) return true;
    // Ben-Or: m is irreducible iff gcd(x^(p^i) - x, m) = 1 for 1 <= i <= d/2.
    FpPoly xq = fp_mod(FpPoly{0, 1}, m, p);
    const mpz_class pz = p;
    for (int i = 1; i <= d / 2; ++i) {
        xq = fp_powmod(xq, pz, m, p);
        FpPoly g = fp_gcd(m, fp_sub(xq, FpPoly{0, 1}, p), p);
        if (fp_degree(g) > 0) return false;
    }
    return true;
}

namespace {

// Square-free factorisation: returns (square-free part, multiplicity) pairs.
std::vector<std::pair<FpPoly, int>> square_free(const FpPoly &f, u64 p)
{
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly a = fp_monic(f, p);
    if (fp_degree(a) < 1) return out;
    FpPoly da = fp_derivative(a, p);
    if (da.empty()) {
        // a = b(x^p); take the p-th root (Frobenius is the identity on F_p).
        FpPoly b((a.size() - 1) / p + 1, 0);
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = a[i * p];
        for (auto &[g, e] : square_free(b, p)) out.emplace_back(g, e * static_cast<int>(p));
        return out;
    }
    FpPoly c = fp_gcd(a, da, p);
    FpPoly w = fp_divmod(a, c, p).first;
    int i = 1;
    while (fp_degree(w) > 0) {
        FpPoly y = fp_gcd(w, c, p);
        FpPoly z = fp_divmod(w, y, p).first;
        if (fp_degree(z) > 0) out.emplace_back(fp_monic(z, p), i);
        ++i;
        w = y;
        c = fp_divmod(c, y, p).first;
    }
    if (fp_degree(c) > 0) {
        FpPoly b((c.size() - 1) / p + 1, 0);
        for (std::size_t k = 0; k < b.size(); ++k) b[k] = c[k * p];
        for (auto &[g, e] : square_free(b, p)) out.emplace_back(g, e * static_cast<int>(p));
    }
    return out;
}

void equal_degree(const FpPoly &f, int d, u64 p, std::mt19937_64 &rng, std::vector<FpPoly> &out)
{
    const int n = fp_degree(f);
    if (n == d) {
        out.push_back(fp_monic(f, p));
        return;
    }
    std::uniform_int_distribution<u64> coeff(0, p - 1);
    for (;;) {
        FpPoly a(static_cast<std::size_t>(n), 0);
        for (auto &c : a) c = coeff(rng);
        fp_trim(a);
        if (fp_degree(a) < 1) continue;
        FpPoly b;
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)) splits over F_2.
            FpPoly t = fp_mod(a, f, p), acc = t;
            for (int i = 1; i < d; ++i) {
                t = fp_mulmod(t, t, f, p);
                acc = fp_add(acc, t, p);
            }
            b = acc;
        } else {
            mpz_class e = pow_p(p, static_cast<unsigned>(d));
            e = (e - 1) / 2;
            b = fp_sub(fp_powmod(a, e, f, p), FpPoly{1}, p);
        }
        FpPoly g = fp_gcd(f, b, p);
        const int dg = fp_degree(g);
        if (dg > 0 && dg < n) {
            equal_degree(g, d, p, rng, out);
            equal_degree(fp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly &a, u64 p)
{
    std::vector<std::pair<FpPoly, int>> result;
    std::mt19937_64 rng(0x5eedULL + p);
    for (auto &[sf, mult] : square_free(a, p)) {
        // Distinct-degree split.
        FpPoly f = sf;
        FpPoly xq = fp_mod(FpPoly{0, 1}, f, p);
        const mpz_class pz = p;
        for (int d = 1; 2 * d <= fp_degree(f); ++d) {
            xq = fp_powmod(xq, pz, f, p);
            FpPoly g = fp_gcd(f, fp_sub(xq, FpPoly{0, 1}, p), p);
            if (fp_degree(g) > 0) {
                std::vector<FpPoly> parts;
                equal_degree(g, d, p, rng, parts);
                for (auto &q : parts) result.emplace_back(q, mult);
                f = fp_divmod(f, g, p).first;
                xq = fp_mod(xq, f, p);
            }
        }
        if (fp_degree(f) > 0) result.emplace_back(fp_monic(f, p), mult);
    }
    // Merge equal factors (possible after p-th root recursion) and sort.
    std::sort(result.begin(), result.end(), [](const auto &x, const auto &y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        return std::lexicographical_compare(x.first.rbegin(), x.first.rend(), y.first.rbegin(), y.first.rend());
    });
    std::vector<std::pair<FpPoly, int>> merged;
    for (auto &entry : result) {
        if (!merged.empty() && merged.back().first == entry.first) {
            merged.back().second += entry.second;
        } else {
            merged.push_back(entry);
        }
    }
    return merged;
}

} // namespace punctured::detail
