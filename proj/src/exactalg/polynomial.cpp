#include "telescoped/exactalg/polynomial.hpp"

#include "telescoped/error.hpp"
#include "telescoped/exactalg/primes.hpp"

#include <algorithm>

namespace telescoped::poly {

Eigen::Index degree(const Polynomial& f)
{
    for (auto i = static_cast<Eigen::Index>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Polynomial trim(Polynomial f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Polynomial multiply(const Polynomial& f, const Polynomial& g)
{
    if (f.empty() || g.empty()) return {};
    Polynomial out(f.size() + g.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    return trim(out);
}

std::pair<Polynomial, Polynomial> divide_monic(const Polynomial& f, const Polynomial& g)
{
    const Eigen::Index dg = degree(g);
    if (dg < 0 || g[static_cast<std::size_t>(dg)] != 1) throw PreconditionError("monic divisor", to_string(g));
    Polynomial r = trim(f);
    const Eigen::Index df = degree(r);
    if (df < dg) return {{}, r};
    Polynomial q(static_cast<std::size_t>(df - dg + 1), BigInt(0));
    for (Eigen::Index k = df; k >= dg; --k) {
        const BigInt c = r[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        q[static_cast<std::size_t>(k - dg)] = c;
        for (Eigen::Index i = 0; i <= dg; ++i) r[static_cast<std::size_t>(k - dg + i)] -= c * g[static_cast<std::size_t>(i)];
    }
    return {trim(q), trim(r)};
}

BigInt evaluate(const Polynomial& f, const BigInt& x)
{
    BigInt acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntMatrix evaluate(const Polynomial& f, const IntMatrix& a)
{
    const Eigen::Index n = a.rows();
    IntMatrix acc = IntMatrix::Zero(n, n);
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = exact::multiply(acc, a);
        for (Eigen::Index i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

Polynomial characteristic(const IntMatrix& a)
{
    // Faddeev-LeVerrier; every division below is exact over Z.
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw DimensionError("characteristic polynomial of a non-square matrix");
    Polynomial c(static_cast<std::size_t>(n + 1), BigInt(0));
    c[static_cast<std::size_t>(n)] = 1;
    IntMatrix m = IntMatrix::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = exact::multiply(a, m);
        for (Eigen::Index i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        IntMatrix am = exact::multiply(a, m);
        BigInt tr = 0;
        for (Eigen::Index i = 0; i < n; ++i) tr += am(i, i);
        c[static_cast<std::size_t>(n - k)] = -tr / k;
    }
    return c;
}

namespace {

constexpr std::size_t kSearchBudget = 4'000'000;

// Monic g of degree k with g(points[i]) = values[i]; nullopt unless integral.
std::optional<Polynomial> interpolate_monic(const std::vector<BigInt>& points, const std::vector<BigInt>& values)
{
    const std::size_t k = points.size();
    // Newton divided differences of r(t) = g(t) - t^k, degree < k.
    std::vector<Rational> dd(k);
    for (std::size_t i = 0; i < k; ++i) {
        BigInt pk = 1;
        for (std::size_t e = 0; e < k; ++e) pk *= points[i];
        dd[i] = Rational(values[i] - pk);
    }
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i] - points[i - level]);
            if (i == level) break;
        }
    // Expand the Newton form into monomial coefficients.
    std::vector<Rational> coeffs(k, Rational(0));
    std::vector<Rational> basis{Rational(1)};  // prod_{j<i} (t - x_j)
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[i] * basis[j];
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            next[j + 1] += basis[j];
            next[j] -= basis[j] * Rational(points[i]);
        }
        basis = std::move(next);
    }
    Polynomial g(k + 1, BigInt(0));
    for (std::size_t j = 0; j < k; ++j) {
        if (denominator(coeffs[j]) != 1) return std::nullopt;
        g[j] = numerator(coeffs[j]);
    }
    g[k] = 1;
    return g;
}

// A monic factor of degree k (2 <= 2k <= deg f) or nullopt. f has no
// integer roots, so f never vanishes at an integer point.
std::optional<Polynomial> find_factor(const Polynomial& f, std::size_t k)
{
    struct Candidate {
        BigInt point;
        std::vector<BigInt> divisors;
    };
    std::vector<Candidate> cands;
    for (long x = 0; cands.size() < 3 * k + 3; x = x > 0 ? -x : -x + 1) {
        BigInt v = evaluate(f, BigInt(x));
        auto ds = primes::divisors(v);
        std::vector<BigInt> signed_ds;
        for (const auto& d : ds) {
            signed_ds.push_back(d);
            signed_ds.push_back(-d);
        }
        cands.push_back({BigInt(x), std::move(signed_ds)});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.divisors.size() < b.divisors.size(); });
    cands.resize(k);

    std::size_t total = 1;
    for (const auto& c : cands) {
        total *= c.divisors.size();
        if (total > kSearchBudget)
            throw Error("polynomial factorization exceeds the search budget: " + to_string(f));
    }
    std::vector<BigInt> points, values(k);
    for (const auto& c : cands) points.push_back(c.point);
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) values[i] = cands[i].divisors[idx[i]];
        if (auto g = interpolate_monic(points, values)) {
            auto [q, r] = divide_monic(f, *g);
            if (r.empty()) return g;
        }
        std::size_t i = 0;
        while (i < k && ++idx[i] == cands[i].divisors.size()) idx[i++] = 0;
        if (i == k) return std::nullopt;
    }
}

}  // namespace

std::vector<std::pair<Polynomial, unsigned>> factor_monic(const Polynomial& input)
{
    Polynomial f = trim(input);
    const Eigen::Index d = degree(f);
    if (d < 0 || f[static_cast<std::size_t>(d)] != 1) throw PreconditionError("monic polynomial", to_string(input));
    std::vector<Polynomial> found;
    // Integer roots divide the constant term (or are 0).
    for (;;) {
        if (degree(f) < 1) break;
        bool progress = false;
        if (f[0] == 0) {
            found.push_back({BigInt(0), BigInt(1)});
            f = divide_monic(f, found.back()).first;
            continue;
        }
        for (const auto& dv : primes::divisors(f[0])) {
            for (const BigInt& r : {dv, BigInt(-dv)}) {
                if (evaluate(f, r) == 0) {
                    found.push_back({BigInt(-r), BigInt(1)});
                    f = divide_monic(f, found.back()).first;
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
        if (!progress) break;
    }
    for (std::size_t k = 2; 2 * k <= static_cast<std::size_t>(std::max<Eigen::Index>(degree(f), 0));) {
        if (auto g = find_factor(f, k)) {
            found.push_back(*g);
            f = divide_monic(f, *g).first;
        } else {
            ++k;
        }
    }
    if (degree(f) >= 1) found.push_back(f);

    std::sort(found.begin(), found.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    std::vector<std::pair<Polynomial, unsigned>> out;
    for (auto& g : found) {
        if (!out.empty() && out.back().first == g)
            ++out.back().second;
        else
            out.emplace_back(std::move(g), 1u);
    }
    return out;
}

std::pair<Polynomial, Polynomial> split_unit_part(const Polynomial& f)
{
    Polynomial unit{BigInt(1)}, rest{BigInt(1)};
    for (const auto& [g, e] : factor_monic(f))
        for (unsigned i = 0; i < e; ++i) {
            if (exact::abs(g[0]) == 1)
                unit = multiply(unit, g);
            else
                rest = multiply(rest, g);
        }
    return {unit, rest};
}

std::string to_string(const Polynomial& f)
{
    const Eigen::Index d = degree(f);
    if (d < 0) return "0";
    std::string s;
    for (Eigen::Index i = d; i >= 0; --i) {
        const BigInt& c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        std::string mag = exact::abs(c).str();
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        const bool unit = exact::abs(c) == 1;
        if (i == 0)
            s += mag;
        else {
            if (!unit) s += mag + "*";
            s += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace telescoped::poly
