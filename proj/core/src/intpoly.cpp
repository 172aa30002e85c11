#include "annigraph/intpoly.hpp"

#include <algorithm>
#include <cmath>

namespace annigraph {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

int sign_of(const BigInt& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

}  // namespace

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(const std::vector<std::int64_t>& coeffs) {
    c_.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::x_power(int k) {
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, BigInt(0));
    c.back() = 1;
    return IntPoly(std::move(c));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at_dyadic(const BigInt& num, int log2den) const {
    // f(num / 2^k) has the sign of sum c_i num^i 2^(k (d - i)).
    if (is_zero()) return 0;
    BigInt acc = 0;
    BigInt num_pow = 1;
    int d = degree();
    for (int i = 0; i <= d; ++i) {
        BigInt term = c_[static_cast<std::size_t>(i)] * num_pow;
        term <<= static_cast<unsigned>(log2den * (d - i));
        acc += term;
        if (i < d) num_pow *= num;
    }
    return sign_of(acc);
}

IntPoly IntPoly::derivative() const {
    if (degree() <= 0) return IntPoly();
    std::vector<BigInt> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * BigInt(static_cast<unsigned long>(i));
    return IntPoly(std::move(out));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const BigInt& v : c_) g = big_gcd(g, v);
    return g;
}

IntPoly IntPoly::primitive() const {
    BigInt g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<BigInt> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
    return IntPoly(std::move(out));
}

std::vector<std::string> IntPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const BigInt& v : c_) out.push_back(v.str());
    return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
    std::vector<BigInt> out(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = s * a.c_[i];
    return IntPoly(std::move(out));
}

IntPoly poly_pow(const IntPoly& f, int e) {
    IntPoly out(std::vector<std::int64_t>{1});
    for (int t = 0; t < e; ++t) out = out * f;
    return out;
}

IntPoly poly_divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidGroup, "polynomial division by zero");
    std::vector<BigInt> rem(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) {
        if (a.is_zero()) return IntPoly();
        throw Error(ErrorKind::InvalidGroup, "polynomial division is not exact");
    }
    std::vector<BigInt> q(static_cast<std::size_t>(dq) + 1, BigInt(0));
    for (int k = dq; k >= 0; --k) {
        BigInt lead = rem[static_cast<std::size_t>(k + db)];
        if (lead % b.leading() != 0)
            throw Error(ErrorKind::InvalidGroup, "polynomial division is not exact");
        BigInt qk = lead / b.leading();
        q[static_cast<std::size_t>(k)] = qk;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k + i)] -= qk * b[i];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw Error(ErrorKind::InvalidGroup, "polynomial division is not exact");
    return IntPoly(std::move(q));
}

namespace {

// Pseudo-remainder scaled by a positive power of lc(b): the remainder of
// (lc(b)^e * a) / b with e chosen even when lc(b) < 0, so the sign of the
// true rational remainder is preserved.
IntPoly prem_sign_safe(const IntPoly& a, const IntPoly& b) {
    int delta = a.degree() - b.degree();
    if (delta < 0) return a;
    int e = delta + 1;
    if (b.leading() < 0 && e % 2 == 1) ++e;
    BigInt scale = 1;
    for (int t = 0; t < e; ++t) scale *= b.leading();
    std::vector<BigInt> rem((scale * a).coeffs());
    IntPoly r(std::move(rem));
    // Classical remainder loop.
    std::vector<BigInt> rc(r.coeffs());
    while (static_cast<int>(rc.size()) - 1 >= b.degree() && !rc.empty()) {
        int dr = static_cast<int>(rc.size()) - 1;
        BigInt q = rc.back() / b.leading();  // exact by the scaling
        int shift = dr - b.degree();
        for (int i = 0; i <= b.degree(); ++i)
            rc[static_cast<std::size_t>(shift + i)] -= q * b[i];
        while (!rc.empty() && rc.back() == 0) rc.pop_back();
    }
    return IntPoly(std::move(rc));
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive();
    b = b.primitive();
    if (a.is_zero()) return b.leading() < 0 ? BigInt(-1) * b : b;
    if (b.is_zero()) return a.leading() < 0 ? BigInt(-1) * a : a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = prem_sign_safe(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.leading() < 0 ? IntPoly(BigInt(-1) * a) : a;
}

bool is_squarefree(const IntPoly& f) {
    if (f.degree() <= 1) return !f.is_zero();
    return poly_gcd(f, f.derivative()).degree() == 0;
}

Dyadic Dyadic::from_double(double x) {
    // Every finite double is num * 2^e exactly.
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidGroup, "endpoint must be finite");
    int e = 0;
    double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
    std::int64_t mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    int exp2 = e - 53;
    Dyadic d;
    if (exp2 >= 0) {
        d.num = BigInt(mant) << static_cast<unsigned>(exp2);
        d.log2den = 0;
    } else {
        d.num = mant;
        d.log2den = -exp2;
    }
    // Normalize trailing powers of two.
    while (d.log2den > 0 && d.num % 2 == 0) {
        d.num /= 2;
        --d.log2den;
    }
    return d;
}

double Dyadic::to_double() const {
    return std::ldexp(static_cast<double>(num), -log2den);
}

namespace {

// Aligned comparison helpers for dyadics.
Dyadic align(const Dyadic& x, int log2den) {
    Dyadic out;
    out.num = x.num << static_cast<unsigned>(log2den - x.log2den);
    out.log2den = log2den;
    return out;
}

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
    int k = std::max(a.log2den, b.log2den);
    Dyadic aa = align(a, k), bb = align(b, k);
    Dyadic mid;
    mid.num = aa.num + bb.num;
    mid.log2den = k + 1;
    while (mid.log2den > 0 && mid.num % 2 == 0) {
        mid.num /= 2;
        --mid.log2den;
    }
    return mid;
}

bool dyadic_less(const Dyadic& a, const Dyadic& b) {
    int k = std::max(a.log2den, b.log2den);
    return align(a, k).num < align(b, k).num;
}

double dyadic_width(const Dyadic& a, const Dyadic& b) {
    return std::abs(b.to_double() - a.to_double());
}

int variations_at(const std::vector<IntPoly>& chain, const Dyadic& x) {
    int count = 0, last = 0;
    for (const IntPoly& f : chain) {
        int s = f.sign_at_dyadic(x.num, x.log2den);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    if (f.is_zero()) return chain;
    chain.push_back(f.primitive());
    IntPoly d = f.derivative().primitive();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero() && chain.back().degree() > 0) {
        IntPoly r = prem_sign_safe(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        // Divide by the positive content only; the sign is load-bearing.
        BigInt c = r.content();
        std::vector<BigInt> scaled(r.coeffs());
        for (BigInt& v : scaled) v /= c;
        chain.push_back(BigInt(-1) * IntPoly(std::move(scaled)));
    }
    return chain;
}

int sturm_count(const std::vector<IntPoly>& chain, const Dyadic& a, const Dyadic& b) {
    if (chain.empty()) return 0;
    return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count(const IntPoly& f, double a, double b) {
    auto chain = sturm_chain(f);
    return sturm_count(chain, Dyadic::from_double(a), Dyadic::from_double(b));
}

namespace {

struct IsolationContext {
    const IntPoly* f;
    std::vector<IntPoly> chain;
    double tol;
    std::vector<double> roots;

    int count(const Dyadic& a, const Dyadic& b) const { return sturm_count(chain, a, b); }

    // Exactly one root in (a, b]; bisect until the bracket is narrow.
    void refine(Dyadic a, Dyadic b) {
        while (dyadic_width(a, b) > tol) {
            Dyadic mid = midpoint(a, b);
            if (f->sign_at_dyadic(mid.num, mid.log2den) == 0) {
                roots.push_back(mid.to_double());
                return;
            }
            if (count(a, mid) == 1)
                b = mid;
            else
                a = mid;
        }
        roots.push_back(0.5 * (a.to_double() + b.to_double()));
    }

    void isolate(const Dyadic& a, const Dyadic& b) {
        int c = count(a, b);
        if (c == 0) return;
        if (c == 1) {
            refine(a, b);
            return;
        }
        Dyadic mid = midpoint(a, b);
        if (f->sign_at_dyadic(mid.num, mid.log2den) == 0) {
            // Exact dyadic root at the split point; count it and recurse on
            // punctured halves.
            roots.push_back(mid.to_double());
            Dyadic lo_hi = mid, hi_lo = mid;
            // Shrink an exclusion window around mid until it isolates mid only.
            int shrink = 20;
            for (;;) {
                Dyadic delta;
                delta.num = 1;
                delta.log2den = mid.log2den + shrink;
                Dyadic left{align(mid, delta.log2den).num - delta.num, delta.log2den};
                Dyadic right{align(mid, delta.log2den).num + delta.num, delta.log2den};
                if (count(left, right) == 1) {
                    lo_hi = left;
                    hi_lo = right;
                    break;
                }
                shrink += 10;
            }
            if (dyadic_less(a, lo_hi)) isolate(a, lo_hi);
            if (dyadic_less(hi_lo, b)) isolate(hi_lo, b);
            return;
        }
        isolate(a, mid);
        isolate(mid, b);
    }
};

}  // namespace

std::vector<double> real_roots(const IntPoly& f, double lo, double hi, double tol) {
    if (f.is_zero() || f.degree() == 0) return {};
    if (!is_squarefree(f))
        throw Error(ErrorKind::NotSquarefree, "isolate roots of the squarefree part instead");
    IsolationContext ctx;
    ctx.f = &f;
    ctx.chain = sturm_chain(f);
    ctx.tol = tol;
    Dyadic a = Dyadic::from_double(lo), b = Dyadic::from_double(hi);
    if (!dyadic_less(a, b)) return {};
    // (a, b] plus an explicit check of the left endpoint makes [lo, hi].
    if (f.sign_at_dyadic(a.num, a.log2den) == 0) ctx.roots.push_back(a.to_double());
    ctx.isolate(a, b);
    std::sort(ctx.roots.begin(), ctx.roots.end());
    return ctx.roots;
}

std::vector<std::pair<double, int>> real_roots_with_multiplicity(const IntPoly& f, double lo,
                                                                 double hi, double tol) {
    if (f.is_zero() || f.degree() == 0) return {};
    // gcd chain: f_0 = f, f_(t+1) = gcd(f_t, f_t'); a root of multiplicity m
    // in f appears in f_0..f_(m-1).
    std::vector<IntPoly> chain{f.primitive()};
    while (chain.back().degree() >= 1) {
        IntPoly g = poly_gcd(chain.back(), chain.back().derivative());
        if (g.degree() == 0) break;
        chain.push_back(g);
    }
    IntPoly squarefree = poly_divide_exact(chain[0], chain.size() > 1 ? chain[1] : IntPoly(std::vector<std::int64_t>{1}));
    std::vector<double> roots = real_roots(squarefree, lo, hi, tol);
    std::vector<std::pair<double, int>> out;
    for (double r : roots) {
        int mult = 1;
        for (std::size_t t = 1; t < chain.size(); ++t) {
            // Exact membership test on a tight bracket around r.
            double w = std::max(tol, 1e-12);
            if (sturm_count(chain[t], r - w, r + w) > 0)
                mult = static_cast<int>(t) + 1;
            else
                break;
        }
        out.emplace_back(r, mult);
    }
    return out;
}

IntPoly charpoly_big(const std::vector<std::vector<BigInt>>& m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorKind::InvalidGroup, "characteristic polynomial needs a square matrix");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    c[static_cast<std::size_t>(n)] = 1;
    if (n == 0) return IntPoly(std::move(c));

    std::vector<std::vector<BigInt>> power = m;  // M_1 = A
    auto trace = [&](const std::vector<std::vector<BigInt>>& x) {
        BigInt t = 0;
        for (int i = 0; i < n; ++i) t += x[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        return t;
    };
    c[static_cast<std::size_t>(n - 1)] = -trace(power);
    for (int k = 2; k <= n; ++k) {
        // M_k = A (M_(k-1) + c_(n-k+1) I)
        std::vector<std::vector<BigInt>> shifted = power;
        for (int i = 0; i < n; ++i)
            shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] +=
                c[static_cast<std::size_t>(n - k + 1)];
        std::vector<std::vector<BigInt>> next(static_cast<std::size_t>(n),
                                              std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                const BigInt& a_it = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (a_it == 0) continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        a_it * shifted[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            }
        power = std::move(next);
        BigInt tr = trace(power);
        if (tr % k != 0)
            throw Error(ErrorKind::InvalidGroup, "Faddeev-LeVerrier trace division failed");
        c[static_cast<std::size_t>(n - k)] = -tr / k;
    }
    return IntPoly(std::move(c));
}

IntPoly charpoly(const std::vector<std::vector<std::int64_t>>& m) {
    std::vector<std::vector<BigInt>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        big[i].reserve(m[i].size());
        for (std::int64_t v : m[i]) big[i].emplace_back(v);
    }
    return charpoly_big(big);
}

}  // namespace annigraph
