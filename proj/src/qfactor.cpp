#include "germ/qfactor.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>

// Zassenhaus factorization of squarefree integer polynomials: Cantor-Zassenhaus
// mod a small prime, quadratic multifactor Hensel lifting to beat the Mignotte
// bound, then subset recombination. Degrees here stay small (facet lattice
// lengths and tower norms), so no phase-2 tricks are needed.

namespace germ {

namespace {

// ---------------------------------------------------------------- Z/p layer
// Polynomials mod a word-sized prime, dense low-to-high, no trailing zeros.

using ZpPoly = std::vector<long>;

long mulmod(long a, long b, long p) { return (long)((__int128)a * b % p); }

long powmod_l(long a, long e, long p) {
    long r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

long invmod(long a, long p) { return powmod_l(((a % p) + p) % p, p - 2, p); }

void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (__int128)a[i] * b[j]) % p;
    }
    zp_trim(r);
    return r;
}

// divisor need not be monic
ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, long p) {
    long binv = invmod(b.back(), p);
    int db = (int)b.size() - 1;
    for (int i = (int)a.size() - 1; i >= db; --i) {
        if (!a[i]) continue;
        long f = mulmod(a[i], binv, p);
        for (int j = 0; j <= db; ++j) {
            a[i - db + j] = (a[i - db + j] - mulmod(f, b[j], p)) % p;
            if (a[i - db + j] < 0) a[i - db + j] += p;
        }
    }
    zp_trim(a);
    return a;
}

ZpPoly zp_monic(ZpPoly f, long p) {
    if (f.empty()) return f;
    long s = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, s, p);
    return f;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, long p) {
    while (!b.empty()) {
        ZpPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

ZpPoly zp_powmod(ZpPoly base, const Int& e, const ZpPoly& mod, long p) {
    ZpPoly r{1};
    base = zp_rem(std::move(base), mod, p);
    for (long bit = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; bit >= 0; --bit) {
        r = zp_rem(zp_mul(r, r, p), mod, p);
        if (mpz_tstbit(e.get_mpz_t(), bit)) r = zp_rem(zp_mul(r, base, p), mod, p);
    }
    return r;
}

ZpPoly zp_deriv(const ZpPoly& f, long p) {
    if (f.size() <= 1) return {};
    ZpPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = (long)((__int128)f[i] * (long)(i % p) % p);
    zp_trim(r);
    return r;
}

struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

// exact quotient f/g over Z/p (g divides f)
ZpPoly zp_exact_div(const ZpPoly& f, const ZpPoly& g, long p) {
    ZpPoly rem = f, quo;
    long binv = invmod(g.back(), p);
    int dg = (int)g.size() - 1;
    quo.assign(rem.size() - dg, 0);
    for (int i = (int)rem.size() - 1; i >= dg; --i) {
        if (!rem[i]) continue;
        long fac = mulmod(rem[i], binv, p);
        quo[i - dg] = fac;
        for (int j = 0; j <= dg; ++j) {
            rem[i - dg + j] = (rem[i - dg + j] - mulmod(fac, g[j], p)) % p;
            if (rem[i - dg + j] < 0) rem[i - dg + j] += p;
        }
    }
    zp_trim(quo);
    return quo;
}

// extended Euclid over Z/p: s*a + t*b = g (monic gcd)
void zp_xgcd(ZpPoly a, ZpPoly b, long p, ZpPoly& g, ZpPoly& s, ZpPoly& t) {
    ZpPoly s0{1}, s1, t0, t1{1};
    while (!b.empty()) {
        ZpPoly q, rem = a;
        int db = (int)b.size() - 1;
        if ((int)rem.size() - 1 >= db) {
            long binv = invmod(b.back(), p);
            q.assign(rem.size() - db, 0);
            for (int i = (int)rem.size() - 1; i >= db; --i) {
                if (!rem[i]) continue;
                long fac = mulmod(rem[i], binv, p);
                q[i - db] = fac;
                for (int j = 0; j <= db; ++j) {
                    rem[i - db + j] = (rem[i - db + j] - mulmod(fac, b[j], p)) % p;
                    if (rem[i - db + j] < 0) rem[i - db + j] += p;
                }
            }
            zp_trim(q);
            zp_trim(rem);
        }
        a = std::move(b);
        b = std::move(rem);
        auto step = [&](ZpPoly& x0, ZpPoly& x1) {
            ZpPoly x2 = x0;
            ZpPoly qx = zp_mul(q, x1, p);
            if (x2.size() < qx.size()) x2.resize(qx.size(), 0);
            for (size_t i = 0; i < qx.size(); ++i) x2[i] = ((x2[i] - qx[i]) % p + p) % p;
            zp_trim(x2);
            x0 = std::move(x1);
            x1 = std::move(x2);
        };
        step(s0, s1);
        step(t0, t1);
    }
    long c = invmod(a.empty() ? 1 : a.back(), p);
    for (auto& v : a) v = mulmod(v, c, p);
    for (auto& v : s0) v = mulmod(v, c, p);
    for (auto& v : t0) v = mulmod(v, c, p);
    g = std::move(a);
    s = std::move(s0);
    t = std::move(t0);
}

// Cantor-Zassenhaus equal-degree splitting; f monic squarefree, all
// irreducible factors of degree d, p odd.
void zp_edf(const ZpPoly& f, int d, long p, Rng& rng, std::vector<ZpPoly>& out) {
    int n = (int)f.size() - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    Int e = (pd - 1) / 2;
    while (true) {
        ZpPoly a(n);
        for (int i = 0; i < n; ++i) a[i] = (long)(rng.next() % (uint64_t)p);
        zp_trim(a);
        if ((int)a.size() - 1 < 1) continue;
        ZpPoly g = zp_gcd(a, f, p);
        if ((int)g.size() - 1 < 1 || (int)g.size() - 1 == n) {
            ZpPoly b = zp_powmod(a, e, f, p);
            if (b.empty()) continue;
            b[0] = (b[0] - 1 + p) % p;
            zp_trim(b);
            if (b.empty()) continue;
            g = zp_gcd(b, f, p);
        }
        int dg = (int)g.size() - 1;
        if (dg >= 1 && dg < n) {
            ZpPoly q = zp_exact_div(f, g, p);
            zp_edf(g, d, p, rng, out);
            zp_edf(q, d, p, rng, out);
            return;
        }
    }
}

// full factorization of monic squarefree f mod p (p odd, p > deg f helps DDF)
std::vector<ZpPoly> zp_factor_squarefree(ZpPoly f, long p, Rng& rng) {
    std::vector<ZpPoly> out;
    ZpPoly x{0, 1};
    ZpPoly h = x;
    int d = 0;
    while ((int)f.size() - 1 >= 2 * (d + 1)) {
        ++d;
        h = zp_powmod(h, Int(p), f, p);
        ZpPoly hx = h;
        // h - x
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] - 1 + p) % p;
        zp_trim(hx);
        ZpPoly g = hx.empty() ? f : zp_gcd(hx, f, p);
        if ((int)g.size() - 1 >= 1) {
            zp_edf(g, d, p, rng, out);
            f = zp_exact_div(f, g, p);
            if ((int)f.size() - 1 < 1) break;
            h = zp_rem(h, f, p);
        }
    }
    if ((int)f.size() - 1 >= 1) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------- Z/m layer
// m = p^k; everything monic so division is exact.

using ZmPoly = std::vector<Int>;

Int smod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

void zm_trim(ZmPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = smod(r[i + j] + a[i] * b[j], m);
    }
    zm_trim(r);
    return r;
}

ZmPoly zm_add(ZmPoly a, const ZmPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = smod(a[i] + b[i], m);
    zm_trim(a);
    return a;
}

ZmPoly zm_sub(ZmPoly a, const ZmPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = smod(a[i] - b[i], m);
    zm_trim(a);
    return a;
}

// divisor monic
std::pair<ZmPoly, ZmPoly> zm_divrem(ZmPoly a, const ZmPoly& b, const Int& m) {
    int db = (int)b.size() - 1;
    if ((int)a.size() - 1 < db) return {{}, a};
    ZmPoly q(a.size() - db, Int(0));
    for (int i = (int)a.size() - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        Int f = a[i];
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) a[i - db + j] = smod(a[i - db + j] - f * b[j], m);
    }
    zm_trim(q);
    zm_trim(a);
    return {q, a};
}

// Quadratic Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m), all inputs
// reduced mod m, f,g,h monic. Outputs the lift mod m^2.
void hensel_step(const ZmPoly& f, ZmPoly& g, ZmPoly& h, ZmPoly& s, ZmPoly& t, const Int& m) {
    Int m2 = m * m;
    ZmPoly e = zm_sub(f, zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divrem(zm_mul(s, e, m2), h, m2);
    ZmPoly g1 = zm_add(zm_add(g, zm_mul(t, e, m2), m2), zm_mul(q, g, m2), m2);
    ZmPoly h1 = zm_add(h, r, m2);
    ZmPoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), ZmPoly{Int(1)}, m2);
    auto [c, d] = zm_divrem(zm_mul(s, b, m2), h1, m2);
    ZmPoly s1 = zm_sub(s, d, m2);
    ZmPoly t1 = zm_sub(zm_sub(t, zm_mul(t, b, m2), m2), zm_mul(c, g1, m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lift factorization f = prod(factors) from mod p to mod target (a power of p)
// by recursive two-way splитting; f and factors monic.
void hensel_lift_tree(const ZmPoly& f, std::vector<ZmPoly>& factors, long p, const Int& target) {
    if (factors.size() <= 1) {
        if (!factors.empty()) {
            factors[0] = f;  // single factor: the lift is f itself
        }
        return;
    }
    size_t half = factors.size() / 2;
    ZmPoly g{Int(1)}, h{Int(1)};
    Int pI(p);
    for (size_t i = 0; i < half; ++i) g = zm_mul(g, factors[i], pI);
    for (size_t i = half; i < factors.size(); ++i) h = zm_mul(h, factors[i], pI);
    // Bezout mod p via the word-sized layer
    ZpPoly gp(g.size()), hp(h.size());
    for (size_t i = 0; i < g.size(); ++i) gp[i] = (long)mpz_fdiv_ui(g[i].get_mpz_t(), p);
    for (size_t i = 0; i < h.size(); ++i) hp[i] = (long)mpz_fdiv_ui(h[i].get_mpz_t(), p);
    ZpPoly gg, s0, t0;
    zp_xgcd(gp, hp, p, gg, s0, t0);
    assert((int)gg.size() - 1 == 0);  // coprime halves mod p
    ZmPoly s(s0.size()), t(t0.size());
    for (size_t i = 0; i < s0.size(); ++i) s[i] = Int(s0[i]);
    for (size_t i = 0; i < t0.size(); ++i) t[i] = Int(t0[i]);

    Int m = pI;
    ZmPoly gl = g, hl = h, sl = s, tl = t;
    while (m < target) {
        ZmPoly fm = f;
        Int m2 = m * m;
        for (auto& cc : fm) cc = smod(cc, m2);
        zm_trim(fm);
        hensel_step(fm, gl, hl, sl, tl, m);
        m = m2;
    }
    std::vector<ZmPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ZmPoly> right(factors.begin() + half, factors.end());
    hensel_lift_tree(gl, left, p, target);
    hensel_lift_tree(hl, right, p, target);
    factors.clear();
    factors.insert(factors.end(), left.begin(), left.end());
    factors.insert(factors.end(), right.begin(), right.end());
}

// ---------------------------------------------------------------- Z layer

using ZPoly = std::vector<Int>;

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// exact division test of monic b into f over Z
bool z_divides_monic(const ZPoly& f, const ZPoly& b, ZPoly& quo) {
    ZPoly rem = f;
    int db = (int)b.size() - 1;
    if ((int)rem.size() - 1 < db) return false;
    quo.assign(rem.size() - db, Int(0));
    for (int i = (int)rem.size() - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Int fct = rem[i];
        quo[i - db] = fct;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= fct * b[j];
    }
    for (auto& c : rem)
        if (c != 0) return false;
    while (!quo.empty() && quo.back() == 0) quo.pop_back();
    return true;
}

// Factor a squarefree monic integer polynomial into monic irreducible integer
// factors (they are integral by Gauss).
std::vector<ZPoly> z_factor_squarefree_monic(const ZPoly& f) {
    int n = (int)f.size() - 1;
    std::vector<ZPoly> result;
    if (n <= 1) {
        if (n == 1) result.push_back(f);
        return result;
    }
    // pick a prime keeping f squarefree
    long p = 3;
    Rng rng;
    std::vector<ZpPoly> modular;
    while (true) {
        // next prime
        {
            Int np(p);
            mpz_nextprime(np.get_mpz_t(), np.get_mpz_t());
            p = (long)np.get_si();
        }
        ZpPoly fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) fp[i] = (long)mpz_fdiv_ui(f[i].get_mpz_t(), p);
        zp_trim(fp);
        if ((int)fp.size() - 1 != n) continue;  // p | lc impossible (monic) but be safe
        ZpPoly d = zp_deriv(fp, p);
        if (d.empty()) continue;
        if ((int)zp_gcd(fp, d, p).size() - 1 != 0) continue;
        modular = zp_factor_squarefree(zp_monic(fp, p), p, rng);
        break;
    }
    if (modular.size() == 1) {
        result.push_back(f);
        return result;
    }
    std::sort(modular.begin(), modular.end(),
              [](const ZpPoly& a, const ZpPoly& b) { return a.size() < b.size(); });

    // Mignotte-style bound: |coeffs of any factor| <= 2^n * ||f||_2
    Int norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Int bound = sqrt(norm2) + 1;
    bound <<= (n + 1);  // covers the 2*B symmetric range
    Int target(p);
    while (target <= bound) target *= target;

    std::vector<ZmPoly> lifted(modular.size());
    for (size_t i = 0; i < modular.size(); ++i) {
        lifted[i].assign(modular[i].size(), Int(0));
        for (size_t j = 0; j < modular[i].size(); ++j) lifted[i][j] = Int(modular[i][j]);
    }
    ZmPoly fm(f.size());
    for (size_t i = 0; i < f.size(); ++i) fm[i] = smod(f[i], target);
    hensel_lift_tree(fm, lifted, p, target);

    // subset recombination
    ZPoly rest = f;
    std::vector<int> alive(lifted.size(), 1);
    auto sym = [&](const Int& a) {
        Int r = smod(a, target);
        if (2 * r > target) r -= target;
        return r;
    };
    int live = (int)lifted.size();
    for (int card = 1; live > 0 && card <= live; ++card) {
        // iterate subsets of given cardinality over alive indices
        std::vector<int> idx;
        for (size_t i = 0; i < lifted.size(); ++i)
            if (alive[i]) idx.push_back((int)i);
        if (card > (int)idx.size()) break;
        std::vector<int> sel(card);
        std::iota(sel.begin(), sel.end(), 0);
        bool advanced = true;
        while (advanced) {
            // try subset sel of idx
            ZmPoly cand{Int(1)};
            for (int k : sel) cand = zm_mul(cand, lifted[idx[k]], target);
            ZPoly candz(cand.size());
            for (size_t i = 0; i < cand.size(); ++i) candz[i] = sym(cand[i]);
            ZPoly quo;
            if ((int)candz.size() - 1 <= (int)rest.size() - 1 && z_divides_monic(rest, candz, quo)) {
                result.push_back(candz);
                rest = quo;
                for (int k : sel) alive[idx[k]] = 0;
                live -= card;
                card = 0;  // restart cardinality loop ('for' will ++ to 1)
                break;
            }
            // next combination
            int i = card - 1;
            while (i >= 0 && sel[i] == (int)idx.size() - card + i) --i;
            if (i < 0) {
                advanced = false;
            } else {
                ++sel[i];
                for (int j = i + 1; j < card; ++j) sel[j] = sel[j - 1] + 1;
            }
        }
    }
    if ((int)rest.size() - 1 >= 1) result.push_back(rest);
    return result;
}

}  // namespace

std::vector<UniPoly<Rat>> factor_squarefree_rational(const UniPoly<Rat>& f) {
    if (f.deg() <= 0) return {};
    if (f.deg() == 1) return {f.monic()};
    // clear denominators -> primitive integer poly
    Int den = 1;
    for (const auto& c : f.coeffs()) den = lcm(den, c.den());
    ZPoly fz(f.coeffs().size());
    for (size_t i = 0; i < fz.size(); ++i) {
        Rat c = f.coeffs()[i] * Rat(den);
        assert(c.is_integer());
        fz[i] = c.num();
    }
    Int cont = 0;
    for (const auto& c : fz) cont = gcd(cont, c);
    for (auto& c : fz) c /= cont;
    // monicize: F(x) = lc^(n-1) f(x/lc)
    Int l = fz.back();
    int n = (int)fz.size() - 1;
    ZPoly F(fz.size());
    Int pw = 1;
    for (int i = n; i >= 0; --i) {
        F[i] = fz[i] * pw;
        if (i > 0) pw *= l;
    }
    auto zfactors = z_factor_squarefree_monic(F);
    std::vector<UniPoly<Rat>> out;
    for (const auto& g : zfactors) {
        // map back: monic rational factor of f is g(l*x)/l^deg(g), i.e.
        // coefficients g[i] * l^i / l^deg -> just make monic over Q after x->l*x
        std::vector<Rat> cs(g.size());
        Int pwl = 1;
        for (size_t i = 0; i < g.size(); ++i) {
            cs[i] = Rat(Int(g[i] * pwl));
            pwl *= l;
        }
        out.push_back(UniPoly<Rat>(std::move(cs)).monic());
    }
    std::sort(out.begin(), out.end(), [](const UniPoly<Rat>& a, const UniPoly<Rat>& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (int i = a.deg(); i >= 0; --i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
    return out;
}

QFactorization factor_rational(const UniPoly<Rat>& f) {
    if (f.is_zero()) throw std::domain_error("factor_rational: zero polynomial");
    QFactorization out;
    out.unit = f.lc();
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (auto& irr : factor_squarefree_rational(part)) out.factors.emplace_back(irr, mult);
    }
    return out;
}

bool is_irreducible_rational(const UniPoly<Rat>& f) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    if (!is_squarefree(f)) return false;
    return factor_squarefree_rational(f).size() == 1;
}

}  // namespace germ
