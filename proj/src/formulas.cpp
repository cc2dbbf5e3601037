#include "offhex/formulas.hpp"

#include <cctype>
#include <mutex>

#include "offhex/errors.hpp"

namespace offhex {

// ---- HalfInt / HyperValue ----

long HalfInt::as_integer() const
{
    if (!is_integer()) throw Error(ErrorKind::NonIntegral, "expected an integer, got " + to_string());
    return twice / 2;
}

std::string HalfInt::to_string() const
{
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

HyperValue& HyperValue::operator*=(const HyperValue& o)
{
    rat *= o.rat;
    pi_half_exp += o.pi_half_exp;
    return *this;
}

HyperValue& HyperValue::operator/=(const HyperValue& o)
{
    rat /= o.rat;
    pi_half_exp -= o.pi_half_exp;
    return *this;
}

bool HyperValue::is_count() const
{
    return pi_half_exp == 0 && rat.get_den() == 1 && sgn(rat) >= 0;
}

BigCount HyperValue::to_count() const
{
    if (!is_count()) throw Error(ErrorKind::NonIntegral, "value " + to_string() + " is not a tiling count");
    return rat.get_num();
}

std::string HyperValue::to_string() const
{
    std::string s = rat.get_str();
    if (pi_half_exp != 0) s += " * pi^(" + std::to_string(pi_half_exp) + "/2)";
    return s;
}

// ---- hyperfactorials ----

namespace {

std::mutex g_hmu;
std::vector<mpq_class> g_hint{1};   // H(n)
std::vector<mpq_class> g_hhalf{1};  // rational part of H(n + 1/2)
std::vector<mpz_class> g_fact{1};

const mpz_class& factorial(long n)
{
    while (static_cast<long>(g_fact.size()) <= n) g_fact.push_back(g_fact.back() * static_cast<unsigned long>(g_fact.size()));
    return g_fact[n];
}

}  // namespace

HyperValue hyperfactorial(HalfInt n)
{
    if (n.twice < 0) throw Error(ErrorKind::NegativeArgument, "hyperfactorial of negative argument " + n.to_string());
    std::lock_guard<std::mutex> lock(g_hmu);
    if (n.is_integer()) {
        long k = n.twice / 2;
        while (static_cast<long>(g_hint.size()) <= k) {
            long i = static_cast<long>(g_hint.size());
            g_hint.push_back(g_hint.back() * mpq_class(factorial(i - 1)));
        }
        return {g_hint[k], 0};
    }
    // H(k+1/2) = prod_{i=0..k} Gamma(i+1/2), Gamma(i+1/2) = (2i)!/(4^i i!) sqrt(pi)
    long k = (n.twice - 1) / 2;
    while (static_cast<long>(g_hhalf.size()) <= k) {
        long i = static_cast<long>(g_hhalf.size());
        mpz_class four = 1;
        mpz_mul_2exp(four.get_mpz_t(), four.get_mpz_t(), 2 * i);
        mpq_class g(factorial(2 * i), four * factorial(i));
        g.canonicalize();
        g_hhalf.push_back(g_hhalf.back() * g);
    }
    return {g_hhalf[k], k + 1};
}

namespace {

HyperValue H(HalfInt n) { return hyperfactorial(n); }
HyperValue H(long n) { return hyperfactorial(HalfInt::of(n)); }

}  // namespace

BigCount pp_box(long a, long b, long c)
{
    return (H(a) * H(b) * H(c) * H(a + b + c) / (H(a + b) * H(b + c) * H(c + a))).to_count();
}

BigCount clp_count(const std::vector<int>& seq_in)
{
    std::vector<long> v(seq_in.begin(), seq_in.end());
    for (long e : v)
        if (e < 0) throw Error(ErrorKind::NegativeArgument, "semihexagon entries must be nonnegative");
    if (v.size() % 2 == 0 && !v.empty()) v.pop_back();  // a trailing gap changes nothing
    HyperValue r;
    long odd = 0;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i % 2 == 0) odd += v[i];
        long sum = 0;
        for (std::size_t j = i; j < v.size(); j++) {
            sum += v[j];
            if ((j - i) % 2 == 0) r *= H(sum);
            else r /= H(sum);
        }
    }
    r /= H(odd);
    return r.to_count();
}

// ---- polynomials ----

mpz_class p1(long x, long y, long z, long m)
{
    mpz_class X = x, Y = y, Z = z, M = m;
    if (x % 2 == 0) return (X + Y) * (X + Z) + 2 * X * M;
    return (X + Y) * (X + Z) + 2 * (X + Y + Z + M) * M;
}

mpz_class p2(long x, long y, long z, long m)
{
    mpz_class X = x, Y = y, Z = z, M = m;
    mpz_class base = ((X + Y) * (X + Y) - 1) * ((X + Z) * (X + Z) - 1);
    if (x % 2 == 0)
        return base + 4 * X * M * (X * X + 2 * X * Y + Y * Y + 2 * X * Z + 3 * Y * Z + Z * Z + 2 * X * M + 3 * Y * M + 3 * Z * M + 2 * M * M - 1);
    return base + 4 * (X + Y + Z + M) * M * (X * X + Y * Z - 1);
}

HalfInt q1(long x_parity, long y, long z, long m)
{
    HalfInt h = HalfInt::half(y + z);
    return (x_parity % 2 == 0) ? h + m : h;
}

mpz_class q2(long x, long y, long z, long m)
{
    mpz_class X = x, Y = y, Z = z, M = m;
    if (x % 2 == 0)
        return (X + Z + 2 * M - 1) * ((Z + 1) * (X + Z - 1) + 2 * X * (M - 1)) + (Y + 1) * ((X + Z) * (X + Z) + 4 * X * M - 1);
    mpz_class t = X + Z + 2 * M;
    return Z * (t * t - 1) + Y * (t * t - 4 * M * (X + M) - 1);
}

// ---- the seven product formulas ----

const char* special_fn_name(SpecialFn f)
{
    static const char* names[] = {"Phi", "Psi", "Psi'", "Theta", "Theta'", "Lambda", "Lambda'"};
    return names[static_cast<int>(f)];
}

HyperValue special_fn(SpecialFn f, long x, long y, long z, long m)
{
    if (x < 0 || y < 0 || z < 0 || m < 0)
        throw Error(ErrorKind::NegativeArgument, std::string(special_fn_name(f)) + " needs nonnegative arguments");
    const HalfInt hm = HalfInt::half(m);
    const HalfInt exy = HalfInt::half(x + y), eyz = HalfInt::half(y + z), ezx = HalfInt::half(z + x);
    const HalfInt es = HalfInt::half(x + y + z);
    const long fxy = exy.floor(), cxy = exy.ceil(), fzx = ezx.floor(), czx = ezx.ceil();
    const long fs = es.floor(), cs = es.ceil();

    HyperValue pref;
    HalfInt mden[3], tail[3];
    auto I = [](long v) { return HalfInt::of(v); };
    switch (f) {
    case SpecialFn::Phi:
        if ((x - y) % 2 || (y - z) % 2) throw Error(ErrorKind::ParityViolation, "Phi needs x, y, z of equal parity");
        pref.rat = mpq_class(p1(x, y, z, m), 4);
        mden[0] = exy + 1; mden[1] = eyz; mden[2] = ezx - 1;
        tail[0] = exy - 1; tail[1] = eyz; tail[2] = ezx + 1;
        break;
    case SpecialFn::Psi:
    case SpecialFn::PsiPrime:
        if ((y - z) % 2 || (x - y) % 2 == 0) throw Error(ErrorKind::ParityViolation, "Psi needs y = z and x of the other parity");
        pref.rat = mpq_class(p2(x, y, z, m), 16);
        if (f == SpecialFn::Psi) {
            mden[0] = I(cxy + 1); mden[1] = eyz; mden[2] = I(fzx - 1);
            tail[0] = I(fxy - 1); tail[1] = eyz; tail[2] = I(czx + 1);
        } else {
            mden[0] = I(fxy - 1); mden[1] = eyz; mden[2] = I(czx + 1);
            tail[0] = I(cxy + 1); tail[1] = eyz; tail[2] = I(fzx - 1);
        }
        break;
    case SpecialFn::Theta:
        mden[0] = I(fxy); mden[1] = eyz + 1; mden[2] = I(fzx);
        tail[0] = I(cxy); tail[1] = eyz - 1; tail[2] = I(czx);
        break;
    case SpecialFn::ThetaPrime:
        mden[0] = I(cxy); mden[1] = eyz - 1; mden[2] = I(czx);
        tail[0] = I(fxy); tail[1] = eyz + 1; tail[2] = I(fzx);
        break;
    case SpecialFn::Lambda:
        pref.rat = mpq_class(q2(x, y, z, m), 8);
        mden[0] = I(cxy); mden[1] = eyz + 1; mden[2] = I(fzx - 1);
        tail[0] = I(fxy); tail[1] = eyz - 1; tail[2] = I(czx + 1);
        break;
    case SpecialFn::LambdaPrime:
        pref.rat = mpq_class(q2(x, y, z, m), 8);
        mden[0] = I(fxy); mden[1] = eyz - 1; mden[2] = I(czx + 1);
        tail[0] = I(cxy); tail[1] = eyz + 1; tail[2] = I(fzx - 1);
        break;
    }
    if (f == SpecialFn::Theta || f == SpecialFn::ThetaPrime) {
        pref.rat = mpq_class(q1(x, y, z, m).twice, 2);
        pref.rat.canonicalize();
    }

    pref.rat.canonicalize();
    HyperValue r = pref;
    r *= H(m + x) * H(m + y) * H(m + z) * H(m + x + y + z);
    r /= H(m + x + y) * H(m + y + z) * H(m + z + x);
    r *= H(m + fs) * H(m + cs);
    r *= H(hm) * H(hm);
    for (long t : {x, y, z}) {
        HalfInt ht = HalfInt::half(t);
        r *= H(ht.floor()) * H(ht.ceil());
        r /= H(hm + ht.floor()) * H(hm + ht.ceil());
    }
    r *= H(hm + fxy) * H(hm + cxy) * H(hm + eyz) * H(hm + eyz) * H(hm + fzx) * H(hm + czx);
    r /= H(hm + fs) * H(hm + cs);
    for (int i = 0; i < 3; i++) {
        r /= H(mden[i] + m);
        r /= H(tail[i]);
    }
    return r;
}

}  // namespace offhex
