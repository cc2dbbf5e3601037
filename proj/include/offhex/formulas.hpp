#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

#include "offhex/counting.hpp"
#include "offhex/regions.hpp"

namespace offhex {

// n or n + 1/2, stored as twice the value.
struct HalfInt {
    long twice = 0;

    static HalfInt of(long n) { return {2 * n}; }
    static HalfInt half(long t) { return {t}; }  // t/2

    bool is_integer() const { return twice % 2 == 0; }
    long floor() const { return twice >= 0 ? twice / 2 : -((-twice + 1) / 2); }
    long ceil() const { return -HalfInt{-twice}.floor(); }
    long as_integer() const;  // throws NonIntegral

    HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
    HalfInt operator+(long n) const { return {twice + 2 * n}; }
    HalfInt operator-(long n) const { return {twice - 2 * n}; }
    auto operator<=>(const HalfInt&) const = default;
    std::string to_string() const;
};

// rat * pi^(pi_half_exp/2)
struct HyperValue {
    mpq_class rat = 1;
    long pi_half_exp = 0;

    HyperValue& operator*=(const HyperValue& o);
    HyperValue& operator/=(const HyperValue& o);
    friend HyperValue operator*(HyperValue a, const HyperValue& b) { return a *= b; }
    friend HyperValue operator/(HyperValue a, const HyperValue& b) { return a /= b; }

    bool is_count() const;
    BigCount to_count() const;  // throws NonIntegral
    std::string to_string() const;
};

HyperValue hyperfactorial(HalfInt n);
inline HyperValue hyperfactorial(long n) { return hyperfactorial(HalfInt::of(n)); }

BigCount pp_box(long a, long b, long c);
// Tilings of the dented semihexagon S(seq).
BigCount clp_count(const std::vector<int>& seq);

mpz_class p1(long x, long y, long z, long m);
mpz_class p2(long x, long y, long z, long m);
HalfInt q1(long x_parity, long y, long z, long m);
mpz_class q2(long x, long y, long z, long m);

enum class SpecialFn { Phi, Psi, PsiPrime, Theta, ThetaPrime, Lambda, LambdaPrime };
const char* special_fn_name(SpecialFn f);
HyperValue special_fn(SpecialFn f, long x, long y, long z, long m);

inline HyperValue phi(long x, long y, long z, long m) { return special_fn(SpecialFn::Phi, x, y, z, m); }
inline HyperValue psi(long x, long y, long z, long m) { return special_fn(SpecialFn::Psi, x, y, z, m); }
inline HyperValue psi_prime(long x, long y, long z, long m) { return special_fn(SpecialFn::PsiPrime, x, y, z, m); }
inline HyperValue theta(long x, long y, long z, long m) { return special_fn(SpecialFn::Theta, x, y, z, m); }
inline HyperValue theta_prime(long x, long y, long z, long m) { return special_fn(SpecialFn::ThetaPrime, x, y, z, m); }
inline HyperValue lambda_fn(long x, long y, long z, long m) { return special_fn(SpecialFn::Lambda, x, y, z, m); }
inline HyperValue lambda_prime(long x, long y, long z, long m) { return special_fn(SpecialFn::LambdaPrime, x, y, z, m); }

// One closed form per (family, position). Expressions are linear in the
// symbols x y z a b c oa ea ob eb oc ec M mn ad h fl cl (M = max(a,b),
// mn = min(a,b), ad = |a-b|, h = (x+z)/2 exactly, fl/cl its floor/ceiling).
// Sequence items are separated by ';' and may splice the ferns A, C and the
// reversed right fern B~ with '+', adding to the touching entries.
struct TheoremRow {
    Family family;
    int position;
    SpecialFn fn;
    const char* args[3];
    const char* s1;
    const char* s2;
    std::vector<const char*> num;  // H(...) in the numerator
    std::vector<const char*> den;
    const char* note;  // empty unless the printed form was amended
};

const std::vector<TheoremRow>& theorem_table();
const TheoremRow& theorem_row(Family f, int position);  // throws NoTheoremRow

struct TheoremTerms {
    HyperValue prefactor;
    std::vector<int> s1, s2;
    HyperValue value;
};

TheoremTerms theorem_terms(const RegionSpec& s);
// Same evaluation against an explicit row; the row need not be in the table.
TheoremTerms evaluate_row(const TheoremRow& row, const RegionSpec& s);
HyperValue theorem_value(const RegionSpec& s);
BigCount theorem_count(const RegionSpec& s);

// Evaluates one of the row expressions for a spec (exposed for tests).
HalfInt eval_expr(const std::string& expr, const RegionSpec& s);
std::vector<int> eval_sequence(const std::string& seq, const RegionSpec& s);

}  // namespace offhex
