#pragma once

#include <compare>
#include <string>
#include <vector>

namespace atlas {

// Exact rational in lowest terms, den > 0. Angles live in [0, 1) and add
// modulo 1; the engine never touches floating point.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d);  // normalises; throws on d == 0

    static Fraction parse(const std::string& text);  // "p/q" or "p"
    std::string str() const;

    bool is_zero() const { return num == 0; }
    bool operator==(const Fraction&) const = default;  // lowest terms make this exact
    std::strong_ordering operator<=>(const Fraction& o) const {
        return num * o.den <=> o.num * den;
    }
};

Fraction add_mod1(const Fraction& a, const Fraction& b);

// The focus factor of complexity n: n rank-0 points x_0,...,x_{n-1} arranged
// cyclically, with n two-dimensional leaf components c_j joining x_j to
// x_{j+1 mod n}. All invariants the engine extracts are functions of this
// cyclic combinatorics.
struct FocusSingularity {
    int n = 1;
};

// A finite-order automorphism of the focus factor: a shift of the cyclic
// chain (x_q -> x_{q+shift}) combined with a rational flow angle along the
// periodic integral, as a fraction of the full period.
struct FocusAutomorphism {
    int n = 1;
    int shift = 0;
    Fraction angle;

    auto operator<=>(const FocusAutomorphism&) const = default;
};

// Validated constructor: n >= 1, 0 <= d < n, 0 <= angle < 1.
FocusAutomorphism shift_automorphism(int n, int d, Fraction angle = Fraction());

FocusAutomorphism compose(const FocusAutomorphism& a, const FocusAutomorphism& b);
FocusAutomorphism focus_identity(int n);
long long order_of(const FocusAutomorphism& a);

// True iff every nontrivial power has a nonzero shift part. An automorphism
// with shift 0 and angle != 0 fixes every rank-0 point.
bool is_free_on_rank0(const FocusAutomorphism& a);

// Orbits of the shift parts on {0,...,n-1}. The set must be a group under
// composition (shift adds mod n, angle adds mod 1); throws otherwise.
int rank0_orbit_count(int n, const std::vector<FocusAutomorphism>& group);

// F_{n/k}; throws unless k divides n.
FocusSingularity quotient_focus(int n, int k);

}  // namespace atlas
