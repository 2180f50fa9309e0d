#include "atlas/focus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "atlas/errors.hpp"

namespace atlas {

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw ValidationError("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Fraction Fraction::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Fraction(std::stoll(text), 1);
        return Fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ValidationError("cannot parse fraction: '" + text + "'");
    }
}

std::string Fraction::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Fraction add_mod1(const Fraction& a, const Fraction& b) {
    Fraction sum(a.num * b.den + b.num * a.den, a.den * b.den);
    long long r = sum.num % sum.den;
    if (r < 0) r += sum.den;
    return Fraction(r, sum.den);
}

FocusAutomorphism shift_automorphism(int n, int d, Fraction angle) {
    if (n < 1) throw ValidationError("focus complexity must be at least 1, got " + std::to_string(n));
    if (d < 0 || d >= n)
        throw ValidationError("shift " + std::to_string(d) + " is out of range [0," +
                              std::to_string(n) + ")");
    if (angle.num < 0 || angle >= Fraction(1, 1))
        throw ValidationError("angle " + angle.str() + " is out of range [0,1)");
    return FocusAutomorphism{n, d, angle};
}

FocusAutomorphism compose(const FocusAutomorphism& a, const FocusAutomorphism& b) {
    if (a.n != b.n)
        throw ValidationError("cannot compose automorphisms of F_" + std::to_string(a.n) +
                              " and F_" + std::to_string(b.n));
    return FocusAutomorphism{a.n, (a.shift + b.shift) % a.n, add_mod1(a.angle, b.angle)};
}

FocusAutomorphism focus_identity(int n) { return shift_automorphism(n, 0); }

long long order_of(const FocusAutomorphism& a) {
    const long long shift_order = a.n / std::gcd(static_cast<long long>(a.n),
                                                 static_cast<long long>(a.shift));
    return std::lcm(shift_order, a.angle.den);
}

bool is_free_on_rank0(const FocusAutomorphism& a) {
    const long long shift_order = a.n / std::gcd(static_cast<long long>(a.n),
                                                 static_cast<long long>(a.shift));
    // The first power with zero shift is shift_order; freeness means that
    // power is already the identity.
    return shift_order == order_of(a);
}

int rank0_orbit_count(int n, const std::vector<FocusAutomorphism>& group) {
    if (n < 1) throw ValidationError("focus complexity must be at least 1");
    std::set<FocusAutomorphism> elems;
    for (const FocusAutomorphism& a : group) {
        if (a.n != n)
            throw ValidationError("automorphism of F_" + std::to_string(a.n) +
                                  " in a set over F_" + std::to_string(n));
        elems.insert(a);
    }
    if (!elems.count(focus_identity(n)))
        throw ValidationError("automorphism set does not contain the identity");
    for (const FocusAutomorphism& a : elems)
        for (const FocusAutomorphism& b : elems)
            if (!elems.count(compose(a, b)))
                throw ValidationError("automorphism set is not closed under composition");
    long long g = n;
    for (const FocusAutomorphism& a : elems) g = std::gcd(g, static_cast<long long>(a.shift));
    return static_cast<int>(g);
}

FocusSingularity quotient_focus(int n, int k) {
    if (n < 1 || k < 1) throw ValidationError("focus quotient needs positive n and k");
    if (n % k != 0)
        throw ValidationError("group order " + std::to_string(k) + " does not divide focus complexity " +
                              std::to_string(n));
    return FocusSingularity{n / k};
}

}  // namespace atlas
