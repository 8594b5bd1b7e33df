#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qclaw {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in q^{1/2} with integer coefficients.
///
/// Exponents count half-units: the pair (e, c) is the term c * q^{e/2}.
/// Terms are kept sorted by exponent with no zero coefficients.
class Coefficient {
public:
    using Term = std::pair<int, BigInt>;

    Coefficient() = default;
    Coefficient(long long c);
    Coefficient(const BigInt& c);

    /// c * q^{halfExp/2}
    static Coefficient monomial(int halfExp, const BigInt& c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }

    int min_exponent() const;
    int max_exponent() const;

    /// If this is c*q^{e/2}, returns e.
    std::optional<int> monomial_exponent() const;

    /// Multiplication by q^{halfExp/2}.
    Coefficient shifted(int halfExp) const;

    Coefficient bar() const;
    bool in_mm() const;
    BigInt at_one() const;

    /// Terms with strictly negative exponent.
    Coefficient negative_part() const;

    /// Exact division in Z[q^{+-1/2}]; nullopt if the quotient does not exist.
    std::optional<Coefficient> divide_exact(const Coefficient& d) const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    Coefficient operator-() const;

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend bool operator==(const Coefficient&, const Coefficient&) = default;

    /// Canonical rendering "c*q^(e/2)" joined by " + ", ascending exponent; "0" for zero.
    std::string to_string() const;

private:
    explicit Coefficient(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
    void add_scaled(const Coefficient& o, int sign);

    std::vector<Term> terms_;
};

inline Coefficient coeff_add(const Coefficient& a, const Coefficient& b) { return a + b; }
inline Coefficient coeff_mul(const Coefficient& a, const Coefficient& b) { return a * b; }
inline Coefficient coeff_bar(const Coefficient& a) { return a.bar(); }
inline bool coeff_in_mm(const Coefficient& a) { return a.in_mm(); }

/// q^{halfExp/2}
inline Coefficient qpow(int halfExp) { return Coefficient::monomial(halfExp); }

} // namespace qclaw
