#pragma once

#include <colorhom/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace colorhom {

// Element of the cyclotomic field Q(zeta_N), stored as the residue of a
// polynomial in w = zeta_N modulo the N-th cyclotomic polynomial Phi_N.
// Coefficients are rationals indexed by powers w^0 .. w^(phi(N)-1); this form
// is canonical, so value equality is coefficient-wise equality. N <= 2 has
// phi(N) = 1 and degenerates to plain Q.
//
// Arithmetic between scalars with different root orders is refused loudly;
// every quantity in one problem lives in a single Q(zeta_N).
class Scalar {
public:
    Scalar();  // zero in Q (root order 1)
    explicit Scalar(const Rational& value, std::int64_t root_order = 1);

    static Scalar zero(std::int64_t root_order);
    static Scalar one(std::int64_t root_order);
    static Scalar of_int(std::int64_t value, std::int64_t root_order);
    // zeta_N^k, k arbitrary (reduced mod N).
    static Scalar root_of_unity(std::int64_t root_order, std::int64_t k);

    std::int64_t root_order() const { return root_order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    // True when the residue is a plain rational (all higher coefficients 0).
    bool is_rational() const;
    // The w^0 coefficient; meaningful as "the value" only when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    Scalar inverse() const;  // throws on zero
    Scalar pow(std::int64_t e) const;

    // Literal syntax: rational coefficients joined by +/-, powers of w written
    // "w" or "w^k", e.g. "1", "-2/3", "w", "1/2 + 3*w^2". parse accepts any
    // exponent and reduces; to_string always emits the canonical residue.
    std::string to_string() const;
    static Scalar parse(const std::string& text, std::int64_t root_order);

private:
    std::int64_t root_order_;
    std::vector<Rational> coeffs_;  // size phi(root_order_)

    void require_same_order(const Scalar& rhs) const;
};

// Monic coefficient vector of Phi_n, index = power (so .size()-1 = phi(n)).
// Computed by iterated exact division of x^n - 1 by Phi_d over proper
// divisors d; memoized, safe for concurrent use.
const std::vector<Rational>& cyclotomic_polynomial(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

}  // namespace colorhom
