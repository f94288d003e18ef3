#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct exponent_overflow : std::runtime_error {
    explicit exponent_overflow(const std::string& what) : std::runtime_error(what) {}
};

inline std::int32_t checked_exp(std::int64_t e) {
    if (e > INT32_MAX || e < INT32_MIN)
        throw exponent_overflow("Laurent exponent exceeds 32-bit range");
    return static_cast<std::int32_t>(e);
}

/// Sparse integer Laurent polynomial in one variable (used for both the
/// s-valued specializations and polynomials in v alone, such as P0).
class LaurentS {
public:
    using Term = std::pair<std::int32_t, Int>;

    LaurentS() = default;
    LaurentS(Int c, std::int32_t e = 0) {
        if (c != 0) terms_.emplace_back(e, std::move(c));
    }
    static LaurentS monomial(Int c, std::int32_t e) { return LaurentS(std::move(c), e); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(std::int32_t e) const;
    std::int32_t min_exp() const;  // requires nonzero
    std::int32_t max_exp() const;

    LaurentS& operator+=(const LaurentS& o);
    LaurentS& operator-=(const LaurentS& o);
    friend LaurentS operator+(LaurentS a, const LaurentS& b) { return a += b; }
    friend LaurentS operator-(LaurentS a, const LaurentS& b) { return a -= b; }
    LaurentS operator-() const;
    LaurentS operator*(const LaurentS& o) const;
    LaurentS& operator*=(const LaurentS& o) { return *this = *this * o; }
    LaurentS shifted(std::int32_t e) const;       // * s^e
    LaurentS scaled(const Int& c) const;
    bool operator==(const LaurentS& o) const { return terms_ == o.terms_; }

    // substitute s -> s^-1
    LaurentS inverted() const;

    // Exact division; throws std::domain_error when not divisible.
    LaurentS divided_by(const LaurentS& d) const;

    Rat eval_at(const Rat& x) const;

    std::string str(const std::string& var = "s") const;

    // terms must stay sorted by exponent with no zero coefficients
    static LaurentS from_terms(std::vector<Term> t);

private:
    std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
    void normalize();
    friend class LaurentVZ;
};

/// Sparse integer Laurent polynomial in (v, z): the value ring for the
/// framed Homfly polynomial.  delta = (v^-1 - v) z^-1 lives here too, so
/// negative z powers are legal.
class LaurentVZ {
public:
    struct Exp {
        std::int32_t a;  // power of v
        std::int32_t b;  // power of z
        friend auto operator<=>(const Exp&, const Exp&) = default;
    };
    using Term = std::pair<Exp, Int>;

    LaurentVZ() = default;
    explicit LaurentVZ(Int c, std::int32_t a = 0, std::int32_t b = 0) {
        if (c != 0) terms_.emplace_back(Exp{a, b}, std::move(c));
    }
    static LaurentVZ monomial(Int c, std::int32_t a, std::int32_t b) {
        return LaurentVZ(std::move(c), a, b);
    }
    static LaurentVZ one() { return LaurentVZ(1); }
    /// delta = (v^-1 - v) z^-1, the value of a split unknot component.
    static LaurentVZ delta();

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(std::int32_t a, std::int32_t b) const;

    LaurentVZ& operator+=(const LaurentVZ& o);
    LaurentVZ& operator-=(const LaurentVZ& o);
    friend LaurentVZ operator+(LaurentVZ a, const LaurentVZ& b) { return a += b; }
    friend LaurentVZ operator-(LaurentVZ a, const LaurentVZ& b) { return a -= b; }
    LaurentVZ operator-() const;
    LaurentVZ operator*(const LaurentVZ& o) const;
    LaurentVZ& operator*=(const LaurentVZ& o) { return *this = *this * o; }
    LaurentVZ shifted(std::int32_t da, std::int32_t db) const;  // * v^da z^db
    LaurentVZ scaled(const Int& c) const;
    bool operator==(const LaurentVZ& o) const { return terms_ == o.terms_; }

    LaurentVZ pow(unsigned k) const;

    std::int32_t min_z_exp() const;  // requires nonzero
    std::int32_t max_z_exp() const;

    /// v -> s^k, z -> s - s^-1.  Negative z powers are handled by exact
    /// division (the quotient must be a Laurent polynomial, as it is for
    /// every link invariant value).
    LaurentS substitute_v_power(int k) const;

    /// Coefficient of z^b as a Laurent polynomial in v.
    LaurentS z_coefficient(std::int32_t b) const;

    /// substitute v -> v^-1 (mirror image of the underlying knot)
    LaurentVZ v_inverted() const;

    std::string str() const;

    static LaurentVZ from_terms(std::vector<Term> t);

private:
    std::vector<Term> terms_;  // sorted by Exp, no zero coefficients
    void normalize();
};

}  // namespace skein
