#pragma once

#include "skein/laurent.hpp"

#include <optional>

namespace skein {

/// Polynomial in the formal variable N with rational coefficients.
class NPoly {
public:
    NPoly() = default;
    explicit NPoly(Rat c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    static NPoly monomial(Rat c, std::size_t deg);

    const std::vector<Rat>& coeffs() const { return coeffs_; }  // coeffs_[d] * N^d
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Rat coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rat(0); }

    NPoly& operator+=(const NPoly& o);
    NPoly& operator-=(const NPoly& o);
    friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
    friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
    NPoly operator-() const;
    NPoly operator*(const NPoly& o) const;
    NPoly& operator*=(const NPoly& o) { return *this = *this * o; }
    bool operator==(const NPoly& o) const { return coeffs_ == o.coeffs_; }

    Rat eval_at(const Rat& n) const;
    std::string str() const;

    static NPoly from_coeffs(std::vector<Rat> c);

private:
    std::vector<Rat> coeffs_;  // trailing zeros stripped
    void strip();
};

/// Truncated power series in h; coefficient of h^d is an NPoly.
/// Arithmetic never reports terms beyond the truncation order.
class NSeries {
public:
    explicit NSeries(int order = 12) : coeffs_(order + 1) {}

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const NPoly& coeff(int d) const { return coeffs_.at(d); }
    NPoly& coeff(int d) { return coeffs_.at(d); }
    bool is_zero() const;

    NSeries& operator+=(const NSeries& o);
    NSeries& operator-=(const NSeries& o);
    friend NSeries operator+(NSeries a, const NSeries& b) { return a += b; }
    friend NSeries operator-(NSeries a, const NSeries& b) { return a -= b; }
    NSeries operator*(const NSeries& o) const;
    NSeries& operator*=(const NSeries& o) { return *this = *this * o; }
    bool operator==(const NSeries& o) const;

    NSeries truncated(int order) const;

    /// Substitute a numeric value for N, giving plain rational h-coefficients.
    std::vector<Rat> at_N(const Rat& n) const;

    std::string str() const;

private:
    std::vector<NPoly> coeffs_;  // index d = coefficient of h^d, size order+1
};

/// v -> e^{N h / 2}, z -> e^{h/2} - e^{-h/2}, truncated at h^D.
/// Requires every z-exponent of p to be non-negative (true of all knot
/// invariant values; series in h would otherwise pick up h^-1 poles).
NSeries h_expansion(const LaurentVZ& p, int D);

struct LowestTerm {
    int degree;
    NPoly coeff;
};

/// Smallest d with a nonzero h^d coefficient, or nullopt for the zero series.
std::optional<LowestTerm> lowest_term(const NSeries& s);

}  // namespace skein
