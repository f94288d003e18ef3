#include "skein/nseries.hpp"

#include <sstream>

namespace skein {

void NPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

NPoly NPoly::from_coeffs(std::vector<Rat> c) {
    NPoly p;
    p.coeffs_ = std::move(c);
    p.strip();
    return p;
}

NPoly NPoly::monomial(Rat c, std::size_t deg) {
    NPoly p;
    if (c != 0) {
        p.coeffs_.assign(deg + 1, Rat(0));
        p.coeffs_[deg] = std::move(c);
    }
    return p;
}

NPoly& NPoly::operator+=(const NPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    strip();
    return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    strip();
    return *this;
}

NPoly NPoly::operator-() const {
    NPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

NPoly NPoly::operator*(const NPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(out));
}

Rat NPoly::eval_at(const Rat& n) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
    return acc;
}

static std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r).str();
    if (denominator(r) != 1) os << "/" << denominator(r).str();
    return os.str();
}

std::string NPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const Rat& c = coeffs_[d];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat ac = c > 0 ? c : Rat(-c);
        if (ac != 1 || d == 0) os << rat_str(ac);
        if (d > 0) {
            if (ac != 1) os << "*";
            os << "N";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

// ----------------------------------------------------------------- NSeries

bool NSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

NSeries& NSeries::operator+=(const NSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("NSeries order mismatch");
    for (int d = 0; d <= order(); ++d) coeffs_[d] += o.coeffs_[d];
    return *this;
}

NSeries& NSeries::operator-=(const NSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("NSeries order mismatch");
    for (int d = 0; d <= order(); ++d) coeffs_[d] -= o.coeffs_[d];
    return *this;
}

NSeries NSeries::operator*(const NSeries& o) const {
    int D = std::min(order(), o.order());
    NSeries r(D);
    for (int i = 0; i <= D; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= D; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

bool NSeries::operator==(const NSeries& o) const {
    if (order() != o.order()) return false;
    for (int d = 0; d <= order(); ++d)
        if (!(coeffs_[d] == o.coeffs_[d])) return false;
    return true;
}

NSeries NSeries::truncated(int D) const {
    NSeries r(D);
    for (int d = 0; d <= std::min(D, order()); ++d) r.coeffs_[d] = coeffs_[d];
    return r;
}

std::vector<Rat> NSeries::at_N(const Rat& n) const {
    std::vector<Rat> out(order() + 1);
    for (int d = 0; d <= order(); ++d) out[d] = coeffs_[d].eval_at(n);
    return out;
}

std::string NSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= order(); ++d) {
        if (coeffs_[d].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[d].str() << ")h^" << d;
    }
    if (first) os << "0";
    os << " + O(h^" << order() + 1 << ")";
    return os.str();
}

// ------------------------------------------------------------- h expansion

namespace {

// e^{a N h / 2} as a series: coefficient of h^d is (a/2)^d / d! * N^d
NSeries exp_v_power(std::int64_t a, int D) {
    NSeries s(D);
    Rat c = 1;
    for (int d = 0; d <= D; ++d) {
        if (d > 0) c *= Rat(a, 2 * d);
        s.coeff(d) = NPoly::monomial(c, d);
    }
    return s;
}

// (e^{h/2} - e^{-h/2})^b for b >= 0
NSeries z_power(int b, int D) {
    NSeries z(D);
    Rat c = 1;  // 1/(2^d d!)
    for (int d = 0; d <= D; ++d) {
        if (d > 0) c /= Rat(2 * d);
        if (d % 2 == 1) z.coeff(d) = NPoly(c * 2);
    }
    NSeries acc(D);
    acc.coeff(0) = NPoly(Rat(1));
    for (int i = 0; i < b; ++i) acc *= z;
    return acc;
}

}  // namespace

NSeries h_expansion(const LaurentVZ& p, int D) {
    if (D < 0) throw std::invalid_argument("h_expansion: negative truncation order");
    NSeries out(D);
    for (const auto& t : p.terms()) {
        if (t.first.b < 0)
            throw std::domain_error("h_expansion: negative z exponent has an h^-1 pole");
        NSeries part = exp_v_power(t.first.a, D) * z_power(t.first.b, D);
        for (int d = 0; d <= D; ++d) out.coeff(d) += part.coeff(d) * NPoly(Rat(t.second));
    }
    return out;
}

std::optional<LowestTerm> lowest_term(const NSeries& s) {
    for (int d = 0; d <= s.order(); ++d)
        if (!s.coeff(d).is_zero()) return LowestTerm{d, s.coeff(d)};
    return std::nullopt;
}

}  // namespace skein
