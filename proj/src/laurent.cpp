#include "skein/laurent.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <sstream>

namespace skein {

// ---------------------------------------------------------------- LaurentS

void LaurentS::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

LaurentS LaurentS::from_terms(std::vector<Term> t) {
    LaurentS p;
    p.terms_ = std::move(t);
    p.normalize();
    return p;
}

Int LaurentS::coeff(std::int32_t e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, std::int32_t v) { return t.first < v; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

std::int32_t LaurentS::min_exp() const { return terms_.front().first; }
std::int32_t LaurentS::max_exp() const { return terms_.back().first; }

LaurentS& LaurentS::operator+=(const LaurentS& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == terms_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            Int c = i->second + j->second;
            if (c != 0) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentS& LaurentS::operator-=(const LaurentS& o) { return *this += o.operator-(); }

LaurentS LaurentS::operator-() const {
    LaurentS r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentS LaurentS::operator*(const LaurentS& o) const {
    LaurentS r;
    for (const auto& t : o.terms_) {
        LaurentS part = shifted(t.first).scaled(t.second);
        r += part;
    }
    return r;
}

LaurentS LaurentS::shifted(std::int32_t e) const {
    LaurentS r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.emplace_back(checked_exp(std::int64_t(t.first) + e), t.second);
    return r;
}

LaurentS LaurentS::scaled(const Int& c) const {
    if (c == 0) return {};
    LaurentS r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
    return r;
}

LaurentS LaurentS::inverted() const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        t.emplace_back(checked_exp(-std::int64_t(it->first)), it->second);
    LaurentS r;
    r.terms_ = std::move(t);
    return r;
}

LaurentS LaurentS::divided_by(const LaurentS& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentS rem(*this), quot;
    const Term& lead = d.terms_.back();
    while (!rem.is_zero()) {
        const Term& rl = rem.terms_.back();
        if (rl.second % lead.second != 0)
            throw std::domain_error("inexact Laurent division (coefficient)");
        Int qc = rl.second / lead.second;
        std::int32_t qe = checked_exp(std::int64_t(rl.first) - lead.first);
        LaurentS piece = LaurentS(qc, qe);
        quot += piece;
        rem -= d.shifted(qe).scaled(qc);
        if (!rem.is_zero() && rem.max_exp() >= rl.first)
            throw std::domain_error("inexact Laurent division");
    }
    return quot;
}

Rat LaurentS::eval_at(const Rat& x) const {
    if (x == 0) throw std::domain_error("Laurent polynomial evaluated at 0");
    Rat acc = 0;
    for (const auto& t : terms_) {
        Rat p = 1;
        std::int32_t e = t.first;
        Rat base = e >= 0 ? x : Rat(denominator(x), numerator(x));
        for (std::int32_t i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
        acc += Rat(t.second) * p;
    }
    return acc;
}

std::string LaurentS::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Int c = t.second;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int ac = abs(c);
        if (ac != 1 || t.first == 0) os << ac.str();
        if (t.first != 0) {
            if (ac != 1) os << "*";
            os << var;
            if (t.first != 1) os << "^" << t.first;
        }
    }
    return os.str();
}

// --------------------------------------------------------------- LaurentVZ

void LaurentVZ::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

LaurentVZ LaurentVZ::from_terms(std::vector<Term> t) {
    LaurentVZ p;
    p.terms_ = std::move(t);
    p.normalize();
    return p;
}

LaurentVZ LaurentVZ::delta() {
    LaurentVZ d;
    d.terms_.push_back({Exp{-1, -1}, 1});
    d.terms_.push_back({Exp{1, -1}, -1});
    return d;
}

Int LaurentVZ::coeff(std::int32_t a, std::int32_t b) const {
    Exp e{a, b};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& v) { return t.first < v; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

LaurentVZ& LaurentVZ::operator+=(const LaurentVZ& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == terms_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            Int c = i->second + j->second;
            if (c != 0) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentVZ& LaurentVZ::operator-=(const LaurentVZ& o) { return *this += o.operator-(); }

LaurentVZ LaurentVZ::operator-() const {
    LaurentVZ r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentVZ LaurentVZ::operator*(const LaurentVZ& o) const {
    // schoolbook with merge; operand sizes stay modest in practice
    LaurentVZ r;
    const LaurentVZ& big = terms_.size() >= o.terms_.size() ? *this : o;
    const LaurentVZ& small = terms_.size() >= o.terms_.size() ? o : *this;
    for (const auto& t : small.terms_) r += big.shifted(t.first.a, t.first.b).scaled(t.second);
    return r;
}

LaurentVZ LaurentVZ::shifted(std::int32_t da, std::int32_t db) const {
    LaurentVZ r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.emplace_back(Exp{checked_exp(std::int64_t(t.first.a) + da),
                                  checked_exp(std::int64_t(t.first.b) + db)},
                              t.second);
    return r;
}

LaurentVZ LaurentVZ::scaled(const Int& c) const {
    if (c == 0) return {};
    LaurentVZ r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
    return r;
}

LaurentVZ LaurentVZ::pow(unsigned k) const {
    LaurentVZ acc = one(), base = *this;
    while (k) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

std::int32_t LaurentVZ::min_z_exp() const {
    std::int32_t m = INT32_MAX;
    for (const auto& t : terms_) m = std::min(m, t.first.b);
    return m;
}

std::int32_t LaurentVZ::max_z_exp() const {
    std::int32_t m = INT32_MIN;
    for (const auto& t : terms_) m = std::max(m, t.first.b);
    return m;
}

LaurentS LaurentVZ::substitute_v_power(int k) const {
    if (is_zero()) return {};
    std::int32_t mb = std::min<std::int32_t>(0, min_z_exp());
    // multiply through by z^-mb, substitute, divide back by (s - s^-1)^-mb
    LaurentS zsub = LaurentS::from_terms({{-1, -1}, {1, 1}});  // s - s^-1
    LaurentS num;
    std::map<std::int32_t, LaurentS> zpow;  // cache of zsub^j
    zpow[0] = LaurentS(1);
    std::function<const LaurentS&(std::int32_t)> zp =
        [&](std::int32_t j) -> const LaurentS& {
        auto it = zpow.find(j);
        if (it != zpow.end()) return it->second;
        const LaurentS& prev = zp(j - 1);
        return zpow.emplace(j, prev * zsub).first->second;
    };
    for (const auto& t : terms_) {
        std::int32_t j = t.first.b - mb;
        LaurentS part = zp(j).shifted(checked_exp(std::int64_t(k) * t.first.a)).scaled(t.second);
        num += part;
    }
    if (mb == 0) return num;
    return num.divided_by(zp(-mb));
}

LaurentS LaurentVZ::z_coefficient(std::int32_t b) const {
    std::vector<LaurentS::Term> out;
    for (const auto& t : terms_)
        if (t.first.b == b) out.emplace_back(t.first.a, t.second);
    return LaurentS::from_terms(std::move(out));
}

LaurentVZ LaurentVZ::v_inverted() const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& x : terms_)
        t.emplace_back(Exp{checked_exp(-std::int64_t(x.first.a)), x.first.b}, x.second);
    return from_terms(std::move(t));
}

std::string LaurentVZ::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Int c = t.second;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int ac = abs(c);
        bool shown = (ac != 1 || (t.first.a == 0 && t.first.b == 0));
        if (shown) os << ac.str();
        auto var = [&](const char* name, std::int32_t e) {
            if (e == 0) return;
            if (shown) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            shown = true;
        };
        var("v", t.first.a);
        var("z", t.first.b);
    }
    return os.str();
}

}  // namespace skein
