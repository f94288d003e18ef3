#include "skein/lmtable.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skein {

Int LMTable::entry(std::int32_t b, std::int32_t a) const {
    auto it = entries_.find({b, a});
    return it == entries_.end() ? Int(0) : it->second;
}

void LMTable::set(std::int32_t b, std::int32_t a, Int c) {
    if (c == 0)
        entries_.erase({b, a});
    else
        entries_[{b, a}] = std::move(c);
}

LMTable to_lm_table(const LaurentVZ& p) {
    LMTable t;
    for (const auto& term : p.terms()) {
        std::int64_t s = std::int64_t(term.first.a) + term.first.b;
        if (s % 2 != 0)
            throw std::domain_error("to_lm_table: term with odd total degree a+b");
        Int c = term.second;
        if (((s / 2) % 2 + 2) % 2 == 1) c = -c;
        t.set(term.first.b, term.first.a, std::move(c));
    }
    return t;
}

LaurentVZ from_lm_table(const LMTable& t) {
    std::vector<LaurentVZ::Term> terms;
    for (const auto& [key, c] : t.entries()) {
        auto [b, a] = key;
        Int coeff = c;
        std::int64_t s = std::int64_t(a) + b;
        if (((s / 2) % 2 + 2) % 2 == 1) coeff = -coeff;
        terms.push_back({LaurentVZ::Exp{a, b}, std::move(coeff)});
    }
    return LaurentVZ::from_terms(std::move(terms));
}

std::string LMTable::render(const std::string& title) const {
    std::set<std::int32_t> rows, cols;
    for (const auto& [key, c] : entries_) {
        rows.insert(key.first);
        cols.insert(key.second);
    }
    auto label = [](const char* var, std::int32_t e) -> std::string {
        if (e == 0) return "1";
        std::ostringstream os;
        os << var;
        if (e != 1) os << "^" << e;
        return os.str();
    };
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{title};
    for (auto a : cols) head.push_back(label("l", a));
    cells.push_back(head);
    for (auto b : rows) {
        std::vector<std::string> row{label("m", b)};
        for (auto a : cols) {
            Int c = entry(b, a);
            row.push_back(c == 0 ? "" : c.str());
        }
        cells.push_back(row);
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << std::string(width[i] - row[i].size(), ' ') << row[i];
            os << (i + 1 == row.size() ? "\n" : "  ");
        }
    }
    return os.str();
}

}  // namespace skein
