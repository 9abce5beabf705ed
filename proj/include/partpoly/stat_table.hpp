#ifndef PARTPOLY_STAT_TABLE_HPP
#define PARTPOLY_STAT_TABLE_HPP

#include <map>
#include <ostream>
#include <span>
#include <string>

#include "partpoly/laurent.hpp"

namespace partpoly {

enum class Statistic {
    Rank,
    Crank,
    SptCrank,
    ORank,
    UnimodalRank,
    StronglyUnimodalRank,
    TCoreCrank,  // param = t
    THook,       // param = t
    WagnerCrank,
    PartsCount,
};

inline const char* statistic_name(Statistic s) {
    switch (s) {
        case Statistic::Rank: return "rank";
        case Statistic::Crank: return "crank";
        case Statistic::SptCrank: return "spt-crank";
        case Statistic::ORank: return "o-rank";
        case Statistic::UnimodalRank: return "unimodal";
        case Statistic::StronglyUnimodalRank: return "strongly-unimodal";
        case Statistic::TCoreCrank: return "tcore";
        case Statistic::THook: return "thook";
        case Statistic::WagnerCrank: return "wagner";
        case Statistic::PartsCount: return "parts";
    }
    return "?";
}

/// Exact distribution of one statistic at one n: m -> count. Zero counts are
/// never stored, so equality is structural.
struct StatTable {
    Statistic statistic{};
    int param = 0;  // t for TCoreCrank / THook, else 0
    long n = 0;
    std::map<long, Integer> counts;

    void add(long m, const Integer& v) {
        if (v == 0) return;
        auto it = counts.find(m);
        if (it == counts.end()) {
            counts.emplace(m, v);
        } else {
            it->second += v;
            if (it->second == 0) counts.erase(it);
        }
    }

    Integer total() const {
        Integer s = 0;
        for (const auto& [m, c] : counts) s += c;
        return s;
    }

    const Integer& count(long m) const {
        static const Integer zero = 0;
        auto it = counts.find(m);
        return it == counts.end() ? zero : it->second;
    }

    LaurentPoly to_poly() const {
        LaurentPoly f;
        for (const auto& [m, c] : counts) f += LaurentPoly::monomial(c, m);
        return f;
    }

    bool operator==(const StatTable& o) const { return n == o.n && counts == o.counts; }
};

inline StatTable table_from_row(Statistic stat, int param, long n, const LaurentPoly& row) {
    StatTable t{stat, param, n, {}};
    for (long e = row.min_exp(); e <= row.max_exp(); ++e) t.add(e, row.coeff(e));
    return t;
}

// CSV emission shared by the expanders and the oracles: exact decimal
// integers, one row per nonzero count, header required.
inline void write_csv_header(std::ostream& os) { os << "n,m,count\n"; }

inline void write_csv_rows(std::ostream& os, const StatTable& t) {
    for (const auto& [m, c] : t.counts) os << t.n << "," << m << "," << c.str() << "\n";
}

inline void write_csv(std::ostream& os, std::span<const StatTable> tables) {
    write_csv_header(os);
    for (const auto& t : tables) write_csv_rows(os, t);
}

inline void write_csv(std::ostream& os, std::span<const LaurentPoly> rows, long first_n = 0) {
    write_csv_header(os);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const LaurentPoly& f = rows[i];
        long n = first_n + static_cast<long>(i);
        for (long e = f.min_exp(); e <= f.max_exp(); ++e)
            if (f.coeff(e) != 0) os << n << "," << e << "," << f.coeff(e).str() << "\n";
    }
}

}  // namespace partpoly

#endif
