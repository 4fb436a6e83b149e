#pragma once

// Farey fractions of order Q, cut sets [0, alpha) and (1 - alpha, 1], and exact
// aggregate statistics over them.

#include "dedekind_lab/contfrac.hpp"
#include "dedekind_lab/core_arith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace dlab::farey {

enum class Side { lower, upper_complement };

enum class Statistic { dedekind_s, ell, L, sigma_pm };

inline std::string_view to_string(Statistic s) {
    switch (s) {
        case Statistic::dedekind_s: return "s";
        case Statistic::ell: return "ell";
        case Statistic::L: return "L";
        case Statistic::sigma_pm: return "sigma";
    }
    return "?";
}

inline Statistic parse_statistic(std::string_view text) {
    if (text == "s" || text == "dedekind_s") return Statistic::dedekind_s;
    if (text == "ell") return Statistic::ell;
    if (text == "L") return Statistic::L;
    if (text == "sigma" || text == "sigma_pm") return Statistic::sigma_pm;
    throw std::invalid_argument("unknown statistic '" + std::string(text) + "'");
}

/// Lower side is F(Q) n [0, alpha); upper complement is F(Q) n (1 - alpha, 1].
struct FareyCutSpec {
    i64 Q = 1;
    ReducedFraction alpha{1, 1};
    Side side = Side::lower;
};

/// A sub-interval of [0, 1] with independently open or closed ends.
struct FareyRange {
    i64 Q = 1;
    ReducedFraction lo{0, 1};
    ReducedFraction hi{1, 1};
    bool lo_open = false;
    bool hi_open = false;

    bool contains(ReducedFraction x) const noexcept {
        bool above = lo_open ? (x > lo) : (x >= lo);
        bool below = hi_open ? (x < hi) : (x <= hi);
        return above && below;
    }
};

inline FareyRange full_range(i64 Q) { return FareyRange{Q, {0, 1}, {1, 1}, false, false}; }

inline FareyRange to_range(const FareyCutSpec& spec) {
    if (spec.alpha.num() <= 0 || spec.alpha > ReducedFraction(1, 1))
        throw std::domain_error("cut " + spec.alpha.str() + " is outside (0, 1]");
    if (spec.side == Side::lower) return FareyRange{spec.Q, {0, 1}, spec.alpha, false, true};
    return FareyRange{spec.Q, spec.alpha.complement(), {1, 1}, true, false};
}

/// Smallest element of F(Q) that is >= bound (or > bound when strict), if any.
inline std::optional<ReducedFraction> first_at_or_above(i64 Q, ReducedFraction bound, bool strict) {
    std::optional<ReducedFraction> best;
    for (i64 d = 1; d <= Q; ++d) {
        // least n with n/d >= bound (or > bound)
        i128 scaled = static_cast<i128>(bound.num()) * d;
        i64 n = static_cast<i64>(scaled / bound.den());
        bool exact = (scaled % bound.den()) == 0;
        if (strict || !exact) n += 1;
        if (n < 0) n = 0;
        if (n > d) continue;
        ReducedFraction cand(n, d);
        if (!best || cand < *best) best = cand;
    }
    return best;
}

/// Successor of x in F(Q), or nullopt when x = 1.
inline std::optional<ReducedFraction> farey_successor(i64 Q, ReducedFraction x) {
    const i64 c = x.num(), d = x.den();
    if (c == d) return std::nullopt;
    if (d == 1) return ReducedFraction::exact(1, Q);
    // successor u/y satisfies u d - c y = 1 with y maximal below Q
    i64 r = d - mod_inverse(c, d);
    i64 y = r + d * ((Q - r) / d);
    i64 u = (1 + c * y) / d;
    return ReducedFraction::exact(u, y);
}

/// Streams F(Q) n range in increasing order with O(1) state, via the
/// two-neighbour recurrence  next = (k c - a)/(k d - b),  k = floor((Q + b)/d).
class FareyCursor {
public:
    explicit FareyCursor(const FareyRange& range) : range_(range) {
        if (range.Q < 1) throw std::domain_error("Farey order must be positive");
        auto first = first_at_or_above(range.Q, range.lo, range.lo_open);
        if (!first || !range.contains(*first)) {
            done_ = true;
            return;
        }
        a_ = first->num();
        b_ = first->den();
        auto succ = farey_successor(range.Q, *first);
        if (succ) {
            c_ = succ->num();
            d_ = succ->den();
        } else {
            c_ = -1;  // no successor: stream ends after the first element
        }
    }

    std::optional<ReducedFraction> next() {
        if (done_) return std::nullopt;
        ReducedFraction out = ReducedFraction::exact(a_, b_);
        if (c_ < 0) {
            done_ = true;
            return out;
        }
        if (!range_.contains(ReducedFraction::exact(c_, d_))) {
            done_ = true;
            return out;
        }
        if (c_ == d_) {
            a_ = c_;
            b_ = d_;
            c_ = -1;
            return out;
        }
        i64 k = (range_.Q + b_) / d_;
        i64 e = k * c_ - a_, f = k * d_ - b_;
        a_ = c_;
        b_ = d_;
        c_ = e;
        d_ = f;
        return out;
    }

    /// Visits every remaining element without constructing optionals.
    template <typename Visitor>
    void for_each(Visitor&& visit) {
        if (done_) return;
        const i64 Q = range_.Q;
        const i128 hi_n = range_.hi.num(), hi_d = range_.hi.den();
        const bool hi_open = range_.hi_open;
        auto inside = [&](i64 n, i64 d) {
            i128 lhs = static_cast<i128>(n) * hi_d, rhs = hi_n * d;
            return hi_open ? lhs < rhs : lhs <= rhs;
        };
        for (;;) {
            visit(a_, b_);
            if (c_ < 0 || !inside(c_, d_)) break;
            if (c_ == d_) {
                visit(c_, d_);
                break;
            }
            i64 k = (Q + b_) / d_;
            i64 e = k * c_ - a_, f = k * d_ - b_;
            a_ = c_;
            b_ = d_;
            c_ = e;
            d_ = f;
        }
        done_ = true;
    }

private:
    FareyRange range_;
    i64 a_ = 0, b_ = 1, c_ = -1, d_ = 1;
    bool done_ = false;
};

inline std::vector<ReducedFraction> farey_enumerate(const FareyRange& range) {
    std::vector<ReducedFraction> out;
    FareyCursor cursor(range);
    while (auto x = cursor.next()) out.push_back(*x);
    return out;
}

inline std::vector<ReducedFraction> farey_enumerate(const FareyCutSpec& spec) {
    return farey_enumerate(to_range(spec));
}

/// Splits a range into `parts` consecutive pieces at exact rational points.
inline std::vector<FareyRange> split_range(const FareyRange& range, int parts) {
    if (parts < 1) throw std::domain_error("split_range: parts must be positive");
    std::vector<FareyRange> out;
    const i64 lo_n = range.lo.num(), lo_d = range.lo.den();
    const i64 hi_n = range.hi.num(), hi_d = range.hi.den();
    auto point = [&](i64 k) {
        // lo + (hi - lo) k / parts
        i128 num = static_cast<i128>(lo_n) * hi_d * parts + (static_cast<i128>(hi_n) * lo_d - static_cast<i128>(lo_n) * hi_d) * k;
        i128 den = static_cast<i128>(lo_d) * hi_d * parts;
        return ReducedFraction(static_cast<i64>(num), static_cast<i64>(den));
    };
    for (int k = 0; k < parts; ++k) {
        FareyRange piece = range;
        if (k > 0) {
            piece.lo = point(k);
            piece.lo_open = false;
        }
        if (k + 1 < parts) {
            piece.hi = point(k + 1);
            piece.hi_open = true;
        }
        out.push_back(piece);
    }
    return out;
}

/// Exact total of a statistic over a range, plus the number of fractions visited.
struct RangeTotal {
    ExactRational total = 0;
    i64 cut_count = 0;
};

namespace detail {

struct WorkerTotal {
    ExactCounter integer_total;
    std::vector<i128> scaled_s;  // 24 w s(x) summed per denominator w
    i64 visited = 0;
};

inline void accumulate(const FareyRange& range, Statistic stat, WorkerTotal& out) {
    FareyCursor cursor(range);
    switch (stat) {
        case Statistic::dedekind_s:
            out.scaled_s.assign(static_cast<std::size_t>(range.Q) + 1, 0);
            cursor.for_each([&](i64 v, i64 w) {
                ++out.visited;
                if (v != w) out.scaled_s[static_cast<std::size_t>(w)] += cf::hickerson_scaled(v, w);
            });
            break;
        case Statistic::ell:
            cursor.for_each([&](i64 v, i64 w) {
                ++out.visited;
                out.integer_total += cf::ell_length_raw(v, w);
            });
            break;
        case Statistic::L:
        case Statistic::sigma_pm:
            cursor.for_each([&](i64 v, i64 w) {
                ++out.visited;
                if (v == w) return;  // L(1) and sigma(1) are taken as 0
                auto p = cf::cf_profile(v, w);
                out.integer_total += (stat == Statistic::L) ? p.L : p.sigma_odd - p.sigma_even;
            });
            break;
    }
}

}  // namespace detail

/// Exact sum of `stat` over F(Q) n range. Work is split into `workers` exact
/// sub-ranges; the merged result does not depend on the worker count.
/// Conventions: every statistic vanishes at 0, and s, L, sigma vanish at 1.
inline RangeTotal aggregate_range(const FareyRange& range, Statistic stat, int workers = 1) {
    if (workers < 1) throw std::domain_error("worker count must be positive");
    auto pieces = split_range(range, workers);
    std::vector<detail::WorkerTotal> partial(pieces.size());
    if (workers == 1) {
        detail::accumulate(pieces[0], stat, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(pieces.size());
        for (std::size_t i = 0; i < pieces.size(); ++i)
            pool.emplace_back([&, i] { detail::accumulate(pieces[i], stat, partial[i]); });
    }
    RangeTotal result;
    if (stat == Statistic::dedekind_s) {
        std::vector<i128> merged(static_cast<std::size_t>(range.Q) + 1, 0);
        for (const auto& p : partial) {
            result.cut_count += p.visited;
            for (std::size_t w = 0; w < p.scaled_s.size(); ++w) merged[w] += p.scaled_s[w];
        }
        for (std::size_t w = 1; w < merged.size(); ++w) {
            if (merged[w] == 0) continue;
            ExactRational term(make_integer(merged[w]), make_integer(static_cast<i128>(24) * static_cast<i128>(w)));
            term.canonicalize();
            result.total += term;
        }
    } else {
        ExactCounter sum;
        for (const auto& p : partial) {
            result.cut_count += p.visited;
            sum += p.integer_total;
        }
        result.total = ExactRational(sum.value());
    }
    return result;
}

/// Empirical side of an average; prediction fields are filled by the asymptotics module.
struct AverageReport {
    i64 Q = 0;
    ReducedFraction alpha{1, 1};
    Side side = Side::lower;
    Statistic statistic = Statistic::ell;
    i64 count = 0;      // #F(Q) = 1 + sum_{q <= Q} phi(q)
    i64 cut_count = 0;  // number of fractions in the cut set
    ExactRational total = 0;
    double mean = 0.0;
    std::optional<double> predicted_main;
    std::optional<double> residual;
    std::optional<double> error_scale;
};

inline AverageReport aggregate(const FareyCutSpec& spec, Statistic stat, const SieveTables& sieve, int workers = 1) {
    if (spec.Q < 1) throw std::domain_error("aggregate: Q must be positive");
    if (sieve.limit() < spec.Q) throw std::domain_error("aggregate: sieve does not cover Q");
    AverageReport report;
    report.Q = spec.Q;
    report.alpha = spec.alpha;
    report.side = spec.side;
    report.statistic = stat;
    report.count = sieve.farey_count(spec.Q);
    RangeTotal t = aggregate_range(to_range(spec), stat, workers);
    report.cut_count = t.cut_count;
    report.total = t.total;
    report.mean = ExactRational(t.total / report.count).get_d();
    return report;
}

inline AverageReport aggregate(const FareyCutSpec& spec, Statistic stat, int workers = 1) {
    return aggregate(spec, stat, SieveTables(std::max<i64>(spec.Q, 1)), workers);
}

inline AverageReport complement_aggregate(i64 Q, ReducedFraction alpha, Statistic stat, const SieveTables& sieve,
                                          int workers = 1) {
    return aggregate(FareyCutSpec{Q, alpha, Side::upper_complement}, stat, sieve, workers);
}

inline AverageReport complement_aggregate(i64 Q, ReducedFraction alpha, Statistic stat, int workers = 1) {
    return complement_aggregate(Q, alpha, stat, SieveTables(std::max<i64>(Q, 1)), workers);
}

}  // namespace dlab::farey
