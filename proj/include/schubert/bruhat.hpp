#pragma once

#include <algorithm>
#include <cstddef>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "schubert/coroot.hpp"
#include "schubert/errors.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/root_system.hpp"
#include "schubert/series.hpp"

namespace schubert {

using Coords = std::vector<long long>;

constexpr long long kDefaultMemberCap = 2'000'000;
constexpr long long kDefaultOracleCap = 64;

// Per-root summand of the quotient length: -m for m <= 0, m - 1 above.
inline long long excess(long long m) { return m <= 0 ? -m : m - 1; }

// Quotient length straight from the excess sum. CorootElement::length_s
// computes the same number as full length minus inversion count; the two
// are cross-checked in the tests.
inline long long quotient_length(const RootSystem& rs, const Coords& a) {
    long long s = 0;
    for (const Root& r : rs.roots()) s = checked_add(s, excess(rs.eval(r, a)));
    return s;
}

// All elements covered by lam in the containment order: reflections that
// drop the quotient length by exactly one. Every reflection wall within
// the window |2k - beta(lam)| <= scale * (length + root count) is tried;
// scale 1 is complete, larger scales exist for the stability cross-check.
inline std::vector<CorootElement> covers(const CorootElement& lam, long long window_scale = 1) {
    const RootSystem& rs = *lam.system();
    const auto& table = rs.reflection_table();
    const int R = rs.root_count();

    std::vector<long long> v(static_cast<std::size_t>(R));
    long long L = 0;
    for (int i = 0; i < R; ++i) {
        v[static_cast<std::size_t>(i)] = lam.eval_index(i);
        L = checked_add(L, excess(v[static_cast<std::size_t>(i)]));
    }

    const long long W = checked_mul(window_scale, checked_add(L, R));
    std::set<Coords> found;
    for (int b = 0; b < R; ++b) {
        const long long vb = v[static_cast<std::size_t>(b)];
        const auto& moved = table[static_cast<std::size_t>(b)];
        // ceil((vb - W) / 2) .. floor((vb + W) / 2)
        long long kmin = vb - W;
        kmin = kmin >= 0 ? (kmin + 1) / 2 : -((-kmin) / 2);
        long long kmax = vb + W;
        kmax = kmax >= 0 ? kmax / 2 : -((-kmax + 1) / 2);
        for (long long k = kmin; k <= kmax; ++k) {
            long long delta = 0;
            const long long shift = k - vb;
            for (const auto& [a, c] : moved) {
                long long u = v[static_cast<std::size_t>(a)];
                delta += excess(u + c * shift) - excess(u);
            }
            if (delta != -1) continue;
            const Root& beta = rs.root(b);
            Coords mu = lam.coords();
            for (int j = 0; j < rs.rank(); ++j) {
                mu[static_cast<std::size_t>(j)] =
                    checked_add(mu[static_cast<std::size_t>(j)],
                                checked_mul(beta.pair_row[static_cast<std::size_t>(j)], shift));
            }
            found.insert(std::move(mu));
        }
    }

    std::vector<CorootElement> out;
    out.reserve(found.size());
    for (const Coords& c : found) out.push_back(CorootElement::unchecked(lam.system(), c));
    return out;
}

// The full lower set of one element, with its cover relations and level
// counts. members is sorted by (quotient length, coordinates).
struct OrderIdeal {
    CorootElement top;
    std::vector<Coords> members;
    std::vector<long long> lengths;               // aligned with members
    std::vector<std::vector<int>> cover_edges;    // member -> indices it covers
    std::vector<long long> level_counts;

    IntPolynomial poincare() const { return IntPolynomial(level_counts); }

    long long size() const { return static_cast<long long>(members.size()); }

    bool contains(long long len, const Coords& c) const {
        std::size_t lo = 0, hi = members.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (lengths[mid] < len || (lengths[mid] == len && members[mid] < c)) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        return lo < members.size() && lengths[lo] == len && members[lo] == c;
    }
};

// Shared store for cover lists and whole ideals, keyed by the system and
// the coordinates. Ideals are kept LRU-bounded; cover lists are cheap and
// plentiful, so that side is just size-capped.
class IdealCache {
public:
    static IdealCache& global() {
        static IdealCache c;
        return c;
    }

    using Key = std::tuple<char, int, Coords>;

    static Key key_of(const CorootElement& e) {
        return {e.system()->type_char(), e.system()->rank(), e.coords()};
    }

    const std::vector<Coords>& covers_of(const CorootElement& e) {
        Key k = key_of(e);
        std::lock_guard<std::mutex> lock(mu_);
        auto it = covers_.find(k);
        if (it != covers_.end()) return it->second;
        if (covers_.size() >= kCoversCap) covers_.clear();
        std::vector<Coords> lists;
        for (const CorootElement& c : covers(e)) lists.push_back(c.coords());
        return covers_.emplace(std::move(k), std::move(lists)).first->second;
    }

    std::shared_ptr<const OrderIdeal> ideal(const CorootElement& top, long long member_cap) {
        // the cap describes the result, not the work: a cached ideal that is
        // larger than the caller allows still counts as exceeding it
        auto admit = [member_cap](const std::shared_ptr<const OrderIdeal>& p) {
            if (p->size() > member_cap) {
                throw ResourceLimit("ideal exceeded the member cap of " + std::to_string(member_cap));
            }
            return p;
        };
        Key k = key_of(top);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = ideals_.find(k);
            if (it != ideals_.end()) {
                lru_.splice(lru_.begin(), lru_, it->second.second);
                return admit(it->second.first);
            }
        }
        auto built = std::make_shared<OrderIdeal>(build_ideal(top, member_cap));
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ideals_.find(k);
        if (it != ideals_.end()) return admit(it->second.first);
        lru_.push_front(k);
        ideals_.emplace(k, std::make_pair(built, lru_.begin()));
        while (ideals_.size() > kIdealCap) {
            ideals_.erase(lru_.back());
            lru_.pop_back();
        }
        return built;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        covers_.clear();
        ideals_.clear();
        lru_.clear();
    }

private:
    OrderIdeal build_ideal(const CorootElement& top, long long member_cap) {
        const auto& rs_ptr = top.system();
        std::set<Coords> visited;
        std::queue<Coords> work;
        visited.insert(top.coords());
        work.push(top.coords());
        while (!work.empty()) {
            Coords cur = std::move(work.front());
            work.pop();
            const auto& down = covers_of(CorootElement::unchecked(rs_ptr, cur));
            for (const Coords& c : down) {
                if (visited.insert(c).second) {
                    if (static_cast<long long>(visited.size()) > member_cap) {
                        throw ResourceLimit("ideal exceeded the member cap of " + std::to_string(member_cap));
                    }
                    work.push(c);
                }
            }
        }

        OrderIdeal ideal{CorootElement(top), {}, {}, {}, {}};
        std::vector<std::pair<long long, Coords>> rows;
        rows.reserve(visited.size());
        for (const Coords& c : visited) {
            rows.emplace_back(quotient_length(*rs_ptr, c), c);
        }
        std::sort(rows.begin(), rows.end());
        std::map<Coords, int> index;
        long long top_len = rows.back().first;
        ideal.level_counts.assign(static_cast<std::size_t>(top_len) + 1, 0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            ideal.members.push_back(rows[i].second);
            ideal.lengths.push_back(rows[i].first);
            index.emplace(rows[i].second, static_cast<int>(i));
            ++ideal.level_counts[static_cast<std::size_t>(rows[i].first)];
        }
        ideal.cover_edges.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& down = covers_of(CorootElement::unchecked(rs_ptr, ideal.members[i]));
            for (const Coords& c : down) {
                auto it = index.find(c);
                if (it == index.end()) throw Error("cover fell outside its own ideal");
                ideal.cover_edges[i].push_back(it->second);
            }
            std::sort(ideal.cover_edges[i].begin(), ideal.cover_edges[i].end());
        }
        return ideal;
    }

    static constexpr std::size_t kIdealCap = 4096;
    static constexpr std::size_t kCoversCap = 4'000'000;

    std::mutex mu_;
    std::map<Key, std::vector<Coords>> covers_;
    std::map<Key, std::pair<std::shared_ptr<const OrderIdeal>, std::list<Key>::iterator>> ideals_;
    std::list<Key> lru_;
};

inline std::shared_ptr<const OrderIdeal> order_ideal(const CorootElement& top,
                                                     long long member_cap = kDefaultMemberCap) {
    return IdealCache::global().ideal(top, member_cap);
}

inline IntPolynomial poincare_polynomial(const CorootElement& lam,
                                         long long member_cap = kDefaultMemberCap) {
    return order_ideal(lam, member_cap)->poincare();
}

inline bool is_palindromic(const CorootElement& lam, long long member_cap = kDefaultMemberCap) {
    return poincare_polynomial(lam, member_cap).is_palindromic();
}

// Containment order on the quotient, decided through the upper element's
// ideal.
inline bool bruhat_leq(const CorootElement& mu, const CorootElement& lam,
                       long long member_cap = kDefaultMemberCap) {
    mu.require_same_system(lam);
    long long lm = mu.length_s();
    long long ll = lam.length_s();
    if (lm > ll) return false;
    if (lm == ll) return mu.coords() == lam.coords();
    return order_ideal(lam, member_cap)->contains(lm, mu.coords());
}

// Independent order oracle: walk the canonical word of lam from the left,
// firing each letter that is a descent of the running element. mu lies
// below lam exactly when the walk ends at the origin.
inline bool subword_leq(const CorootElement& mu, const CorootElement& lam,
                        long long word_cap = kDefaultOracleCap) {
    mu.require_same_system(lam);
    if (lam.length_s() > word_cap) {
        throw OracleCapExceeded("oracle cap " + std::to_string(word_cap) + " exceeded");
    }
    ReducedWord w = lam.word_for();
    CorootElement cur = mu;
    for (int letter : w.letters) {
        if (cur.label(letter) < 0) cur = cur.fire(letter);
    }
    return cur.is_origin();
}

// Elements of quotient length 0..max_len, one bucket per length, each
// bucket sorted by coordinates.
inline std::vector<std::vector<CorootElement>> enumerate_levels(std::shared_ptr<const RootSystem> rs,
                                                                int max_len,
                                                                long long member_cap = kDefaultMemberCap) {
    if (max_len < 0) throw Error("negative enumeration bound");
    std::vector<std::vector<CorootElement>> levels(static_cast<std::size_t>(max_len) + 1);
    std::set<Coords> seen;
    std::vector<CorootElement> frontier{CorootElement::origin(rs)};
    seen.insert(frontier.front().coords());
    long long total = 1;
    levels[0] = frontier;
    for (int len = 1; len <= max_len; ++len) {
        std::set<Coords> next;
        for (const CorootElement& e : frontier) {
            for (int node = 0; node <= rs->rank(); ++node) {
                if (e.label(node) <= 0) continue;
                Coords up = e.fire(node).coords();
                if (!seen.count(up)) next.insert(std::move(up));
            }
        }
        std::vector<CorootElement> bucket;
        for (const Coords& c : next) {
            seen.insert(c);
            bucket.push_back(CorootElement::unchecked(rs, c));
            if (++total > member_cap) {
                throw ResourceLimit("enumeration exceeded the member cap of " + std::to_string(member_cap));
            }
        }
        levels[static_cast<std::size_t>(len)] = std::move(bucket);
        frontier = levels[static_cast<std::size_t>(len)];
    }
    return levels;
}

// Necessary condition screen: a variety whose Poincare polynomial still
// has a coefficient above one too close to its top cannot be smooth. k is
// the largest degree with coefficient above one; the window is the fork
// level of the ambient series.
inline bool forks_too_soon(const CorootElement& lam, long long member_cap = kDefaultMemberCap) {
    IntPolynomial p = poincare_polynomial(lam, member_cap);
    int k = -1;
    for (long long i = p.degree(); i >= 0; --i) {
        if (p.coeff(static_cast<std::size_t>(i)) > 1) {
            k = static_cast<int>(i);
            break;
        }
    }
    if (k < 0) return false;
    ForkStats fs = fork_stats(*lam.system());
    long long gap = lam.length_s() - k;
    if (fs.infinite) return gap >= 0;
    return gap >= 0 && gap < fs.fork_level;
}

}  // namespace schubert
