#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "schubert/bruhat.hpp"
#include "schubert/coroot.hpp"
#include "schubert/errors.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/root_system.hpp"

namespace schubert {

// Multiplier of the next basis class when cupping with the hyperplane
// class and stepping up through the given node. Only defined at ascents.
inline long long chevalley_coeff(const CorootElement& lam, int node) {
    long long l = lam.label(node);
    if (l <= 0) throw NotAnAscent("node " + RootSystem::node_name(node) + " is not an ascent");
    return lam.system()->chevalley_constant(node) * l;
}

// A proper connected slice of the extended diagram through the affine
// node, its boundary, and the top element obtained by exhausting the
// upward moves supported on the slice.
struct CpoDescriptor {
    std::vector<int> subgraph_nodes;
    std::vector<int> boundary_nodes;
    CorootElement top;
    long long dim = 0;
};

namespace detail {

inline CorootElement climb_within(const RootSystem& rs, const std::vector<int>& nodes) {
    auto rsp = RootSystem::build(rs.type_label(), rs.rank());
    CorootElement cur = CorootElement::origin(rsp);
    int guard = rs.root_count() + rs.rank() + 2;
    for (int step = 0; step <= guard; ++step) {
        int pick = -1;
        for (int node : nodes) {
            if (cur.label(node) > 0) {
                pick = node;
                break;
            }
        }
        if (pick < 0) return cur;
        cur = cur.fire(pick);
    }
    throw Error("slice climb did not terminate");
}

}  // namespace detail

// All proper connected subdiagrams containing the affine node, each with
// its climbed top. Results are checked two ways: the boundary must be the
// positive support of the top, and the root count pinned by the boundary
// must equal the quotient length of the top.
inline std::vector<CpoDescriptor> enumerate_cpos(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<CpoDescriptor> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> nodes{0};
        for (int v = 1; v <= n; ++v) {
            if (mask & (1u << (v - 1))) nodes.push_back(v);
        }
        if (static_cast<int>(nodes.size()) == n + 1) continue;
        if (rs.components(nodes).size() != 1) continue;

        std::set<int> inside(nodes.begin(), nodes.end());
        std::set<int> boundary;
        for (int node : nodes) {
            for (int nb : rs.neighbors(node)) {
                if (!inside.count(nb)) boundary.insert(nb);
            }
        }

        CpoDescriptor d{nodes, std::vector<int>(boundary.begin(), boundary.end()),
                        detail::climb_within(rs, nodes), 0};

        std::set<int> positive;
        for (int node = 0; node <= n; ++node) {
            if (d.top.label(node) > 0) positive.insert(node);
        }
        if (positive != boundary) throw Error("slice top support mismatch");

        const std::vector<long long>& marks = rs.marks();
        for (int idx = 0; idx < rs.root_count(); ++idx) {
            const Root& r = rs.root(idx);
            bool pinned = true;
            for (int b : boundary) {
                if (r.coeffs[static_cast<std::size_t>(b - 1)] != marks[static_cast<std::size_t>(b - 1)]) {
                    pinned = false;
                    break;
                }
            }
            if (pinned) ++d.dim;
        }
        if (d.dim != d.top.length_s()) throw Error("slice dimension mismatch");
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const CpoDescriptor& a, const CpoDescriptor& b) {
        return std::tie(a.dim, a.top.coords()) < std::tie(b.dim, b.top.coords());
    });
    return out;
}

inline bool is_cpo(const CorootElement& lam) {
    if (lam.is_origin()) return true;
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::set<std::vector<long long>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(lam.system()->type_char(), lam.system()->rank());
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::set<std::vector<long long>> tops;
        for (const CpoDescriptor& d : enumerate_cpos(*lam.system())) tops.insert(d.top.coords());
        it = cache.emplace(key, std::move(tops)).first;
    }
    return it->second.count(lam.coords()) > 0;
}

// A totally ordered column in the poset, described by the firing sequence
// that builds it and the cup coefficients collected along the way.
struct ChainDescriptor {
    ReducedWord word;
    CorootElement top;
    std::vector<long long> cup;
    std::vector<long long> constants;

    bool index_symmetric() const {
        std::size_t m = cup.size();
        for (std::size_t i = 0; i < m / 2; ++i) {
            if (cup[i] != cup[m - 1 - i]) return false;
        }
        return true;
    }
};

inline bool is_chain(const CorootElement& lam, std::size_t member_cap = kDefaultMemberCap) {
    return poincare_polynomial(lam, member_cap).all_ones();
}

inline bool chain_pd(const ChainDescriptor& d) { return d.index_symmetric(); }

namespace detail {

inline int run_cap(const Bond& b) {
    if (b.unbounded) return -1;  // no cap
    switch (b.multiplicity) {
        case 1: return 2;
        case 2: return 3;
        case 3: return 5;
        default: throw Error("unexpected bond multiplicity");
    }
}

struct ChainSearch {
    const RootSystem& rs;
    int max_len;
    std::map<std::vector<long long>, ChainDescriptor> best;

    void record(const std::vector<int>& path, const CorootElement& top,
                const std::vector<long long>& cup, const std::vector<long long>& consts) {
        if (best.count(top.coords())) return;
        ChainDescriptor d{ReducedWord{{path.rbegin(), path.rend()}}, top, cup, consts};
        best.emplace(top.coords(), std::move(d));
    }

    void extend(std::vector<int>& path, const CorootElement& cur, int runlen,
                std::vector<long long>& cup, std::vector<long long>& consts) {
        if (static_cast<int>(path.size()) >= max_len) return;
        int last = path.back();
        for (int nb = 0; nb <= rs.rank(); ++nb) {
            const Bond& b = rs.bond(last, nb);
            if (b.multiplicity == 0 && !b.unbounded) continue;
            int next_run = (path.size() >= 2 && nb == path[path.size() - 2]) ? runlen + 1 : 2;
            int cap = run_cap(b);
            if (cap > 0 && next_run > cap) continue;
            if (cur.label(nb) <= 0) continue;
            cup.push_back(chevalley_coeff(cur, nb));
            consts.push_back(rs.chevalley_constant(nb));
            path.push_back(nb);
            CorootElement fired = cur.fire(nb);
            record(path, fired, cup, consts);
            extend(path, fired, next_run, cup, consts);
            path.pop_back();
            cup.pop_back();
            consts.pop_back();
        }
    }
};

}  // namespace detail

// Every totally ordered ideal reachable by an admissible firing sequence,
// up to the requested word length. Candidates are deduplicated by their
// top and filtered by the all-ones test on the actual ideal.
inline std::vector<ChainDescriptor> enumerate_chains(const RootSystem& rs, int max_len,
                                                     std::size_t member_cap = kDefaultMemberCap) {
    if (max_len < 1) return {};
    auto rsp = RootSystem::build(rs.type_label(), rs.rank());
    detail::ChainSearch search{rs, max_len, {}};
    CorootElement origin = CorootElement::origin(rsp);
    std::vector<int> path{0};
    std::vector<long long> cup{chevalley_coeff(origin, 0)};
    std::vector<long long> consts{rs.chevalley_constant(0)};
    CorootElement first = origin.fire(0);
    search.record(path, first, cup, consts);
    search.extend(path, first, 2, cup, consts);

    std::vector<ChainDescriptor> out;
    for (auto& [coords, d] : search.best) {
        if (is_chain(d.top, member_cap)) out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const ChainDescriptor& a, const ChainDescriptor& b) {
        return std::make_pair(a.top.length_s(), a.top.coords()) <
               std::make_pair(b.top.length_s(), b.top.coords());
    });
    return out;
}

// Quick necessary test for a self-dual ideal: either the bottom element,
// or exactly one strict descent, sitting at a long node with label -1.
inline bool pd_necessary(const CorootElement& lam) {
    if (lam.is_origin()) return true;
    int negatives = 0;
    int where = -1;
    for (int node = 0; node <= lam.system()->rank(); ++node) {
        if (lam.label(node) < 0) {
            ++negatives;
            where = node;
        }
    }
    return negatives == 1 && lam.label(where) == -1 && lam.system()->node_long(where);
}

// Elements whose ideals wind around the extended cycle of the first
// family. The index k decomposes as k = r(n+1) + i.
inline CorootElement spiral_lambda(const std::shared_ptr<const RootSystem>& rs, long long k,
                                   bool primed = false) {
    if (rs->type_label() != TypeLabel::A) throw WrongType("spiral elements live in the first family");
    if (k < 1) throw Error("spiral index must be positive");
    const int n = rs->rank();
    long long i = k % (n + 1);
    std::vector<long long> coords(static_cast<std::size_t>(n), 0);
    if (i >= 1) coords[static_cast<std::size_t>(i - 1)] = k + 1;
    if (i + 1 <= n) coords[static_cast<std::size_t>(i)] = -k;
    if (primed) {
        std::vector<long long> mirrored(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            mirrored[static_cast<std::size_t>(j - 1)] = coords[static_cast<std::size_t>(n - j)];
        }
        coords = std::move(mirrored);
    }
    return CorootElement(rs, coords);
}

inline bool is_spiral(const CorootElement& lam) {
    if (lam.system()->type_label() != TypeLabel::A) {
        throw WrongType("spiral elements live in the first family");
    }
    const int n = lam.system()->rank();
    std::vector<int> nonzero;
    for (int node = 0; node <= n; ++node) {
        if (lam.label(node) != 0) nonzero.push_back(node);
    }
    if (nonzero.size() != 2) return false;
    const Bond& b = lam.system()->bond(nonzero[0], nonzero[1]);
    if (b.multiplicity == 0 && !b.unbounded) return false;
    return lam.label(nonzero[0]) + lam.label(nonzero[1]) == 1;
}

enum class SchubertLabel { Cpo, Chain, Spiral, ExceptionalB3 };

inline std::string label_name(SchubertLabel l) {
    switch (l) {
        case SchubertLabel::Cpo: return "CPO";
        case SchubertLabel::Chain: return "Chain";
        case SchubertLabel::Spiral: return "Spiral";
        case SchubertLabel::ExceptionalB3: return "ExceptionalB3";
    }
    throw Error("unreachable");
}

struct ClassificationVerdict {
    std::vector<SchubertLabel> labels;
    bool palindromic = false;
    bool smooth = false;

    bool has(SchubertLabel l) const {
        return std::find(labels.begin(), labels.end(), l) != labels.end();
    }
};

inline ClassificationVerdict classify(const CorootElement& lam,
                                      std::size_t member_cap = kDefaultMemberCap) {
    ClassificationVerdict v;
    IntPolynomial poin = poincare_polynomial(lam, member_cap);
    if (is_cpo(lam)) v.labels.push_back(SchubertLabel::Cpo);
    if (poin.all_ones()) v.labels.push_back(SchubertLabel::Chain);
    if (lam.system()->type_label() == TypeLabel::A && is_spiral(lam)) {
        v.labels.push_back(SchubertLabel::Spiral);
    }
    if (lam.system()->type_label() == TypeLabel::B && lam.system()->rank() == 3 &&
        lam.coords() == std::vector<long long>{3, 0, -1}) {
        v.labels.push_back(SchubertLabel::ExceptionalB3);
    }
    v.palindromic = poin.is_palindromic();
    v.smooth = v.has(SchubertLabel::Cpo);
    return v;
}

inline bool i_minimal(const CorootElement& lam, const std::vector<int>& slice) {
    for (int node : slice) {
        if (node < 0 || node > lam.system()->rank()) throw Error("slice node out of range");
        if (lam.label(node) < 0) return false;
    }
    return true;
}

// The orbit generating function of the element under the slice: the
// stagnant nodes, the closed form for the orbit sizes, and its shift by
// the length of the minimal representative.
struct LeviData {
    std::vector<int> zero_nodes;
    IntPolynomial orbit_poly;
    IntPolynomial shifted_poly;
};

inline LeviData levi_data(const CorootElement& lam, std::vector<int> slice) {
    const RootSystem& rs = *lam.system();
    std::sort(slice.begin(), slice.end());
    slice.erase(std::unique(slice.begin(), slice.end()), slice.end());
    for (int node : slice) {
        if (node < 0 || node > rs.rank()) throw Error("slice node out of range");
    }
    if (static_cast<int>(slice.size()) > rs.rank()) throw Error("slice must be proper");
    if (!i_minimal(lam, slice)) throw NotIMinimal("element is not minimal in its slice orbit");

    LeviData out;
    for (int node : slice) {
        if (lam.label(node) == 0) out.zero_nodes.push_back(node);
    }

    IntPolynomial numerator = IntPolynomial::one();
    for (const auto& comp : rs.components(slice)) {
        for (long long d : RootSystem::finite_degrees(rs.classify_component(comp))) {
            numerator = numerator * IntPolynomial::one_minus_power(d);
        }
    }
    IntPolynomial m = numerator;
    std::size_t moving = slice.size() - out.zero_nodes.size();
    for (std::size_t i = 0; i < moving; ++i) m = m.divide_exact(IntPolynomial::one_minus_power(1));
    for (const auto& comp : rs.components(out.zero_nodes)) {
        for (long long d : RootSystem::finite_degrees(rs.classify_component(comp))) {
            m = m.divide_exact(IntPolynomial::one_minus_power(d));
        }
    }
    out.orbit_poly = m;
    out.shifted_poly = IntPolynomial::monomial(static_cast<std::size_t>(lam.length_s())) * m;
    return out;
}

}  // namespace schubert
