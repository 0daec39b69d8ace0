#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "schubert/coroot.hpp"
#include "schubert/errors.hpp"
#include "schubert/root_system.hpp"

namespace schubert {

// The orbit structure of the reflection in beta on the other positive
// roots: fixed roots, pairs swapped among the positives, and pairs whose
// sum is a multiple of beta (swapped up to sign). For an upward pair,
// lower is the member with negative value on the coroot of beta and
// upper = lower + k * beta. For a sum pair, lower + upper = k * beta and
// both members take value k on the coroot of beta; when k >= 2 lower is
// the member with beta - lower again a positive root.
struct RootPair {
    int lower = -1;
    int upper = -1;
    long long k = 0;
    bool long_members = false;
};

struct PairPartition {
    int beta = -1;
    std::vector<int> null_roots;
    std::vector<RootPair> positive_pairs;
    std::vector<RootPair> negative_pairs;
};

inline PairPartition make_pair_partition(const RootSystem& rs, int beta_idx) {
    if (beta_idx < 0 || beta_idx >= rs.root_count()) throw NotARoot("root index out of range");
    PairPartition part;
    part.beta = beta_idx;
    const Root& beta = rs.root(beta_idx);
    const int R = rs.root_count();
    int classified = 1;  // beta itself
    for (int a = 0; a < R; ++a) {
        if (a == beta_idx) continue;
        long long c = rs.pairing(a, beta_idx);
        if (c == 0) {
            part.null_roots.push_back(a);
            ++classified;
            continue;
        }
        const Root& alpha = rs.root(a);
        std::vector<long long> image = alpha.coeffs;
        bool nonneg = true;
        for (int p = 0; p < rs.rank(); ++p) {
            image[static_cast<std::size_t>(p)] -= c * beta.coeffs[static_cast<std::size_t>(p)];
            if (image[static_cast<std::size_t>(p)] < 0) nonneg = false;
        }
        if (nonneg) {
            // swapped among the positives; record once, from the lower end
            if (c < 0) {
                int up = rs.find_root(image);
                if (up < 0) throw Error("reflection image fell outside the root table");
                RootPair pr;
                pr.lower = a;
                pr.upper = up;
                pr.k = -c;
                pr.long_members = alpha.is_long && rs.root(up).is_long;
                part.positive_pairs.push_back(pr);
                classified += 2;
            }
            continue;
        }
        // sum pair: the image is the negative of the partner
        if (c < 0) throw Error("negative pairing with a negated image");
        std::vector<long long> partner(static_cast<std::size_t>(rs.rank()));
        for (int p = 0; p < rs.rank(); ++p) {
            partner[static_cast<std::size_t>(p)] = -image[static_cast<std::size_t>(p)];
        }
        int other = rs.find_root(partner);
        if (other < 0) throw Error("sum-pair partner fell outside the root table");
        bool record;
        if (c >= 2) {
            // prefer the end whose offset from beta is itself a positive
            // root; the triple-bond pair has no such end, so break that tie
            // lexicographically like the k = 1 case
            auto offset_is_root = [&](const std::vector<long long>& from) {
                std::vector<long long> gap(static_cast<std::size_t>(rs.rank()));
                for (int p = 0; p < rs.rank(); ++p) {
                    gap[static_cast<std::size_t>(p)] =
                        beta.coeffs[static_cast<std::size_t>(p)] - from[static_cast<std::size_t>(p)];
                }
                return rs.find_root(gap) >= 0;
            };
            if (offset_is_root(alpha.coeffs)) {
                record = true;
            } else if (offset_is_root(rs.root(other).coeffs)) {
                record = false;
            } else {
                record = alpha.coeffs < rs.root(other).coeffs;
            }
        } else {
            record = alpha.coeffs < rs.root(other).coeffs;
        }
        if (record) {
            RootPair pr;
            pr.lower = a;
            pr.upper = other;
            pr.k = c;
            pr.long_members = alpha.is_long && rs.root(other).is_long;
            part.negative_pairs.push_back(pr);
            classified += 2;
        }
    }
    if (classified != R) throw Error("pair partition failed to cover the root list");
    return part;
}

// Partitions are small and queried heavily by the sweep tests, so they are
// cached per (family, rank, root index). Root indices are stable because
// system construction is deterministic.
inline const PairPartition& pair_partition(const RootSystem& rs, int beta_idx) {
    static std::mutex mu;
    static std::map<std::tuple<char, int, int>, PairPartition> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(rs.type_char(), rs.rank(), beta_idx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, make_pair_partition(rs, beta_idx)).first->second;
}

namespace detail {

inline bool opposite_signs(long long x, long long y) {
    return (x > 0 && y < 0) || (x < 0 && y > 0);
}

// Sum pairs must split with strictly opposite signs for the linear
// reflection to move just one step.
inline bool negative_pairs_split(const CorootElement& lam, const PairPartition& part) {
    for (const RootPair& pr : part.negative_pairs) {
        if (!opposite_signs(lam.eval_index(pr.lower), lam.eval_index(pr.upper))) return false;
    }
    return true;
}

inline bool affine_positive_condition(const CorootElement& lam, const PairPartition& part) {
    for (const RootPair& pr : part.positive_pairs) {
        if (lam.eval_index(pr.lower) > 0) continue;
        if (lam.eval_index(pr.upper) <= 0) continue;
        return false;
    }
    return true;
}

inline bool affine_negative_condition(const CorootElement& lam, const PairPartition& part) {
    if (lam.system()->root(part.beta).is_long) return true;
    for (const RootPair& pr : part.negative_pairs) {
        if (!pr.long_members) continue;
        if (lam.eval_index(pr.lower) <= 0) continue;
        if (lam.eval_index(pr.upper) <= 0) continue;
        return false;
    }
    return true;
}

}  // namespace detail

// lam covers its image under the linear reflection in beta.
inline bool linear_descent(const CorootElement& lam, int beta_idx) {
    const PairPartition& part = pair_partition(*lam.system(), beta_idx);
    if (lam.eval_index(beta_idx) >= 0) return false;
    return detail::negative_pairs_split(lam, part);
}

// The image under the linear reflection covers lam.
inline bool linear_ascent(const CorootElement& lam, int beta_idx) {
    const PairPartition& part = pair_partition(*lam.system(), beta_idx);
    if (lam.eval_index(beta_idx) <= 0) return false;
    return detail::negative_pairs_split(lam, part);
}

// lam covers its image under the affine reflection in beta (the wall
// where beta takes value one).
inline bool affine_descent(const CorootElement& lam, int beta_idx) {
    const PairPartition& part = pair_partition(*lam.system(), beta_idx);
    if (1 - lam.eval_index(beta_idx) >= 0) return false;
    return detail::affine_positive_condition(lam, part) && detail::affine_negative_condition(lam, part);
}

// The image under the affine reflection covers lam. The cover relation is
// symmetric in the two elements, so this is the descent test on the image.
inline bool affine_ascent(const CorootElement& lam, int beta_idx) {
    if (1 - lam.eval_index(beta_idx) <= 0) return false;
    return affine_descent(lam.reflect(beta_idx, 1), beta_idx);
}

enum class MoveKind { LinearABC, AffineA, AffineBC, GraphSplit };

inline std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::LinearABC: return "LinearABC";
        case MoveKind::AffineA: return "AffineA";
        case MoveKind::AffineBC: return "AffineBC";
        case MoveKind::GraphSplit: return "GraphSplit";
    }
    throw Error("unreachable");
}

// One certified downward move: the reflection in beta (linear or affine)
// together with the diagram slice that produced it. Every reported move is
// re-verified against the cover predicates before it is returned.
struct NamedMove {
    MoveKind kind;
    int beta;
    bool affine;
    std::vector<int> nodes;

    bool operator<(const NamedMove& o) const {
        return std::tie(kind, beta, affine, nodes) < std::tie(o.kind, o.beta, o.affine, o.nodes);
    }
    bool operator==(const NamedMove& o) const {
        return kind == o.kind && beta == o.beta && affine == o.affine && nodes == o.nodes;
    }
};

namespace detail {

// Induced simple paths between two diagram nodes: one in a tree, the two
// arcs in the extended cycle of the first family. use_affine_node false
// restricts to the finite diagram.
inline std::vector<std::vector<int>> induced_paths(const RootSystem& rs, int from, int to,
                                                   bool use_affine_node) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{from};
    std::vector<bool> used(static_cast<std::size_t>(rs.node_count()), false);
    used[static_cast<std::size_t>(from)] = true;
    auto chord_free = [&](const std::vector<int>& p) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = i + 2; j < p.size(); ++j) {
                if (rs.bond(p[i], p[j]).multiplicity > 0) return false;
            }
        }
        return true;
    };
    auto dfs = [&](auto&& self, int cur) -> void {
        if (cur == to) {
            if (chord_free(path)) out.push_back(path);
            return;
        }
        for (int nb : rs.neighbors(cur)) {
            if (!use_affine_node && nb == 0) continue;
            if (used[static_cast<std::size_t>(nb)]) continue;
            used[static_cast<std::size_t>(nb)] = true;
            path.push_back(nb);
            self(self, nb);
            path.pop_back();
            used[static_cast<std::size_t>(nb)] = false;
        }
    };
    if (from == to) return out;
    dfs(dfs, from);
    std::sort(out.begin(), out.end());
    return out;
}

struct PathShape {
    char shape = 0;        // 'A', 'B' or 'C'; 0 when outside those families
    int minuscule_end = -1;  // -1 for shape A (both ends qualify)
};

inline PathShape classify_path(const RootSystem& rs, const std::vector<int>& path) {
    PathShape out;
    int doubles = 0;
    std::size_t double_pos = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Bond& b = rs.bond(path[i], path[i + 1]);
        if (b.unbounded || b.multiplicity == 3) return out;
        if (b.multiplicity == 2) {
            ++doubles;
            double_pos = i;
        }
    }
    if (doubles == 0) {
        out.shape = 'A';
        return out;
    }
    if (doubles > 1) return out;
    if (path.size() == 2) {
        const Bond& b = rs.bond(path[0], path[1]);
        out.shape = 'B';
        out.minuscule_end = (b.short_end == path[0]) ? path[1] : path[0];
        return out;
    }
    bool at_front = double_pos == 0;
    bool at_back = double_pos + 2 == path.size();
    if (!at_front && !at_back) return out;  // interior double bond: rank-four exceptional shape
    int terminal = at_back ? path.back() : path.front();
    int inner = at_back ? path[path.size() - 2] : path[1];
    const Bond& b = rs.bond(terminal, inner);
    if (b.short_end == terminal) {
        out.shape = 'B';
        out.minuscule_end = at_back ? path.front() : path.back();
    } else {
        out.shape = 'C';
        out.minuscule_end = terminal;
    }
    return out;
}

// Smallest root whose support is exactly the given finite path and whose
// coefficient at one chosen node is two.
inline int doubled_support_root(const RootSystem& rs, const std::vector<int>& path, int twice_at) {
    std::set<int> want(path.begin(), path.end());
    for (int idx = 0; idx < rs.root_count(); ++idx) {
        const Root& r = rs.root(idx);
        if (r.coeffs[static_cast<std::size_t>(twice_at - 1)] != 2) continue;
        std::vector<int> sup = rs.support(r);
        if (std::set<int>(sup.begin(), sup.end()) == want) return idx;
    }
    return -1;
}

inline int path_sum_root(const RootSystem& rs, const std::vector<int>& path) {
    std::vector<long long> coeffs(static_cast<std::size_t>(rs.rank()), 0);
    for (int node : path) coeffs[static_cast<std::size_t>(node - 1)] = 1;
    return rs.find_root(coeffs);
}

// theta minus the finite part of a path through the affine node.
inline int affine_difference_root(const RootSystem& rs, const std::vector<int>& path) {
    std::vector<long long> coeffs = rs.marks();
    for (int node : path) {
        if (node == 0) continue;
        coeffs[static_cast<std::size_t>(node - 1)] -= 1;
    }
    for (long long v : coeffs) {
        if (v < 0) return -1;
    }
    return rs.find_root(coeffs);
}

}  // namespace detail

// Scan the element for the cataloged downward moves: two-node linear
// moves through paths of the three classical shapes, the affine analogues
// through the affine node, and splitting reflections at highest roots of
// proper slices. Everything returned has been re-verified as a cover.
inline std::vector<NamedMove> detect_named_moves(const CorootElement& lam) {
    const RootSystem& rs = *lam.system();
    const int n = rs.rank();
    std::set<NamedMove> found;

    std::vector<long long> label(static_cast<std::size_t>(n + 1));
    for (int node = 0; node <= n; ++node) label[static_cast<std::size_t>(node)] = lam.label(node);

    auto push_linear = [&](int beta, const std::vector<int>& nodes, MoveKind kind) {
        if (beta >= 0 && linear_descent(lam, beta)) {
            found.insert(NamedMove{kind, beta, false, nodes});
        }
    };
    auto push_affine = [&](int beta, const std::vector<int>& nodes, MoveKind kind) {
        if (beta >= 0 && affine_descent(lam, beta)) {
            found.insert(NamedMove{kind, beta, true, nodes});
        }
    };

    // linear moves between a negative and a positive finite node
    for (int s = 1; s <= n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        for (int t = 1; t <= n; ++t) {
            if (label[static_cast<std::size_t>(t)] <= 0) continue;
            for (const auto& path : detail::induced_paths(rs, s, t, false)) {
                bool interior_zero = true;
                for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                    if (label[static_cast<std::size_t>(path[i])] != 0) interior_zero = false;
                }
                if (!interior_zero) continue;
                detail::PathShape shape = detail::classify_path(rs, path);
                if (shape.shape == 0) continue;
                long long ls = label[static_cast<std::size_t>(s)];
                long long lt = label[static_cast<std::size_t>(t)];
                if (shape.shape == 'A') {
                    if (ls + lt < 0) push_linear(detail::path_sum_root(rs, path), path, MoveKind::LinearABC);
                    continue;
                }
                if (shape.minuscule_end == t) {
                    if (ls + lt < 0) {
                        push_linear(detail::path_sum_root(rs, path), path, MoveKind::LinearABC);
                    } else if (ls + lt > 0 && 2 * ls + lt < 0) {
                        push_linear(detail::doubled_support_root(rs, path, s), path, MoveKind::LinearABC);
                    }
                } else if (shape.minuscule_end == s && ls + lt < 0) {
                    if (ls + 2 * lt > 0) {
                        push_linear(detail::path_sum_root(rs, path), path, MoveKind::LinearABC);
                    } else if (ls + 2 * lt < 0) {
                        push_linear(detail::doubled_support_root(rs, path, t), path, MoveKind::LinearABC);
                    }
                }
            }
        }
    }

    // affine moves: the affine node against a finite node of opposite sign
    if (label[0] != 0) {
        for (int t = 1; t <= n; ++t) {
            long long lt = label[static_cast<std::size_t>(t)];
            if (!detail::opposite_signs(label[0], lt)) continue;
            for (const auto& path : detail::induced_paths(rs, 0, t, true)) {
                if (static_cast<int>(path.size()) == n + 1) continue;  // proper slices only
                bool interior_zero = true;
                for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                    if (label[static_cast<std::size_t>(path[i])] != 0) interior_zero = false;
                }
                if (!interior_zero) continue;
                detail::PathShape shape = detail::classify_path(rs, path);
                if (shape.shape == 'A') {
                    if (label[0] + lt < 0) {
                        push_affine(detail::affine_difference_root(rs, path), path, MoveKind::AffineA);
                    }
                } else if ((shape.shape == 'B' || shape.shape == 'C') && shape.minuscule_end == 0 &&
                           label[0] < 0 && lt > 0) {
                    if (label[0] + lt < 0 && label[0] + 2 * lt != 0) {
                        push_affine(detail::affine_difference_root(rs, path), path, MoveKind::AffineBC);
                        // fallback witnesses for the steeper branch
                        if (label[0] + 2 * lt < 0) {
                            if (rs.type_label() == TypeLabel::B) {
                                std::vector<int> J;
                                for (int v = 1; v < n; ++v) J.push_back(v);
                                push_affine(rs.highest_root_in(J), path, MoveKind::AffineBC);
                            } else if (rs.type_label() == TypeLabel::C) {
                                std::vector<int> J;
                                for (int v = t + 1; v <= n; ++v) J.push_back(v);
                                if (!J.empty()) push_affine(rs.highest_root_in(J), path, MoveKind::AffineBC);
                            } else if (rs.type_label() == TypeLabel::F) {
                                push_affine(rs.find_root({1, 2, 2, 2}), path, MoveKind::AffineBC);
                            }
                        }
                    }
                }
            }
        }
    }

    // splitting moves at highest roots of proper connected finite slices
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> nodes;
        for (int v = 1; v <= n; ++v) {
            if (mask & (1u << (v - 1))) nodes.push_back(v);
        }
        if (static_cast<int>(nodes.size()) == n) continue;  // proper slices only
        if (rs.components(nodes).size() != 1) continue;
        int beta = rs.highest_root_in(nodes);
        if (beta < 0) continue;
        if (lam.eval_index(beta) < 2) continue;
        push_affine(beta, nodes, MoveKind::GraphSplit);
    }

    return std::vector<NamedMove>(found.begin(), found.end());
}

}  // namespace schubert
