#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schubert/checked.hpp"
#include "schubert/errors.hpp"

namespace schubert {

enum class TypeLabel : char {
    A = 'A',
    B = 'B',
    C = 'C',
    D = 'D',
    E = 'E',
    F = 'F',
    G = 'G',
};

inline char to_char(TypeLabel t) { return static_cast<char>(t); }

inline TypeLabel type_label_from_char(char c) {
    switch (c) {
        case 'A': return TypeLabel::A;
        case 'B': return TypeLabel::B;
        case 'C': return TypeLabel::C;
        case 'D': return TypeLabel::D;
        case 'E': return TypeLabel::E;
        case 'F': return TypeLabel::F;
        case 'G': return TypeLabel::G;
        default: throw UnsupportedType(std::string("unknown family letter '") + c + "'");
    }
}

// One positive root, stored over the simple-root basis together with its
// dual over the simple-coroot basis. pair_row[j] is the value of simple
// root j+1 on this root's coroot; every pairing reduces to these rows.
struct Root {
    std::vector<long long> coeffs;
    std::vector<long long> coroot_coeffs;
    std::vector<long long> pair_row;
    long long height = 0;
    bool is_long = false;
};

// A bond of the (affine) diagram. multiplicity 0 means no edge. short_end
// names the node carrying the shorter root for multiplicity 2 or 3.
// unbounded marks the rank-one case where the two nodes are joined by a
// doubled bond with equal lengths and no finite alternation bound.
struct Bond {
    int multiplicity = 0;
    int short_end = -1;
    bool unbounded = false;
};

struct FiniteType {
    TypeLabel label;
    int rank;
    bool operator==(const FiniteType& o) const { return label == o.label && rank == o.rank; }
};

// Immutable description of one affine system: the finite root list, the
// extended diagram over nodes 0..rank (node 0 is the affine one), and the
// numeric tables everything downstream consumes. Construct via build().
class RootSystem {
public:
    static std::shared_ptr<const RootSystem> build(TypeLabel type, int rank);

    static std::shared_ptr<const RootSystem> build(char type, int rank) {
        return build(type_label_from_char(type), rank);
    }

    TypeLabel type_label() const { return type_; }
    char type_char() const { return to_char(type_); }
    int rank() const { return rank_; }
    int node_count() const { return rank_ + 1; }

    // cartan(i, j) is the value of the simple root of node j on the simple
    // coroot of node i, over all diagram nodes including the affine one.
    long long cartan(int i, int j) const {
        check_node(i);
        check_node(j);
        return cartan_[static_cast<std::size_t>(i) * (rank_ + 1) + j];
    }

    const std::vector<Root>& roots() const { return roots_; }
    int root_count() const { return static_cast<int>(roots_.size()); }
    const Root& root(int idx) const { return roots_.at(static_cast<std::size_t>(idx)); }

    // Index of the simple root attached to finite node i (1-based).
    int simple_root_index(int i) const {
        if (i < 1 || i > rank_) throw Error("simple_root_index: node out of range");
        return simple_idx_[static_cast<std::size_t>(i - 1)];
    }

    int highest_root_index() const { return highest_idx_; }
    const Root& highest_root() const { return roots_[static_cast<std::size_t>(highest_idx_)]; }

    // Coefficients of the highest root; the affine label of an element is
    // one minus the dot of these with its coordinates.
    const std::vector<long long>& marks() const { return highest_root().coeffs; }
    const std::vector<long long>& comarks() const { return highest_root().coroot_coeffs; }

    const std::vector<int>& exponents() const { return exponents_; }
    const std::vector<int>& degrees() const { return degrees_; }

    // Largest bond multiplicity of the finite diagram: 1, 2 or 3.
    long long max_bond() const { return max_bond_; }

    bool node_long(int node) const {
        check_node(node);
        return node_long_[static_cast<std::size_t>(node)];
    }

    // Multiplier picked up when a length-changing wall is crossed at this
    // node: 1 on long nodes, the top bond multiplicity on short ones.
    long long chevalley_constant(int node) const {
        return node_long(node) ? 1 : max_bond_;
    }

    bool is_minuscule_node(int node) const {
        check_node(node);
        if (node == 0) return false;
        return marks()[static_cast<std::size_t>(node - 1)] == 1;
    }

    const Bond& bond(int u, int v) const {
        check_node(u);
        check_node(v);
        return bonds_[static_cast<std::size_t>(u) * (rank_ + 1) + v];
    }

    const std::vector<int>& neighbors(int node) const {
        check_node(node);
        return adjacency_[static_cast<std::size_t>(node)];
    }

    static std::string node_name(int node) { return "s" + std::to_string(node); }

    // Value of a root functional on lattice coordinates.
    long long eval(const Root& r, const std::vector<long long>& coords) const {
        if (coords.size() != static_cast<std::size_t>(rank_)) {
            throw LengthMismatch("coordinate vector has wrong length");
        }
        long long s = 0;
        for (int p = 0; p < rank_; ++p) {
            s = checked_add(s, checked_mul(r.coeffs[static_cast<std::size_t>(p)],
                                           coords[static_cast<std::size_t>(p)]));
        }
        return s;
    }

    long long theta_eval(const std::vector<long long>& coords) const {
        return eval(highest_root(), coords);
    }

    // Value of root a on the coroot of root b.
    long long pairing(int a_idx, int b_idx) const {
        const Root& a = root(a_idx);
        const Root& b = root(b_idx);
        long long s = 0;
        for (int p = 0; p < rank_; ++p) {
            s = checked_add(s, checked_mul(a.coeffs[static_cast<std::size_t>(p)],
                                           b.pair_row[static_cast<std::size_t>(p)]));
        }
        return s;
    }

    // Look a coefficient vector up in the root table; -1 when absent.
    int find_root(const std::vector<long long>& coeffs) const {
        auto it = root_index_.find(coeffs);
        return it == root_index_.end() ? -1 : it->second;
    }

    int root_index_checked(const std::vector<long long>& coeffs) const {
        int idx = find_root(coeffs);
        if (idx < 0) throw NotARoot("coefficient vector is not a positive root");
        return idx;
    }

    // Finite nodes (1-based) where the root has a nonzero coefficient.
    std::vector<int> support(const Root& r) const {
        std::vector<int> s;
        for (int p = 0; p < rank_; ++p) {
            if (r.coeffs[static_cast<std::size_t>(p)] != 0) s.push_back(p + 1);
        }
        return s;
    }

    // Highest root among those supported inside the finite node set I;
    // unique when I is connected. Returns -1 when I is empty.
    int highest_root_in(const std::vector<int>& finite_nodes) const {
        std::vector<bool> in(static_cast<std::size_t>(rank_ + 1), false);
        for (int v : finite_nodes) {
            if (v < 1 || v > rank_) throw Error("highest_root_in expects finite nodes");
            in[static_cast<std::size_t>(v)] = true;
        }
        for (int idx = root_count() - 1; idx >= 0; --idx) {
            const Root& r = roots_[static_cast<std::size_t>(idx)];
            bool ok = true;
            for (int p = 0; p < rank_ && ok; ++p) {
                if (r.coeffs[static_cast<std::size_t>(p)] != 0 && !in[static_cast<std::size_t>(p + 1)]) ok = false;
            }
            if (ok) return idx;
        }
        return -1;
    }

    // Membership of integer coordinates in the translation lattice.
    bool in_coroot_lattice(const std::vector<long long>& a) const {
        if (a.size() != static_cast<std::size_t>(rank_)) {
            throw LengthMismatch("coordinate vector has wrong length");
        }
        auto mod = [](long long x, long long m) { return ((x % m) + m) % m; };
        const int n = rank_;
        switch (type_) {
            case TypeLabel::A: {
                long long s = 0;
                for (int i = 1; i <= n; ++i) s = checked_add(s, checked_mul(i, a[static_cast<std::size_t>(i - 1)]));
                return mod(s, n + 1) == 0;
            }
            case TypeLabel::B: {
                long long s = 0;
                for (int i = 1; i <= n; i += 2) s = checked_add(s, a[static_cast<std::size_t>(i - 1)]);
                return mod(s, 2) == 0;
            }
            case TypeLabel::C:
                return mod(a[static_cast<std::size_t>(n - 1)], 2) == 0;
            case TypeLabel::D: {
                long long odd_head = 0;
                for (int i = 1; i <= n - 2; i += 2) odd_head = checked_add(odd_head, a[static_cast<std::size_t>(i - 1)]);
                long long p = a[static_cast<std::size_t>(n - 2)];
                long long q = a[static_cast<std::size_t>(n - 1)];
                if (n % 2 == 1) {
                    return mod(checked_add(checked_sub(p, q), checked_mul(2, odd_head)), 4) == 0;
                }
                if (mod(checked_add(p, q), 2) != 0) return false;
                long long h = n / 2;
                long long s = checked_add(odd_head, checked_add(checked_mul(h - 1, p), checked_mul(h, q)));
                return mod(s, 2) == 0;
            }
            case TypeLabel::E: {
                if (n == 6) {
                    long long s = a[0] - a[2] + a[4] - a[5];
                    return mod(s, 3) == 0;
                }
                if (n == 7) {
                    long long s = a[1] + a[4] + a[6];
                    return mod(s, 2) == 0;
                }
                return true;  // E8 is self-dual with trivial quotient
            }
            case TypeLabel::F:
            case TypeLabel::G:
                return true;
        }
        throw Error("unreachable");
    }

    // Connected components of a node subset of the extended diagram.
    std::vector<std::vector<int>> components(const std::vector<int>& nodes) const {
        std::set<int> pending(nodes.begin(), nodes.end());
        for (int v : nodes) check_node(v);
        std::vector<std::vector<int>> out;
        while (!pending.empty()) {
            int start = *pending.begin();
            std::vector<int> comp;
            std::queue<int> q;
            q.push(start);
            pending.erase(start);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                comp.push_back(u);
                for (int v : neighbors(u)) {
                    auto it = pending.find(v);
                    if (it != pending.end()) {
                        pending.erase(it);
                        q.push(v);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Recognize the shape of a connected induced subdiagram; throws
    // UnsupportedType when the slice is not of finite type.
    FiniteType classify_component(const std::vector<int>& nodes) const;

    static std::vector<int> finite_degrees(FiniteType t);

    // For each root index b, the list of (root index a, value of a on the
    // coroot of b) over roots that actually move under the reflection in b.
    const std::vector<std::vector<std::pair<int, long long>>>& reflection_table() const {
        std::call_once(reflection_once_, [this]() {
            auto table = std::make_unique<std::vector<std::vector<std::pair<int, long long>>>>();
            table->resize(roots_.size());
            for (int b = 0; b < root_count(); ++b) {
                for (int a = 0; a < root_count(); ++a) {
                    long long c = pairing(a, b);
                    if (c != 0) (*table)[static_cast<std::size_t>(b)].emplace_back(a, c);
                }
            }
            reflection_ = std::move(table);
        });
        return *reflection_;
    }

private:
    RootSystem() = default;

    void check_node(int node) const {
        if (node < 0 || node > rank_) throw Error("diagram node out of range");
    }

    struct EdgeSpec {
        int u;
        int v;
        int multiplicity;
        int short_end;  // -1 for single bonds
        bool unbounded = false;
    };

    static void validate(TypeLabel type, int rank);
    static std::vector<EdgeSpec> finite_edges(TypeLabel type, int rank);
    static EdgeSpec affine_edgespec(TypeLabel type, int rank);
    void construct(TypeLabel type, int rank);
    void generate_roots();
    void build_affine_graph();

    TypeLabel type_ = TypeLabel::A;
    int rank_ = 0;
    std::vector<long long> cartan_;  // (rank+1)^2, node indexed
    std::vector<Bond> bonds_;        // (rank+1)^2, node indexed
    std::vector<std::vector<int>> adjacency_;
    std::vector<Root> roots_;
    std::map<std::vector<long long>, int> root_index_;
    std::vector<int> simple_idx_;
    int highest_idx_ = -1;
    std::vector<int> exponents_;
    std::vector<int> degrees_;
    long long max_bond_ = 1;
    std::vector<bool> node_long_;

    mutable std::once_flag reflection_once_;
    mutable std::unique_ptr<std::vector<std::vector<std::pair<int, long long>>>> reflection_;
};

inline void RootSystem::validate(TypeLabel type, int rank) {
    switch (type) {
        case TypeLabel::A:
            if (rank >= 1) return;
            break;
        case TypeLabel::B:
        case TypeLabel::C:
            if (rank >= 2) return;
            break;
        case TypeLabel::D:
            if (rank >= 4) return;
            break;
        case TypeLabel::E:
            if (rank >= 6 && rank <= 8) return;
            break;
        case TypeLabel::F:
            if (rank == 4) return;
            break;
        case TypeLabel::G:
            if (rank == 2) return;
            break;
    }
    throw UnsupportedType(std::string(1, to_char(type)) + std::to_string(rank) + " is not a supported system");
}

inline std::vector<RootSystem::EdgeSpec> RootSystem::finite_edges(TypeLabel type, int rank) {
    std::vector<EdgeSpec> e;
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) e.push_back({i, i + 1, 1, -1});
    };
    switch (type) {
        case TypeLabel::A:
            chain(1, rank);
            break;
        case TypeLabel::B:
            chain(1, rank - 1);
            e.push_back({rank - 1, rank, 2, rank});
            break;
        case TypeLabel::C:
            chain(1, rank - 1);
            e.push_back({rank - 1, rank, 2, rank - 1});
            break;
        case TypeLabel::D:
            chain(1, rank - 1);
            e.push_back({rank - 2, rank, 1, -1});
            break;
        case TypeLabel::E:
            e.push_back({1, 3, 1, -1});
            chain(3, rank);
            e.push_back({2, 4, 1, -1});
            break;
        case TypeLabel::F:
            e.push_back({1, 2, 1, -1});
            e.push_back({2, 3, 2, 3});
            e.push_back({3, 4, 1, -1});
            break;
        case TypeLabel::G:
            e.push_back({1, 2, 3, 1});
            break;
    }
    return e;
}

inline RootSystem::EdgeSpec RootSystem::affine_edgespec(TypeLabel type, int rank) {
    switch (type) {
        case TypeLabel::A:
            if (rank == 1) return {0, 1, 2, -1, true};
            return {0, 1, 1, -1};  // the second cycle edge 0..rank is added separately
        case TypeLabel::B: return {0, 2, 1, -1};
        case TypeLabel::C: return {0, 1, 2, 1};
        case TypeLabel::D: return {0, 2, 1, -1};
        case TypeLabel::E:
            if (rank == 6) return {0, 2, 1, -1};
            if (rank == 7) return {0, 1, 1, -1};
            return {0, 8, 1, -1};
        case TypeLabel::F: return {0, 1, 1, -1};
        case TypeLabel::G: return {0, 2, 1, -1};
    }
    throw Error("unreachable");
}

inline void RootSystem::construct(TypeLabel type, int rank) {
    type_ = type;
    rank_ = rank;
    const int nodes = rank + 1;
    cartan_.assign(static_cast<std::size_t>(nodes) * nodes, 0);
    bonds_.assign(static_cast<std::size_t>(nodes) * nodes, Bond{});
    adjacency_.assign(static_cast<std::size_t>(nodes), {});
    for (int i = 0; i < nodes; ++i) cartan_[static_cast<std::size_t>(i) * nodes + i] = 2;

    max_bond_ = 1;
    auto put_edge = [&](const EdgeSpec& s) {
        Bond b{s.multiplicity, s.short_end, s.unbounded};
        bonds_[static_cast<std::size_t>(s.u) * nodes + s.v] = b;
        bonds_[static_cast<std::size_t>(s.v) * nodes + s.u] = b;
        adjacency_[static_cast<std::size_t>(s.u)].push_back(s.v);
        adjacency_[static_cast<std::size_t>(s.v)].push_back(s.u);
        long long cu, cv;  // cartan[u][v], cartan[v][u]
        if (s.unbounded) {
            cu = cv = -2;
        } else if (s.multiplicity == 1) {
            cu = cv = -1;
        } else if (s.short_end == s.v) {
            cu = -1;
            cv = -s.multiplicity;
        } else {
            cu = -s.multiplicity;
            cv = -1;
        }
        cartan_[static_cast<std::size_t>(s.u) * nodes + s.v] = cu;
        cartan_[static_cast<std::size_t>(s.v) * nodes + s.u] = cv;
    };

    for (const EdgeSpec& s : finite_edges(type, rank)) {
        if (s.multiplicity > max_bond_) max_bond_ = s.multiplicity;
        put_edge(s);
    }

    generate_roots();

    // Affine graph: the stored bond of node 0 must reproduce the pairing
    // rows of the highest root, otherwise the tables are inconsistent.
    EdgeSpec aff = affine_edgespec(type, rank);
    put_edge(aff);
    if (type == TypeLabel::A && rank >= 2) put_edge({0, rank, 1, -1});
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

    const Root& theta = roots_[static_cast<std::size_t>(highest_idx_)];
    for (int j = 1; j <= rank; ++j) {
        long long expected = -theta.pair_row[static_cast<std::size_t>(j - 1)];
        if (cartan_[0 * static_cast<std::size_t>(nodes) + j] != expected) {
            throw Error("affine bond table disagrees with the highest root");
        }
        long long back = 0;
        for (int p = 0; p < rank; ++p) {
            back = checked_add(back, checked_mul(theta.coeffs[static_cast<std::size_t>(p)],
                                                 cartan_[static_cast<std::size_t>(j) * nodes + p + 1]));
        }
        if (cartan_[static_cast<std::size_t>(j) * nodes + 0] != -back) {
            throw Error("affine bond table disagrees with the highest root");
        }
    }

    node_long_.assign(static_cast<std::size_t>(nodes), false);
    node_long_[0] = true;
    for (int i = 1; i <= rank; ++i) {
        node_long_[static_cast<std::size_t>(i)] =
            roots_[static_cast<std::size_t>(simple_idx_[static_cast<std::size_t>(i - 1)])].is_long;
    }

    degrees_ = finite_degrees({type, rank});
    exponents_.clear();
    for (int d : degrees_) exponents_.push_back(d - 1);
}

inline void RootSystem::generate_roots() {
    const int n = rank_;
    const int nodes = n + 1;
    auto cart = [&](int i, int j) {  // finite 1-based nodes
        return cartan_[static_cast<std::size_t>(i) * nodes + j];
    };

    std::map<std::vector<long long>, std::vector<long long>> seen;  // coeffs -> coroot coeffs
    std::queue<std::vector<long long>> work;
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        seen.emplace(e, e);
        work.push(e);
    }
    while (!work.empty()) {
        std::vector<long long> m = work.front();
        work.pop();
        std::vector<long long> k = seen.at(m);
        for (int i = 1; i <= n; ++i) {
            long long p = 0;
            for (int j = 1; j <= n; ++j) p += m[static_cast<std::size_t>(j - 1)] * cart(i, j);
            if (p == 0) continue;
            std::vector<long long> m2 = m;
            m2[static_cast<std::size_t>(i - 1)] -= p;
            bool positive = false, negative = false;
            for (long long v : m2) {
                if (v > 0) positive = true;
                if (v < 0) negative = true;
            }
            if (negative || !positive) continue;  // only the simple root itself reflects out
            if (seen.count(m2)) continue;
            long long q = 0;
            for (int t = 1; t <= n; ++t) q += k[static_cast<std::size_t>(t - 1)] * cart(t, i);
            std::vector<long long> k2 = k;
            k2[static_cast<std::size_t>(i - 1)] -= q;
            seen.emplace(m2, k2);
            work.push(m2);
        }
    }

    struct Row {
        std::vector<long long> m, k;
        long long h;
    };
    std::vector<Row> rows;
    rows.reserve(seen.size());
    for (auto& [m, k] : seen) {
        long long h = 0;
        for (long long v : m) h += v;
        rows.push_back({m, k, h});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.h != b.h) return a.h < b.h;
        return a.m < b.m;
    });

    roots_.clear();
    root_index_.clear();
    simple_idx_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        Root r;
        r.coeffs = rows[idx].m;
        r.coroot_coeffs = rows[idx].k;
        r.height = rows[idx].h;
        r.pair_row.assign(static_cast<std::size_t>(n), 0);
        for (int j = 1; j <= n; ++j) {
            long long f = 0;
            for (int t = 1; t <= n; ++t) f += r.coroot_coeffs[static_cast<std::size_t>(t - 1)] * cart(t, j);
            r.pair_row[static_cast<std::size_t>(j - 1)] = f;
        }
        roots_.push_back(std::move(r));
        root_index_.emplace(rows[idx].m, static_cast<int>(idx));
        if (rows[idx].h == 1) {
            for (int i = 1; i <= n; ++i) {
                if (rows[idx].m[static_cast<std::size_t>(i - 1)] == 1) simple_idx_[static_cast<std::size_t>(i - 1)] = static_cast<int>(idx);
            }
        }
    }

    // Length classes. nu_i is max_bond on long simple roots and 1 on short
    // ones; a root is long exactly when its symmetrized norm doubles the
    // bond multiplicity. Simple-root lengths come straight from the bonds.
    std::vector<long long> nu(static_cast<std::size_t>(n), max_bond_);
    for (const EdgeSpec& s : finite_edges(type_, rank_)) {
        if (s.multiplicity >= 2) nu[static_cast<std::size_t>(s.short_end - 1)] = 1;
    }
    // propagate across single bonds: equal lengths on both ends
    bool changed = true;
    while (changed) {
        changed = false;
        for (const EdgeSpec& s : finite_edges(type_, rank_)) {
            if (s.multiplicity != 1) continue;
            auto &a = nu[static_cast<std::size_t>(s.u - 1)], &b = nu[static_cast<std::size_t>(s.v - 1)];
            if (a != b) {
                a = b = std::min(a, b);
                changed = true;
            }
        }
    }
    for (Root& r : roots_) {
        long long norm = 0;
        for (int i = 1; i <= n; ++i) {
            long long pr = 0;
            for (int j = 1; j <= n; ++j) pr += r.coeffs[static_cast<std::size_t>(j - 1)] * cart(i, j);
            norm += r.coeffs[static_cast<std::size_t>(i - 1)] * pr * nu[static_cast<std::size_t>(i - 1)];
        }
        if (norm == 2 * max_bond_) {
            r.is_long = true;
        } else if (norm == 2) {
            r.is_long = false;
        } else {
            throw Error("root norm outside the two admissible classes");
        }
    }

    highest_idx_ = static_cast<int>(roots_.size()) - 1;
    for (std::size_t i = 0; i + 1 < roots_.size(); ++i) {
        if (roots_[i].height == roots_.back().height) throw Error("highest root is not unique");
    }
}

inline std::shared_ptr<const RootSystem> RootSystem::build(TypeLabel type, int rank) {
    validate(type, rank);
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::shared_ptr<const RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(to_char(type), rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->construct(type, rank);
    cache.emplace(key, rs);
    return rs;
}

inline FiniteType RootSystem::classify_component(const std::vector<int>& nodes) const {
    if (nodes.empty()) throw Error("classify_component: empty node set");
    std::set<int> in(nodes.begin(), nodes.end());
    for (int v : nodes) check_node(v);
    if (in.size() != nodes.size()) throw Error("classify_component: repeated node");

    const int k = static_cast<int>(in.size());
    struct E {
        int u, v;
        Bond b;
    };
    std::vector<E> edges;
    std::map<int, int> degree;
    for (int u : in) degree[u] = 0;
    for (int u : in) {
        for (int v : neighbors(u)) {
            if (v > u && in.count(v)) {
                edges.push_back({u, v, bond(u, v)});
            }
        }
    }
    for (const E& e : edges) {
        ++degree[e.u];
        ++degree[e.v];
        if (e.b.unbounded) throw UnsupportedType("subdiagram contains the rank-one doubled bond");
    }
    if (static_cast<int>(edges.size()) != k - 1) {
        throw UnsupportedType("subdiagram is not connected or contains a cycle");
    }
    if (k == 1) return {TypeLabel::A, 1};

    for (auto& [node, deg] : degree) {
        if (deg > 3) throw UnsupportedType("subdiagram has a node of degree above three");
    }

    int doubles = 0, triples = 0;
    const E* multi = nullptr;
    for (const E& e : edges) {
        if (e.b.multiplicity == 2) {
            ++doubles;
            multi = &e;
        } else if (e.b.multiplicity == 3) {
            ++triples;
            multi = &e;
        }
    }
    if (triples > 0) {
        if (k == 2 && triples == 1 && doubles == 0) return {TypeLabel::G, 2};
        throw UnsupportedType("triple bond inside a larger subdiagram");
    }
    if (doubles > 1) throw UnsupportedType("two double bonds in one component");

    std::vector<int> branch;
    for (auto& [node, deg] : degree) {
        if (deg == 3) branch.push_back(node);
    }

    if (doubles == 1) {
        if (!branch.empty()) throw UnsupportedType("double bond together with a branch node");
        if (k == 2) return {TypeLabel::B, 2};
        bool u_term = degree[multi->u] == 1;
        bool v_term = degree[multi->v] == 1;
        if (!u_term && !v_term) {
            if (k == 4) return {TypeLabel::F, 4};
            throw UnsupportedType("interior double bond outside the rank-four shape");
        }
        int terminal = u_term ? multi->u : multi->v;
        if (multi->b.short_end == terminal) return {TypeLabel::B, k};
        return {TypeLabel::C, k};
    }

    // simply laced from here
    if (branch.empty()) return {TypeLabel::A, k};
    if (branch.size() > 1) throw UnsupportedType("two branch nodes in one component");
    int center = branch[0];
    std::vector<int> arms;
    for (int v : neighbors(center)) {
        if (!in.count(v)) continue;
        int len = 1, prev = center, cur = v;
        for (;;) {
            int next = -1;
            for (int w : neighbors(cur)) {
                if (w != prev && in.count(w)) {
                    next = w;
                    break;
                }
            }
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw Error("branch node arm count is not three");
    if (arms[0] == 1 && arms[1] == 1) return {TypeLabel::D, k};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        return {TypeLabel::E, k};
    }
    throw UnsupportedType("branched subdiagram outside the finite families");
}

inline std::vector<int> RootSystem::finite_degrees(FiniteType t) {
    std::vector<int> d;
    switch (t.label) {
        case TypeLabel::A:
            for (int i = 2; i <= t.rank + 1; ++i) d.push_back(i);
            return d;
        case TypeLabel::B:
        case TypeLabel::C:
            for (int i = 2; i <= 2 * t.rank; i += 2) d.push_back(i);
            return d;
        case TypeLabel::D:
            for (int i = 2; i <= 2 * t.rank - 2; i += 2) d.push_back(i);
            d.push_back(t.rank);
            std::sort(d.begin(), d.end());
            return d;
        case TypeLabel::E:
            if (t.rank == 6) return {2, 5, 6, 8, 9, 12};
            if (t.rank == 7) return {2, 6, 8, 10, 12, 14, 18};
            return {2, 8, 12, 14, 18, 20, 24, 30};
        case TypeLabel::F:
            return {2, 6, 8, 12};
        case TypeLabel::G:
            return {2, 6};
    }
    throw Error("unreachable");
}

}  // namespace schubert
