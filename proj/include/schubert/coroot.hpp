#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schubert/checked.hpp"
#include "schubert/errors.hpp"
#include "schubert/root_system.hpp"

namespace schubert {

// A word in the generators, written left to right. Letters are diagram
// nodes; letter 0 is the affine generator.
struct ReducedWord {
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += ' ';
            s += RootSystem::node_name(letters[i]);
        }
        return s;
    }

    static ReducedWord parse(const std::string& text) {
        ReducedWord w;
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            if (tok.size() < 2 || tok[0] != 's') throw Error("bad generator token '" + tok + "'");
            std::size_t used = 0;
            int v;
            try {
                v = std::stoi(tok.substr(1), &used);
            } catch (const std::exception&) {
                throw Error("bad generator token '" + tok + "'");
            }
            if (used + 1 != tok.size() || v < 0) throw Error("bad generator token '" + tok + "'");
            w.letters.push_back(v);
        }
        return w;
    }

    bool operator==(const ReducedWord& o) const { return letters == o.letters; }
};

// Point of the translation lattice, carried by the system it lives in.
// Coordinates are the values of the finite simple roots; the affine node
// label is derived from them and never stored.
class CorootElement {
public:
    CorootElement(std::shared_ptr<const RootSystem> rs, std::vector<long long> coords)
        : rs_(std::move(rs)), a_(std::move(coords)) {
        if (!rs_) throw Error("null root system");
        if (a_.size() != static_cast<std::size_t>(rs_->rank())) {
            throw LengthMismatch("expected " + std::to_string(rs_->rank()) + " coordinates, got " +
                                 std::to_string(a_.size()));
        }
        if (!rs_->in_coroot_lattice(a_)) {
            throw NotInLattice("coordinates lie outside the translation lattice");
        }
    }

    // Skips the lattice test; for membership probes and internal loops
    // where the invariant is maintained by construction.
    static CorootElement unchecked(std::shared_ptr<const RootSystem> rs, std::vector<long long> coords) {
        CorootElement e;
        e.rs_ = std::move(rs);
        e.a_ = std::move(coords);
        if (!e.rs_) throw Error("null root system");
        if (e.a_.size() != static_cast<std::size_t>(e.rs_->rank())) {
            throw LengthMismatch("coordinate vector has wrong length");
        }
        return e;
    }

    static CorootElement origin(std::shared_ptr<const RootSystem> rs) {
        int n = rs->rank();
        return unchecked(std::move(rs), std::vector<long long>(static_cast<std::size_t>(n), 0));
    }

    const std::shared_ptr<const RootSystem>& system() const { return rs_; }
    const std::vector<long long>& coords() const { return a_; }

    bool same_system(const CorootElement& o) const {
        return rs_->type_label() == o.rs_->type_label() && rs_->rank() == o.rs_->rank();
    }

    void require_same_system(const CorootElement& o) const {
        if (!same_system(o)) throw SystemMismatch("elements belong to different systems");
    }

    bool is_origin() const {
        return std::all_of(a_.begin(), a_.end(), [](long long v) { return v == 0; });
    }

    long long theta_value() const { return rs_->theta_eval(a_); }

    long long s0_label() const { return checked_sub(1, theta_value()); }

    // Diagram label at a node: the stored coordinate on finite nodes, the
    // derived value on the affine one.
    long long label(int node) const {
        if (node == 0) return s0_label();
        if (node < 1 || node > rs_->rank()) throw Error("diagram node out of range");
        return a_[static_cast<std::size_t>(node - 1)];
    }

    std::vector<long long> labels() const {
        std::vector<long long> out;
        out.reserve(a_.size() + 1);
        out.push_back(s0_label());
        out.insert(out.end(), a_.begin(), a_.end());
        return out;
    }

    long long eval_index(int root_idx) const { return rs_->eval(rs_->root(root_idx), a_); }

    // Value of a root, given by its coefficient vector, on this element.
    long long eval_root(const std::vector<long long>& root_coeffs) const {
        return eval_index(rs_->root_index_checked(root_coeffs));
    }

    // Cross one wall: the reflection attached to a diagram node. The
    // affine node acts as the translated reflection in the highest root.
    CorootElement fire(int node) const {
        long long v = label(node);
        std::vector<long long> b = a_;
        const int n = rs_->rank();
        for (int j = 1; j <= n; ++j) {
            b[static_cast<std::size_t>(j - 1)] =
                checked_sub(b[static_cast<std::size_t>(j - 1)], checked_mul(rs_->cartan(node, j), v));
        }
        return unchecked(rs_, std::move(b));
    }

    // The reflection in the wall where the given root takes value k
    // (k = 0 is the linear reflection, k = 1 the basic affine one).
    CorootElement reflect(int root_idx, long long k) const {
        const Root& beta = rs_->root(root_idx);
        long long shift = checked_sub(k, eval_index(root_idx));
        std::vector<long long> b = a_;
        for (int j = 0; j < rs_->rank(); ++j) {
            b[static_cast<std::size_t>(j)] =
                checked_add(b[static_cast<std::size_t>(j)],
                            checked_mul(beta.pair_row[static_cast<std::size_t>(j)], shift));
        }
        return unchecked(rs_, std::move(b));
    }

    long long length() const {
        long long s = 0;
        for (const Root& r : rs_->roots()) {
            long long v = rs_->eval(r, a_);
            s = checked_add(s, v >= 0 ? v : -v);
        }
        return s;
    }

    long long positive_count() const {
        long long q = 0;
        for (const Root& r : rs_->roots()) {
            if (rs_->eval(r, a_) > 0) ++q;
        }
        return q;
    }

    // Length in the quotient: full length minus the finite part.
    long long length_s() const { return checked_sub(length(), positive_count()); }

    std::vector<int> descents() const {
        std::vector<int> d;
        for (int node = 0; node <= rs_->rank(); ++node) {
            if (label(node) < 0) d.push_back(node);
        }
        return d;
    }

    std::vector<int> ascents() const {
        std::vector<int> d;
        for (int node = 0; node <= rs_->rank(); ++node) {
            if (label(node) > 0) d.push_back(node);
        }
        return d;
    }

    bool is_dominant() const {
        return std::all_of(a_.begin(), a_.end(), [](long long v) { return v >= 0; });
    }

    // The canonical word: repeatedly fire the smallest-index negative
    // node. Each step must drop the quotient length by exactly one.
    ReducedWord word_for() const {
        ReducedWord w;
        CorootElement cur = *this;
        long long len = cur.length_s();
        while (!cur.is_origin()) {
            int pick = -1;
            for (int node = 0; node <= rs_->rank(); ++node) {
                if (cur.label(node) < 0) {
                    pick = node;
                    break;
                }
            }
            if (pick < 0) throw Error("nonzero element with no descent");
            cur = cur.fire(pick);
            long long next = cur.length_s();
            if (next != len - 1) throw Error("descent did not drop the length by one");
            len = next;
            w.letters.push_back(pick);
        }
        return w;
    }

    // Evaluate a word bottom up; every letter must be an ascent when its
    // turn comes, otherwise the word is not reduced for the quotient.
    static CorootElement from_word(std::shared_ptr<const RootSystem> rs, const ReducedWord& w) {
        CorootElement cur = origin(rs);
        for (std::size_t i = w.letters.size(); i-- > 0;) {
            int node = w.letters[i];
            if (node < 0 || node > rs->rank()) throw Error("word letter out of range");
            if (cur.label(node) <= 0) {
                throw NotReduced("letter " + RootSystem::node_name(node) + " is not an ascent");
            }
            cur = cur.fire(node);
        }
        return cur;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(a_[i]);
        }
        return s;
    }

    static std::vector<long long> parse_coords(const std::string& text) {
        std::vector<long long> out;
        std::string tok;
        std::istringstream in(text);
        while (std::getline(in, tok, ',')) {
            std::size_t used = 0;
            long long v;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                throw Error("bad coordinate '" + tok + "'");
            }
            while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
            if (used != tok.size()) throw Error("bad coordinate '" + tok + "'");
            out.push_back(v);
        }
        if (out.empty()) throw Error("empty coordinate string");
        return out;
    }

    bool operator==(const CorootElement& o) const { return same_system(o) && a_ == o.a_; }
    bool operator!=(const CorootElement& o) const { return !(*this == o); }

private:
    CorootElement() = default;

    std::shared_ptr<const RootSystem> rs_;
    std::vector<long long> a_;
};

}  // namespace schubert
