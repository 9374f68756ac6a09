// Integer partitions, dominance order and its Hasse diagram.
#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::domain_error("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::domain_error("Partition: parts must be weakly decreasing");
        }
    }

    int n() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    const std::vector<int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const {
        std::vector<int> t;
        for (int k = 1; k <= (parts_.empty() ? 0 : parts_[0]); ++k) {
            int count = 0;
            for (int p : parts_)
                if (p >= k) ++count;
            t.push_back(count);
        }
        return Partition(std::move(t));
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        return os.str();
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Dominance: partial sums of lambda never exceed those of mu. Orbit-closure order for sl(n).
inline bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::domain_error("dominance_leq: partitions of different n");
    int sl = 0, sm = 0;
    std::size_t k = std::max(lambda.size(), mu.size());
    for (std::size_t i = 0; i < k; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl > sm) return false;
    }
    return true;
}

/// Cover relations (a, b) with a immediately below b in dominance order.
inline std::vector<std::pair<Partition, Partition>> hasse_cover_edges(int n) {
    if (n < 2 || n > 8) throw std::domain_error("hasse_cover_edges: n must lie in [2, 8]");
    auto parts = all_partitions(n);
    std::vector<std::pair<Partition, Partition>> edges;
    for (const auto& a : parts)
        for (const auto& b : parts) {
            if (a == b || !dominance_leq(a, b)) continue;
            bool cover = true;
            for (const auto& c : parts) {
                if (c == a || c == b) continue;
                if (dominance_leq(a, c) && dominance_leq(c, b)) { cover = false; break; }
            }
            if (cover) edges.emplace_back(a, b);
        }
    return edges;
}

}  // namespace nilorb
