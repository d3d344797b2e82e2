#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kudef {

// Finitely generated abelian group in normal form: a free rank together
// with the multiset of orders of its cyclic torsion summands. Torsion
// orders are kept sorted; order-1 summands are dropped on construction.
// No invariant-factor chaining: Z/2 + Z/4 and Z/8 stay distinct, equality
// is plain multiset equality.
class FinAbGroup {
public:
    FinAbGroup() = default;  // the zero group

    explicit FinAbGroup(int free_rank, std::vector<std::int64_t> torsion = {})
        : free_rank_(free_rank), torsion_(std::move(torsion)) {
        if (free_rank_ < 0)
            throw std::invalid_argument("FinAbGroup: negative free rank");
        for (auto n : torsion_)
            if (n < 1)
                throw std::invalid_argument("FinAbGroup: torsion order must be positive");
        std::erase(torsion_, 1);
        std::sort(torsion_.begin(), torsion_.end());
    }

    static FinAbGroup zero() { return FinAbGroup(); }
    static FinAbGroup free(int rank) { return FinAbGroup(rank); }
    // Z/n; n == 1 yields the zero group.
    static FinAbGroup cyclic(std::int64_t n) { return FinAbGroup(0, {n}); }

    int free_rank() const { return free_rank_; }
    const std::vector<std::int64_t>& torsion() const { return torsion_; }
    int torsion_count() const { return static_cast<int>(torsion_.size()); }
    bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_torsion_free() const { return torsion_.empty(); }

    bool operator==(const FinAbGroup&) const = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        if (free_rank_ > 0) {
            out << "Z";
            if (free_rank_ > 1) out << "^" << free_rank_;
            first = false;
        }
        // group equal torsion orders into powers
        for (std::size_t i = 0; i < torsion_.size();) {
            std::size_t j = i;
            while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
            if (!first) out << " + ";
            first = false;
            const auto count = j - i;
            if (count == 1)
                out << "Z/" << torsion_[i];
            else
                out << "(Z/" << torsion_[i] << ")^" << count;
            i = j;
        }
        return out.str();
    }

private:
    int free_rank_ = 0;
    std::vector<std::int64_t> torsion_;  // sorted, every entry >= 2
};

inline FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<std::int64_t> torsion = a.torsion();
    torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
    return FinAbGroup(a.free_rank() + b.free_rank(), std::move(torsion));
}

// Bilinear extension of Z (x) Z = Z, Z (x) Z/n = Z/n, Z/n (x) Z/m = Z/gcd(n,m).
inline FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<std::int64_t> torsion;
    for (auto n : a.torsion())
        for (int i = 0; i < b.free_rank(); ++i) torsion.push_back(n);
    for (auto m : b.torsion())
        for (int i = 0; i < a.free_rank(); ++i) torsion.push_back(m);
    for (auto n : a.torsion())
        for (auto m : b.torsion()) torsion.push_back(std::gcd(n, m));
    return FinAbGroup(a.free_rank() * b.free_rank(), std::move(torsion));
}

// Bilinear extension of Tor(Z, -) = 0 and Tor(Z/n, Z/m) = Z/gcd(n,m).
inline FinAbGroup tor(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<std::int64_t> torsion;
    for (auto n : a.torsion())
        for (auto m : b.torsion()) torsion.push_back(std::gcd(n, m));
    return FinAbGroup(0, std::move(torsion));
}

}  // namespace kudef
