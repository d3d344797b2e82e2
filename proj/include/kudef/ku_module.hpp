#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kudef/fin_ab_group.hpp"

namespace kudef {

// One wedge summand of a connective-K-theory module: S^d ku (free) or
// S^d ku/n (cofiber of multiplication by n). Moduli are >= 2; a "ku/1"
// is contractible and is never constructed. Degrees are the suspension
// exponents and stay nonnegative.
class KuSummand {
public:
    static KuSummand free(int degree) { return KuSummand(degree, 0); }

    static KuSummand mod(std::int64_t modulus, int degree) {
        if (modulus < 2)
            throw std::invalid_argument("KuSummand: modulus must be at least 2");
        return KuSummand(degree, modulus);
    }

    int degree() const { return degree_; }
    bool is_free() const { return modulus_ == 0; }
    std::int64_t modulus() const { return modulus_; }

    // Normal-form order: degree first, then free before mod, then modulus.
    // Free summands store modulus 0, so the lexicographic compare does it.
    auto operator<=>(const KuSummand&) const = default;

    // pi_d of this single summand: Z (resp. Z/n) when d - degree is
    // nonnegative and even, zero otherwise.
    FinAbGroup homotopy(int d) const {
        const int offset = d - degree_;
        if (offset < 0 || offset % 2 != 0) return FinAbGroup::zero();
        return is_free() ? FinAbGroup::free(1) : FinAbGroup::cyclic(modulus_);
    }

    std::string to_string() const {
        std::ostringstream out;
        if (degree_ == 1)
            out << "S ";
        else if (degree_ > 1)
            out << "S^" << degree_ << " ";
        out << "ku";
        if (!is_free()) out << "/" << modulus_;
        return out.str();
    }

private:
    KuSummand(int degree, std::int64_t modulus) : degree_(degree), modulus_(modulus) {
        if (degree < 0)
            throw std::invalid_argument("KuSummand: negative suspension");
    }

    int degree_;
    std::int64_t modulus_;  // 0 marks a free summand
};

struct SummandCounts {
    int r0 = 0;  // free summands in even degree
    int r1 = 0;  // free summands in odd degree
    int t0 = 0;  // mod summands in even degree
    int t1 = 0;  // mod summands in odd degree
    bool operator==(const SummandCounts&) const = default;
};

// Finite multiset of KuSummand, kept sorted. The empty multiset is the
// zero (contractible) module. Equality is multiset equality.
class KuModule {
public:
    KuModule() = default;

    explicit KuModule(std::vector<KuSummand> summands) : summands_(std::move(summands)) {
        std::sort(summands_.begin(), summands_.end());
    }

    static KuModule zero() { return KuModule(); }
    static KuModule ku() { return KuModule({KuSummand::free(0)}); }

    const std::vector<KuSummand>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }
    int summand_count() const { return static_cast<int>(summands_.size()); }

    int max_degree() const {
        int top = -1;
        for (const auto& s : summands_) top = std::max(top, s.degree());
        return top;
    }

    bool operator==(const KuModule&) const = default;

    std::string to_string() const {
        if (summands_.empty()) return "0";
        std::ostringstream out;
        for (std::size_t i = 0; i < summands_.size(); ++i) {
            if (i > 0) out << " v ";
            out << summands_[i].to_string();
        }
        return out.str();
    }

    std::map<int, int> free_degree_histogram() const {
        std::map<int, int> histogram;
        for (const auto& s : summands_)
            if (s.is_free()) ++histogram[s.degree()];
        return histogram;
    }

    std::map<int, int> mod_degree_histogram() const {
        std::map<int, int> histogram;
        for (const auto& s : summands_)
            if (!s.is_free()) ++histogram[s.degree()];
        return histogram;
    }

private:
    std::vector<KuSummand> summands_;
};

inline KuModule wedge(const KuModule& m, const KuModule& n) {
    std::vector<KuSummand> summands = m.summands();
    summands.insert(summands.end(), n.summands().begin(), n.summands().end());
    return KuModule(std::move(summands));
}

inline KuModule suspend(const KuModule& m, int s) {
    if (s < 0) throw std::invalid_argument("suspend: negative suspension");
    std::vector<KuSummand> summands;
    summands.reserve(m.summands().size());
    for (const auto& summand : m.summands()) {
        const int d = summand.degree() + s;
        summands.push_back(summand.is_free() ? KuSummand::free(d)
                                             : KuSummand::mod(summand.modulus(), d));
    }
    return KuModule(std::move(summands));
}

// Smash of two single summands, as a list of summands:
//   S^a ku   ^ S^b ku   = S^(a+b) ku
//   S^a ku   ^ S^b ku/n = S^(a+b) ku/n
//   S^a ku/n ^ S^b ku/m = S^(a+b) ku/g v S^(a+b+1) ku/g,  g = gcd(n, m),
// with both terms dropped when g = 1 (the smash is contractible).
inline void smash_summands(const KuSummand& a, const KuSummand& b,
                           std::vector<KuSummand>& out) {
    const int d = a.degree() + b.degree();
    if (a.is_free() && b.is_free()) {
        out.push_back(KuSummand::free(d));
    } else if (a.is_free()) {
        out.push_back(KuSummand::mod(b.modulus(), d));
    } else if (b.is_free()) {
        out.push_back(KuSummand::mod(a.modulus(), d));
    } else {
        const std::int64_t g = std::gcd(a.modulus(), b.modulus());
        if (g >= 2) {
            out.push_back(KuSummand::mod(g, d));
            out.push_back(KuSummand::mod(g, d + 1));
        }
    }
}

// Smash product over the base ring spectrum, extended bilinearly over
// wedges. The result is in normal form.
inline KuModule smash(const KuModule& m, const KuModule& n) {
    std::vector<KuSummand> summands;
    for (const auto& a : m.summands())
        for (const auto& b : n.summands()) smash_summands(a, b, summands);
    return KuModule(std::move(summands));
}

inline FinAbGroup homotopy(const KuModule& m, int d) {
    FinAbGroup result;
    for (const auto& summand : m.summands()) result = direct_sum(result, summand.homotopy(d));
    return result;
}

// pi_d of the Bott-map cofiber of m. The Bott map is an isomorphism on
// every summand's homotopy once it is defined, so the cofiber picks up
// exactly the summands whose suspension degree equals d.
inline FinAbGroup bott_cofiber_homotopy(const KuModule& m, int d) {
    FinAbGroup result;
    for (const auto& summand : m.summands()) {
        if (summand.degree() != d) continue;
        result = direct_sum(result, summand.is_free() ? FinAbGroup::free(1)
                                                      : FinAbGroup::cyclic(summand.modulus()));
    }
    return result;
}

inline SummandCounts summand_counts(const KuModule& m) {
    SummandCounts counts;
    for (const auto& summand : m.summands()) {
        const bool even = summand.degree() % 2 == 0;
        if (summand.is_free())
            ++(even ? counts.r0 : counts.r1);
        else
            ++(even ? counts.t0 : counts.t1);
    }
    return counts;
}

namespace detail {

// Kernel and cokernel of multiplication by m on pi_d of a single summand.
struct MultiplicationEffect {
    FinAbGroup kernel;
    FinAbGroup cokernel;
};

inline MultiplicationEffect multiply_on_homotopy(std::int64_t m, const KuSummand& x, int d) {
    const FinAbGroup g = x.homotopy(d);
    if (g.is_zero()) return {};
    if (g.free_rank() > 0)  // multiplication by m on Z: injective, cokernel Z/m
        return {FinAbGroup::zero(), FinAbGroup::cyclic(m)};
    const std::int64_t n = g.torsion().front();  // Z/n
    const std::int64_t gcd_nm = std::gcd(n, m);
    return {FinAbGroup::cyclic(gcd_nm), FinAbGroup::cyclic(gcd_nm)};
}

}  // namespace detail

// pi_d of the smash of two single summands computed from the long exact
// sequence of the defining cofiber sequence ku --*m--> ku --> ku/m smashed
// with the (suspended) second factor:
//
//   pi_d(a ^ b) = coker(*m on pi_d X) (+) ker(*m on pi_(d-1) X)
//
// where X is the second factor suspended by both degrees. Since pi_* X is
// concentrated in a single parity the two contributions never overlap and
// there is no extension ambiguity. Deliberately does not use the gcd
// rewrite rule, so it can serve as an independent oracle for smash().
inline FinAbGroup smash_oracle(const KuSummand& a, const KuSummand& b, int d) {
    const int shift = a.degree() + b.degree();
    const KuSummand base =
        b.is_free() ? KuSummand::free(shift) : KuSummand::mod(b.modulus(), shift);
    if (a.is_free()) return base.homotopy(d);  // unit factor, no cofiber sequence needed
    const auto at_d = detail::multiply_on_homotopy(a.modulus(), base, d);
    const auto at_d_minus_1 = detail::multiply_on_homotopy(a.modulus(), base, d - 1);
    return direct_sum(at_d.cokernel, at_d_minus_1.kernel);
}

}  // namespace kudef
