#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace wcurve {

using i64 = std::int64_t;

struct StandardBasis {
    std::vector<i64> e;                 // e[0] = 0 < e[1] < ... (Apery set of r)
    std::map<i64, std::size_t> class_of;  // residue mod r -> index into e
    std::map<i64, i64> tilde;           // residue mod r -> minimal element of H in it
};

class NumericalSemigroup {
public:
    // Throws EmptyGenerators, NonPositiveGenerator, GcdNotOne or
    // RedundantGenerator (the message lists the redundant members).
    explicit NumericalSemigroup(std::vector<i64> generators);

    const std::vector<i64>& generators() const { return gens_; }
    i64 r() const { return gens_.front(); }
    std::size_t m() const { return gens_.size(); }
    const std::vector<i64>& gaps() const { return gaps_; }
    i64 genus() const { return static_cast<i64>(gaps_.size()); }
    i64 conductor() const { return conductor_; }
    i64 frobenius() const { return conductor_ - 1; }

    bool contains(i64 n) const;
    std::vector<i64> apery(i64 n) const;
    const StandardBasis& standard_basis() const { return basis_; }
    std::size_t class_index(i64 n) const;  // index i with e[i] = n mod r

    i64 e_star(std::size_t ell, std::size_t i) const;
    // N(i): i-th element of H (from 0).  N^c(i): i-th gap (0 <= i < g).
    i64 element(i64 i) const;
    i64 gap(i64 i) const;

    std::vector<i64> schubert_index() const;
    std::vector<i64> young_diagram() const;
    bool is_symmetric() const;

    std::pair<i64, i64> bezout_pair(i64 s) const;
    i64 gap_from_basis(std::size_t i, i64 k) const;

    std::vector<i64> valid_trace_degrees(i64 limit) const;
    i64 minimal_trace_degree() const;
    bool is_valid_trace_degree(i64 d) const;

    // Smallest standard-basis element coprime to r (s of the local parameter).
    i64 coprime_basis_element() const;

private:
    std::vector<i64> gens_;
    std::vector<i64> gaps_;
    i64 conductor_ = 0;
    std::vector<char> member_;  // membership table for 0..limit_
    i64 limit_ = 0;
    StandardBasis basis_;
};

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

}  // namespace wcurve
