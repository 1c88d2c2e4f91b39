#pragma once

#include "wcurve/semigroup.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wcurve {

// Monomial  prod_j Z_{r_j}^{exps[j]}  in the generators of H.
struct MonomialElement {
    std::vector<i64> exps;
    i64 weight = 0;

    bool operator==(const MonomialElement& o) const { return exps == o.exps; }
    std::string str(const std::vector<i64>& gens, const std::string& prime = "") const;
};

struct TraceMonomial {
    MonomialElement left;   // weight ehat_i
    std::size_t right;      // standard basis index i
    MonomialElement right_monomial;
};

struct MonomialTraceData {
    i64 d_h = 0;
    std::size_t ell = 0;
    std::vector<i64> ehat;
    std::vector<i64> delta;
    std::vector<TraceMonomial> monomials;
    bool symmetric = false;  // delta_0 == 0
};

class MonomialRing {
public:
    explicit MonomialRing(const NumericalSemigroup& H);

    const NumericalSemigroup& semigroup() const { return H_; }

    MonomialElement zeta_repr(i64 e) const;
    std::pair<std::size_t, i64> structure_b(std::size_t i, std::size_t j) const;
    // j is the 1-based generator position (2 <= j <= m).
    std::pair<i64, i64> binomial_fHj(std::size_t j) const;
    std::vector<std::pair<MonomialElement, MonomialElement>> toric_relations(i64 weight_cap) const;
    MonomialTraceData trace_monomials(i64 d) const;

    // Residue bookkeeping for the action Z_a -> zeta^a Z_a; returns a list
    // of human-readable violations (empty when invariant).
    std::vector<std::string> cyclic_action_check(i64 weight_cap) const;
    // (z^{r_j} (x) 1 - 1 (x) z^{r_j}) * sum_i z^{d-e_i} (x) z^{e_i} == 0 in the
    // monomial tensor product, for every generator.
    bool annihilates(i64 d) const;

private:
    MonomialElement make(std::vector<i64> exps) const;
    const NumericalSemigroup& H_;
};

}  // namespace wcurve
