#pragma once

#include "hopfforge/hopf.hpp"
#include "hopfforge/linalg.hpp"

namespace hopfforge {

// Finite-dimensional coalgebra in basis form: sparse coproduct, counit, and
// the Adams weight of each basis element.
struct Coalgebra {
    std::shared_ptr<const FieldCtx> field;
    std::vector<std::string> names;
    std::vector<std::vector<std::tuple<uint32_t, uint32_t, Fq>>> delta;
    std::vector<Fq> counit;
    std::vector<int> weight;
    std::vector<uint32_t> grouplikes;

    size_t dim() const { return names.size(); }
    uint32_t grouplike_named(const std::string& name) const;

    static Coalgebra from_hopf(const HopfPresentation& H);
    // k[x]/(x^e) with x primitive and binomial coproduct on powers; the
    // connected coalgebra underlying the rank-one Nichols algebra.
    static Coalgebra divided_power_line(std::shared_ptr<const FieldCtx> F, long e);
};

struct BicomoduleSpec {
    uint32_t g = 0, h = 0;  // basis indices of group-likes: delta_L(k) = h (x) k, delta_R(k) = k (x) g
};

// Columns of d^n_{g,h} : C^(x)n -> C^(x)(n+1) over the tensor-power basis;
// d^0(k) = k(g - h).
std::vector<SparseVec> differential_columns(const Coalgebra& C, BicomoduleSpec spec, int n);
Matrix differential_matrix(const Coalgebra& C, BicomoduleSpec spec, int n);

struct CohomologyReport {
    int n = 0;
    size_t dim_Z = 0, dim_B = 0, dim_H = 0;
    std::map<int, size_t> adams;  // Adams degree -> dim H^{n,j}, when graded
};

// Ranks by Gaussian elimination over GF(p^k); H^n = ker d^n / im d^(n-1).
// `budget` caps the largest tensor-power dimension handled.
CohomologyReport cohomology_dims(const Coalgebra& C, BicomoduleSpec spec, int n,
                                 uint64_t budget = 4'000'000);
// Same, restricted stratum by stratum to each Adams degree.
CohomologyReport graded_cohomology_dims(const Coalgebra& C, BicomoduleSpec spec, int n,
                                        uint64_t budget = 4'000'000);

// Reduced (cobar) complex of a connected coalgebra: C = C+ (+) Kg and
// d = sum (+/-) 1 (x)... (x) Delta+ (x) ... (x) 1. Must agree with
// cohomology_dims at spec (g, g) in positive degrees.
CohomologyReport cobar_dims(const Coalgebra& C, int n, uint64_t budget = 4'000'000);

struct NonprimitiveWitness {
    std::string element;    // basis element of C whose d^1 lands in D (x) D
    bool cocycle = false;   // in Z^2(D)
    bool nonzero_class = false;  // not in B^2(D)
};
// Looks for x in C \ D with d^1_{g,h}(x) a 2-cochain of the subcoalgebra D
// representing a nonzero class of H^2({}^g K^h, D). Confirms that omega/theta
// tails are genuinely non-primitive generators.
std::optional<NonprimitiveWitness> nonprimitive_generator_witness(
    const Coalgebra& C, const std::vector<uint32_t>& D_indices, BicomoduleSpec spec);

}  // namespace hopfforge
