#pragma once

#include "mfb/bivar.hpp"

#include <optional>
#include <string>

namespace mfb {

// Recomputation recipe for a Newton-Puiseux branch: a chain of substitutions
// x_{L-1} = x_L^p, y_{L-1} = x_L^q (z0 + y_L), ending in a residual polynomial
// whose unique y-root through the origin is simple (lifted term by term).
struct PuiseuxRecipe {
    struct Level {
        long p;
        long q;
        NFElem z0;
    };
    std::vector<Level> levels;
    BivarPoly residual; // G with G(0,0) = 0 and dG/dy(0,0) != 0
    bool swapped = false;

    PuiseuxRecipe mapped(const FieldEmbedding& emb) const;
    // (s(tau), t(tau)) with both series certified at least to `prec`
    std::pair<Series, Series> realize(long prec) const;
};

// Truncated Puiseux parametrization of an irreducible plane-curve germ.
class Branch {
public:
    static constexpr long TRUNCATION_CAP = 512;

    static Branch exact(FieldPtr field, Series s, Series t,
                        std::optional<BivarPoly> defining = std::nullopt);
    static Branch from_recipe(FieldPtr field, PuiseuxRecipe recipe, long initial_prec,
                              std::optional<BivarPoly> defining = std::nullopt);

    const FieldPtr& field() const { return field_; }
    const Series& s() const { return s_; }
    const Series& t() const { return t_; }
    long truncation_order() const; // min certified precision of the two series
    const std::optional<BivarPoly>& defining_polynomial() const { return defining_; }

    // extend cached series so both are certified below `prec`;
    // TruncationExhausted past the cap
    void ensure_prec(long prec);

    Branch mapped(const FieldEmbedding& emb) const;
    Branch involuted() const; // (s, t) -> (s, -t)

    std::string str() const;

private:
    Branch() = default;
    void validate() const;
    FieldPtr field_;
    Series s_, t_;
    std::optional<BivarPoly> defining_;
    std::optional<PuiseuxRecipe> recipe_;
    bool t_negated_ = false; // involution applied on top of the recipe
};

struct BranchSet {
    FieldPtr field;
    std::vector<Branch> branches;
    std::string provenance;
};

// min(ord s, ord t)
long branch_multiplicity(const Branch& b);

// intersection number of two distinct germs (or a germ and a polynomial):
// order of the defining polynomial along the parametrization when available,
// Noether's infinitely-near-point formula otherwise; both routes are
// cross-checked when both apply.
long intersection_multiplicity(Branch& a, Branch& b);
long intersection_multiplicity(Branch& a, const BivarPoly& p);

// iota(s, t) = (s, -t)
Branch apply_involution(const Branch& b);

// equality of germs: parametrizations agree after tau -> u*tau for a unit u
// determined by the exponent lattice (primitive parametrizations)
bool branches_equal(Branch& a, Branch& b);

// Puiseux characteristic sequence, as exponents over the multiplicity
std::vector<Rat> characteristic_exponents(Branch& b);

} // namespace mfb
