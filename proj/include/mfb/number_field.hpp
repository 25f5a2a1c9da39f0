#pragma once

#include "mfb/errors.hpp"
#include "mfb/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mfb {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a simple number field Q[x]/(minpoly), stored in the power basis.
// A null field pointer means a plain rational; it embeds into any field on
// contact, so rational literals mix freely with field elements.
class NFElem {
public:
    NFElem() : c_{Rat(0)} {}
    NFElem(int v) : c_{Rat(v)} {}
    NFElem(const Rat& v) : c_{v} {}
    NFElem(FieldPtr field, std::vector<Rat> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational

    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend bool operator==(const NFElem& a, const NFElem& b);
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }
    NFElem operator-() const;
    NFElem inv() const; // DivisionByZero on zero
    NFElem pow(long e) const;

    // deterministic ordering (field-unified coefficient vectors, lexicographic)
    static bool lex_less(const NFElem& a, const NFElem& b);

    std::string str() const; // rendered in the generator symbol

private:
    FieldPtr field_; // null = rational
    std::vector<Rat> c_;
    friend class NumberField;
    static void unify(NFElem& a, NFElem& b);
    void reduce();
};

using NFPoly = Poly<NFElem>;

inline NFElem nf_inv(const NFElem& v) { return v.inv(); }

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // Verifies monic + integer coefficients + irreducibility (degree cap 8 for
    // the check; UnsupportedDegree beyond).
    static FieldPtr create(const std::string& generator, const QPoly& minimal_polynomial);
    // Internal path for fields produced by primitive-element flattening, whose
    // minimal polynomial is certified irreducible by construction.
    static FieldPtr create_certified(const std::string& generator, const QPoly& minimal_polynomial);
    static FieldPtr rationals();

    std::size_t degree() const { return static_cast<std::size_t>(minpoly_.degree()); }
    const QPoly& minimal_polynomial() const { return minpoly_; }
    const std::string& generator_name() const { return gen_; }
    bool is_rationals() const { return degree() == 1; }

    NFElem generator() const;
    NFElem element(std::vector<Rat> coeffs) const;
    NFElem from_rational(const Rat& v) const;

    static bool same(const FieldPtr& a, const FieldPtr& b);

    // MILNOR_MAX_DEGREE, default 16
    static long max_degree();

private:
    NumberField(std::string gen, QPoly minpoly)
        : gen_(std::move(gen)), minpoly_(std::move(minpoly)) {}
    std::string gen_;
    QPoly minpoly_;
};

// Embedding of one field into a larger one, given by the image of the generator.
struct FieldEmbedding {
    FieldPtr from;
    FieldPtr to;
    NFElem generator_image; // element of `to`
    NFElem map(const NFElem& x) const;
    NFPoly map(const NFPoly& p) const;
};

struct AdjoinResult {
    FieldPtr field;          // the extension (may be `from` itself when h is linear)
    FieldEmbedding embedding;
    NFElem root;             // a root of h inside `field`
};

// Adjoin a root of h (irreducible over F, monic) and flatten to a simple
// extension of Q via a primitive element. Throws UnsupportedDegree past the cap.
AdjoinResult adjoin_root(const FieldPtr& F, const NFPoly& h, const std::string& generator_hint);

// Trager: factor a monic squarefree g over F into monic irreducible factors.
std::vector<NFPoly> factor_over_field(const FieldPtr& F, const NFPoly& g);

// Split g into linear factors, extending F as needed (conjugate roots all
// materialize in the final field). Returns roots with multiplicities and the
// composed embedding from F into the final field.
struct SplitResult {
    FieldPtr field;
    FieldEmbedding embedding; // F -> field (identity if no extension)
    std::vector<std::pair<NFElem, int>> roots;
};
SplitResult split_completely(const FieldPtr& F, const NFPoly& g);

// Fresh generator name: lexicographically smallest single letter not in `used`.
std::string fresh_generator_name(const std::vector<std::string>& used);

} // namespace mfb
