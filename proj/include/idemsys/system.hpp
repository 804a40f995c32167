#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idemsys/linalg.hpp"
#include "idemsys/matrix.hpp"

namespace idemsys {

// One violated axiom, with enough context to name it precisely.
struct AxiomFailure {
    enum class Kind { Orthogonality, Idempotency, RankOne, Nonvanishing };
    Kind kind;
    std::string family;        // "E" or "E*"
    std::vector<int> indices;  // witness indices
    std::string detail;        // e.g. "rank(E_1)=1 violated: rank is 2"

    // Stable identifier, e.g. "rank(E_1)=1" or "E*_0 E_2 E*_0 != 0".
    std::string id() const;
};

struct ValidationReport {
    bool ok = false;
    std::vector<AxiomFailure> failures;
};

// A validated pair of families {E_i}, {E*_i} of mutually orthogonal
// rank-1 idempotents of order d+1 with all E_0 E*_i E_0 and E*_0 E_i E*_0
// nonzero. Immutable once constructed.
class IdempotentSystem {
public:
    struct Validated;

    // Checks every axiom and reports all violations rather than failing
    // fast. Shape problems (list lengths, non-square matrices, order
    // != d+1) throw ShapeError; axiom violations are reported.
    static Validated validate(std::vector<SquareMatrix> e, std::vector<SquareMatrix> estar);

    int d() const { return d_; }
    int order() const { return d_ + 1; }
    const SquareMatrix& E(int i) const { return e_[static_cast<std::size_t>(i)]; }
    const SquareMatrix& Estar(int i) const { return estar_[static_cast<std::size_t>(i)]; }
    const std::vector<SquareMatrix>& E() const { return e_; }
    const std::vector<SquareMatrix>& Estar() const { return estar_; }

    // Swaps the two families; involutive.
    IdempotentSystem dual() const;

    friend bool operator==(const IdempotentSystem& a, const IdempotentSystem& b) {
        return a.e_ == b.e_ && a.estar_ == b.estar_;
    }

private:
    IdempotentSystem(int d, std::vector<SquareMatrix> e, std::vector<SquareMatrix> estar)
        : d_(d), e_(std::move(e)), estar_(std::move(estar)) {}

    int d_;
    std::vector<SquareMatrix> e_, estar_;
};

// Outcome of validation: the sealed system when every axiom holds,
// otherwise a report naming each violation.
struct IdempotentSystem::Validated {
    std::optional<IdempotentSystem> system;
    ValidationReport report;
};

// Gram matrix of the bilinear form fixed by both idempotent families:
// G E_i = E_i^t G and G E*_i = E*_i^t G for all i. G is symmetric,
// nonsingular, and scaled so that its first nonzero entry is 1.
class SymmetrizingForm {
public:
    SymmetrizingForm(SquareMatrix gram, std::string normalization);

    const SquareMatrix& gram() const { return gram_; }
    const SquareMatrix& gram_inverse() const { return gram_inv_; }
    const std::string& normalization() const { return normalization_; }

    // <u, v> = u^t G v.
    Rational pair(const Vector& u, const Vector& v) const;
    Rational norm_squared(const Vector& u) const { return pair(u, u); }

private:
    SquareMatrix gram_, gram_inv_;
    std::string normalization_;
};

// Solves for the form constructively. Throws NotSymmetricError when the
// solution space is zero or its generator is singular or asymmetric, and
// AmbiguousFormError when the space has dimension > 1 (impossible for a
// validated system).
SymmetrizingForm symmetrizer(const IdempotentSystem& phi);

// The antiautomorphism realized by the form: A -> G^-1 A^t G.
SquareMatrix apply_dagger(const SymmetrizingForm& form, const SquareMatrix& a);

}  // namespace idemsys
