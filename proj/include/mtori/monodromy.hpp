#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtori/zlinalg.hpp"

namespace mtori {

// Homology conventions for a closed oriented surface of genus g.
//
// H1(F; Z) = Z^{2g} with the interleaved symplectic basis
// (a1, b1, a2, b2, ..., ag, bg) and intersection form <a_i, b_i> = 1,
// i.e. <x, y> = x^T J y with J = diag([[0, 1], [-1, 0]], ...).
//
// A Dehn twist about a curve with class c acts by the transvection
//     T_c(x) = x + <x, c> c,
// so at genus 1 the twist about a1 = (1, 0) is [[1, -1], [0, 1]] and the twist
// about b1 = (0, 1) is [[1, 0], [1, 1]]. A word (c1, k1), (c2, k2), ... denotes
// the composite T_{c1}^{k1} o T_{c2}^{k2} o ..., whose matrix is the product
// taken left to right.

enum class Sl2Kind { Anosov, Reducible, Periodic };

std::string to_string(Sl2Kind kind);

struct Sl2Class {
    Sl2Kind kind = Sl2Kind::Periodic;
    std::optional<unsigned> order;            // iff Periodic, divides 12
    std::optional<unsigned> unipotent_power;  // iff Reducible

    std::string describe() const;
};

/// Classifies A in SL(2, Z). Throws NotUnimodular when det A != 1.
Sl2Class classify_sl2z(const IntMatrix& a);

struct TwistLetter {
    IntVector curve;  // primitive class in Z^{2g}
    Integer exponent;  // nonzero
    std::string label;

    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

struct TwistWord {
    unsigned genus = 1;
    std::vector<TwistLetter> letters;

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }

    /// Reversed letters with negated exponents.
    TwistWord inverse() const;

    friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

/// Checks genus >= 1, curve dimensions 2g, primitive curves, nonzero
/// exponents. Throws ValidationError naming the offending letter.
void validate(const TwistWord& word);

IntMatrix symplectic_form(unsigned genus);

/// <x, y> under the interleaved convention above.
Integer intersection(const IntVector& x, const IntVector& y);

/// Matrix of T_c^k on H1.
IntMatrix transvection(const IntVector& curve, const Integer& exponent);

/// Induced action of the word on H1(F; Z), a 2g x 2g symplectic matrix.
IntMatrix transvection_action(const TwistWord& word);

bool is_symplectic(const IntMatrix& m);

/// Factors A in SL(2, Z) into twists about a1 = (1, 0) and b1 = (0, 1) by
/// Euclidean reduction of the first column with least nonnegative remainders.
/// transvection_action(factor_into_twists(A)) == A.
TwistWord factor_into_twists(const IntMatrix& a);

}  // namespace mtori
