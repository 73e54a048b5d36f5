#include "mtori/monodromy.hpp"

#include <algorithm>

#include "mtori/error.hpp"

namespace mtori {

std::string to_string(Sl2Kind kind)
{
    switch (kind) {
    case Sl2Kind::Anosov: return "Anosov";
    case Sl2Kind::Reducible: return "Reducible";
    case Sl2Kind::Periodic: return "Periodic";
    }
    return "?";
}

std::string Sl2Class::describe() const
{
    switch (kind) {
    case Sl2Kind::Anosov: return "Anosov";
    case Sl2Kind::Reducible:
        return "Reducible (unipotent power " + std::to_string(unipotent_power.value_or(0)) + ")";
    case Sl2Kind::Periodic: return "Periodic order " + std::to_string(order.value_or(0));
    }
    return "?";
}

namespace {

void require_sl2(const IntMatrix& a)
{
    if (a.rows() != 2 || a.cols() != 2)
        raise(ErrorKind::NotUnimodular, "expected a 2x2 matrix, got " + a.to_string());
    if (determinant(a) != 1)
        raise(ErrorKind::NotUnimodular,
              "det " + a.to_string() + " = " + determinant(a).get_str() + ", expected 1");
}

}  // namespace

Sl2Class classify_sl2z(const IntMatrix& a)
{
    require_sl2(a);
    const IntMatrix id = IntMatrix::identity(2);
    IntMatrix p = a;
    for (unsigned n = 1; n <= 12; ++n) {
        if (p == id)
            return {Sl2Kind::Periodic, n, std::nullopt};
        p = p * a;
    }
    const Integer trace = a(0, 0) + a(1, 1);
    if (abs(trace) > 2)
        return {Sl2Kind::Anosov, std::nullopt, std::nullopt};
    // |trace| = 2 and A != +-I: A or A^2 is a nontrivial unipotent.
    p = a;
    for (unsigned n = 1;; ++n) {
        const IntMatrix nil = p - id;
        if ((nil * nil).is_zero())
            return {Sl2Kind::Reducible, std::nullopt, n};
        p = p * a;
    }
}

TwistWord TwistWord::inverse() const
{
    TwistWord inv{genus, {}};
    inv.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        inv.letters.push_back({it->curve, -it->exponent, it->label});
    return inv;
}

void validate(const TwistWord& word)
{
    if (word.genus < 1)
        raise(ErrorKind::ValidationError, "twist word genus must be >= 1");
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
        const TwistLetter& l = word.letters[i];
        const std::string where = "letter " + std::to_string(i) + " (" + l.label + ")";
        if (l.curve.size() != 2 * word.genus)
            raise(ErrorKind::GenusMismatch, where + " has " + std::to_string(l.curve.size()) +
                                                " coordinates, genus " + std::to_string(word.genus) +
                                                " needs " + std::to_string(2 * word.genus));
        if (!is_primitive(l.curve))
            raise(ErrorKind::ValidationError, where + ": curve class " + to_string(l.curve) +
                                                  " is not primitive");
        if (l.exponent == 0)
            raise(ErrorKind::ValidationError, where + ": exponent must be nonzero");
    }
}

IntMatrix symplectic_form(unsigned genus)
{
    IntMatrix j(2 * genus, 2 * genus);
    for (unsigned i = 0; i < genus; ++i) {
        j(2 * i, 2 * i + 1) = 1;
        j(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

Integer intersection(const IntVector& x, const IntVector& y)
{
    if (x.size() != y.size() || x.size() % 2 != 0)
        raise(ErrorKind::InvalidArgument, "intersection of incompatible classes");
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); i += 2)
        s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
}

IntMatrix transvection(const IntVector& curve, const Integer& exponent)
{
    // T_c^k = I + k c (J c)^T, since <x, c> = x^T J c.
    const std::size_t n = curve.size();
    const IntVector jc = symplectic_form(static_cast<unsigned>(n / 2)).apply(curve);
    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t(i, j) += exponent * curve[i] * jc[j];
    return t;
}

IntMatrix transvection_action(const TwistWord& word)
{
    validate(word);
    IntMatrix m = IntMatrix::identity(2 * word.genus);
    for (const TwistLetter& l : word.letters)
        m = m * transvection(l.curve, l.exponent);
    return m;
}

bool is_symplectic(const IntMatrix& m)
{
    if (!m.is_square() || m.rows() % 2 != 0)
        return false;
    const IntMatrix j = symplectic_form(static_cast<unsigned>(m.rows() / 2));
    return m.transpose() * j * m == j;
}

TwistWord factor_into_twists(const IntMatrix& a)
{
    require_sl2(a);
    IntMatrix m = a;
    struct Step {
        int curve;  // 0: a1, 1: b1
        Integer k;
    };
    std::vector<Step> steps;

    // Left multiplication by T_a^k subtracts k * row1 from row0; by T_b^k adds
    // k * row0 to row1.
    // k is taken by value because callers pass entries of m.
    auto twist_a = [&](Integer k) {
        if (k == 0)
            return;
        m.add_row_multiple(0, 1, -k);
        steps.push_back({0, k});
    };
    auto twist_b = [&](Integer k) {
        if (k == 0)
            return;
        m.add_row_multiple(1, 0, k);
        steps.push_back({1, k});
    };

    Integer r;
    while (!(m(0, 0) == 1 && m(1, 0) == 0)) {
        if (m(1, 0) == 0) {
            // Column is (-1, 0).
            twist_b(1);
            continue;
        }
        const Integer q = m(1, 0);
        Integer aq = abs(q);
        mpz_fdiv_r(r.get_mpz_t(), m(0, 0).get_mpz_t(), aq.get_mpz_t());
        twist_a(Integer((m(0, 0) - r) / q));
        if (m(0, 0) == 0)
            twist_a(Integer(-m(1, 0)));  // column (0, +-1) -> (1, +-1)
        mpz_fdiv_r(r.get_mpz_t(), m(1, 0).get_mpz_t(), m(0, 0).get_mpz_t());
        twist_b(Integer((r - m(1, 0)) / m(0, 0)));
    }
    twist_a(m(0, 1));

    // steps_n ... steps_1 A = I, hence A = steps_1^-1 ... steps_n^-1.
    TwistWord word{1, {}};
    for (const Step& s : steps) {
        IntVector curve = s.curve == 0 ? IntVector{1, 0} : IntVector{0, 1};
        Integer e = -s.k;
        if (!word.letters.empty() && word.letters.back().curve == curve) {
            word.letters.back().exponent += e;
            if (word.letters.back().exponent == 0)
                word.letters.pop_back();
            continue;
        }
        word.letters.push_back({std::move(curve), e, s.curve == 0 ? "a1" : "b1"});
    }
    return word;
}

}  // namespace mtori
