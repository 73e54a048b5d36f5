#include "mtori/zlinalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

#include "mtori/error.hpp"

namespace mtori {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            raise(ErrorKind::InvalidArgument, "ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows)
{
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c)
            raise(ErrorKind::InvalidArgument, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols)
{
    return from_rows(cols).transpose();
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::power(unsigned exponent) const
{
    if (!is_square())
        raise(ErrorKind::InvalidArgument, "power of a non-square matrix");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (exponent) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

IntVector IntMatrix::apply(const IntVector& x) const
{
    if (x.size() != cols_)
        raise(ErrorKind::InvalidArgument, "dimension mismatch in matrix-vector product");
    IntVector y(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            y[i] += (*this)(i, j) * x[j];
    return y;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i)
            os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                os << ',';
            os << (*this)(i, j).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_)
        return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_)
        return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                        b.data_.end());
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        raise(ErrorKind::InvalidArgument, "dimension mismatch in matrix product");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        raise(ErrorKind::InvalidArgument, "dimension mismatch in matrix sum");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    return a + (-b);
}

IntMatrix operator-(const IntMatrix& a)
{
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = -a(i, j);
    return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a)
{
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = s * a(i, j);
    return c;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

Integer determinant(const IntMatrix& m)
{
    if (!m.is_square())
        raise(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rational_rank(const IntMatrix& m)
{
    IntMatrix a = m;
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t p = rank;
        while (p < r && a(p, col) == 0)
            ++p;
        if (p == r)
            continue;
        a.swap_rows(rank, p);
        for (std::size_t i = rank + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j) {
                Integer t = a(i, j) * a(rank, col) - a(i, col) * a(rank, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    return rank;
}

std::size_t rational_kernel_rank(const IntMatrix& m)
{
    return m.cols() - rational_rank(m);
}

std::size_t SmithForm::rank() const
{
    std::size_t r = 0;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D(i, i) != 0)
            ++r;
    return r;
}

IntVector SmithForm::diagonal() const
{
    const std::size_t n = std::min(D.rows(), D.cols());
    IntVector d(n);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = D(i, i);
    return d;
}

namespace {

struct Pivot {
    std::size_t row;
    std::size_t col;
    bool found = false;
};

// Least |entry| among nonzero entries of the trailing block, ties by (row, col).
Pivot min_pivot(const IntMatrix& d, std::size_t t)
{
    Pivot best{0, 0, false};
    Integer best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            Integer a = abs(d(i, j));
            if (!best.found || a < best_abs) {
                best = {i, j, true};
                best_abs = a;
            }
        }
    return best;
}

// Same rule restricted to row t and column t.
Pivot min_cross_pivot(const IntMatrix& d, std::size_t t)
{
    Pivot best{0, 0, false};
    Integer best_abs;
    auto consider = [&](std::size_t i, std::size_t j) {
        if (d(i, j) == 0)
            return;
        Integer a = abs(d(i, j));
        if (!best.found || a < best_abs || (a == best_abs && std::pair(i, j) < std::pair(best.row, best.col))) {
            best = {i, j, true};
            best_abs = a;
        }
    };
    for (std::size_t j = t; j < d.cols(); ++j)
        consider(t, j);
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        consider(i, t);
    return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    const std::size_t r = m.rows(), c = m.cols();
    SmithForm s{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& D = s.D;
    IntMatrix& U = s.U;
    IntMatrix& V = s.V;

    auto bring_to = [&](std::size_t t, const Pivot& p) {
        D.swap_rows(t, p.row);
        U.swap_rows(t, p.row);
        D.swap_cols(t, p.col);
        V.swap_cols(t, p.col);
    };

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        Pivot p = min_pivot(D, t);
        if (!p.found)
            break;
        bring_to(t, p);
        for (;;) {
            if (D(t, t) < 0) {
                D.negate_row(t);
                U.negate_row(t);
            }
            bool clean = true;
            Integer q;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (D(i, t) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                D.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (D(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (D(t, j) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                D.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (D(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                bring_to(t, min_cross_pivot(D, t));
                continue;
            }
            // Row t and column t are clear; enforce d_t | every trailing entry.
            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        D.add_row_multiple(t, i, 1);
                        U.add_row_multiple(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible)
                break;
        }
    }
#ifndef NDEBUG
    assert(verify_smith_form(m, s));
#endif
    return s;
}

bool verify_smith_form(const IntMatrix& m, const SmithForm& s)
{
    if (s.U.rows() != m.rows() || s.V.cols() != m.cols())
        return false;
    if (s.U * m * s.V != s.D)
        return false;
    if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1)
        return false;
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && s.D(i, j) != 0)
                return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.D(i, i) < 0)
            return false;
        if (i + 1 < n) {
            const Integer& a = s.D(i, i);
            const Integer& b = s.D(i + 1, i + 1);
            if (a == 0 ? b != 0 : !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()))
                return false;
        }
    }
    return true;
}

CokernelStructure cokernel(const IntMatrix& m)
{
    CokernelStructure out;
    if (m.rows() == 0)
        return out;
    if (m.cols() == 0) {
        out.free_rank = m.rows();
        return out;
    }
    const SmithForm s = smith_normal_form(m);
    out.free_rank = m.rows() - s.rank();
    for (const Integer& d : s.diagonal())
        if (d > 1)
            out.torsion.push_back(d);
    return out;
}

IntMatrix integer_kernel_basis(const IntMatrix& m)
{
    if (m.rows() == 0)
        return IntMatrix::identity(m.cols());
    const SmithForm s = smith_normal_form(m);
    const std::size_t rank = s.rank();
    // M V = U^-1 D, so columns rank.. of V span the kernel over Z.
    IntMatrix k(m.cols(), m.cols() - rank);
    for (std::size_t j = rank; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            k(i, j - rank) = s.V(i, j);
    return k;
}

std::optional<IntVector> solve_in_lattice(const IntMatrix& basis, const IntVector& w)
{
    if (w.size() != basis.rows())
        raise(ErrorKind::InvalidArgument, "dimension mismatch in lattice solve");
    if (basis.cols() == 0) {
        for (const Integer& x : w)
            if (x != 0)
                return std::nullopt;
        return IntVector{};
    }
    const SmithForm s = smith_normal_form(basis);
    const IntVector y = s.U.apply(w);
    IntVector z(basis.cols(), Integer(0));
    for (std::size_t i = 0; i < y.size(); ++i) {
        const bool on_diagonal = i < basis.cols() && s.D(i, i) != 0;
        if (!on_diagonal) {
            if (y[i] != 0)
                return std::nullopt;
            continue;
        }
        if (!mpz_divisible_p(y[i].get_mpz_t(), s.D(i, i).get_mpz_t()))
            return std::nullopt;
        mpz_divexact(z[i].get_mpz_t(), y[i].get_mpz_t(), s.D(i, i).get_mpz_t());
    }
    return s.V.apply(z);
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    if (!m.is_square())
        raise(ErrorKind::NotUnimodular, "matrix is not square");
    const SmithForm s = smith_normal_form(m);
    if (!s.D.is_identity())
        raise(ErrorKind::NotUnimodular, "determinant of " + m.to_string() + " is not +-1");
    return s.V * s.U;
}

Integer content(const IntVector& v)
{
    Integer g = 0;
    for (const Integer& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

bool is_primitive(const IntVector& v)
{
    return content(v) == 1;
}

IntVector primitive_part(const IntVector& v)
{
    const Integer g = content(v);
    if (g == 0)
        return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return out;
}

std::string to_string(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace mtori
