#ifndef RAMALIFT_MATRIX_HPP
#define RAMALIFT_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ramalift/numeric.hpp"
#include "ramalift/poly.hpp"

namespace ramalift {

/// Dense square matrix with exact integer entries, row major.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n)) {
        if (n < 0) throw std::invalid_argument("IntMatrix: negative size");
    }

    int size() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    /// Principal submatrix on the given (strictly increasing) index set.
    IntMatrix submatrix(const std::vector<int>& keep) const {
        IntMatrix s(static_cast<int>(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = 0; j < keep.size(); ++j)
                s.at(static_cast<int>(i), static_cast<int>(j)) = at(keep[i], keep[j]);
        return s;
    }

private:
    int n_;
    std::vector<Int> a_;
};

namespace detail {

/// Samuelson–Berkowitz iteration: division-free characteristic polynomial of
/// det(xI - A), coefficients returned in descending order with c[0] = 1.
/// O(n^4) scalar multiplications.
template <typename S, typename Getter>
std::vector<S> berkowitz_descending(int n, Getter entry) {
    std::vector<S> c{S(1)};
    std::vector<S> q, w, w2, next;
    for (int r = 1; r <= n; ++r) {
        // Principal r x r block split into the (r-1) x (r-1) block M, column
        // S = A[0..r-2][r-1], row R = A[r-1][0..r-2], corner a = A[r-1][r-1].
        q.assign(static_cast<size_t>(r) + 1, S(0));
        q[0] = S(1);
        q[1] = -entry(r - 1, r - 1);
        w.resize(static_cast<size_t>(r) - 1);
        for (int i = 0; i < r - 1; ++i) w[static_cast<size_t>(i)] = entry(i, r - 1);
        for (int k = 2; k <= r; ++k) {
            S dot = S(0);
            for (int i = 0; i < r - 1; ++i) dot += entry(r - 1, i) * w[static_cast<size_t>(i)];
            q[static_cast<size_t>(k)] = -dot;
            if (k == r) break;
            w2.assign(static_cast<size_t>(r) - 1, S(0));
            for (int i = 0; i < r - 1; ++i)
                for (int j = 0; j < r - 1; ++j)
                    w2[static_cast<size_t>(i)] += entry(i, j) * w[static_cast<size_t>(j)];
            w.swap(w2);
        }
        next.assign(static_cast<size_t>(r) + 1, S(0));
        for (size_t i = 0; i < next.size(); ++i)
            for (size_t k = 0; k <= i && k < q.size(); ++k)
                if (i - k < c.size()) next[i] += q[k] * c[i - k];
        c.swap(next);
    }
    return c;
}

inline bool small_entries(const IntMatrix& A) {
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < A.size(); ++j)
            if (A.at(i, j) < -1 || A.at(i, j) > 1) return false;
    return true;
}

/// Conservative pre-check that every intermediate of the Berkowitz iteration
/// on an n x n matrix with entries in {-1,0,1} fits a signed 128-bit word.
/// With rho = max absolute row sum, the Toeplitz vector entries are bounded
/// by rho^n and the running characteristic coefficients by 2^n * rho^(n/2+1)
/// (binomial count times a Hadamard minor bound), so each convolution stays
/// below (n+1) * rho^n * 2^n * rho^(n/2+1).
inline bool fits_int128(const IntMatrix& A) {
    const int n = A.size();
    if (n > 36) return false;
    Int rho = 2;
    for (int i = 0; i < n; ++i) {
        Int row = 0;
        for (int j = 0; j < n; ++j) row += boost::multiprecision::abs(A.at(i, j));
        rho = std::max(rho, row);
    }
    Int limit = pow_int(rho, static_cast<unsigned>(n)) *
                pow_int(Int(2), static_cast<unsigned>(n)) *
                pow_int(rho, static_cast<unsigned>(n / 2 + 1)) * (n + 1);
    return limit < (Int(1) << 126);
}

}  // namespace detail

/// Characteristic polynomial det(xI - A), monic, exact. Small sparse matrices
/// (entries in {-1,0,1} passing the 128-bit bound check) run in native
/// 128-bit arithmetic; everything else uses big integers.
inline IntPoly char_poly(const IntMatrix& A) {
    const int n = A.size();
    std::vector<Int> desc;
    if (detail::small_entries(A) && detail::fits_int128(A)) {
        auto c = detail::berkowitz_descending<__int128>(
            n, [&](int i, int j) { return static_cast<__int128>(static_cast<int>(A.at(i, j))); });
        desc.assign(c.size(), Int(0));
        for (size_t i = 0; i < c.size(); ++i) desc[i] = Int(c[i]);
    } else {
        desc = detail::berkowitz_descending<Int>(n, [&](int i, int j) { return A.at(i, j); });
    }
    std::vector<Int> asc(desc.rbegin(), desc.rend());
    return IntPoly{std::move(asc)};
}

/// Dense rational matrix; only what the exact identity checks need.
class RatMatrix {
public:
    RatMatrix() : n_(0) {}
    explicit RatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}
    explicit RatMatrix(const IntMatrix& m) : RatMatrix(m.size()) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) at(i, j) = Rat(m.at(i, j));
    }

    int size() const { return n_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    /// Exact solution of A x = rhs by Gaussian elimination; throws on a
    /// singular matrix.
    std::vector<Rat> solve(std::vector<Rat> rhs) const {
        if (static_cast<int>(rhs.size()) != n_)
            throw std::invalid_argument("solve: dimension mismatch");
        RatMatrix m = *this;
        for (int col = 0; col < n_; ++col) {
            int piv = -1;
            for (int r = col; r < n_; ++r)
                if (m.at(r, col) != 0) { piv = r; break; }
            if (piv < 0) throw std::invalid_argument("solve: singular matrix");
            if (piv != col) {
                for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(col, j));
                std::swap(rhs[static_cast<size_t>(piv)], rhs[static_cast<size_t>(col)]);
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col || m.at(r, col) == 0) continue;
                Rat f = m.at(r, col) / m.at(col, col);
                for (int j = col; j < n_; ++j) m.at(r, j) -= f * m.at(col, j);
                rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(col)];
            }
        }
        std::vector<Rat> x(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) x[static_cast<size_t>(i)] = rhs[static_cast<size_t>(i)] / m.at(i, i);
        return x;
    }

    /// Exact determinant by Gaussian elimination with rational pivots.
    Rat det() const {
        RatMatrix m = *this;
        Rat d(1);
        for (int col = 0; col < n_; ++col) {
            int piv = -1;
            for (int r = col; r < n_; ++r)
                if (m.at(r, col) != 0) { piv = r; break; }
            if (piv < 0) return Rat(0);
            if (piv != col) {
                for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(col, j));
                d = -d;
            }
            d *= m.at(col, col);
            for (int r = col + 1; r < n_; ++r) {
                if (m.at(r, col) == 0) continue;
                Rat f = m.at(r, col) / m.at(col, col);
                for (int j = col; j < n_; ++j) m.at(r, j) -= f * m.at(col, j);
            }
        }
        return d;
    }

private:
    int n_;
    std::vector<Rat> a_;
};

}  // namespace ramalift

#endif  // RAMALIFT_MATRIX_HPP
