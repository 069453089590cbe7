#pragma once

#include <stdexcept>
#include <vector>

namespace fracsub {

// Band matrix with kl sub- and ku superdiagonals in LAPACK-style storage,
// with kl extra rows for the fill-in produced by partial pivoting.
class BandedMatrix {
public:
    BandedMatrix(int n, int kl, int ku);

    int n() const { return n_; }
    int kl() const { return kl_; }
    int ku() const { return ku_; }

    // entry (i, j); writable only inside the fill-extended band j-ku-kl <= i <= j+kl
    double& at(int i, int j);
    double get(int i, int j) const;   // zero outside the band

    bool in_band(int i, int j) const
    {
        return i >= 0 && j >= 0 && i < n_ && j < n_ && i - j <= kl_ && j - i <= ku_ + kl_;
    }

private:
    int n_, kl_, ku_, ld_;
    std::vector<double> a_;
};

struct SingularMatrixError : std::runtime_error {
    int pivot_index;
    explicit SingularMatrixError(int idx)
        : std::runtime_error("singular matrix: zero pivot at index " + std::to_string(idx)),
          pivot_index(idx) {}
};

// LU factorization with partial pivoting, factors kept in band storage.
class BandedLU {
public:
    explicit BandedLU(BandedMatrix m);   // throws SingularMatrixError

    std::vector<double> solve(std::vector<double> rhs) const;

    const BandedMatrix& factors() const { return f_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    BandedMatrix f_;
    std::vector<int> pivots_;
};

}  // namespace fracsub
