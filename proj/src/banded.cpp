#include "fracsub/banded.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace fracsub {

BandedMatrix::BandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ld_(2 * kl + ku + 1),
      a_(static_cast<std::size_t>(ld_) * static_cast<std::size_t>(n), 0.0)
{
    if (n <= 0 || kl < 0 || ku < 0) throw std::invalid_argument("BandedMatrix: bad shape");
}

double& BandedMatrix::at(int i, int j)
{
    if (!in_band(i, j)) throw std::out_of_range("BandedMatrix::at outside band");
    return a_[static_cast<std::size_t>(kl_ + ku_ + i - j) +
              static_cast<std::size_t>(j) * static_cast<std::size_t>(ld_)];
}

double BandedMatrix::get(int i, int j) const
{
    if (!in_band(i, j)) return 0.0;
    return a_[static_cast<std::size_t>(kl_ + ku_ + i - j) +
              static_cast<std::size_t>(j) * static_cast<std::size_t>(ld_)];
}

BandedLU::BandedLU(BandedMatrix m) : f_(std::move(m)), pivots_(static_cast<std::size_t>(f_.n()))
{
    const int n = f_.n();
    const int kl = f_.kl();
    const int ku = f_.ku();
    for (int j = 0; j < n; ++j) {
        // pivot search in column j among rows j .. j+kl
        const int last = std::min(j + kl, n - 1);
        int p = j;
        double best = std::fabs(f_.get(j, j));
        for (int i = j + 1; i <= last; ++i) {
            const double v = std::fabs(f_.get(i, j));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        pivots_[static_cast<std::size_t>(j)] = p;
        if (best == 0.0) throw SingularMatrixError(j);

        const int wide = std::min(j + kl + ku, n - 1);
        if (p != j)
            for (int c = j; c <= wide; ++c)
                std::swap(f_.at(j, c), f_.at(p, c));

        const double piv = f_.get(j, j);
        for (int i = j + 1; i <= last; ++i) {
            const double mult = f_.get(i, j) / piv;
            f_.at(i, j) = mult;
            if (mult != 0.0)
                for (int c = j + 1; c <= wide; ++c)
                    f_.at(i, c) -= mult * f_.get(j, c);
        }
    }
}

std::vector<double> BandedLU::solve(std::vector<double> b) const
{
    const int n = f_.n();
    const int kl = f_.kl();
    const int ku = f_.ku();
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("BandedLU::solve: rhs size mismatch");

    for (int j = 0; j < n; ++j) {
        const int p = pivots_[static_cast<std::size_t>(j)];
        if (p != j) std::swap(b[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(p)]);
        const int last = std::min(j + kl, n - 1);
        for (int i = j + 1; i <= last; ++i)
            b[static_cast<std::size_t>(i)] -= f_.get(i, j) * b[static_cast<std::size_t>(j)];
    }
    for (int i = n - 1; i >= 0; --i) {
        const int wide = std::min(i + kl + ku, n - 1);
        double acc = b[static_cast<std::size_t>(i)];
        for (int c = i + 1; c <= wide; ++c)
            acc -= f_.get(i, c) * b[static_cast<std::size_t>(c)];
        b[static_cast<std::size_t>(i)] = acc / f_.get(i, i);
    }
    return b;
}

}  // namespace fracsub
