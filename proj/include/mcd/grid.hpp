#pragma once

// Tensor-product space and space-time grids on the coordinate box
// [x1min,x1max] x [rmin,rmax] x [thmin,thmax], nodes inclusive of endpoints.
// Layout: theta is the fastest-varying index, then r, then x1; time-major
// for space-time fields.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mcd {

using cplx = std::complex<double>;

struct SpaceGrid {
    int n1 = 0, nr = 0, nth = 0;
    double x1min = 0, x1max = 0;
    double rmin = 0, rmax = 0;
    double thmin = 0, thmax = 0;

    SpaceGrid() = default;
    SpaceGrid(int n1_, int nr_, int nth_, double x1min_, double x1max_,
              double rmin_, double rmax_, double thmin_, double thmax_)
        : n1(n1_), nr(nr_), nth(nth_), x1min(x1min_), x1max(x1max_),
          rmin(rmin_), rmax(rmax_), thmin(thmin_), thmax(thmax_) {
        if (n1 < 3 || nr < 3 || nth < 3)
            throw std::invalid_argument("SpaceGrid: need at least 3 nodes per direction");
        if (!(x1max > x1min && rmax > rmin && thmax > thmin))
            throw std::invalid_argument("SpaceGrid: empty coordinate range");
    }

    std::size_t size() const { return std::size_t(n1) * nr * nth; }
    double h1() const { return (x1max - x1min) / (n1 - 1); }
    double hr() const { return (rmax - rmin) / (nr - 1); }
    double hth() const { return (thmax - thmin) / (nth - 1); }
    double hmax() const { return std::max(h1(), std::max(hr(), hth())); }

    double x1(int i) const { return x1min + i * h1(); }
    double r(int j) const { return rmin + j * hr(); }
    double th(int k) const { return thmin + k * hth(); }

    std::size_t idx(int i, int j, int k) const {
        return (std::size_t(i) * nr + j) * nth + k;
    }
    bool boundary(int i, int j, int k) const {
        return i == 0 || i == n1 - 1 || j == 0 || j == nr - 1 || k == 0 || k == nth - 1;
    }

    // Nested refinement: every coarse node is a fine node (h -> h/2).
    SpaceGrid refined() const {
        return SpaceGrid(2 * n1 - 1, 2 * nr - 1, 2 * nth - 1,
                         x1min, x1max, rmin, rmax, thmin, thmax);
    }
    // Trapezoid weight for one direction, node index i of n nodes with spacing h.
    static double trapw(int i, int n, double h) {
        return (i == 0 || i == n - 1) ? 0.5 * h : h;
    }
    double quadw(int i, int j, int k) const {
        return trapw(i, n1, h1()) * trapw(j, nr, hr()) * trapw(k, nth, hth());
    }
};

struct TimeGrid {
    int nt = 0;      // number of steps; nt+1 levels
    double T = 0;

    TimeGrid() = default;
    TimeGrid(int nt_, double T_) : nt(nt_), T(T_) {
        if (nt < 2) throw std::invalid_argument("TimeGrid: need at least 2 steps");
        if (!(T > 0)) throw std::invalid_argument("TimeGrid: T must be positive");
    }
    int levels() const { return nt + 1; }
    double dt() const { return T / nt; }
    double t(int k) const { return k * dt(); }
    TimeGrid refined() const { return TimeGrid(2 * nt, T); }
    double trapw(int k) const { return (k == 0 || k == nt) ? 0.5 * dt() : dt(); }
};

template <typename T>
struct Field3T {
    const SpaceGrid* g = nullptr;
    std::vector<T> v;

    Field3T() = default;
    explicit Field3T(const SpaceGrid& grid, T fill = T{})
        : g(&grid), v(grid.size(), fill) {}

    T& operator()(int i, int j, int k) { return v[g->idx(i, j, k)]; }
    const T& operator()(int i, int j, int k) const { return v[g->idx(i, j, k)]; }
    T* data() { return v.data(); }
    const T* data() const { return v.data(); }
    std::size_t size() const { return v.size(); }
};

using Field3 = Field3T<cplx>;
using RealField3 = Field3T<double>;

// Space-time field, time level major. Slice k is a contiguous Field3-shaped block.
template <typename T>
struct Field4T {
    const SpaceGrid* g = nullptr;
    const TimeGrid* tg = nullptr;
    std::vector<T> v;

    Field4T() = default;
    Field4T(const SpaceGrid& grid, const TimeGrid& time, T fill = T{})
        : g(&grid), tg(&time), v(grid.size() * time.levels(), fill) {}

    T* slice(int k) { return v.data() + std::size_t(k) * g->size(); }
    const T* slice(int k) const { return v.data() + std::size_t(k) * g->size(); }
    T& operator()(int k, int i, int j, int l) { return v[std::size_t(k) * g->size() + g->idx(i, j, l)]; }
    const T& operator()(int k, int i, int j, int l) const {
        return v[std::size_t(k) * g->size() + g->idx(i, j, l)];
    }
    std::size_t size() const { return v.size(); }
};

using Field4 = Field4T<cplx>;
using RealField4 = Field4T<double>;

// Restriction of a field on grid.refined() back to grid nodes (index striding).
template <typename T>
Field3T<T> restrict_fine(const SpaceGrid& coarse, const SpaceGrid& fine, const Field3T<T>& f) {
    if (fine.n1 != 2 * coarse.n1 - 1 || fine.nr != 2 * coarse.nr - 1 || fine.nth != 2 * coarse.nth - 1)
        throw std::invalid_argument("restrict_fine: grids are not nested");
    Field3T<T> out(coarse);
    for (int i = 0; i < coarse.n1; ++i)
        for (int j = 0; j < coarse.nr; ++j)
            for (int k = 0; k < coarse.nth; ++k)
                out(i, j, k) = f(2 * i, 2 * j, 2 * k);
    return out;
}

} // namespace mcd
