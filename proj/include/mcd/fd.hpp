#pragma once

// Second-order finite differences on the tensor grid: centered in the
// interior, 3-point one-sided at boundary nodes.

#include "mcd/grid.hpp"

namespace mcd {

enum class Dir { X1, R, Th };

template <typename T>
inline T fd1(const Field3T<T>& f, Dir d, int i, int j, int k) {
    const SpaceGrid& g = *f.g;
    auto val = [&](int a, int b, int c) { return f(a, b, c); };
    int n, p;
    double h;
    switch (d) {
        case Dir::X1: n = g.n1; p = i; h = g.h1(); break;
        case Dir::R: n = g.nr; p = j; h = g.hr(); break;
        default: n = g.nth; p = k; h = g.hth(); break;
    }
    auto at = [&](int q) {
        switch (d) {
            case Dir::X1: return val(q, j, k);
            case Dir::R: return val(i, q, k);
            default: return val(i, j, q);
        }
    };
    if (p == 0) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2 * h);
    if (p == n - 1) return (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) / (2 * h);
    return (at(p + 1) - at(p - 1)) / (2 * h);
}

template <typename T>
inline T fd2(const Field3T<T>& f, Dir d, int i, int j, int k) {
    const SpaceGrid& g = *f.g;
    int n, p;
    double h;
    switch (d) {
        case Dir::X1: n = g.n1; p = i; h = g.h1(); break;
        case Dir::R: n = g.nr; p = j; h = g.hr(); break;
        default: n = g.nth; p = k; h = g.hth(); break;
    }
    auto at = [&](int q) {
        switch (d) {
            case Dir::X1: return f(q, j, k);
            case Dir::R: return f(i, q, k);
            default: return f(i, j, q);
        }
    };
    // one-sided second derivative (first order) at the ends; callers that
    // need O(h^2) everywhere restrict to interior nodes
    if (p == 0) return (at(0) - 2.0 * at(1) + at(2)) / (h * h);
    if (p == n - 1) return (at(n - 1) - 2.0 * at(n - 2) + at(n - 3)) / (h * h);
    return (at(p + 1) - 2.0 * at(p) + at(p - 1)) / (h * h);
}

// Time derivative of a space-time field at level kt: centered at interior
// levels, first-order one-sided at the endpoints.
template <typename T>
inline T fdt(const Field4T<T>& f, int kt, int i, int j, int k) {
    const TimeGrid& tg = *f.tg;
    double dt = tg.dt();
    if (kt == 0) return (f(1, i, j, k) - f(0, i, j, k)) / dt;
    if (kt == tg.nt) return (f(kt, i, j, k) - f(kt - 1, i, j, k)) / dt;
    return (f(kt + 1, i, j, k) - f(kt - 1, i, j, k)) / (2 * dt);
}

} // namespace mcd
