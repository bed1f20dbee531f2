#include "hht/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hht {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

struct Interval {
    double a, b;
    std::complex<double> value;
    double error;
    double resabs;
    int depth;

    bool operator<(const Interval& other) const { return error < other.error; }
};

Interval gk15(const Integrand& f, double a, double b, int depth)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    std::complex<double> fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);

    std::complex<double> kron = kWgk[7] * fv[7];
    std::complex<double> gauss = kWg[3] * fv[7];
    double resabs = kWgk[7] * std::abs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        const std::complex<double> pair = fv[i] + fv[14 - i];
        kron += kWgk[i] * pair;
        resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        if (i % 2 == 1)
            gauss += kWg[i / 2] * pair;
    }
    kron *= h;
    gauss *= h;
    resabs *= h;

    // resasc scaling keeps the estimate honest on singular-ish panels.
    const std::complex<double> mean = kron / (b - a);
    double resasc = kWgk[7] * std::abs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc +=
            kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
    resasc *= h;

    double err = std::abs(kron - gauss);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, kron, err, resabs, depth};
}

} // namespace

QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadOptions& opt)
{
    QuadResult out;
    if (a == b)
        return out;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    // Global strategy: keep the worst interval on top and split it until
    // the total estimate meets the tolerance or the budget runs out.
    std::vector<Interval> heap;
    std::vector<Interval> frozen;
    const int panels = 1 << std::min(std::max(0, opt.initial_splits), 14);
    const double h = (b - a) / panels;
    double total_error = 0.0;
    double resabs = 0.0;
    for (int i = 0; i < panels; ++i) {
        Interval seg = gk15(f, a + i * h, a + (i + 1) * h, 0);
        out.evals += 15;
        total_error += seg.error;
        resabs += seg.resabs;
        heap.push_back(seg);
    }
    std::make_heap(heap.begin(), heap.end());

    const double tol = std::max(opt.abs_tol, opt.rel_tol * resabs);
    while (total_error > tol && !heap.empty() &&
           heap.size() + frozen.size() < opt.max_intervals) {
        std::pop_heap(heap.begin(), heap.end());
        const Interval worst = heap.back();
        heap.pop_back();
        if (worst.depth >= opt.max_depth ||
            worst.b - worst.a <=
                (std::abs(worst.a) + std::abs(worst.b)) * 5e-16 + 1e-300) {
            frozen.push_back(worst);
            continue;
        }
        const double m = 0.5 * (worst.a + worst.b);
        const Interval left = gk15(f, worst.a, m, worst.depth + 1);
        const Interval right = gk15(f, m, worst.b, worst.depth + 1);
        out.evals += 30;
        total_error += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end());
    }

    std::complex<double> value = 0.0;
    for (const auto& seg : frozen)
        value += seg.value;
    for (const auto& seg : heap)
        value += seg.value;
    out.value = sign * value;
    out.error = total_error;
    return out;
}

QuadResult integrate_segmented(const Integrand& f,
                               const std::vector<double>& breakpoints,
                               const QuadOptions& opt)
{
    if (breakpoints.size() < 2)
        throw std::invalid_argument("integrate_segmented: need >= 2 points");
    QuadResult out;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i] == breakpoints[i + 1])
            continue;
        const QuadResult part =
            integrate(f, breakpoints[i], breakpoints[i + 1], opt);
        out.value += part.value;
        out.error += part.error;
        out.evals += part.evals;
    }
    return out;
}

std::complex<double>
extrapolate_to_zero(const std::vector<double>& xs,
                    const std::vector<std::complex<double>>& ys, int order)
{
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("extrapolate_to_zero: bad sample set");
    const std::size_t m =
        std::min(xs.size(), static_cast<std::size_t>(order) + 1);
    const std::size_t off = xs.size() - m;

    std::vector<double> x(xs.begin() + off, xs.end());
    std::vector<std::complex<double>> t(ys.begin() + off, ys.end());
    // Neville tableau evaluated at 0.
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = 0; i + level < m; ++i)
            t[i] = (x[i + level] * t[i] - x[i] * t[i + 1]) /
                   (x[i + level] - x[i]);
    return t[0];
}

} // namespace hht
