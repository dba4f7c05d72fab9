#include <heisen/jet.hpp>

#include <algorithm>
#include <cmath>

namespace heisen {

Jet Jet::constant(cplx v, cplx center, int order) {
    if (order < 0) raise(errc::order_exhausted, "jet order must be >= 0");
    std::vector<cplx> a(static_cast<size_t>(order) + 1, cplx{0.0, 0.0});
    a[0] = v;
    return Jet(center, std::move(a));
}

Jet Jet::variable(cplx center, int order) {
    if (order < 1) raise(errc::order_exhausted, "variable jet needs order >= 1");
    std::vector<cplx> a(static_cast<size_t>(order) + 1, cplx{0.0, 0.0});
    a[0] = center;
    a[1] = 1.0;
    return Jet(center, std::move(a));
}

Jet Jet::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        raise(errc::order_exhausted, "truncation order out of range");
    std::vector<cplx> a(a_.begin(), a_.begin() + new_order + 1);
    return Jet(center_, std::move(a));
}

double Jet::max_abs() const {
    double m = 0.0;
    for (const cplx& c : a_) m = std::max(m, std::abs(c));
    return m;
}

void Jet::check_centers(const Jet& x, const Jet& y) {
    if (x.center_ != y.center_)
        raise(errc::center_mismatch, "jets expanded about different points");
}

Jet Jet::operator-() const {
    std::vector<cplx> a(a_);
    for (cplx& c : a) c = -c;
    return Jet(center_, std::move(a));
}

Jet Jet::operator+(const Jet& o) const {
    check_centers(*this, o);
    int m = std::min(order(), o.order());
    std::vector<cplx> a(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) a[k] = a_[k] + o.a_[k];
    return Jet(center_, std::move(a));
}

Jet Jet::operator-(const Jet& o) const {
    check_centers(*this, o);
    int m = std::min(order(), o.order());
    std::vector<cplx> a(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) a[k] = a_[k] - o.a_[k];
    return Jet(center_, std::move(a));
}

Jet Jet::operator*(const Jet& o) const {
    check_centers(*this, o);
    int m = std::min(order(), o.order());
    std::vector<cplx> a(static_cast<size_t>(m) + 1, cplx{0.0, 0.0});
    for (int i = 0; i <= m; ++i)
        for (int k = 0; i + k <= m; ++k) a[i + k] += a_[i] * o.a_[k];
    return Jet(center_, std::move(a));
}

Jet Jet::operator+(cplx v) const {
    std::vector<cplx> a(a_);
    a[0] += v;
    return Jet(center_, std::move(a));
}

Jet Jet::operator-(cplx v) const { return *this + (-v); }

Jet Jet::operator*(cplx v) const {
    std::vector<cplx> a(a_);
    for (cplx& c : a) c *= v;
    return Jet(center_, std::move(a));
}

Jet Jet::div(const Jet& o) const {
    check_centers(*this, o);
    int m = std::min(order(), o.order());
    if (std::abs(o.a_[0]) <= config::jet_div_tol * std::max(1.0, o.max_abs()))
        raise(errc::division_by_near_zero, "jet divisor constant term ~ 0");
    std::vector<cplx> q(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        cplx acc = a_[k];
        for (int r = 0; r < k; ++r) acc -= q[r] * o.a_[k - r];
        q[k] = acc / o.a_[0];
    }
    return Jet(center_, std::move(q));
}

Jet Jet::derivative() const {
    if (order() < 1) raise(errc::order_exhausted, "cannot differentiate order-0 jet");
    std::vector<cplx> a(a_.size() - 1);
    for (size_t k = 1; k < a_.size(); ++k) a[k - 1] = a_[k] * static_cast<double>(k);
    return Jet(center_, std::move(a));
}

Jet Jet::mul_by_monomial() const {
    std::vector<cplx> a(a_.size() + 1, cplx{0.0, 0.0});
    for (size_t k = 0; k < a_.size(); ++k) a[k + 1] = a_[k];
    return Jet(center_, std::move(a));
}

Jet Jet::divide_by_monomial() const {
    if (order() < 1) raise(errc::order_exhausted, "cannot shift down order-0 jet");
    double scale = max_abs();
    if (std::abs(a_[0]) > config::jet_cancel_tol * std::max(1.0, scale))
        raise(errc::cancellation_failure,
              "constant term did not cancel before monomial division");
    std::vector<cplx> a(a_.begin() + 1, a_.end());
    return Jet(center_, std::move(a));
}

Jet exp(const Jet& j) {
    int m = j.order();
    std::vector<cplx> y(static_cast<size_t>(m) + 1);
    y[0] = std::exp(j.a_[0]);
    for (int k = 1; k <= m; ++k) {
        cplx acc{0.0, 0.0};
        for (int r = 1; r <= k; ++r) acc += static_cast<double>(r) * j.a_[r] * y[k - r];
        y[k] = acc / static_cast<double>(k);
    }
    return Jet(j.center_, std::move(y));
}

Jet log(const Jet& j) {
    int m = j.order();
    if (std::abs(j.a_[0]) <= config::jet_div_tol * std::max(1.0, j.max_abs()))
        raise(errc::division_by_near_zero, "log of jet with vanishing value");
    std::vector<cplx> y(static_cast<size_t>(m) + 1);
    y[0] = std::log(j.a_[0]);
    for (int k = 1; k <= m; ++k) {
        cplx acc = static_cast<double>(k) * j.a_[k];
        for (int r = 1; r < k; ++r) acc -= static_cast<double>(r) * y[r] * j.a_[k - r];
        y[k] = acc / (static_cast<double>(k) * j.a_[0]);
    }
    return Jet(j.center_, std::move(y));
}

Jet pow_real(const Jet& j, double gamma) { return exp(log(j) * cplx{gamma, 0.0}); }

}  // namespace heisen
