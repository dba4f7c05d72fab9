// Truncated Taylor expansions (jets) with complex coefficients about a complex
// center. All binary operations require matching centers and truncate to the
// shorter operand.
#pragma once

#include <heisen/types.hpp>

#include <vector>

namespace heisen {

class Jet {
public:
    Jet() = default;

    static Jet constant(cplx v, cplx center, int order);
    static Jet variable(cplx center, int order);  // the identity map s -> s

    int order() const { return static_cast<int>(a_.size()) - 1; }
    cplx center() const { return center_; }
    cplx coeff(int m) const {
        return (m >= 0 && m < static_cast<int>(a_.size())) ? a_[m] : cplx{0.0, 0.0};
    }
    cplx value() const { return coeff(0); }

    Jet truncated(int new_order) const;

    Jet operator-() const;
    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;
    Jet operator+(cplx v) const;
    Jet operator-(cplx v) const;
    Jet operator*(cplx v) const;

    Jet div(const Jet& o) const;
    Jet derivative() const;

    // Multiply / divide by (s - center). Multiplication is lossless and gains
    // one order; division requires the constant term to have cancelled
    // numerically and consumes one order.
    Jet mul_by_monomial() const;
    Jet divide_by_monomial() const;

    friend Jet exp(const Jet& j);
    friend Jet log(const Jet& j);

private:
    Jet(cplx center, std::vector<cplx> a) : center_(center), a_(std::move(a)) {}

    double max_abs() const;
    static void check_centers(const Jet& x, const Jet& y);

    cplx center_{0.0, 0.0};
    std::vector<cplx> a_;
};

Jet exp(const Jet& j);
Jet log(const Jet& j);
Jet pow_real(const Jet& j, double gamma);

inline Jet operator+(cplx v, const Jet& j) { return j + v; }
inline Jet operator*(cplx v, const Jet& j) { return j * v; }
inline Jet operator-(cplx v, const Jet& j) { return (-j) + v; }

}  // namespace heisen
