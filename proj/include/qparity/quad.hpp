#ifndef QPARITY_QUAD_HPP
#define QPARITY_QUAD_HPP

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qparity {

/// Element x + y*sqrt(-D) of the imaginary quadratic field Q(sqrt(-D)),
/// with exact rational coordinates.
///
/// The context discriminant D travels with the element; D == 0 marks a
/// plain rational (y must then be 0), which lets default-constructed
/// zeros and small integer literals mix freely with field elements.
/// Binary operations between two nonzero contexts require equal D.
class QuadElem {
public:
    QuadElem() : d_(0), x_(0), y_(0) {}
    QuadElem(long v) : d_(0), x_(v), y_(0) {} // NOLINT: implicit by design
    QuadElem(std::int64_t d, mpq_class x, mpq_class y)
        : d_(d), x_(std::move(x)), y_(std::move(y))
    {
        x_.canonicalize();
        y_.canonicalize();
        if (d_ == 0 && sgn(y_) != 0) {
            throw std::invalid_argument("QuadElem: sqrt part requires a discriminant context");
        }
    }

    static QuadElem rational(const mpq_class &x) { return QuadElem(0, x, 0); }
    static QuadElem sqrt_minus_d(std::int64_t d) { return QuadElem(d, 0, 1); }

    std::int64_t context() const { return d_; }
    const mpq_class &x() const { return x_; }
    const mpq_class &y() const { return y_; }

    bool is_rational() const { return sgn(y_) == 0; }

    friend QuadElem operator+(const QuadElem &a, const QuadElem &b)
    {
        const std::int64_t d = joined(a, b);
        return QuadElem(d, a.x_ + b.x_, a.y_ + b.y_);
    }

    friend QuadElem operator-(const QuadElem &a, const QuadElem &b)
    {
        const std::int64_t d = joined(a, b);
        return QuadElem(d, a.x_ - b.x_, a.y_ - b.y_);
    }

    friend QuadElem operator*(const QuadElem &a, const QuadElem &b)
    {
        const std::int64_t d = joined(a, b);
        // (x1 + y1 s)(x2 + y2 s) with s^2 = -D.
        mpq_class x = a.x_ * b.x_ - mpq_class(d) * (a.y_ * b.y_);
        mpq_class y = a.x_ * b.y_ + a.y_ * b.x_;
        return QuadElem(d, std::move(x), std::move(y));
    }

    friend QuadElem operator/(const QuadElem &a, const QuadElem &b)
    {
        return a * b.inverse();
    }

    QuadElem conj() const { return QuadElem(d_, x_, -y_); }

    /// Field norm x^2 + D*y^2 (a rational).
    mpq_class norm() const { return x_ * x_ + mpq_class(d_) * (y_ * y_); }

    QuadElem inverse() const
    {
        mpq_class n = norm();
        if (sgn(n) == 0) {
            throw std::invalid_argument("QuadElem::inverse: division by zero");
        }
        return QuadElem(d_, x_ / n, -y_ / n);
    }

    /// True iff the element lies in the maximal order Z[(1+sqrt(-D))/2]:
    /// 2y and x - y must both be integers.
    bool is_integral() const
    {
        mpq_class two_y = 2 * y_;
        two_y.canonicalize();
        mpq_class diff = x_ - y_;
        diff.canonicalize();
        return two_y.get_den() == 1 && diff.get_den() == 1;
    }

    /// Residue modulo the fixed prime (2, w) above 2, where
    /// w = (1 + sqrt(-D))/2.  Writing the element as u + v*w with
    /// integers u, v, the residue is u mod 2 (so w -> 0 and
    /// sqrt(-D) = 2w - 1 -> 1).
    int mod2() const
    {
        if (!is_integral()) {
            throw std::invalid_argument("QuadElem::mod2: element is not integral");
        }
        mpq_class u = x_ - y_; // v = 2y, u = x - y
        mpz_class ui = u.get_num();
        return mpz_odd_p(ui.get_mpz_t()) ? 1 : 0;
    }

    friend bool operator==(const QuadElem &a, const QuadElem &b)
    {
        if (a.x_ != b.x_ || a.y_ != b.y_) {
            return false;
        }
        // Same numeric value in different contexts only happens for rationals.
        return a.d_ == b.d_ || (sgn(a.y_) == 0 && sgn(b.y_) == 0);
    }
    friend bool operator!=(const QuadElem &a, const QuadElem &b) { return !(a == b); }

    friend std::ostream &operator<<(std::ostream &os, const QuadElem &a)
    {
        os << a.x_;
        if (sgn(a.y_) != 0) {
            os << (sgn(a.y_) > 0 ? " + " : " - ");
            mpq_class ay = abs(a.y_);
            if (ay != 1) {
                os << ay << "*";
            }
            os << "sqrt(-" << a.d_ << ")";
        }
        return os;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    static std::int64_t joined(const QuadElem &a, const QuadElem &b)
    {
        if (a.d_ == b.d_) {
            return a.d_;
        }
        if (a.d_ == 0) {
            return b.d_;
        }
        if (b.d_ == 0) {
            return a.d_;
        }
        throw std::invalid_argument("QuadElem: mixed discriminant contexts "
                                    + std::to_string(a.d_) + " and " + std::to_string(b.d_));
    }

    std::int64_t d_;
    mpq_class x_;
    mpq_class y_;
};

inline bool is_zero(const QuadElem &a) { return sgn(a.x()) == 0 && sgn(a.y()) == 0; }
inline bool is_unit(const QuadElem &a) { return !is_zero(a); }
inline QuadElem ring_inverse(const QuadElem &a) { return a.inverse(); }

inline QuadElem div_int(const QuadElem &a, long n)
{
    if (n == 0) {
        throw std::invalid_argument("div_int: division by zero");
    }
    return QuadElem(a.context(), a.x() / mpq_class(n), a.y() / mpq_class(n));
}

} // namespace qparity

#endif
