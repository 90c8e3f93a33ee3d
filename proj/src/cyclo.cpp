#include "qparity/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qparity/kronecker.hpp"

namespace qparity {

namespace {

// Exact division of integer polynomials (constant term first); the
// divisor must be monic and must divide evenly.
std::vector<mpz_class> poly_divexact(const std::vector<mpz_class> &num,
                                     const std::vector<mpz_class> &den)
{
    std::vector<mpz_class> rem = num;
    const std::size_t dn = den.size() - 1;
    if (rem.size() <= dn) {
        throw std::logic_error("poly_divexact: degree underflow");
    }
    std::vector<mpz_class> quot(rem.size() - dn);
    for (std::size_t i = rem.size(); i-- > dn;) {
        mpz_class c = rem[i];
        quot[i - dn] = c;
        if (sgn(c) == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dn; ++j) {
            rem[i - dn + j] -= c * den[j];
        }
    }
    for (const auto &r : rem) {
        if (sgn(r) != 0) {
            throw std::logic_error("poly_divexact: inexact division");
        }
    }
    return quot;
}

std::vector<mpz_class> cyclotomic_poly(std::int64_t n)
{
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    std::vector<mpz_class> num(static_cast<std::size_t>(n) + 1, mpz_class(0));
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d == 0) {
            num = poly_divexact(num, cyclotomic_poly(d));
        }
    }
    return num;
}

bool is_square_free(std::int64_t n)
{
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

CycloField::CycloField(std::int64_t d) : d_(d)
{
    if (d < 2) {
        throw std::invalid_argument("CycloField: modulus must be >= 2");
    }
    min_poly_ = cyclotomic_poly(d);
    phi_ = min_poly_.size() - 1;
}

std::shared_ptr<const CycloField> CycloField::get(std::int64_t d)
{
    static std::mutex mtx;
    static std::map<std::int64_t, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it == cache.end()) {
        it = cache.emplace(d, std::make_shared<CycloField>(d)).first;
    }
    return it->second;
}

CycloElem::CycloElem(std::shared_ptr<const CycloField> field, std::vector<mpq_class> coords)
    : field_(std::move(field))
{
    if (!field_) {
        throw std::invalid_argument("CycloElem: null field context");
    }
    for (auto &c : coords) {
        c.canonicalize();
    }
    coords_ = reduce(*field_, std::move(coords));
}

std::vector<mpq_class> CycloElem::reduce(const CycloField &f, std::vector<mpq_class> p)
{
    const std::size_t deg = f.degree();
    const auto &mp = f.min_poly();
    if (p.size() > deg) {
        for (std::size_t i = p.size(); i-- > deg;) {
            mpq_class c = p[i];
            if (sgn(c) == 0) {
                continue;
            }
            // p -= c * x^{i-deg} * min_poly  (min_poly is monic, kills p[i])
            for (std::size_t j = 0; j <= deg; ++j) {
                if (sgn(mp[j]) != 0) {
                    p[i - deg + j] -= c * mpq_class(mp[j]);
                }
            }
        }
    }
    p.resize(deg, mpq_class(0));
    return p;
}

CycloElem CycloElem::zeta_power(const std::shared_ptr<const CycloField> &field, std::int64_t k)
{
    const std::int64_t d = field->modulus();
    std::int64_t e = k % d;
    if (e < 0) {
        e += d;
    }
    std::vector<mpq_class> raw(static_cast<std::size_t>(e) + 1, mpq_class(0));
    raw[static_cast<std::size_t>(e)] = 1;
    return CycloElem(field, std::move(raw));
}

CycloElem CycloElem::rational(const std::shared_ptr<const CycloField> &field, const mpq_class &v)
{
    std::vector<mpq_class> raw(1, v);
    return CycloElem(field, std::move(raw));
}

bool CycloElem::is_zero() const
{
    for (const auto &c : coords_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

bool CycloElem::is_rational() const
{
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (sgn(coords_[i]) != 0) {
            return false;
        }
    }
    return true;
}

mpq_class CycloElem::rational_value() const
{
    if (!is_rational()) {
        throw std::invalid_argument("CycloElem::rational_value: element is not rational");
    }
    return coords_[0];
}

namespace {

const std::shared_ptr<const CycloField> &joined(const CycloElem &a, const CycloElem &b)
{
    static const std::shared_ptr<const CycloField> none;
    if (a.field() && b.field()) {
        if (a.field()->modulus() != b.field()->modulus()) {
            throw std::invalid_argument("CycloElem: mixed cyclotomic moduli");
        }
        return a.field();
    }
    if (a.field()) {
        return a.field();
    }
    if (b.field()) {
        return b.field();
    }
    return none;
}

} // namespace

CycloElem operator+(const CycloElem &a, const CycloElem &b)
{
    const auto &f = joined(a, b);
    if (!f) {
        CycloElem r;
        mpq_class v = a.coords_[0] + b.coords_[0];
        v.canonicalize();
        r.coords_[0] = v;
        return r;
    }
    std::vector<mpq_class> coords(f->degree(), mpq_class(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        coords[i] = a.coords_[i];
    }
    for (std::size_t i = 0; i < b.coords_.size(); ++i) {
        coords[i] += b.coords_[i];
    }
    return CycloElem(f, std::move(coords));
}

CycloElem operator-(const CycloElem &a, const CycloElem &b)
{
    const auto &f = joined(a, b);
    if (!f) {
        CycloElem r;
        mpq_class v = a.coords_[0] - b.coords_[0];
        v.canonicalize();
        r.coords_[0] = v;
        return r;
    }
    std::vector<mpq_class> coords(f->degree(), mpq_class(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        coords[i] = a.coords_[i];
    }
    for (std::size_t i = 0; i < b.coords_.size(); ++i) {
        coords[i] -= b.coords_[i];
    }
    return CycloElem(f, std::move(coords));
}

CycloElem operator*(const CycloElem &a, const CycloElem &b)
{
    const auto &f = joined(a, b);
    if (!f) {
        CycloElem r;
        mpq_class v = a.coords_[0] * b.coords_[0];
        v.canonicalize();
        r.coords_[0] = v;
        return r;
    }
    if (a.is_zero() || b.is_zero()) {
        return CycloElem::rational(f, 0);
    }
    std::vector<mpq_class> prod(a.coords_.size() + b.coords_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (sgn(a.coords_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coords_.size(); ++j) {
            if (sgn(b.coords_[j]) != 0) {
                prod[i + j] += a.coords_[i] * b.coords_[j];
            }
        }
    }
    return CycloElem(f, std::move(prod));
}

bool operator==(const CycloElem &a, const CycloElem &b)
{
    CycloElem d = a - b;
    return d.is_zero();
}

CycloElem CycloElem::inverse() const
{
    if (is_zero()) {
        throw std::invalid_argument("CycloElem::inverse: division by zero");
    }
    if (!field_) {
        CycloElem r;
        r.coords_[0] = mpq_class(1) / coords_[0];
        r.coords_[0].canonicalize();
        return r;
    }
    if (is_rational()) {
        return rational(field_, mpq_class(1) / coords_[0]);
    }
    // Extended Euclid in Q[x] against the (irreducible) minimal polynomial.
    const auto &mpz_mod = field_->min_poly();
    std::vector<mpq_class> r0(mpz_mod.size());
    for (std::size_t i = 0; i < mpz_mod.size(); ++i) {
        r0[i] = mpq_class(mpz_mod[i]);
    }
    std::vector<mpq_class> r1 = coords_;
    while (!r1.empty() && sgn(r1.back()) == 0) {
        r1.pop_back();
    }
    std::vector<mpq_class> s0{mpq_class(0)};
    std::vector<mpq_class> s1{mpq_class(1)};

    auto degree = [](const std::vector<mpq_class> &p) {
        return static_cast<long>(p.size()) - 1;
    };
    auto trim = [](std::vector<mpq_class> &p) {
        while (!p.empty() && sgn(p.back()) == 0) {
            p.pop_back();
        }
    };

    while (degree(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<mpq_class> q(static_cast<std::size_t>(degree(r0) - degree(r1)) + 1,
                                 mpq_class(0));
        std::vector<mpq_class> rem = r0;
        for (std::size_t i = rem.size(); i-- > r1.size() - 1;) {
            mpq_class c = rem[i] / r1.back();
            c.canonicalize();
            q[i - (r1.size() - 1)] = c;
            if (sgn(c) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < r1.size(); ++j) {
                rem[i - (r1.size() - 1) + j] -= c * r1[j];
            }
        }
        trim(rem);
        // s2 = s0 - q*s1
        std::vector<mpq_class> qs(q.size() + s1.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (sgn(q[i]) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < s1.size(); ++j) {
                qs[i + j] += q[i] * s1[j];
            }
        }
        std::vector<mpq_class> s2(std::max(s0.size(), qs.size()), mpq_class(0));
        for (std::size_t i = 0; i < s0.size(); ++i) {
            s2[i] = s0[i];
        }
        for (std::size_t i = 0; i < qs.size(); ++i) {
            s2[i] -= qs[i];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        throw std::logic_error("CycloElem::inverse: gcd degenerated (non-invertible element)");
    }
    // r1 is a nonzero constant: inverse = s1 / r1.
    for (auto &c : s1) {
        c /= r1[0];
        c.canonicalize();
    }
    return CycloElem(field_, std::move(s1));
}

CycloElem CycloElem::galois(std::int64_t g) const
{
    if (!field_) {
        return *this;
    }
    const std::int64_t d = field_->modulus();
    std::vector<mpq_class> raw(static_cast<std::size_t>(d), mpq_class(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (sgn(coords_[i]) == 0) {
            continue;
        }
        std::int64_t e = (static_cast<std::int64_t>(i) * g) % d;
        if (e < 0) {
            e += d;
        }
        raw[static_cast<std::size_t>(e)] += coords_[i];
    }
    return CycloElem(field_, std::move(raw));
}

std::ostream &operator<<(std::ostream &os, const CycloElem &a)
{
    bool first = true;
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (sgn(a.coords_[i]) == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        os << a.coords_[i];
        if (i > 0) {
            os << "*z^" << i;
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os;
}

CycloElem div_int(const CycloElem &a, long n)
{
    if (n == 0) {
        throw std::invalid_argument("div_int: division by zero");
    }
    if (!a.field()) {
        mpq_class v = a.coords()[0] / mpq_class(n);
        v.canonicalize();
        return CycloElem(v);
    }
    std::vector<mpq_class> coords = a.coords();
    for (auto &c : coords) {
        c /= mpq_class(n);
        c.canonicalize();
    }
    return CycloElem(a.field(), std::move(coords));
}

CycloElem gauss_sum_embed(std::int64_t d)
{
    if (d <= 1 || d % 24 != 23 || !is_square_free(d)) {
        throw std::invalid_argument("gauss_sum_embed: need square-free D = 23 (mod 24)");
    }
    auto field = CycloField::get(d);
    std::vector<mpq_class> raw(static_cast<std::size_t>(d), mpq_class(0));
    for (std::int64_t b = 1; b < d; ++b) {
        const int chi = kronecker_minus_d(d, b);
        if (chi != 0) {
            raw[static_cast<std::size_t>(b)] = chi;
        }
    }
    return CycloElem(field, std::move(raw));
}

} // namespace qparity
