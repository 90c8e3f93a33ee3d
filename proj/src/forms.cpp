#include "qparity/forms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qparity/kronecker.hpp"

namespace qparity {

std::ostream &operator<<(std::ostream &os, const Form &f)
{
    return os << "[" << f.a << "," << f.b << "," << f.c << "]";
}

namespace {

void require_definite(const Form &f, const char *who)
{
    if (f.a <= 0 || f.discriminant() >= 0) {
        throw std::invalid_argument(std::string(who) + ": form is not positive definite");
    }
}

// Floor division for possibly negative numerators.
std::int64_t floor_div(std::int64_t n, std::int64_t d)
{
    std::int64_t q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) {
        --q;
    }
    return q;
}

// x with a*x = 1 mod m, for gcd(a, m) = 1, m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    std::int64_t r0 = m, r1 = ((a % m) + m) % m;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) {
        throw std::logic_error("mod_inverse: arguments not coprime");
    }
    return ((s0 % m) + m) % m;
}

} // namespace

Form reduce_form(Form f)
{
    require_definite(f, "reduce_form");
    const std::int64_t disc = f.discriminant();
    for (;;) {
        if (f.a > f.c) {
            f = Form{f.c, -f.b, f.a};
            continue;
        }
        if (f.b > f.a || f.b <= -f.a) {
            // translate b into (-a, a]
            const std::int64_t k = floor_div(f.a - f.b, 2 * f.a);
            f.b += 2 * f.a * k;
            f.c = (f.b * f.b - disc) / (4 * f.a);
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0) {
        f.b = -f.b;
    }
    return f;
}

bool is_principal(const Form &f)
{
    const Form r = reduce_form(f);
    return r.a == 1;
}

Form compose(const Form &f, const Form &g)
{
    require_definite(f, "compose");
    require_definite(g, "compose");
    const std::int64_t disc = f.discriminant();
    if (g.discriminant() != disc) {
        throw std::invalid_argument("compose: discriminant mismatch");
    }

    // Move g to an equivalent form with leading coefficient coprime to
    // f.a: find a primitive (x, y) with gcd(g(x,y), f.a) = 1 and complete
    // it to a unimodular change of variable.
    const std::int64_t a1 = f.a, b1 = f.b;
    std::int64_t a2 = 0, b2 = 0;
    {
        bool found = false;
        std::int64_t fx = 0, fy = 0;
        const std::int64_t limit = 2 * std::abs(disc) + 4;
        for (std::int64_t s = 1; s <= limit && !found; ++s) {
            for (std::int64_t y = 0; y <= s && !found; ++y) {
                for (std::int64_t xa = (y == s) ? 0 : s; xa <= s && !found; ++xa) {
                    for (std::int64_t x : {xa, -xa}) {
                        if ((x == 0 && y == 0) || std::gcd(x, y) != 1) {
                            continue;
                        }
                        const std::int64_t v = g.a * x * x + g.b * x * y + g.c * y * y;
                        if (std::gcd(v, a1) == 1) {
                            fx = x;
                            fy = y;
                            found = true;
                            break;
                        }
                    }
                }
            }
        }
        if (!found) {
            throw std::runtime_error("compose: no representative coprime to the first form");
        }
        // complete (fx, fy) to [[fx, u], [fy, v]] with fx*v - fy*u = 1
        std::int64_t u = 0, v = 0;
        {
            std::int64_t r0 = fx, r1 = fy, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1 != 0) {
                const std::int64_t q = floor_div(r0, r1);
                std::int64_t t = r0 - q * r1;
                r0 = r1;
                r1 = t;
                t = s0 - q * s1;
                s0 = s1;
                s1 = t;
                t = t0 - q * t1;
                t0 = t1;
                t1 = t;
            }
            // r0 = +-1 = s0*fx + t0*fy; flip sign so fx*v - fy*u = 1
            if (r0 == 1) {
                u = -t0;
                v = s0;
            } else {
                u = t0;
                v = -s0;
            }
        }
        a2 = g.a * fx * fx + g.b * fx * fy + g.c * fy * fy;
        b2 = 2 * (g.a * fx * u + g.c * fy * v) + g.b * (fx * v + u * fy);
    }

    // Common middle coefficient B = b1 mod 2 a1, B = b2 mod 2 a2.
    const std::int64_t t = mod_inverse(a1, a2);
    std::int64_t diff = (b2 - b1) / 2 % a2;
    std::int64_t k = ((diff * t) % a2 + a2) % a2;
    const std::int64_t big_a = a1 * a2;
    std::int64_t big_b = b1 + 2 * a1 * k;
    big_b %= 2 * big_a;
    if (big_b > big_a) {
        big_b -= 2 * big_a;
    } else if (big_b <= -big_a) {
        big_b += 2 * big_a;
    }
    const std::int64_t big_c = (big_b * big_b - disc) / (4 * big_a);
    return reduce_form(Form{big_a, big_b, big_c});
}

ClassGroup class_group(std::int64_t d)
{
    if (d < 3 || d % 4 != 3 || !is_square_free(d)) {
        throw std::invalid_argument("class_group: need square-free d = 3 mod 4");
    }
    ClassGroup group;
    group.d = d;
    for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if ((b * b + d) % (4 * a) != 0) {
                continue;
            }
            const std::int64_t c = (b * b + d) / (4 * a);
            if (c < a) {
                continue;
            }
            if (a == c && b < 0) {
                continue;
            }
            if (std::gcd(std::gcd(a, b), c) != 1) {
                continue; // cannot happen for square-free d; cheap guard
            }
            group.classes.push_back(Form{a, b, c});
        }
    }
    std::sort(group.classes.begin(), group.classes.end(),
              [](const Form &x, const Form &y) {
                  return std::tie(x.a, x.b) < std::tie(y.a, y.b);
              });
    if (group.classes.empty() || group.classes.front().a != 1) {
        throw std::logic_error("class_group: principal form missing");
    }
    return group;
}

std::size_t class_order(const ClassGroup &group, const Form &f)
{
    if (-f.discriminant() != group.d) {
        throw std::invalid_argument("class_order: form does not belong to the group");
    }
    Form acc = reduce_form(f);
    for (std::size_t k = 1; k <= group.h(); ++k) {
        if (acc.a == 1) {
            return k;
        }
        acc = compose(acc, f);
    }
    throw std::runtime_error("class_order: order exceeds group size");
}

Form frobenius_form(std::int64_t d)
{
    if (d % 24 != 23) {
        throw std::invalid_argument("frobenius_form: need d = 23 mod 24");
    }
    return Form{2, 1, (d + 1) / 8};
}

int genus_character(std::int64_t ell, const Form &f)
{
    const std::int64_t d = -f.discriminant();
    if (ell < 2 || d % ell != 0) {
        throw std::invalid_argument("genus_character: prime must divide the discriminant");
    }
    const std::int64_t r = (f.a % ell != 0) ? f.a : f.c;
    if (r % ell == 0) {
        throw std::invalid_argument("genus_character: form not primitive at ell");
    }
    return kronecker_symbol(r, ell);
}

int epsilon(std::int64_t d, const Form &f)
{
    if (-f.discriminant() != d) {
        throw std::invalid_argument("epsilon: discriminant mismatch");
    }
    int sign = 1;
    for (std::int64_t ell : prime_factors(d)) {
        sign *= genus_character(ell, f);
    }
    return sign;
}

std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

bool is_square_free(std::int64_t n)
{
    if (n < 1) {
        return false;
    }
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

bool is_admissible(std::int64_t d)
{
    if (d <= 1 || d % 24 != 23 || !is_square_free(d)) {
        return false;
    }
    for (std::int64_t ell : prime_factors(d)) {
        const std::int64_t r = ell % 8;
        if (r != 1 && r != 7) {
            return false;
        }
    }
    return true;
}

HeegnerSet heegner_set(std::int64_t d)
{
    if (d % 24 != 23 || !is_square_free(d)) {
        throw std::invalid_argument("heegner_set: need square-free d = 23 mod 24");
    }
    const ClassGroup group = class_group(d);
    const std::size_t h = group.h();

    HeegnerSet set;
    set.d = d;
    auto form_less = [](const Form &x, const Form &y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    };
    std::map<Form, std::size_t, decltype(form_less)> hit(form_less);

    const std::int64_t ceiling = 600 * d;
    std::int64_t window = 6 * d;
    std::int64_t a = 6;
    while (hit.size() < h) {
        if (a > window) {
            if (window >= ceiling) {
                throw std::runtime_error("heegner_set: window ceiling reached before covering all classes");
            }
            window = std::min(2 * window, ceiling);
        }
        for (std::int64_t b = 1; b < 2 * a; b += 12) {
            if ((b * b + d) % (4 * a) != 0) {
                continue;
            }
            const std::int64_t c = (b * b + d) / (4 * a);
            const Form q{a, b, c};
            const Form r = reduce_form(q);
            if (hit.emplace(r, set.reps.size()).second) {
                set.reps.push_back(q);
                set.classes.push_back(r);
                if (hit.size() == h) {
                    break;
                }
            }
        }
        a += 6;
    }
    return set;
}

OrbitReport orbit_report(std::int64_t d)
{
    const ClassGroup group = class_group(d);
    const HeegnerSet set = heegner_set(d);
    const Form frob = reduce_form(frobenius_form(d));

    OrbitReport report;
    report.d = d;
    report.frob_class = frob;
    report.frob_order = class_order(group, frob);
    report.heegner = set;

    const std::size_t n = set.reps.size();
    report.eps.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        report.eps[i] = epsilon(d, set.classes[i]);
    }

    // Index of each reduced class, to follow translation on the class side.
    auto form_less = [](const Form &x, const Form &y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    };
    std::map<Form, std::size_t, decltype(form_less)> index_of(form_less);
    for (std::size_t i = 0; i < n; ++i) {
        index_of[set.classes[i]] = i;
    }

    std::vector<char> visited(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (visited[i]) {
            continue;
        }
        std::vector<std::size_t> orbit;
        std::size_t j = i;
        while (!visited[j]) {
            visited[j] = 1;
            orbit.push_back(j);
            const Form next = compose(set.classes[j], frob);
            auto it = index_of.find(next);
            if (it == index_of.end()) {
                throw std::runtime_error("orbit_report: translation left the class set");
            }
            j = it->second;
        }
        for (std::size_t k : orbit) {
            if (report.eps[k] != report.eps[orbit.front()]) {
                throw std::runtime_error("orbit_report: genus sign not constant on an orbit");
            }
        }
        const int parity = static_cast<int>(
            (report.frob_order % 2) ? 1 : 0); // (frob_order * eps) mod 2
        report.residue_parity.push_back(parity);
        report.orbits.push_back(std::move(orbit));
    }
    return report;
}

OddOrderEquivalences odd_order_equivalences(std::int64_t d)
{
    if (d % 24 != 23 || !is_square_free(d)) {
        throw std::invalid_argument("odd_order_equivalences: need square-free d = 23 mod 24");
    }
    const ClassGroup group = class_group(d);
    const Form frob = reduce_form(frobenius_form(d));

    OddOrderEquivalences rec;
    rec.ord_odd = (class_order(group, frob) % 2) == 1;

    rec.frob_square = false;
    for (const Form &g : group.classes) {
        if (compose(g, g) == frob) {
            rec.frob_square = true;
            break;
        }
    }

    rec.chi_all_plus = true;
    rec.primes_1_7 = true;
    for (std::int64_t ell : prime_factors(d)) {
        if (genus_character(ell, frob) != 1) {
            rec.chi_all_plus = false;
        }
        const std::int64_t r = ell % 8;
        if (r != 1 && r != 7) {
            rec.primes_1_7 = false;
        }
    }

    rec.eq_12 = (rec.ord_odd == rec.frob_square);
    rec.eq_34 = (rec.chi_all_plus == rec.primes_1_7);
    rec.all_agree = rec.eq_12 && rec.eq_34 && (rec.ord_odd == rec.chi_all_plus);
    return rec;
}

} // namespace qparity
