#ifndef QPARITY_FORMS_HPP
#define QPARITY_FORMS_HPP

#include <cstdint>
#include <ostream>
#include <vector>

namespace qparity {

/// Positive definite integral binary quadratic form a x^2 + b xy + c y^2
/// of discriminant b^2 - 4ac = -D.
struct Form {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }

    friend bool operator==(const Form &, const Form &) = default;
};

std::ostream &operator<<(std::ostream &os, const Form &f);

/// The unique reduced representative (|b| <= a <= c, b >= 0 when |b| = a
/// or a = c) of f's class, by Gauss reduction.
Form reduce_form(Form f);

/// Reduced representative of the product class (Dirichlet composition;
/// the second form is first moved to a representative whose leading
/// coefficient is coprime to the first's).
Form compose(const Form &f, const Form &g);

/// All reduced forms of discriminant -d, ordered by (a, b).
struct ClassGroup {
    std::int64_t d = 0;
    std::vector<Form> classes;

    std::size_t h() const { return classes.size(); }
    const Form &principal() const { return classes.front(); }
};

/// Requires -d fundamental and odd: d square-free, d = 3 mod 4.
ClassGroup class_group(std::int64_t d);

bool is_principal(const Form &f);

/// Least k >= 1 with f^k principal.
std::size_t class_order(const ClassGroup &group, const Form &f);

/// The class [2, 1, (d+1)/8] of a prime above 2; requires d = 23 mod 24.
Form frobenius_form(std::int64_t d);

/// Legendre symbol (r/ell) for a value r represented by f and coprime to
/// ell: a if ell does not divide a, else c.  Requires ell | d.
int genus_character(std::int64_t ell, const Form &f);

/// Product of genus_character over the distinct primes dividing d.
int epsilon(std::int64_t d, const Form &f);

/// Distinct prime factors, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);
bool is_square_free(std::int64_t n);

/// d = 23 mod 24, square-free, every prime factor = 1 or 7 mod 8.
bool is_admissible(std::int64_t d);

/// Forms [a, b, c] with 6 | a and b = 1 mod 12, one per class of
/// discriminant -d; classes[i] = reduce_form(reps[i]).
struct HeegnerSet {
    std::int64_t d = 0;
    std::vector<Form> reps;
    std::vector<Form> classes;
};

/// Enumerates a = 6, 12, ... and b in [1, 2a), b = 1 mod 12, keeping the
/// first representative found for each class; the search window starts
/// at 6d and doubles up to a 600d ceiling before failing.
HeegnerSet heegner_set(std::int64_t d);

/// Decomposition of the Heegner set under translation by the Frobenius
/// class, with genus signs and residue parities per orbit.
struct OrbitReport {
    std::int64_t d = 0;
    Form frob_class;                               // reduced
    std::size_t frob_order = 0;
    std::vector<std::vector<std::size_t>> orbits;  // indices into reps
    std::vector<int> eps;                          // per rep, +-1
    std::vector<int> residue_parity;               // per orbit, (frob_order * eps) mod 2
    HeegnerSet heegner;
};

OrbitReport orbit_report(std::int64_t d);

/// The four conditions tied to oddness of ord([p]) for the class [p] of a
/// prime above 2, each computed independently.
struct OddOrderEquivalences {
    bool ord_odd = false;      // (1) class_order(frobenius_form) is odd
    bool frob_square = false;  // (2) the class is a square in the group
    bool chi_all_plus = false; // (3) every genus character is +1 on it
    bool primes_1_7 = false;   // (4) every prime factor of d is 1 or 7 mod 8
    bool eq_12 = false;
    bool eq_34 = false;
    bool all_agree = false;
};

OddOrderEquivalences odd_order_equivalences(std::int64_t d);

} // namespace qparity

#endif
