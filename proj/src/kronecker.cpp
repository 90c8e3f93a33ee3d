#include "qparity/kronecker.hpp"

#include <utility>

namespace qparity {

int kronecker_symbol(std::int64_t a, std::int64_t n)
{
    if (n == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) {
            result = -result;
        }
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) {
            return 0;
        }
        const int r = static_cast<int>(((a % 8) + 8) % 8);
        const int two_sym = (r == 1 || r == 7) ? 1 : -1;
        while (n % 2 == 0) {
            n /= 2;
            result *= two_sym;
        }
    }
    // n odd positive from here; (a|n) is periodic in a mod n.
    a %= n;
    if (a < 0) {
        a += n;
    }
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const int r = static_cast<int>(n % 8);
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) {
            result = -result;
        }
        a %= n;
    }
    return n == 1 ? result : 0;
}

} // namespace qparity
